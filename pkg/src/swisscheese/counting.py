"""Memoized counts of linear and affine SwissCheeses by size and characteristic.

A SwissCheese of size ``n`` and characteristic ``m`` is one of

* a hole ``[0]`` (``n == 0``, ``m == (1,)``);
* an application of a ``(k, q)`` cheese to an ``(n - 1 - k, r)`` cheese with
  ``q + r == m``;
* when ``m[0] == 0``: a binder over a cheese in which one hole at level ``l``
  becomes the bound index (``binding_levels`` gives the inner sizes);
* for affine terms, when ``m[0] == 0``: a binder that binds nothing.

``count(family, model, n, ())`` is the number of closed terms of size ``n``;
under var0 and var1 it is answered by ``swisscheese.contexts`` instead.
"""

from __future__ import annotations

import functools
import threading
from typing import Iterator

from swisscheese.characteristics import canonical, entry, inc, sum_splits
from swisscheese import contexts
from swisscheese.contexts import closed_count
from swisscheese.terms import Characteristic, Family, SizeModel, TermClass


def binding_levels(model: SizeModel, n: int) -> Iterator[tuple[int, int]]:
    """``(level, inner_size)`` pairs for binding abstractions of total size ``n``.

    The binder costs 1 and the index replacing a level-``l`` hole costs whatever
    the model charges for de Bruijn index ``l``. Levels above the inner size are
    skipped since no cheese of that size has such a hole.
    """
    level = 0
    while True:
        inner = n - 1 - model.index_size(level)
        if inner < 0 or level > inner:
            return
        yield level, inner
        level += 1


def min_size(family: Family, model: SizeModel, m: Characteristic) -> int:
    """A lower bound on the size of any cheese with characteristic ``m``.

    With ``h`` holes, ``b`` binders and ``v`` indices a cheese has ``h + v - 1``
    applications. A level-``l`` hole sits under ``l`` binders, a closed term
    needs at least one binder and one index, and in a linear cheese ``v == b``.
    """
    holes = sum(m)
    binders = len(m) - 1 if holes else 1
    indices = binders if family is Family.LINEAR else int(not holes)
    return holes - 1 + binders + indices * (1 + model.index_size(0))


class _Table:
    """Counts for one (family, size model); values are written once and never change."""

    def __init__(self, family: Family, model: SizeModel):
        self.affine = family is Family.AFFINE
        self.model = model
        self.min_size = functools.partial(min_size, family, model)
        self.values: dict[tuple[int, Characteristic], int] = {}

    def get(self, n: int, m: Characteristic) -> int:
        key = (n, m)
        v = self.values.get(key)
        if v is None:
            v = self._compute(n, m)
            self.values[key] = v
        return v

    def _compute(self, n: int, m: Characteristic) -> int:
        if n == 0:
            return 1 if m == (1,) else 0
        if n < self.min_size(m):
            return 0
        get, min_size = self.get, self.min_size
        total = 0
        for q, r in sum_splits(m):
            for k in range(min_size(q), n - min_size(r)):
                left = get(k, q)
                if left:
                    total += left * get(n - 1 - k, r)
        if not m or m[0] == 0:
            tail = m[1:]
            for level, inner in binding_levels(self.model, n):
                total += (entry(tail, level) + 1) * get(inner, inc(tail, level))
            if self.affine:
                total += get(n - 1, tail)
        return total


_tables: dict[tuple[Family, SizeModel], _Table] = {}
_tables_lock = threading.Lock()


def _table(family: Family, model: SizeModel) -> _Table:
    family, model = Family(family), SizeModel(model)
    table = _tables.get((family, model))
    if table is None:
        with _tables_lock:
            table = _tables.setdefault((family, model), _Table(family, model))
    return table


def count(family: Family, model: SizeModel, n: int, m: Characteristic = ()) -> int:
    """Number of ``family`` SwissCheeses of size ``n`` (under ``model``) with characteristic ``m``."""
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    m = canonical(m)
    if not m and SizeModel(model) is not SizeModel.NATURAL:
        return closed_count(family, model, n)
    return _table(family, model).get(n, m)


def count_closed(family: Family, model: SizeModel, n: int) -> int:
    return count(family, model, n, ())


def series(family: Family, model: SizeModel, term_class: TermClass, upto: int) -> list[int]:
    """Closed-term counts for sizes ``0..upto``."""
    if upto < 0:
        raise ValueError(f"upto must be non-negative, got {upto}")
    if TermClass(term_class) is TermClass.NORMAL:
        from swisscheese.normal_forms import count_nf

        return [count_nf(family, model, n) for n in range(upto + 1)]
    return [count_closed(family, model, n) for n in range(upto + 1)]


def memo_items(family: Family, model: SizeModel) -> dict[tuple[int, Characteristic], int]:
    """Snapshot of the memo for one family and size model."""
    return dict(_table(family, model).values)


def clear_memo() -> None:
    with _tables_lock:
        _tables.clear()
    contexts.clear_memo()
