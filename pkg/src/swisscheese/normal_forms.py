"""Counts of beta-normal and neutral SwissCheeses.

Neutral cheeses are application spines headed by a level-0 hole whose
arguments are normal; normal cheeses are neutral ones plus the binding and
(affine) non-binding abstractions of normal cheeses.
"""

from __future__ import annotations

import functools
import threading

from swisscheese.characteristics import canonical, entry, inc, sum_splits
from swisscheese.contexts import closed_count
from swisscheese.counting import binding_levels, min_size
from swisscheese.terms import Characteristic, Family, SizeModel


class _NfTable:
    def __init__(self, family: Family, model: SizeModel):
        self.affine = family is Family.AFFINE
        self.model = model
        self.min_size = functools.partial(min_size, family, model)
        self.neutral: dict[tuple[int, Characteristic], int] = {}
        self.normal: dict[tuple[int, Characteristic], int] = {}

    def get_neutral(self, n: int, m: Characteristic) -> int:
        key = (n, m)
        v = self.neutral.get(key)
        if v is not None:
            return v
        if n == 0:
            v = 1 if m == (1,) else 0
        elif n < self.min_size(m):
            v = 0
        else:
            v = 0
            min_size = self.min_size
            for q, r in sum_splits(m):
                for k in range(min_size(q), n - min_size(r)):
                    head = self.get_neutral(k, q)
                    if head:
                        v += head * self.get_normal(n - 1 - k, r)
        self.neutral[key] = v
        return v

    def get_normal(self, n: int, m: Characteristic) -> int:
        key = (n, m)
        v = self.normal.get(key)
        if v is not None:
            return v
        v = self.get_neutral(n, m)
        if n > 0 and (not m or m[0] == 0) and n >= self.min_size(m):
            tail = m[1:]
            for level, inner in binding_levels(self.model, n):
                v += (entry(tail, level) + 1) * self.get_normal(inner, inc(tail, level))
            if self.affine:
                v += self.get_normal(n - 1, tail)
        self.normal[key] = v
        return v


_tables: dict[tuple[Family, SizeModel], _NfTable] = {}
_tables_lock = threading.Lock()


def _table(family: Family, model: SizeModel) -> _NfTable:
    family, model = Family(family), SizeModel(model)
    table = _tables.get((family, model))
    if table is None:
        with _tables_lock:
            table = _tables.setdefault((family, model), _NfTable(family, model))
    return table


def count_neutral(family: Family, model: SizeModel, n: int, m: Characteristic = ()) -> int:
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    return _table(family, model).get_neutral(n, canonical(m))


def count_nf(family: Family, model: SizeModel, n: int, m: Characteristic = ()) -> int:
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    m = canonical(m)
    if not m and SizeModel(model) is not SizeModel.NATURAL:
        return closed_count(family, model, n, normal=True)
    return _table(family, model).get_normal(n, m)


def memo_items(family: Family, model: SizeModel) -> tuple[dict, dict]:
    """Snapshots of the (neutral, normal) memos for one family and size model."""
    table = _table(family, model)
    return dict(table.neutral), dict(table.normal)


def clear_memo() -> None:
    with _tables_lock:
        _tables.clear()
