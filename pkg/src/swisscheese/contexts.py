"""Closed-term counts for the var0 and var1 size models via free-variable counts.

When every variable costs the same, a term's size does not depend on how far
away its binder is, so characteristics can be collapsed to a single number:
how many distinct free variables the term uses. Free variables are labelled
and each occurs exactly once; an affine binder that binds nothing is a
separate case. Applications split the labels between the two sides, hence
the binomial factor.

The state space is quadratic in the size instead of exponential, which is
what makes closed var0/var1 counts cheap far beyond where the
characteristic tables give out. For characteristics other than the empty
one, ``swisscheese.counting`` remains the only route.
"""

from __future__ import annotations

import threading
from math import comb

from swisscheese.terms import Family, SizeModel


class _ContextTable:
    def __init__(self, family: Family, model: SizeModel):
        if model is SizeModel.NATURAL:
            raise ValueError("index sizes depend on binder distance under the natural model")
        self.affine = family is Family.AFFINE
        self.var_size = model.index_size(0)
        self.all: dict[tuple[int, int], int] = {}
        self.neutral: dict[tuple[int, int], int] = {}
        self.normal: dict[tuple[int, int], int] = {}

    def _impossible(self, n: int, k: int) -> bool:
        # k free variables need k leaves, hence k - 1 applications.
        return n < 0 or k > n + 1 or (k == 0 and n == 0)

    def _apps(self, n: int, k: int, left, right) -> int:
        total = 0
        for j in range(k + 1):
            ways = comb(k, j)
            for a in range(n):
                x = left(a, j)
                if x:
                    total += ways * x * right(n - 1 - a, k - j)
        return total

    def _abstractions(self, n: int, k: int, inner) -> int:
        if n == 0:
            return 0
        total = inner(n - 1, k + 1)
        if self.affine:
            total += inner(n - 1, k)
        return total

    def get_all(self, n: int, k: int) -> int:
        key = (n, k)
        v = self.all.get(key)
        if v is None:
            if self._impossible(n, k):
                v = 0
            else:
                v = int(n == self.var_size and k == 1)
                v += self._apps(n, k, self.get_all, self.get_all)
                v += self._abstractions(n, k, self.get_all)
            self.all[key] = v
        return v

    def get_neutral(self, n: int, k: int) -> int:
        key = (n, k)
        v = self.neutral.get(key)
        if v is None:
            if self._impossible(n, k):
                v = 0
            else:
                v = int(n == self.var_size and k == 1)
                v += self._apps(n, k, self.get_neutral, self.get_normal)
            self.neutral[key] = v
        return v

    def get_normal(self, n: int, k: int) -> int:
        key = (n, k)
        v = self.normal.get(key)
        if v is None:
            if self._impossible(n, k):
                v = 0
            else:
                v = self.get_neutral(n, k) + self._abstractions(n, k, self.get_normal)
            self.normal[key] = v
        return v


_tables: dict[tuple[Family, SizeModel], _ContextTable] = {}
_tables_lock = threading.Lock()


def _table(family: Family, model: SizeModel) -> _ContextTable:
    family, model = Family(family), SizeModel(model)
    table = _tables.get((family, model))
    if table is None:
        with _tables_lock:
            table = _tables.setdefault((family, model), _ContextTable(family, model))
    return table


def closed_count(family: Family, model: SizeModel, n: int, normal: bool = False) -> int:
    """Closed terms (or closed normal forms) of size ``n``; var0 and var1 only."""
    table = _table(family, model)
    return table.get_normal(n, 0) if normal else table.get_all(n, 0)


def clear_memo() -> None:
    with _tables_lock:
        _tables.clear()
