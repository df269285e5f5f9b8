"""Brute-force enumeration of plain lambda terms, the ground truth for the recurrences.

Nothing here touches characteristics or the counting tables: terms are built
by structural recursion over size and binder depth, then filtered with the
predicates from ``swisscheese.terms``.
"""

from __future__ import annotations

import functools

from swisscheese.terms import (
    Abs,
    App,
    Cheese,
    Family,
    Hole,
    Index,
    SizeModel,
    Term,
    TermClass,
    in_family,
    is_normal_form,
    print_debruijn,
)

BUDGET = {SizeModel.NATURAL: 12, SizeModel.VAR0: 9, SizeModel.VAR1: 9}


class BudgetExceeded(ValueError):
    pass


def _check_budget(n: int, model: SizeModel) -> SizeModel:
    model = SizeModel(model)
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    if n > BUDGET[model]:
        raise BudgetExceeded(f"oracle caps {model.value} size at {BUDGET[model]}, asked for {n}")
    return model


@functools.lru_cache(maxsize=None)
def _terms(model: SizeModel, s: int, depth: int, with_holes: bool) -> tuple[Cheese, ...]:
    """All terms of size ``s`` whose free indices are below ``depth``.

    With ``with_holes``, a leaf may also be a hole standing for a variable bound
    outside the term; holes record the depth they sit at.
    """
    out: list[Cheese] = []
    if with_holes and s == 0:
        out.append(Hole(depth))
    for k in range(depth):
        if model.index_size(k) == s:
            out.append(Index(k))
    if s >= 1:
        out.extend(Abs(body) for body in _terms(model, s - 1, depth + 1, with_holes))
        for k in range(s):
            right = _terms(model, s - 1 - k, depth, with_holes)
            if right:
                for fun in _terms(model, k, depth, with_holes):
                    out.extend(App(fun, arg) for arg in right)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _sorted_terms(model: SizeModel, n: int, with_holes: bool) -> tuple[Cheese, ...]:
    return tuple(sorted(_terms(model, n, 0, with_holes), key=print_debruijn))


def oracle_enumerate_closed(n: int, model: SizeModel) -> list[Term]:
    """Every closed lambda term of size ``n``, sorted by printed form."""
    model = _check_budget(n, model)
    return list(_sorted_terms(model, n, False))


def oracle_enumerate_cheeses(n: int, model: SizeModel) -> list[Cheese]:
    """Every term of size ``n`` whose would-be free variables are holes."""
    model = _check_budget(n, model)
    return list(_sorted_terms(model, n, True))


def oracle_terms(family: Family, model: SizeModel, term_class: TermClass, n: int) -> list[Term]:
    normal_only = TermClass(term_class) is TermClass.NORMAL
    family = Family(family)
    return [
        t
        for t in oracle_enumerate_closed(n, model)
        if in_family(t, family) and (not normal_only or is_normal_form(t))
    ]


def oracle_count(family: Family, model: SizeModel, term_class: TermClass, n: int) -> int:
    return len(oracle_terms(family, model, term_class, n))


def clear_cache() -> None:
    _terms.cache_clear()
    _sorted_terms.cache_clear()
