import pytest

from swisscheese.oracle import (
    BUDGET,
    BudgetExceeded,
    oracle_count,
    oracle_enumerate_cheeses,
    oracle_enumerate_closed,
    oracle_terms,
)
from swisscheese.terms import Abs, Family, Index, SizeModel, TermClass, has_holes, is_closed, size

LIN, AFF = Family.LINEAR, Family.AFFINE
NAT = SizeModel.NATURAL
ALL = TermClass.ALL


def test_budget():
    assert BUDGET == {NAT: 12, SizeModel.VAR0: 9, SizeModel.VAR1: 9}
    with pytest.raises(BudgetExceeded):
        oracle_enumerate_closed(13, NAT)
    with pytest.raises(BudgetExceeded):
        oracle_count(LIN, SizeModel.VAR0, ALL, 10)


def test_small_sizes():
    assert oracle_enumerate_closed(0, NAT) == []
    assert Abs(Index(0)) in oracle_enumerate_closed(2, NAT)
    assert oracle_terms(LIN, NAT, ALL, 2) == [Abs(Index(0))]


@pytest.mark.parametrize(
    "family,n,expected", [(LIN, 8, 16), (AFF, 7, 25), (LIN, 5, 3)]
)
def test_counts(family, n, expected):
    assert oracle_count(family, NAT, ALL, n) == expected


@pytest.mark.parametrize("model", list(SizeModel))
def test_terms_distinct_closed_and_sized(model):
    for n in range(7):
        terms = oracle_enumerate_closed(n, model)
        assert len(set(terms)) == len(terms)
        assert all(is_closed(t) and not has_holes(t) and size(t, model) == n for t in terms)


def test_cheeses_include_holes():
    cheeses = oracle_enumerate_cheeses(1, NAT)
    assert all(size(c, NAT) == 1 for c in cheeses)
    assert any(has_holes(c) for c in cheeses)
