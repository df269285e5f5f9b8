"""Exhaustive enumeration of SwissCheeses in a fixed canonical order.

Every (kind, family, model, n, m) key splits into buckets, visited in order:

1. the lone hole, when ``n == 0`` and ``m == (1,)``;
2. applications, in ``all_combinations(m, n - 1)`` order, left operand in the
   outer loop;
3. binding abstractions, level ascending, then inner cheese, then which hole
   of that level gets bound (preorder);
4. the non-binding abstraction (affine only).

Normal cheeses list their neutral buckets first. Unranking walks the same
buckets, so ``unrank(..., r)`` is the ``r``-th element produced here.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Iterator, Union

from swisscheese.characteristics import all_combinations, canonical, entry, inc
from swisscheese.counting import binding_levels, count
from swisscheese.normal_forms import count_neutral, count_nf
from swisscheese.terms import (
    App,
    Characteristic,
    Cheese,
    Family,
    Hole,
    SizeModel,
    Term,
    TermClass,
    abstract_no_binding,
    abstract_with_binding,
)


class Kind(enum.Enum):
    ALL = "all"
    NORMAL = "normal"
    NEUTRAL = "neutral"

    @classmethod
    def of(cls, term_class: TermClass) -> Kind:
        return cls.NORMAL if TermClass(term_class) is TermClass.NORMAL else cls.ALL


@dataclass(frozen=True)
class Key:
    kind: Kind
    family: Family
    model: SizeModel
    n: int
    m: Characteristic

    def sub(self, kind: Kind, n: int, m: Characteristic) -> Key:
        return Key(kind, self.family, self.model, n, m)

    def total(self) -> int:
        if self.kind is Kind.ALL:
            return count(self.family, self.model, self.n, self.m)
        if self.kind is Kind.NORMAL:
            return count_nf(self.family, self.model, self.n, self.m)
        return count_neutral(self.family, self.model, self.n, self.m)


@dataclass(frozen=True)
class HoleBucket:
    size: int = 1


@dataclass(frozen=True)
class AppBucket:
    left: Key
    right: Key
    right_total: int
    size: int


@dataclass(frozen=True)
class BindBucket:
    level: int
    inner: Key
    choices: int
    size: int


@dataclass(frozen=True)
class NoBindBucket:
    inner: Key
    size: int


Bucket = Union[HoleBucket, AppBucket, BindBucket, NoBindBucket]


@functools.lru_cache(maxsize=None)
def buckets(key: Key) -> tuple[Bucket, ...]:
    """Non-empty buckets of ``key`` in canonical order."""
    return tuple(_buckets(key))


def _buckets(key: Key) -> Iterator[Bucket]:
    n, m = key.n, key.m
    if key.kind is Kind.NORMAL:
        yield from _buckets(key.sub(Kind.NEUTRAL, n, m))
    elif n == 0:
        if m == (1,):
            yield HoleBucket()
    else:
        if key.kind is Kind.NEUTRAL:
            left_kind, right_kind = Kind.NEUTRAL, Kind.NORMAL
        else:
            left_kind = right_kind = Kind.ALL
        for (q, r), (k, nk) in all_combinations(m, n - 1):
            left = key.sub(left_kind, k, q)
            left_total = left.total()
            if not left_total:
                continue
            right = key.sub(right_kind, nk, r)
            right_total = right.total()
            if right_total:
                yield AppBucket(left, right, right_total, left_total * right_total)

    if key.kind is Kind.NEUTRAL or n == 0 or (m and m[0] != 0):
        return
    tail = m[1:]
    for level, inner_size in binding_levels(key.model, n):
        inner = key.sub(key.kind, inner_size, inc(tail, level))
        inner_total = inner.total()
        if inner_total:
            choices = entry(tail, level) + 1
            yield BindBucket(level, inner, choices, choices * inner_total)
    if key.family is Family.AFFINE:
        inner = key.sub(key.kind, n - 1, tail)
        inner_total = inner.total()
        if inner_total:
            yield NoBindBucket(inner, inner_total)


_REPLAY_LIMIT = 10_000


def iter_key(key: Key) -> Iterator[Cheese]:
    for bucket in buckets(key):
        if isinstance(bucket, HoleBucket):
            yield Hole(0)
        elif isinstance(bucket, AppBucket):
            # Small right operands are replayed from a list instead of being
            # rebuilt for every left operand.
            if bucket.right_total <= _REPLAY_LIMIT:
                args = list(iter_key(bucket.right))
                for fun in iter_key(bucket.left):
                    for arg in args:
                        yield App(fun, arg)
            else:
                for fun in iter_key(bucket.left):
                    for arg in iter_key(bucket.right):
                        yield App(fun, arg)
        elif isinstance(bucket, BindBucket):
            for c in iter_key(bucket.inner):
                for occ in range(bucket.choices):
                    yield abstract_with_binding(c, bucket.level, occ)
        else:
            for c in iter_key(bucket.inner):
                yield abstract_no_binding(c)


def enumerate_cheeses(
    family: Family,
    model: SizeModel,
    term_class: TermClass,
    n: int,
    m: Characteristic = (),
) -> Iterator[Cheese]:
    """Lazily yield every SwissCheese of the given key, in canonical order."""
    if n < 0:
        raise ValueError(f"size must be non-negative, got {n}")
    key = Key(Kind.of(term_class), Family(family), SizeModel(model), n, canonical(m))
    return iter_key(key)


def enumerate_closed(
    family: Family, model: SizeModel, term_class: TermClass, n: int
) -> Iterator[Term]:
    return enumerate_cheeses(family, model, term_class, n, ())
