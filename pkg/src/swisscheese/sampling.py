"""Unranking and uniform random generation of closed terms.

``unrank`` descends through the enumeration buckets, subtracting bucket sizes
from the rank, so the ``r``-th term is built without listing its predecessors.
Sampling draws a uniform rank with Python's seeded Mersenne Twister
(``random.Random(seed)``), rejecting draws of ``bit_length(total - 1)`` bits
that land at or above ``total``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from swisscheese.characteristics import canonical
from swisscheese.generation import AppBucket, BindBucket, HoleBucket, Key, Kind, buckets
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


class RankOutOfRange(IndexError):
    pass


class EmptyDomain(ValueError):
    pass


@dataclass(frozen=True)
class SamplerConfig:
    seed: int
    family: Family
    model: SizeModel
    term_class: TermClass
    n: int

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "model", SizeModel(self.model))
        object.__setattr__(self, "term_class", TermClass(self.term_class))


def _unrank_key(key: Key, r: int) -> Cheese:
    for bucket in buckets(key):
        if r >= bucket.size:
            r -= bucket.size
            continue
        if isinstance(bucket, HoleBucket):
            return Hole(0)
        if isinstance(bucket, AppBucket):
            left_rank, right_rank = divmod(r, bucket.right_total)
            return App(_unrank_key(bucket.left, left_rank), _unrank_key(bucket.right, right_rank))
        if isinstance(bucket, BindBucket):
            inner_rank, occ = divmod(r, bucket.choices)
            return abstract_with_binding(_unrank_key(bucket.inner, inner_rank), bucket.level, occ)
        return abstract_no_binding(_unrank_key(bucket.inner, r))
    # Only reachable if bucket sizes disagree with the counts.
    raise AssertionError(f"rank overflow while unranking {key}")


def unrank(
    family: Family,
    model: SizeModel,
    term_class: TermClass,
    n: int,
    m: Characteristic,
    r: int,
) -> Cheese:
    key = Key(Kind.of(term_class), Family(family), SizeModel(model), n, canonical(m))
    total = key.total()
    if not 0 <= r < total:
        raise RankOutOfRange(f"rank {r} outside [0, {total}) for {key}")
    return _unrank_key(key, r)


def uniform_below(rng: random.Random, total: int) -> int:
    bits = (total - 1).bit_length()
    while True:
        r = rng.getrandbits(bits) if bits else 0
        if r < total:
            return r


def sample(cfg: SamplerConfig, k: int) -> list[Term]:
    """``k`` independent uniform closed terms for ``cfg``; deterministic in ``cfg`` and ``k``."""
    if k < 0:
        raise ValueError(f"sample count must be non-negative, got {k}")
    key = Key(Kind.of(cfg.term_class), cfg.family, cfg.model, cfg.n, ())
    total = key.total()
    if total == 0:
        raise EmptyDomain(
            f"no closed {cfg.family.value} {cfg.term_class.value} terms of "
            f"{cfg.model.value} size {cfg.n}"
        )
    rng = random.Random(cfg.seed)
    return [_unrank_key(key, uniform_below(rng, total)) for _ in range(k)]
