"""Characteristic tuples: how many holes a SwissCheese has at each level.

Tuples are kept canonical (no trailing zeros), so ``()`` is the all-zero
characteristic of a closed term.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

from swisscheese.terms import Characteristic


def canonical(m: Iterable[int]) -> Characteristic:
    m = list(m)
    if any(x < 0 for x in m):
        raise ValueError(f"negative entry in characteristic {m}")
    while m and m[-1] == 0:
        m.pop()
    return tuple(m)


def inc(m: Sequence[int], i: int) -> Characteristic:
    out = list(m)
    if i >= len(out):
        out.extend([0] * (i + 1 - len(out)))
    out[i] += 1
    return canonical(out)


def dec(m: Sequence[int], i: int) -> Characteristic:
    if i >= len(m) or m[i] == 0:
        raise ValueError(f"no level-{i} entry to decrement in {tuple(m)}")
    out = list(m)
    out[i] -= 1
    return canonical(out)


def entry(m: Sequence[int], i: int) -> int:
    return m[i] if i < len(m) else 0


@functools.lru_cache(maxsize=None)
def sum_splits(m: Characteristic) -> tuple[tuple[Characteristic, Characteristic], ...]:
    """All ``(q, r)`` with ``q + r == m`` componentwise, ``q`` in lexicographic order."""
    out = []
    for q in itertools.product(*(range(x + 1) for x in m)):
        r = tuple(a - b for a, b in zip(m, q))
        out.append((canonical(q), canonical(r)))
    return tuple(out)


def all_combinations(
    m: Characteristic, n: int
) -> list[tuple[tuple[Characteristic, Characteristic], tuple[int, int]]]:
    """Hole splits crossed with size splits ``k + (n - k)``; the application bucket order."""
    return [(qr, (k, n - k)) for qr in sum_splits(m) for k in range(n + 1)]


def parse_characteristic(text: str) -> Characteristic:
    """Read the ``m0,m1,...`` form; the empty string is ``()``."""
    text = text.strip()
    if not text:
        return ()
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed characteristic {text!r}") from None
    return canonical(values)


def format_characteristic(m: Characteristic) -> str:
    return ",".join(str(x) for x in m)
