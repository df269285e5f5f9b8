"""De Bruijn lambda terms, SwissCheeses (terms with leveled holes) and their text forms."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Union


class SizeModel(str, enum.Enum):
    NATURAL = "natural"
    VAR0 = "var0"
    VAR1 = "var1"

    def index_size(self, k: int) -> int:
        """Size of the de Bruijn index ``k`` under this model."""
        if self is SizeModel.NATURAL:
            return k + 1
        if self is SizeModel.VAR0:
            return 0
        return 1


class Family(str, enum.Enum):
    LINEAR = "linear"
    AFFINE = "affine"


class TermClass(str, enum.Enum):
    ALL = "all"
    NORMAL = "normal"


@dataclass(frozen=True, slots=True)
class Index:
    k: int


@dataclass(frozen=True, slots=True)
class Abs:
    body: Cheese


@dataclass(frozen=True, slots=True)
class App:
    fun: Cheese
    arg: Cheese


@dataclass(frozen=True, slots=True)
class Hole:
    level: int


# A Term is a Cheese that contains no Hole.
Term = Union[Index, Abs, App]
Cheese = Union[Index, Abs, App, Hole]

Characteristic = tuple[int, ...]


class InconsistentHoleLevel(ValueError):
    pass


class NoSuchHole(LookupError):
    pass


class OpenTermError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


# Structural recursion depth is bounded by term size, which stays far below the
# interpreter limit for every size this package can count or enumerate.


def size(t: Cheese, model: SizeModel) -> int:
    if isinstance(t, Index):
        return model.index_size(t.k)
    if isinstance(t, Hole):
        return 0
    if isinstance(t, Abs):
        return 1 + size(t.body, model)
    return 1 + size(t.fun, model) + size(t.arg, model)


def holes(t: Cheese) -> Iterator[Hole]:
    """Holes of ``t`` in left-to-right preorder."""
    if isinstance(t, Hole):
        yield t
    elif isinstance(t, Abs):
        yield from holes(t.body)
    elif isinstance(t, App):
        yield from holes(t.fun)
        yield from holes(t.arg)


def characteristic(c: Cheese) -> Characteristic:
    counts: list[int] = []

    def walk(t: Cheese, depth: int) -> None:
        if isinstance(t, Hole):
            if t.level != depth:
                raise InconsistentHoleLevel(
                    f"hole stores level {t.level} but sits under {depth} binders"
                )
            if depth >= len(counts):
                counts.extend([0] * (depth + 1 - len(counts)))
            counts[depth] += 1
        elif isinstance(t, Abs):
            walk(t.body, depth + 1)
        elif isinstance(t, App):
            walk(t.fun, depth)
            walk(t.arg, depth)

    walk(c, 0)
    return tuple(counts)


def has_holes(c: Cheese) -> bool:
    return next(holes(c), None) is not None


def is_closed(t: Cheese) -> bool:
    def walk(t: Cheese, depth: int) -> bool:
        if isinstance(t, Index):
            return t.k < depth
        if isinstance(t, Abs):
            return walk(t.body, depth + 1)
        if isinstance(t, App):
            return walk(t.fun, depth) and walk(t.arg, depth)
        return True

    return walk(t, 0)


def _binder_uses(t: Cheese) -> list[int]:
    """Occurrence count of every binder of ``t``, one entry per Abs node."""
    uses: list[int] = []

    def walk(t: Cheese, stack: list[int]) -> None:
        # stack holds positions in `uses` of the enclosing binders, innermost last
        if isinstance(t, Index):
            if t.k < len(stack):
                uses[stack[-1 - t.k]] += 1
        elif isinstance(t, Abs):
            uses.append(0)
            stack.append(len(uses) - 1)
            walk(t.body, stack)
            stack.pop()
        elif isinstance(t, App):
            walk(t.fun, stack)
            walk(t.arg, stack)

    walk(t, [])
    return uses


def is_linear(t: Cheese) -> bool:
    return all(u == 1 for u in _binder_uses(t))


def is_affine(t: Cheese) -> bool:
    return all(u <= 1 for u in _binder_uses(t))


def in_family(t: Cheese, family: Family) -> bool:
    return is_linear(t) if family is Family.LINEAR else is_affine(t)


def is_neutral(t: Cheese) -> bool:
    while isinstance(t, App):
        if not is_normal_form(t.arg):
            return False
        t = t.fun
    return isinstance(t, (Index, Hole))


def is_normal_form(t: Cheese) -> bool:
    while isinstance(t, Abs):
        t = t.body
    return is_neutral(t)


def apply(c1: Cheese, c2: Cheese) -> App:
    return App(c1, c2)


def _raise_holes(t: Cheese, bind_at: int = -1) -> Cheese:
    # Rebuilds t with every hole one level deeper. The hole at preorder position
    # `bind_at` (counting all holes) becomes the index bound by the binder about
    # to be added above t. Positions, not identity: Hole objects may be shared.
    counter = 0

    def walk(t: Cheese) -> Cheese:
        nonlocal counter
        if isinstance(t, Hole):
            counter += 1
            if counter - 1 == bind_at:
                return Index(t.level)
            return Hole(t.level + 1)
        if isinstance(t, Abs):
            return Abs(walk(t.body))
        if isinstance(t, App):
            fun = walk(t.fun)
            return App(fun, walk(t.arg))
        return t

    return walk(t)


def abstract_no_binding(c: Cheese) -> Abs:
    return Abs(_raise_holes(c))


def abstract_with_binding(c: Cheese, level: int, occ: int) -> Abs:
    """Bind the ``occ``-th level-``level`` hole of ``c`` (preorder) under a new binder."""
    seen = 0
    for position, h in enumerate(holes(c)):
        if h.level == level:
            if seen == occ:
                return Abs(_raise_holes(c, bind_at=position))
            seen += 1
    raise NoSuchHole(f"cheese has {seen} holes at level {level}, wanted #{occ}")


def print_debruijn(t: Cheese) -> str:
    parts: list[str] = []

    def walk(t: Cheese) -> None:
        if isinstance(t, Index):
            parts.append(str(t.k))
        elif isinstance(t, Hole):
            parts.append(f"[{t.level}]")
        elif isinstance(t, Abs):
            parts.append("\\")
            walk(t.body)
        else:
            parts.append("(")
            walk(t.fun)
            parts.append(" ")
            walk(t.arg)
            parts.append(")")

    walk(t)
    return "".join(parts)


_DIGITS = frozenset("0123456789")


def parse_debruijn(s: str) -> Term:
    """Parse ``term := digits | "\\" term | "(" term " " term ")"``."""
    pos = 0

    def term() -> Term:
        nonlocal pos
        if pos >= len(s):
            raise ParseError("unexpected end of input", pos)
        ch = s[pos]
        if ch in _DIGITS:
            start = pos
            while pos < len(s) and s[pos] in _DIGITS:
                pos += 1
            return Index(int(s[start:pos]))
        if ch == "\\":
            pos += 1
            return Abs(term())
        if ch == "(":
            pos += 1
            fun = term()
            expect(" ")
            arg = term()
            expect(")")
            return App(fun, arg)
        raise ParseError(f"unexpected character {ch!r}", pos)

    def expect(ch: str) -> None:
        nonlocal pos
        if pos >= len(s) or s[pos] != ch:
            raise ParseError(f"expected {ch!r}", pos)
        pos += 1

    result = term()
    if pos != len(s):
        raise ParseError("trailing input", pos)
    return result


def print_named(t: Term) -> str:
    """Print with explicit variables; the binder at depth d is named ``x<d>``."""
    if not is_closed(t) or has_holes(t):
        raise OpenTermError(f"{print_debruijn(t)} is not a closed term")

    def walk(t: Term, depth: int) -> str:
        if isinstance(t, Index):
            return f"x{depth - 1 - t.k}"
        if isinstance(t, Abs):
            return f"\\x{depth}.{walk(t.body, depth + 1)}"
        return f"({walk(t.fun, depth)} {walk(t.arg, depth)})"

    return walk(t, 0)
