import pytest
from hypothesis import given, strategies as st

from swisscheese.terms import (
    Abs,
    App,
    Hole,
    Index,
    InconsistentHoleLevel,
    NoSuchHole,
    OpenTermError,
    ParseError,
    SizeModel,
    abstract_no_binding,
    abstract_with_binding,
    apply,
    characteristic,
    is_affine,
    is_closed,
    is_linear,
    is_neutral,
    is_normal_form,
    parse_debruijn,
    print_debruijn,
    print_named,
    size,
)

NAT, V0, V1 = SizeModel.NATURAL, SizeModel.VAR0, SizeModel.VAR1

# c1 = \([1] 0)-shaped cheese and c2 = (\[1] [0]) from the application picture
C1 = Abs(App(Hole(1), Index(0)))
C2 = App(Abs(Hole(1)), Hole(0))


def lam(body, times=1):
    for _ in range(times):
        body = Abs(body)
    return body


class TestSize:
    def test_index_sizes(self):
        assert size(Index(2), NAT) == 3
        assert size(Index(2), V0) == 0
        assert size(Index(2), V1) == 1

    def test_hole_is_free(self):
        assert size(Hole(0), NAT) == 0

    def test_deep_index(self):
        assert size(lam(Index(2), 4), NAT) == 7


class TestCharacteristic:
    def test_picture_cheeses(self):
        assert characteristic(C1) == (0, 1)
        assert characteristic(C2) == (1, 1)
        assert characteristic(apply(C1, C2)) == (1, 2)

    def test_closed_term(self):
        assert characteristic(parse_debruijn(r"\(0 \0)")) == ()

    def test_inconsistent_level(self):
        with pytest.raises(InconsistentHoleLevel):
            characteristic(Abs(Hole(0)))


class TestPredicates:
    @pytest.mark.parametrize("text,closed", [(r"\0", True), ("0", False), (r"\1", False)])
    def test_closed(self, text, closed):
        assert is_closed(parse_debruijn(text)) is closed

    @pytest.mark.parametrize(
        "text,linear,affine",
        [(r"\0", True, True), (r"\\1", False, True), (r"\(0 0)", False, False)],
    )
    def test_families(self, text, linear, affine):
        t = parse_debruijn(text)
        assert is_linear(t) is linear
        assert is_affine(t) is affine

    def test_free_indices_unconstrained(self):
        assert is_linear(App(Index(0), Index(0)))

    def test_normal_forms(self):
        assert not is_normal_form(parse_debruijn(r"(\0 \0)"))
        assert is_normal_form(parse_debruijn(r"\0"))
        assert not is_neutral(parse_debruijn(r"\0"))
        assert is_neutral(parse_debruijn(r"(0 \0)"))
        assert not is_normal_form(parse_debruijn(r"\(0 (\0 \0))"))


class TestConstruction:
    def test_apply(self):
        t = apply(Hole(0), Hole(0))
        assert print_debruijn(t) == "([0] [0])"
        assert characteristic(t) == (2,)
        assert size(t, NAT) == 1
        assert size(apply(lam(Index(0)), lam(Index(0))), NAT) == 5

    def test_no_binding(self):
        t = abstract_no_binding(Hole(0))
        assert t == Abs(Hole(1))
        assert characteristic(t) == (0, 1)
        assert abstract_no_binding(lam(Index(0))) == lam(Index(0), 2)

    def test_no_binding_on_picture_cheese(self):
        t = abstract_no_binding(C2)
        assert t == Abs(App(Abs(Hole(2)), Hole(1)))
        assert characteristic(t) == (0, 1, 1)

    def test_binding(self):
        t = abstract_with_binding(Hole(0), 0, 0)
        assert t == lam(Index(0))
        assert size(t, NAT) == 2
        t = abstract_with_binding(App(Hole(0), Hole(0)), 0, 0)
        assert print_debruijn(t) == r"\(0 [1])"
        assert characteristic(t) == (0, 1)
        assert print_debruijn(abstract_with_binding(App(Hole(0), Hole(0)), 0, 1)) == r"\([1] 0)"

    def test_binding_level_one_hole(self):
        # binding the level-1 hole of c1 @ c2's right part yields index 1 under the new binder
        t = abstract_with_binding(apply(C1, C2), 1, 1)
        assert t == Abs(App(Abs(App(Hole(2), Index(0))), App(Abs(Index(1)), Hole(1))))
        assert characteristic(t) == (0, 1, 1)
        assert is_closed(Abs(Abs(Index(1))))

    def test_binding_sizes(self):
        c = App(Abs(Hole(1)), Hole(0))
        t = abstract_with_binding(c, 1, 0)
        assert size(t, NAT) == size(c, NAT) + 1 + 2
        assert size(t, V0) == size(c, V0) + 1
        assert size(t, V1) == size(c, V1) + 2

    def test_shared_hole_objects(self):
        h = Hole(0)
        assert print_debruijn(abstract_with_binding(App(h, h), 0, 1)) == r"\([1] 0)"

    def test_no_such_hole(self):
        with pytest.raises(NoSuchHole):
            abstract_with_binding(Hole(0), 0, 1)
        with pytest.raises(NoSuchHole):
            abstract_with_binding(Hole(0), 1, 0)


class TestText:
    def test_print(self):
        assert print_debruijn(Abs(App(Index(0), Abs(Index(0))))) == r"\(0 \0)"

    def test_parse(self):
        assert parse_debruijn(r"\(0 \0)") == Abs(App(Index(0), Abs(Index(0))))
        assert parse_debruijn("12") == Index(12)

    @pytest.mark.parametrize("text,offset", [("((", 2), ("", 0), (r"\(0 \0", 6), ("(0  0)", 3), ("0 ", 1), ("x", 0)])
    def test_parse_errors(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse_debruijn(text)
        assert info.value.offset == offset

    def test_named(self):
        assert print_named(lam(Index(0))) == r"\x0.x0"
        assert print_named(parse_debruijn(r"\(0 \0)")) == r"\x0.(x0 \x1.x1)"
        assert print_named(parse_debruijn(r"\\(1 0)")) == r"\x0.\x1.(x0 x1)"
        with pytest.raises(OpenTermError):
            print_named(Index(1))


def terms(max_leaves=12):
    return st.recursive(
        st.builds(Index, st.integers(0, 20)),
        lambda inner: st.one_of(st.builds(Abs, inner), st.builds(App, inner, inner)),
        max_leaves=max_leaves,
    )


@given(terms())
def test_print_parse_roundtrip(t):
    assert parse_debruijn(print_debruijn(t)) == t


@given(terms(), terms())
def test_application_size_additive(a, b):
    for model in SizeModel:
        assert size(apply(a, b), model) == 1 + size(a, model) + size(b, model)


@given(terms())
def test_linear_implies_affine(t):
    if is_linear(t):
        assert is_affine(t)


@given(terms())
def test_neutral_implies_normal(t):
    if is_neutral(t):
        assert is_normal_form(t)


@st.composite
def built_cheeses(draw, depth=0):
    """Cheeses built only from [0] and the three construction rules."""
    if depth >= 5 or draw(st.booleans()):
        return Hole(0)
    choice = draw(st.sampled_from(["app", "nobind", "bind"]))
    if choice == "app":
        return apply(draw(built_cheeses(depth + 1)), draw(built_cheeses(depth + 1)))
    c = draw(built_cheeses(depth + 1))
    if choice == "nobind":
        return abstract_no_binding(c)
    m = characteristic(c)
    levels = [i for i, x in enumerate(m) if x]
    if not levels:
        return abstract_no_binding(c)
    level = draw(st.sampled_from(levels))
    return abstract_with_binding(c, level, draw(st.integers(0, m[level] - 1)))


@given(built_cheeses())
def test_construction_keeps_hole_levels(c):
    characteristic(c)  # raises on an inconsistent level
    assert is_closed(c)
