import random

import pytest
from hypothesis import given, strategies as st

from iomlat import terms
from iomlat.errors import InputError, ParseError

import oracle_eval
from conftest import ALG_FIXTURES, load_alg


def test_parse_nested_arrow():
    t = terms.parse("x -> (y -> x)")
    assert t == terms.Imp(terms.Var("x"), terms.Imp(terms.Var("y"), terms.Var("x")))


def test_parse_distributivity_equation():
    eq = terms.parse("((x' -> y) -> z')' = (x -> z') -> (y -> z')'")
    assert isinstance(eq, terms.Equation)
    assert eq.vars == ("x", "y", "z")
    assert isinstance(eq.lhs, terms.Neg)


def test_parse_quasi_identity():
    qi = terms.parse("x <=l y |- x <=q y")
    assert isinstance(qi, terms.QuasiIdentity)
    assert len(qi.hypotheses) == 1
    assert qi.vars == ("x", "y")


def test_bare_relation_is_hypothesis_free_quasi():
    qi = terms.parse("x C x")
    assert isinstance(qi, terms.QuasiIdentity)
    assert qi.hypotheses == ()


def test_arrow_is_right_associative_and_loose():
    assert terms.parse("x -> y -> z") == terms.parse("x -> (y -> z)")
    assert terms.parse("x & y -> z") == terms.Imp(
        terms.Cap(terms.Var("x"), terms.Var("y")), terms.Var("z")
    )


def test_junctions_left_associative():
    assert terms.parse("x & y & z") == terms.Cap(
        terms.Cap(terms.Var("x"), terms.Var("y")), terms.Var("z")
    )


def test_postfix_negation_binds_tightest():
    assert terms.parse("x' -> y") == terms.Imp(terms.Neg(terms.Var("x")), terms.Var("y"))
    assert terms.parse("x''") == terms.Neg(terms.Neg(terms.Var("x")))


def test_mixing_junctions_needs_parens():
    with pytest.raises(ParseError) as err:
        terms.parse("x & y | z")
    assert err.value.offset == 6
    terms.parse("(x & y) | z")  # parenthesized mixing is fine


def test_reserved_commutation_symbol():
    with pytest.raises(ParseError):
        terms.parse("C -> x")


def test_relation_suffix_does_not_eat_identifiers():
    from iomlat.algebras import RelationKind

    claim = terms.parse("x <= qz")
    assert claim.conclusion.kind is RelationKind.LE
    assert claim.conclusion.rhs == terms.Var("qz")
    assert terms.parse("x <=q y").conclusion.kind is RelationKind.LE_Q
    assert terms.parse("x <=l y0").conclusion.kind is RelationKind.LE_L


def test_error_offsets_are_bytes():
    with pytest.raises(ParseError) as err:
        terms.parse("x -> $")
    assert err.value.offset == 5
    with pytest.raises(ParseError) as err:
        terms.parse("x =")
    assert err.value.offset == 3


def test_unbound_variable(b2):
    with pytest.raises(InputError):
        terms.evaluate(terms.parse_term("x -> y"), b2, {"x": 0})


# -- printing -----------------------------------------------------------------


@pytest.mark.parametrize(
    "src",
    [
        "x -> (y -> x)",
        "((x' -> y) -> z')' = (x -> z') -> (y -> z')'",
        "x <=l y |- x <=q y",
        "x C x",
        "x <= y, y <= z |- x <= z",
        "x -> y' = 1, x' -> y = 1 |- (y -> (y -> x')') -> (y' -> x)' = y",
        "0 -> x = 1",
        "x | (y & z)",
    ],
)
def test_print_parse_round_trip(src):
    first = terms.parse(src)
    printed = terms.format_statement(first)
    assert terms.parse(printed) == first


_names = st.sampled_from(["x", "y", "z", "u", "v"])


def _term_strategy():
    leaf = st.one_of(_names.map(terms.Var), st.sampled_from([0, 1]).map(terms.Const))
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            inner.map(terms.Neg),
            st.tuples(inner, inner).map(lambda p: terms.Imp(*p)),
            st.tuples(inner, inner).map(lambda p: terms.Cap(*p)),
            st.tuples(inner, inner).map(lambda p: terms.Cup(*p)),
        ),
        max_leaves=12,
    )


@given(_term_strategy())
def test_random_term_round_trip(t):
    assert terms.parse(terms.format_term(t)) == t


@given(st.tuples(_term_strategy(), _term_strategy()))
def test_random_equation_round_trip(pair):
    eq = terms.Equation(pair[0], pair[1])
    assert terms.parse(terms.format_statement(eq)) == eq


# -- evaluation ---------------------------------------------------------------


def test_evaluate_basic_examples(o6, b2):
    x = o6.index("x")
    assert terms.evaluate(terms.parse_term("x & 1"), o6, {"x": x}) == x
    assert terms.evaluate(terms.parse_term("0"), b2, {}) == b2.zero
    assert terms.holds("x -> (y -> x) = 1", o6).ok
    assert terms.holds("x -> (y -> x) = 1", b2).ok


def test_evaluate_matches_hand_composites_on_random_samples():
    rng = random.Random(20260810)
    algs = [load_alg(name) for name in ALG_FIXTURES]
    neg_t = terms.parse_term("x'")
    cup_t = terms.parse_term("x | y")
    cap_t = terms.parse_term("x & y")
    for _ in range(1000):
        alg = rng.choice(algs)
        a = rng.randrange(alg.size)
        b = rng.randrange(alg.size)
        env = {"x": a, "y": b}
        assert terms.evaluate(neg_t, alg, env) == alg.neg(a)
        assert terms.evaluate(cup_t, alg, env) == alg.cup(a, b)
        assert terms.evaluate(cap_t, alg, env) == alg.cap(a, b)


def test_divisibility_fails_on_o6_with_first_witness(o6):
    res = terms.holds("x -> (x -> y)' = x -> y'", o6)
    assert not res.ok
    # lexicographically first failing assignment
    stmt = terms.parse_statement("x -> (x -> y)' = x -> y'")
    for values in _assignments_before(res.witness, stmt.vars, o6.size):
        assert terms.atom_holds(stmt, o6, values)


def _assignments_before(witness, vars, size):
    import itertools

    target = tuple(witness[v] for v in vars)
    for values in itertools.product(range(size), repeat=len(vars)):
        if values == target:
            return
        yield dict(zip(vars, values))


def test_exchange_axiom_holds_on_o6(o6):
    assert terms.holds("x -> (y -> z) = y -> (x -> z)", o6).ok


@pytest.mark.parametrize("name", ("b2", "b4", "b8", "mo2", "o6", "l3"))
def test_pairing_identity_on_involutive_fixtures(name):
    alg = load_alg(name)
    assert terms.holds(
        "(x1 -> y1')' -> (x2 -> y2') = (x1 -> x2')' -> (y1 -> y2')", alg
    ).ok


@pytest.mark.parametrize("name", ALG_FIXTURES)
@pytest.mark.parametrize(
    "src",
    [
        "x -> (x -> y)' = x -> y'",
        "x <=l y |- x <=q y",
        "x <=q y, y <=q x |- x = y",
        "x C y |- y C x",
        "x & (y -> x) = x",
        "x <= (x -> y) -> y",
        "x -> ((y -> x')' | z) = y | (x -> z)",
    ],
)
def test_holds_agrees_with_brute_force(name, src):
    alg = load_alg(name)
    stmt = terms.parse_statement(src)
    assert terms.holds(stmt, alg).ok == oracle_eval.brute_holds(stmt, alg)


def test_statement_file_lines():
    text = "# header\n\nx -> x = 1\n  x C y |- y C x  # tail\n"
    lines = list(terms.iter_statement_lines(text))
    assert lines == [(3, "x -> x = 1"), (4, "x C y |- y C x")]
