import itertools

from iomlat.axioms import (
    Axiom,
    check_axiom,
    classify,
    distributive_triple,
    idis1_triple,
    idis2_triple,
    idiv_pair,
)
from iomlat.algebras import FiniteAlgebra

from conftest import IOML_FIXTURES, load_alg


def test_o6_passes_the_implicative_involutive_suite(o6):
    for axiom in (Axiom.BE1, Axiom.BE2, Axiom.BE3, Axiom.BE4,
                  Axiom.BOUNDED, Axiom.INVOLUTIVE, Axiom.IMPL):
        assert check_axiom(o6, axiom).passed, axiom


def test_o6_orthomodularity_fails_with_expected_witness(o6):
    res = check_axiom(o6, Axiom.IOM_P)
    assert not res.passed
    assert res.witness == {"x": o6.index("x"), "y": o6.index("y")}
    res_iom = check_axiom(o6, Axiom.IOM)
    assert res_iom.witness == {"x": o6.index("x"), "y": o6.index("y*")}


def test_b2_satisfies_everything(b2):
    for axiom in Axiom:
        assert check_axiom(b2, axiom).passed, axiom


def test_labels(o6, mo2, b4, l3):
    assert classify(o6).labels() == (
        "BE", "BOUNDED_BE", "INVOLUTIVE_BE", "IMPLICATIVE_INVOLUTIVE_BE")
    assert classify(mo2).labels() == (
        "BE", "BOUNDED_BE", "INVOLUTIVE_BE", "IMPLICATIVE_INVOLUTIVE_BE", "IOML")
    assert classify(b4).labels() == (
        "BE", "BOUNDED_BE", "INVOLUTIVE_BE", "IMPLICATIVE_INVOLUTIVE_BE",
        "IOML", "IMPLICATIVE_BOOLEAN")
    assert classify(l3).labels() == ("BE", "BOUNDED_BE", "INVOLUTIVE_BE")


def test_degenerate_flagged():
    single = FiniteAlgebra(names=("e",), table=((0,),), one=0, zero=0)
    report = classify(single)
    assert report.degenerate
    assert report.is_implicative_boolean  # everything holds on one point


def test_mo2_fails_divisibility_on_cross_block_atoms(mo2):
    a, b = mo2.index("a"), mo2.index("b")
    assert not idiv_pair(mo2, a, b)
    assert not classify(mo2).is_implicative_boolean


def test_commuting_pairs_are_divisible_on_orthomodular_fixtures():
    for name in IOML_FIXTURES:
        alg = load_alg(name)
        for x, y in itertools.product(range(alg.size), repeat=2):
            if alg.commutes(x, y):
                assert idiv_pair(alg, x, y)


def test_diagonal_divisibility_on_implicative_fixtures(o6, mo2, b8):
    for alg in (o6, mo2, b8):
        for x in range(alg.size):
            assert idiv_pair(alg, x, x)


def test_distributivity_forms_swap_under_negation(mo2, o6):
    for alg in (mo2, o6):
        for x, y, z in itertools.product(range(alg.size), repeat=3):
            nx, ny, nz = alg.neg(x), alg.neg(y), alg.neg(z)
            assert idis1_triple(alg, x, y, z) == idis2_triple(alg, nx, ny, nz)


def test_triple_examples(mo2, b4, b2):
    a, b, one = mo2.index("a"), mo2.index("b"), mo2.one
    assert distributive_triple(mo2, a, b, one)
    for x, y, z in itertools.product(range(b4.size), repeat=3):
        assert distributive_triple(b4, x, y, z)
    for x, y, z in itertools.product(range(b2.size), repeat=3):
        assert idis1_triple(b2, x, y, z) and idis2_triple(b2, x, y, z)


def test_mo2_is_not_distributive(mo2):
    assert not check_axiom(mo2, Axiom.IDIS).passed
    assert not check_axiom(mo2, Axiom.IDIV).passed


def test_fast_idis_proxy_agrees_on_orthomodular_fixtures():
    for name in IOML_FIXTURES:
        alg = load_alg(name)
        direct = classify(alg).results[Axiom.IDIS].passed
        proxied = classify(alg, fast_idis=True).results[Axiom.IDIS].passed
        assert direct == proxied


def test_orthomodularity_forms_agree_on_fixtures(o6, mo2, b8):
    for alg in (o6, mo2, b8):
        rep = classify(alg)
        verdicts = {rep.results[a].passed for a in (Axiom.IOM, Axiom.IOM_P, Axiom.IOM_PP)}
        assert len(verdicts) == 1


def test_quantum_identities_agree_with_orthomodularity(o6, mo2, b4):
    for alg in (o6, mo2, b4):
        rep = classify(alg)
        base = rep.results[Axiom.IOM].passed
        for axiom in (Axiom.QW, Axiom.QW1, Axiom.QW2):
            assert rep.results[axiom].passed == base
