import pytest

from iomlat import catalog, structure, terms
from iomlat.axioms import classify
from iomlat.errors import InputError
from iomlat.modelsearch import (
    EnumerationTask,
    brute_force_models,
    count_models,
    enumerate_models,
    find_counterexample,
)


def _keys(algs):
    return sorted(set(structure.canonical_key(a) for a in algs))


@pytest.mark.parametrize("klass", ("invbe", "implinvbe", "ioml", "iboolean"))
@pytest.mark.parametrize("size", (2, 3, 4, 5))
def test_search_matches_oracle_involutive_classes(klass, size):
    task = EnumerationTask(size=size, klass=klass, modulo_iso=True)
    assert _keys(enumerate_models(task)) == _keys(brute_force_models(size, klass))


@pytest.mark.parametrize("size", (2, 3, 4, 5))
def test_search_matches_oracle_base_class(size):
    # size 5 sweeps just under two million candidate tables; ~10s
    task = EnumerationTask(size=size, klass="be", modulo_iso=True)
    assert _keys(enumerate_models(task)) == _keys(brute_force_models(size, "be"))


IOML_COUNTS = {2: 1, 3: 0, 4: 1, 5: 0, 6: 1, 7: 0, 8: 2}


def test_ioml_counts_with_regression_values_past_five():
    for size, expected in IOML_COUNTS.items():
        assert count_models(size, "ioml") == expected, size


def test_size_six_lattice_class_is_exactly_mo2():
    task = EnumerationTask(size=6, klass="ioml")
    models = list(enumerate_models(task))
    assert len(models) == 1
    assert structure.is_isomorphic(models[0], catalog.mo2()) is not None


def test_size_six_implicative_class_contains_hexagon_and_lantern():
    task = EnumerationTask(size=6, klass="implinvbe")
    models = list(enumerate_models(task))
    assert len(models) >= 2
    keys = _keys(models)
    assert structure.canonical_key(catalog.o6()) in keys
    assert structure.canonical_key(catalog.mo2()) in keys


def test_known_small_counts():
    assert count_models(2, "invbe") == 1
    assert count_models(3, "invbe") == 1  # the self-complemented chain
    assert count_models(4, "invbe") == 5
    assert count_models(5, "invbe") == 14
    assert count_models(2, "iboolean") == 1
    assert count_models(4, "iboolean") == 1
    assert count_models(6, "iboolean") == 0
    assert count_models(3, "be") == 3
    assert count_models(4, "be") == 41
    assert count_models(5, "be") == 1564


def test_dedup_invariant():
    with_iso = list(enumerate_models(EnumerationTask(size=4, klass="invbe", modulo_iso=True)))
    without = list(enumerate_models(EnumerationTask(size=4, klass="invbe", modulo_iso=False)))
    assert _keys(with_iso) == _keys(without)
    keys = [structure.canonical_key(a) for a in with_iso]
    assert len(keys) == len(set(keys))
    assert len(without) >= len(with_iso)


def test_orderly_flag_gives_the_same_models():
    base = EnumerationTask(size=5, klass="invbe", modulo_iso=True)
    orderly = EnumerationTask(size=5, klass="invbe", modulo_iso=True, orderly=True)
    assert [a.table for a in enumerate_models(base)] == [a.table for a in enumerate_models(orderly)]


def test_cell_order_does_not_change_the_model_set():
    base = EnumerationTask(size=5, klass="invbe")
    cols = EnumerationTask(size=5, klass="invbe", cell_order="column-major")
    assert [a.table for a in enumerate_models(base)] == [a.table for a in enumerate_models(cols)]


def test_enumeration_is_deterministic():
    task = EnumerationTask(size=5, klass="invbe")
    first = [a.table for a in enumerate_models(task)]
    second = [a.table for a in enumerate_models(task)]
    assert first == second


def test_emitted_models_are_classified_in_class():
    for alg in enumerate_models(EnumerationTask(size=4, klass="invbe")):
        assert classify(alg).is_involutive_be


def test_task_validation():
    with pytest.raises(InputError):
        EnumerationTask(size=9, klass="ioml")
    with pytest.raises(InputError):
        EnumerationTask(size=1, klass="ioml")
    with pytest.raises(InputError):
        EnumerationTask(size=4, klass="boolean")
    EnumerationTask(size=9, klass="ioml", max_size=9)  # explicit cap raise is fine


def test_counterexample_commutation_symmetry():
    found = find_counterexample("x C y |- y C x", "implinvbe", 6)
    assert found is not None
    alg, witness = found
    assert alg.size == 6
    assert structure.is_isomorphic(alg, catalog.o6()) is not None
    stmt = terms.parse_statement("x C y |- y C x")
    env = witness
    assert terms.atom_holds(stmt.hypotheses[0], alg, env)
    assert not terms.atom_holds(stmt.conclusion, alg, env)


def test_counterexample_distributivity_on_the_lattice_class():
    found = find_counterexample(
        "((x' -> y) -> z')' = (x -> z') -> (y -> z')'", "ioml", 6)
    assert found is not None
    alg, _ = found
    assert alg.size == 6
    assert structure.is_isomorphic(alg, catalog.mo2()) is not None


def test_no_counterexample_to_reflexivity():
    assert find_counterexample("x -> x = 1", "be", 4) is None


def test_counterexample_arrow_transitivity():
    found = find_counterexample("x <= y, y <= z |- x <= z", "invbe", 6)
    assert found is not None
    alg, witness = found
    assert alg.size <= 6
    x, y, z = witness["x"], witness["y"], witness["z"]
    assert alg.le(x, y) and alg.le(y, z) and not alg.le(x, z)


def test_global_commutation_forces_the_lattice_class():
    for n in (2, 3, 4, 5, 6):
        for alg in enumerate_models(EnumerationTask(size=n, klass="implinvbe")):
            all_commute = all(
                alg.commutes(a, b)
                for a in range(alg.size) for b in range(alg.size)
            )
            if all_commute:
                assert classify(alg).is_ioml


def test_every_size_six_implicative_model_keeps_the_pairing_identity():
    # spot check: an independent law holds across the whole enumerated slice
    for alg in enumerate_models(EnumerationTask(size=6, klass="implinvbe")):
        assert terms.holds(
            "(x1 -> y1')' -> (x2 -> y2') = (x1 -> x2')' -> (y1 -> y2')", alg).ok
