"""Axiom families, per-axiom checking, and whole-algebra classification.

Every axiom is stored as a statement in the term language and checked by the
shared evaluation engine in `terms`, never by a bespoke loop, so the same
data drives this module, the theorem bank, and the CLI.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass

from .algebras import FiniteAlgebra
from .errors import ConsistencyError
from . import terms


class Axiom(enum.Enum):
    BE1 = "be1"
    BE2 = "be2"
    BE3 = "be3"
    BE4 = "be4"
    BOUNDED = "bounded"
    INVOLUTIVE = "involutive"
    IMPL = "impl"
    IG = "ig"
    IABS_I = "iabs_i"
    PIMPL = "pimpl"
    IOM = "iom"
    IOM_P = "iom_p"
    IOM_PP = "iom_pp"
    QW = "qw"
    QW1 = "qw1"
    QW2 = "qw2"
    IDIV = "idiv"
    IDIS = "idis"


# Statement source per axiom id.  IDIS is the one composite: both
# distributivity identities quantified over all triples.
AXIOM_SOURCES: dict[Axiom, tuple[str, ...]] = {
    Axiom.BE1: ("x -> x = 1",),
    Axiom.BE2: ("x -> 1 = 1",),
    Axiom.BE3: ("1 -> x = x",),
    Axiom.BE4: ("x -> (y -> z) = y -> (x -> z)",),
    Axiom.BOUNDED: ("0 -> x = 1",),
    Axiom.INVOLUTIVE: ("x'' = x",),
    Axiom.IMPL: ("(x -> y) -> x = x",),
    Axiom.IG: ("x' -> x = x",),
    Axiom.IABS_I: ("(x -> (x -> y)) -> x = x",),
    Axiom.PIMPL: ("x -> (x -> y) = x -> y",),
    Axiom.IOM: ("x & (y -> x) = x",),
    Axiom.IOM_P: ("x & (x' -> y) = x",),
    Axiom.IOM_PP: ("x | (x -> y)' = x",),
    Axiom.QW: ("x -> ((x & y) & (z & x)) = (x -> y) & (x -> z)",),
    Axiom.QW1: ("x -> (x & y) = x -> y",),
    Axiom.QW2: ("x -> (y & (z & x)) = (x -> y) & (x -> z)",),
    Axiom.IDIV: ("x -> (x -> y)' = x -> y'",),
    Axiom.IDIS: (
        "((x' -> y) -> z')' = (x -> z') -> (y -> z')'",
        "((x -> y') -> z)' = (z' -> x) -> (z' -> y)'",
    ),
}

IDIS1_SOURCE = AXIOM_SOURCES[Axiom.IDIS][0]
IDIS2_SOURCE = AXIOM_SOURCES[Axiom.IDIS][1]


@functools.lru_cache(maxsize=None)
def axiom_statements(axiom: Axiom) -> tuple[terms.Statement, ...]:
    return tuple(terms.parse_statement(src) for src in AXIOM_SOURCES[axiom])


@dataclass(frozen=True)
class CheckResult:
    axiom: Axiom
    passed: bool
    witness: dict[str, int] | None = None
    witness_vars: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.passed


def check_axiom(alg: FiniteAlgebra, axiom: Axiom) -> CheckResult:
    """Exhaustively evaluate one axiom; on failure carry the first witness."""
    for stmt in axiom_statements(axiom):
        result = terms.holds(stmt, alg)
        if not result.ok:
            return CheckResult(axiom, False, result.witness, stmt.vars)
    return CheckResult(axiom, True)


def _check_axiom_fast_idis(alg: FiniteAlgebra) -> CheckResult:
    # shortcut sanctioned only behind the explicit fast flag: on the lattice
    # class, distributivity is equivalent to the divisibility law
    proxy = check_axiom(alg, Axiom.IDIV)
    return CheckResult(Axiom.IDIS, proxy.passed, proxy.witness, proxy.witness_vars)


@dataclass(frozen=True)
class ClassificationReport:
    """Per-axiom verdicts plus the derived class labels."""

    algebra: FiniteAlgebra
    results: dict[Axiom, CheckResult]
    degenerate: bool

    @property
    def is_be(self) -> bool:
        return all(self.results[a].passed for a in (Axiom.BE1, Axiom.BE2, Axiom.BE3, Axiom.BE4))

    @property
    def is_bounded_be(self) -> bool:
        return self.is_be and self.results[Axiom.BOUNDED].passed

    @property
    def is_involutive_be(self) -> bool:
        return self.is_bounded_be and self.results[Axiom.INVOLUTIVE].passed

    @property
    def is_implicative_involutive_be(self) -> bool:
        return self.is_involutive_be and self.results[Axiom.IMPL].passed

    @property
    def is_ioml(self) -> bool:
        return self.is_implicative_involutive_be and self.results[Axiom.IOM].passed

    @property
    def is_implicative_boolean(self) -> bool:
        return self.is_implicative_involutive_be and self.results[Axiom.IDIV].passed

    def labels(self) -> tuple[str, ...]:
        pairs = (
            ("BE", self.is_be),
            ("BOUNDED_BE", self.is_bounded_be),
            ("INVOLUTIVE_BE", self.is_involutive_be),
            ("IMPLICATIVE_INVOLUTIVE_BE", self.is_implicative_involutive_be),
            ("IOML", self.is_ioml),
            ("IMPLICATIVE_BOOLEAN", self.is_implicative_boolean),
        )
        return tuple(name for name, earned in pairs if earned)


def classify(alg: FiniteAlgebra, fast_idis: bool = False) -> ClassificationReport:
    """Check every axiom family and derive the class labels.

    With `fast_idis` the distributivity verdict is proxied by the
    divisibility law instead of the direct two-identity scan; the default
    never assumes that equivalence.
    """
    results = {}
    for axiom in Axiom:
        if axiom is Axiom.IDIS and fast_idis:
            results[axiom] = _check_axiom_fast_idis(alg)
        else:
            results[axiom] = check_axiom(alg, axiom)
    report = ClassificationReport(alg, results, degenerate=alg.is_degenerate)
    if report.is_implicative_involutive_be:
        forms = [results[a].passed for a in (Axiom.IOM, Axiom.IOM_P, Axiom.IOM_PP)]
        if len(set(forms)) != 1:
            raise ConsistencyError(
                "the three orthomodularity forms disagree on an implicative "
                f"involutive table: IOM={forms[0]} IOM_P={forms[1]} IOM_PP={forms[2]}"
            )
    return report


# -- pointwise distributivity helpers ----------------------------------------


@functools.lru_cache(maxsize=None)
def _idis_parsed():
    return terms.parse_statement(IDIS1_SOURCE), terms.parse_statement(IDIS2_SOURCE)


def idiv_pair(alg: FiniteAlgebra, x: int, y: int) -> bool:
    """Does the divisibility law hold at the single pair (x, y)?"""
    stmt = axiom_statements(Axiom.IDIV)[0]
    return terms.atom_holds(stmt, alg, {"x": x, "y": y})


def idis1_triple(alg: FiniteAlgebra, x: int, y: int, z: int) -> bool:
    eq1, _ = _idis_parsed()
    return terms.atom_holds(eq1, alg, {"x": x, "y": y, "z": z})


def idis2_triple(alg: FiniteAlgebra, x: int, y: int, z: int) -> bool:
    _, eq2 = _idis_parsed()
    return terms.atom_holds(eq2, alg, {"x": x, "y": y, "z": z})


def distributive_triple(alg: FiniteAlgebra, x: int, y: int, z: int) -> bool:
    """Both identities under all six orderings of (x, y, z): 12 instances."""
    for p in itertools.permutations((x, y, z)):
        if not idis1_triple(alg, *p) or not idis2_triple(alg, *p):
            return False
    return True
