"""Finite implication algebras and orthomodular lattices at desk scale."""

from .algebras import (
    DerivedOp,
    DERIVED_DEFS,
    FiniteAlgebra,
    RelationKind,
    RelationMatrix,
    format_algtab,
    load_algtab,
    parse_algtab,
    save_algtab,
)
from .axioms import Axiom, ClassificationReport, check_axiom, classify, distributive_triple
from .errors import ConsistencyError, FormatError, InputError, IomlatError, ParseError
from .modelsearch import EnumerationTask, count_models, enumerate_models, find_counterexample
from .ortho import OrthoLattice, check_om_law, from_ortholattice, load_ortlat, to_ortholattice
from .terms import Equation, QuasiIdentity, evaluate, holds, parse, parse_statement

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "ClassificationReport",
    "ConsistencyError",
    "DerivedOp",
    "DERIVED_DEFS",
    "EnumerationTask",
    "Equation",
    "FiniteAlgebra",
    "FormatError",
    "InputError",
    "IomlatError",
    "OrthoLattice",
    "ParseError",
    "QuasiIdentity",
    "RelationKind",
    "RelationMatrix",
    "check_axiom",
    "check_om_law",
    "classify",
    "count_models",
    "distributive_triple",
    "enumerate_models",
    "evaluate",
    "find_counterexample",
    "format_algtab",
    "from_ortholattice",
    "holds",
    "load_algtab",
    "load_ortlat",
    "parse",
    "parse_algtab",
    "parse_statement",
    "save_algtab",
    "to_ortholattice",
]
