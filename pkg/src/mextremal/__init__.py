"""Multicolor Turán problems: colored containment, reduced matchings, exact
small extremal numbers, the extremal constructions and the density bounds."""

from .coloring import Partition, chromatic_number, enumerate_proper_partitions
from .errors import MextremalError
from .graphcore import (
    ColoredMultigraph,
    Embedding,
    HomWitness,
    blow_up,
    contains_colored,
    hom_exists,
    underlying_simple,
    validate,
)
from .reduced import ReducedGraph, is_reduced, multiplicity_one_matching, quotient, reduced_max_matching
from .extremal import MexResult, decision_avoidable, max_edges_avoiding, mex_exact
from .bounds import BoundReport, report, theorem_bound, tightness_check, trivial_bound

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ColoredMultigraph",
    "Embedding",
    "HomWitness",
    "MexResult",
    "MextremalError",
    "Partition",
    "ReducedGraph",
    "blow_up",
    "chromatic_number",
    "contains_colored",
    "decision_avoidable",
    "enumerate_proper_partitions",
    "hom_exists",
    "is_reduced",
    "max_edges_avoiding",
    "mex_exact",
    "multiplicity_one_matching",
    "quotient",
    "reduced_max_matching",
    "report",
    "theorem_bound",
    "tightness_check",
    "trivial_bound",
    "underlying_simple",
    "validate",
]
