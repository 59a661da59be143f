"""Exact arithmetic on infinite integer sets and their additive complements.

The package decides, over a symbolic set algebra closed under union,
translation, negation, and finite edits, whether W + C covers the integers
(or all but finitely many), whether C is minimal with that property, and it
carries executable forms of the constructions that shrink or build such
sets with finite-loss certificates.
"""
from __future__ import annotations

from .cli import descriptor_json, main, parse_set, parse_set_json, to_dsl
from .constructions import (
    ShrinkCertificate,
    builtin,
    ep_shrink,
    finite_index_minimals,
    interval_shrink,
    subgroup_masc,
    thmA1_shrink,
    thmA2_pair,
    thmD_shrink,
)
from .errors import (
    BadParamsError,
    ComplementNotInfiniteError,
    DslSemanticError,
    DslSyntaxError,
    EmptySetError,
    FNotSubsetError,
    HypothesisNotObservedError,
    MissingResidueClassError,
    NoCongruentPairError,
    NonRepresentableError,
    NotContainingSubgroupError,
    OutOfDecidableRangeError,
    PreconditionViolatedError,
    RadiusTooSmallError,
    TooFewElementsError,
    TooLargeError,
    ToolkitError,
    UndecidablePairError,
)
from .intset import (
    BEPSet,
    Classification,
    CofiniteSet,
    FamilySet,
    FiniteSet,
    IntSet,
    PointwiseSet,
    TailSpec,
    UnionSet,
    Window,
    above,
    ap,
    below,
    blocks10_family,
    classify,
    cofinite,
    contains,
    enumerate_window,
    finite,
    generic_family,
    integers,
    lemma43_set,
    lemma44_set,
    make_bep,
    minus,
    negate,
    nonprimes,
    normalize,
    smallest_abs_elements,
    subgroup_set,
    translate,
    union,
)
from .predicates import (
    Verdict,
    asymptotic_exceptional_set,
    is_asymptotic_complement,
    is_complement,
    is_minimal_asymptotic_complement,
    is_minimal_complement,
    redundant_elements,
    removal_growth,
)
from .search import (
    brute_force_cover,
    complete_radius,
    cy_gap_classifier,
    greedy_asymptotic_complement,
    minimal_subset_search,
)
from .sumset import CoverageMask, bep_sumset, windowed_sumset

__version__ = "0.1.0"

__all__ = [
    "BEPSet",
    "BadParamsError",
    "Classification",
    "CofiniteSet",
    "ComplementNotInfiniteError",
    "CoverageMask",
    "DslSemanticError",
    "DslSyntaxError",
    "EmptySetError",
    "FNotSubsetError",
    "FamilySet",
    "FiniteSet",
    "HypothesisNotObservedError",
    "IntSet",
    "MissingResidueClassError",
    "NoCongruentPairError",
    "NonRepresentableError",
    "NotContainingSubgroupError",
    "OutOfDecidableRangeError",
    "PointwiseSet",
    "PreconditionViolatedError",
    "RadiusTooSmallError",
    "ShrinkCertificate",
    "TailSpec",
    "TooFewElementsError",
    "TooLargeError",
    "ToolkitError",
    "UndecidablePairError",
    "UnionSet",
    "Verdict",
    "Window",
    "above",
    "ap",
    "asymptotic_exceptional_set",
    "below",
    "bep_sumset",
    "blocks10_family",
    "brute_force_cover",
    "builtin",
    "classify",
    "cofinite",
    "complete_radius",
    "contains",
    "cy_gap_classifier",
    "descriptor_json",
    "enumerate_window",
    "ep_shrink",
    "finite",
    "finite_index_minimals",
    "generic_family",
    "greedy_asymptotic_complement",
    "integers",
    "interval_shrink",
    "is_asymptotic_complement",
    "is_complement",
    "is_minimal_asymptotic_complement",
    "is_minimal_complement",
    "lemma43_set",
    "lemma44_set",
    "main",
    "make_bep",
    "minimal_subset_search",
    "minus",
    "negate",
    "nonprimes",
    "normalize",
    "parse_set",
    "parse_set_json",
    "redundant_elements",
    "removal_growth",
    "smallest_abs_elements",
    "subgroup_masc",
    "subgroup_set",
    "thmA1_shrink",
    "thmA2_pair",
    "thmD_shrink",
    "to_dsl",
    "translate",
    "union",
    "windowed_sumset",
]
