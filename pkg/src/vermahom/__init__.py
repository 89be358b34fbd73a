"""Homomorphism combinatorics for scalar generalized Verma modules of gl(n).

Weights are given in block form over a composition of n, with integer
entries.  The package decides whether one induced module embeds into
another, factorizes existing embeddings into elementary descent swaps,
and produces obstruction evidence (threshold witness, degenerate pair,
translation trace) when no embedding exists.
"""

from .bruhat import (
    ClassTableau,
    ElementaryStep,
    HomDecision,
    REASON_COMPARABLE,
    REASON_NOT_COMPARABLE,
    REASON_NOT_SAME_ORBIT,
    class_tableaux,
    decide_hom,
    factorize,
    hasse,
    leq_bruteforce,
    leq_theta,
    up_moves,
)
from .errors import (
    BlockSizeMismatch,
    Comparable,
    CompositionMismatch,
    InvalidComposition,
    LegalityViolation,
    NonIntegralWeight,
    NotComparable,
    NotInPsiBot,
    NotInPsiTop,
    NotSameOrbit,
    NotScalar,
    OrbitTooLarge,
    VermaHomError,
    WitnessMismatch,
)
from .obstruction import DegeneratePair, Witness, degenerate, find_witness
from .translation import (
    LevelCounts,
    TraceStage,
    TranslationTrace,
    check_down,
    check_up,
    degeneration_trace,
    level_counts,
    shift,
)
from .weights import (
    BlockWeight,
    Composition,
    FullWeight,
    RootConeReport,
    antidominant_representative,
    contract,
    expand,
    is_theta_antidominant,
    same_orbit,
    simple_root_cone,
)
from .weyl import (
    DEFAULT_ORBIT_CAP,
    ThetaWeylElement,
    apply,
    compose,
    enumerate_orbit,
    identity,
    inverse,
    orbit_size,
    sigma_pq,
)

__version__ = "0.1.0"

__all__ = [
    "BlockSizeMismatch",
    "BlockWeight",
    "ClassTableau",
    "Comparable",
    "Composition",
    "CompositionMismatch",
    "DEFAULT_ORBIT_CAP",
    "DegeneratePair",
    "ElementaryStep",
    "FullWeight",
    "HomDecision",
    "InvalidComposition",
    "LegalityViolation",
    "LevelCounts",
    "NonIntegralWeight",
    "NotComparable",
    "NotInPsiBot",
    "NotInPsiTop",
    "NotSameOrbit",
    "NotScalar",
    "OrbitTooLarge",
    "REASON_COMPARABLE",
    "REASON_NOT_COMPARABLE",
    "REASON_NOT_SAME_ORBIT",
    "RootConeReport",
    "ThetaWeylElement",
    "TraceStage",
    "TranslationTrace",
    "VermaHomError",
    "Witness",
    "WitnessMismatch",
    "antidominant_representative",
    "apply",
    "check_down",
    "check_up",
    "class_tableaux",
    "compose",
    "contract",
    "decide_hom",
    "degenerate",
    "degeneration_trace",
    "enumerate_orbit",
    "expand",
    "factorize",
    "find_witness",
    "hasse",
    "identity",
    "inverse",
    "is_theta_antidominant",
    "leq_bruteforce",
    "leq_theta",
    "level_counts",
    "orbit_size",
    "same_orbit",
    "shift",
    "sigma_pq",
    "simple_root_cone",
    "up_moves",
]
