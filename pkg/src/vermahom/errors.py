"""Exception types shared across the package.

Every domain error derives from :class:`VermaHomError` and carries a short
machine-readable ``code`` used by the CLI for one-line diagnostics.
"""


class VermaHomError(Exception):
    code = "error"


class InvalidComposition(VermaHomError):
    """Composition is not a tuple of at least two positive integers."""

    code = "invalid_composition"


class NonIntegralWeight(VermaHomError):
    """Block weight entries must be plain integers."""

    code = "non_integral_weight"


class CompositionMismatch(VermaHomError):
    """Two values that must share a composition do not."""

    code = "composition_mismatch"


class NotScalar(VermaHomError):
    """Full weight is not the expansion of any block weight."""

    code = "not_scalar"


class BlockSizeMismatch(VermaHomError):
    """Blocks of different sizes cannot be exchanged."""

    code = "block_size_mismatch"


class NotSameOrbit(VermaHomError):
    """The two weights lie in different block-permutation orbits."""

    code = "not_same_orbit"


class NotComparable(VermaHomError):
    """No chain of elementary descents connects the two weights."""

    code = "not_comparable"


class Comparable(VermaHomError):
    """Obstruction evidence was requested for a comparable pair."""

    code = "comparable"


class OrbitTooLarge(VermaHomError):
    """Orbit enumeration would exceed the configured cap."""

    code = "orbit_too_large"


class NotInPsiTop(VermaHomError):
    """Shift set is not contained in the top-aligned level set."""

    code = "not_in_psi_top"


class NotInPsiBot(VermaHomError):
    """Shift set is not contained in the bottom-aligned level set."""

    code = "not_in_psi_bot"


class WitnessMismatch(VermaHomError):
    """A witness does not certify the pair it was used with (internal bug)."""

    code = "witness_mismatch"


class LegalityViolation(VermaHomError):
    """A degeneration stage failed its legality condition (internal bug)."""

    code = "legality_violation"
