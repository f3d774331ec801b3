"""Exception types shared across the package."""


class SpectraError(Exception):
    """Base class for all library errors."""


class SmilesSyntaxError(SpectraError, ValueError):
    """Malformed SMILES text: unbalanced rings/branches, unknown tokens."""


class ValenceError(SpectraError, ValueError):
    """An atom exceeds the maximum valence allowed for its element."""


class SanitizeError(SpectraError, ValueError):
    """A molecule cannot be brought to a chemically legal state."""


class ConvergenceError(SpectraError, ArithmeticError):
    """An eigensolver failed to converge."""


class DegenerateBasisError(SpectraError, ArithmeticError):
    """The blended eigenbasis is rank-deficient beyond tolerance."""


class DegenerateLabelsError(SpectraError, ValueError):
    """Label set has zero variance; a KDE bandwidth cannot be chosen."""


class SchemaError(SpectraError, ValueError):
    """An input file is missing required columns."""


class EmptyGraphError(SpectraError, ValueError):
    """No edge survived reconstruction; nothing to decode."""
