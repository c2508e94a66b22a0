"""Exception types shared across the package."""


class QdupError(Exception):
    """Base class for all package-specific errors."""


class FieldMismatchError(QdupError):
    """Operands belong to different fields."""


class CharTwoError(QdupError):
    """Operation requires characteristic different from two."""


class CharMismatchError(QdupError):
    """Construction requires a specific field characteristic."""


class ZeroInputError(QdupError):
    """A nonzero input was required."""


class ZeroParameterError(QdupError):
    """A nonzero parameter was required."""


class BudgetExceededError(QdupError):
    """An enumeration would exceed the configured budget."""


class NotInvolutiveError(QdupError):
    """The given map does not square to the identity."""


class NotMorphismError(QdupError):
    """The given map is not an algebra morphism."""


class AxiomViolatedError(QdupError):
    """A conjugation-map axiom failed; ``axiom`` names which one (1, 2 or 3)."""

    def __init__(self, axiom: int, message: str = ""):
        self.axiom = axiom
        super().__init__(message or f"conjugation axiom ({axiom}) violated")


class CertificationError(QdupError):
    """An explicit isomorphism failed verification; build-stopping."""


class InvalidPairError(QdupError):
    """The (f, delta) pair does not satisfy the twisting conditions."""


class OutOfRangeError(QdupError):
    """A set map must send {1..n} into {1..n}."""


class MalformedQuiverError(QdupError):
    """Arrow endpoints must be existing vertices."""


class NotOneCycleError(QdupError):
    """The component transform is only defined on 1-cycles."""


class RootsNotDistinctError(QdupError):
    """Two distinct roots are required."""


class DegenerateParameterError(QdupError):
    """Parameters hit the degenerate locus of the construction."""


class ParameterIsSquareError(QdupError):
    """The parameter must be a nonsquare to generate a field extension."""
