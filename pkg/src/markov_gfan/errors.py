"""Exception hierarchy shared by every module."""


class GfanError(Exception):
    """Base class for all library errors."""


class ConstraintViolation(GfanError, ValueError):
    """The product identities of a B-invariant matrix fail."""


class NonPositive(GfanError, ValueError):
    """A matrix parameter is not strictly positive."""


class NonReduced(GfanError, ValueError):
    """A mutation sequence repeats an index twice in a row."""


class KIsNotAWordLetter(NonReduced):
    """The next index equals the current K, which no S/T letter produces."""


class IrrationalRatio(GfanError, ValueError):
    """Some d_i/d_j is not the square of a rational number."""


class NonIntegralCoordinate(GfanError, ArithmeticError):
    """A modified coordinate came out non-integral."""


class NotAdmissible(GfanError, ValueError):
    """Two walks are neither both in trunks nor both in branches."""


class SingularTriple(GfanError, ArithmeticError):
    """A vector triple that should be a basis is linearly dependent."""


class InvalidParams(GfanError, ValueError):
    """Parameters outside the admissible set of a parameterization."""


class NotInHalfSpace(GfanError, ValueError):
    """A vector with non-positive coordinate sum was given to the H-section."""


class BasisMismatch(GfanError, TypeError):
    """Linear maps or vectors in different bases were combined."""
