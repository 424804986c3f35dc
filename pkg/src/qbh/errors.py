"""Exception hierarchy shared by all qbh modules."""


class QbhError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(QbhError):
    """Field characteristic is not a prime number."""


class ReducibleModulus(QbhError):
    """Supplied modulus polynomial is not monic irreducible of the right degree."""


class NoEmbedding(QbhError):
    """No field embedding exists (characteristic or degree mismatch)."""


class BudgetExceeded(QbhError):
    """An exact enumeration would exceed the configured work budget."""


class LengthMismatch(QbhError):
    """Vector or matrix dimensions are inconsistent."""


class ZeroCode(QbhError):
    """Operation requires a nonzero linear code."""


class NotBh(QbhError):
    """Matrix fails the Butson-Hadamard orthogonality criterion."""


class LabelsNotGroup(QbhError):
    """Column labels do not enumerate a full F_p vector space."""


class DegenerateForm(QbhError):
    """Bilinear form data is degenerate (singular Gram matrix or zero scalar)."""


class DimensionMismatch(QbhError):
    """Field tower degrees do not line up."""


class NotACodeword(QbhError):
    """Vector does not belong to the expected code."""


class DegenerateD(QbhError):
    """Outer code is trivial or has an identically zero coordinate."""


class DimensionBounds(QbhError):
    """Code dimensions are outside the supported range."""
