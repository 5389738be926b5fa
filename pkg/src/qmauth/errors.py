"""Exception types shared across the package."""


class QmauthError(Exception):
    """Base class for all errors raised by this package."""


class DimError(QmauthError):
    """Operand dimensions are incompatible."""


class SingularError(QmauthError):
    """Matrix is singular where an inverse is required."""


class RankError(QmauthError):
    """Matrix does not have the rank the operation requires."""


class NoSolutionError(QmauthError):
    """Linear system is inconsistent."""


class ZeroInverseError(QmauthError):
    """Multiplicative inverse of zero requested."""


class NotInvertibleError(QmauthError):
    """Polynomial has no inverse modulo the given modulus."""


class ParamError(QmauthError):
    """Scheme or code parameters are out of range."""


class DecodeFailure(QmauthError):
    """Syndrome has no correctable error pattern (a protocol outcome, not a fault)."""


class NotACodewordError(QmauthError):
    """Word fails the parity check of the code it was claimed to belong to."""


class ModeMismatchError(QmauthError):
    """Key material supplied does not match the scheme mode."""


class NormError(QmauthError):
    """Amplitude vector is not normalized."""


class ResidueError(QmauthError):
    """An ancilla register that must be |0> holds a nonzero value."""


class SameRegisterError(QmauthError):
    """Source and destination registers of a two-register operation coincide."""


class FormatError(QmauthError):
    """Text serialization is malformed."""
