"""Exception types shared across the package.

Everything derives from DomainError so callers (notably the CLI) can
distinguish "the math rejected your input" from ordinary usage errors.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""


class NotHermitian(DomainError):
    """A matrix required to be Hermitian is not, beyond tolerance."""


class DimensionMismatch(DomainError):
    """Operands have incompatible Hilbert-space dimensions."""


class InvalidDimension(DomainError):
    """Requested Hilbert dimension is not supported."""


class NonNegligibleImaginaryPart(DomainError):
    """A quantity that must be real carries too large an imaginary residue."""


class ReconstructionNotPositive(DomainError):
    """A reconstructed matrix has a significantly negative eigenvalue."""


class IndexOutOfRange(DomainError):
    """A basis, harmonic, or phase-space index lies outside its valid range."""


class InvalidEpsilon(DomainError):
    """Pseudopure purity factor outside [0, 1]."""


class NonUnitaryPointOperator(DomainError):
    """A scaled point operator fails the unitarity guard (corrupted frame)."""
