"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have missing, mismatched, or non-square dimensions."""


class ValidationError(ValueError):
    """A physical invariant fails to hold within its tolerance."""


class HermiticityError(ValidationError):
    """Matrix expected to be Hermitian is not."""


class TraceError(ValidationError):
    """Trace differs from the required value."""


class PositivityError(ValidationError):
    """Matrix has a negative eigenvalue beyond tolerance."""


class NormalizationError(ValidationError):
    """Vector norm or probability weights do not sum to one."""


class OrthonormalityError(ValidationError):
    """A set of vectors or operators is not orthonormal."""


class PurityError(ValidationError):
    """Operation defined only for pure states received a mixed state."""


class DegeneratePointError(ValueError):
    """Fisher information hits an undefined 0/0 limit at this parameter point."""


class DimensionGuardError(ValueError):
    """Requested computation exceeds the configured dimension guard."""


class OptimizationError(RuntimeError):
    """The objective returned a non-finite value during optimization."""
