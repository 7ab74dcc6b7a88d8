class StabilityViolation(ValueError):
    """Stokes parameters outside the stable squeezing regime (mean frequency <= coupling)."""


class DegenerateCoupling(ValueError):
    """Anti-Stokes polariton transform is undefined: zero detuning and zero coupling."""
