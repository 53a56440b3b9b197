"""Exception types shared across the package.

The CLI maps these onto exit codes: InputError -> 2, ChartSingularError -> 3,
IntegrabilityError -> 4; anything else that signals a failed verification
exits 1.
"""


class LH3Error(Exception):
    """Base class for all package-specific errors."""


class InputError(LH3Error):
    """Malformed user input (CLI arguments, JSON payloads, file contents)."""


class ModelDomainError(LH3Error):
    """Point outside the model domain (t <= 0, |y| >= 1, blow-up, ...)."""


class ChartSingularError(LH3Error):
    """Operation requested at a singular point of the coordinate chart."""


class InvalidGeodesicError(LH3Error):
    """Pair (mu1, mu2) lies on the reflected diagonal (coincident endpoints)."""


class CausticError(LH3Error):
    """Optical scalars requested where the congruence density vanishes."""


class DegenerateError(LH3Error):
    """Degenerate input: rank-0 data, |lam1*lam2 - 1| = 0, zero determinant."""


class BranchError(LH3Error):
    """Precondition of a formula branch violated (wrong causal type,

    non-Lagrangian input to a Lagrangian-only quantity, off-surface point)."""


class IntegrabilityError(LH3Error):
    """The r-field one-form is not closed (non-Lagrangian congruence).

    Carries the maximal plaquette circulation in .defect."""

    def __init__(self, message, defect=None):
        super().__init__(message)
        self.defect = defect
