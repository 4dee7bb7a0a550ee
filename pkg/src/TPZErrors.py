"""
Errors raised through DebugStop. TPZError is a ValueError.
"""
#%% ****************** 
#   IMPORTED MODULES
#   ******************
from dataclasses import dataclass, field

#%% ****************** 
#   CLASS DEFINITION
#   ******************
class TPZError(ValueError):
    """Root of every error raised by the src package."""


class TPZNoBracketError(TPZError):
    """The function does not change sign on the given interval."""


class TPZBlowupError(TPZError):
    """
    A time march produced a non-finite state or crossed a singularity floor.

    Fields:
        - lastTime: last time (or march coordinate) with a finite state
        - location: grid location of the breakdown, when known
    """
    def __init__(self, message: str, lastTime: float, location=None) -> None:
        super().__init__(message)
        self.fLastTime: float = lastTime
        self.fLocation = location

        return


class TPZAccuracyError(TPZError):
    """Adaptive quadrature could not reach the requested tolerance."""


class TPZNotFoundError(TPZError):
    """An eigenvalue bracket could not be found in the scan range."""


class TPZSingularError(TPZError):
    """Numerically singular matrix."""


class TPZShapeError(TPZError):
    """Operands of incompatible shapes."""


class TPZNoInstabilityError(TPZError):
    """The catenoid branch is not beyond the critical ratio."""


class TPZPoleError(TPZError):
    def __init__(self, message: str, pole: float) -> None:
        super().__init__(message)
        self.fPole: float = pole

        return


class TPZSingularPointError(TPZError):
    """The level-set gradient vanishes."""


class TPZOffSurfaceError(TPZError):
    def __init__(self, message: str, defect: float) -> None:
        super().__init__(message)
        self.fDefect: float = defect

        return


class TPZNotARealSurfaceError(TPZError):
    pass


class TPZNoRealProfileError(TPZError):
    pass


class TPZRangeError(TPZError):
    pass


class TPZDegenerateChartError(TPZError):
    pass


class TPZChartBreakdownError(TPZError):
    pass


class TPZNotAGraphError(TPZError):
    pass


class TPZNullDegeneracyError(TPZError):
    pass


class TPZUsageError(TPZError):
    """Bad command line or configuration. Mapped to exit status 2."""


@dataclass
class TPZConstraintLoss:
    """
    Record of a constraint drifting beyond tolerance during an evolution.
    It is logged and reported, never raised.
    """
    fStep: int
    fTime: float
    fDefect: float
    fTolerance: float = field(default=0.)
