"""
Uniformly sampled real function on an interval or on a periodic domain
"""
#%% ****************** 
#   IMPORTED MODULES
#   ******************
import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

#%% ****************** 
#   CLASS DEFINITION
#   ******************
class TPZGridFunction(TPZBasicDataStructure):
    """
    Samples of a real function on the grid x0 + i*dx.

    Fields:
        - samples: function values
        - x0: abscissa of the first sample
        - dx: grid spacing
        - periodic: if True the domain wraps at x0 + len(samples)*dx, so the
        last sample is not repeated
    """
#   ****************** 
#      INITIALIZER
#   ******************  
    def __init__(self, samples, x0: float, dx: float, periodic: bool = False) -> None:
        super().__init__()

        self.fSamples: np.ndarray = np.asarray(samples, dtype=float)
        self.fX0: float = float(x0)
        self.fDx: float = float(dx)
        self.fPeriodic: bool = periodic

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fSamples.ndim != 1 or len(self.fSamples) < 2:
            self.DebugStop('ERROR: a grid function needs at least two samples')

        if not self.fDx > 0:
            self.DebugStop(f'ERROR: grid spacing must be positive, got {self.fDx}')

        return

#   ****************** 
#        METHODS
#   ******************  
    def __len__(self) -> int:
        return len(self.fSamples)

    def Abscissa(self) -> np.ndarray:
        return self.fX0 + self.fDx * np.arange(len(self.fSamples))

    def Period(self) -> float:
        """
        Length of the domain. For non periodic grids it is the distance
        between the first and the last sample.
        """
        if self.fPeriodic:
            return self.fDx * len(self.fSamples)

        return self.fDx * (len(self.fSamples) - 1)

    def Evaluate(self, x) -> np.ndarray:
        """
        Linear interpolation of the samples. Periodic grids wrap x into the domain.
        """
        x = np.asarray(x, dtype=float)

        if self.fPeriodic:
            period = self.Period()
            abscissa = np.append(self.Abscissa(), self.fX0 + period)
            values = np.append(self.fSamples, self.fSamples[0])
            x = self.fX0 + np.mod(x - self.fX0, period)
            
            return np.interp(x, abscissa, values)

        return np.interp(x, self.Abscissa(), self.fSamples)

    def SupDistance(self, other) -> float:
        """
        Sup-norm distance to another grid function on the same grid, or to a callable.
        """
        if callable(other):
            return float(np.max(np.abs(self.fSamples - other(self.Abscissa()))))

        if len(other) != len(self):
            self.DebugStop('ERROR: grid functions live on different grids')

        return float(np.max(np.abs(self.fSamples - other.fSamples)))

    def Integral(self) -> float:
        """
        Trapezoidal integral of the samples (rectangle rule when periodic).
        """
        if self.fPeriodic:
            return float(np.sum(self.fSamples) * self.fDx)

        return float(np.trapezoid(self.fSamples, dx=self.fDx))
