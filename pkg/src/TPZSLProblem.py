"""
Schrodinger type Sturm-Liouville problem -psi'' + V psi = E psi on a finite interval
"""
#%% ****************** 
#   IMPORTED MODULES
#   ******************
from typing import Callable, ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

#%% ****************** 
#   CLASS DEFINITION
#   ******************
class TPZSLProblem(TPZBasicDataStructure):
    """
    Fields:
        - potential: V as a vectorized function of one real variable
        - a, b: interval ends
        - boundary: 'dirichlet' or 'decay'. Decay problems are truncated at
        [a, b] with Dirichlet conditions there.
    """
    boundaries: ClassVar[tuple] = ('dirichlet', 'decay')

#   ****************** 
#      INITIALIZER
#   ******************  
    def __init__(self, potential: Callable, a: float, b: float, boundary: str = 'dirichlet') -> None:
        super().__init__()

        self.fPotential: Callable = potential
        self.fA: float = float(a)
        self.fB: float = float(b)
        self.fBoundary: str = boundary

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if not self.fA < self.fB:
            self.DebugStop(f'ERROR: empty interval [{self.fA}, {self.fB}]')

        if self.fBoundary not in self.boundaries:
            self.DebugStop(f'ERROR: unknown boundary condition {self.fBoundary}')

        if not np.all(np.isfinite(self.Sample(257))):
            self.DebugStop('ERROR: potential is not finite on the interval')

        return

    @classmethod
    def Decaying(cls, potential: Callable, truncation: float) -> 'TPZSLProblem':
        """
        Problem on the real line truncated to [-truncation, truncation]
        """
        return cls(potential, -truncation, truncation, boundary='decay')

#   ****************** 
#        METHODS
#   ******************  
    def Sample(self, npoints: int) -> np.ndarray:
        return np.asarray(self.fPotential(np.linspace(self.fA, self.fB, npoints)), dtype=float)

    def TailValue(self) -> float:
        return float(max(abs(self.fPotential(self.fA)), abs(self.fPotential(self.fB))))
