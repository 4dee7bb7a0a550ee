"""
One catenoid spanning two coaxial rings
"""
#%% ****************** 
#   IMPORTED MODULES
#   ******************
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

#%% ****************** 
#   CLASS DEFINITION
#   ******************
class TPZCatenoidBranch(TPZBasicDataStructure):
    """
    Catenoid r = a cosh(z/a) between rings at z = -d/2 and z = d/2. Lengths are in
    units of the ring distance d.

    Fields:
        - w: d/(2a), the half length of the profile in units of a
        - aOverD: the neck radius a/d = 1/(2w)
        - areaCoeff: area in units of pi*d^2/2
        - branch: 'outer', 'inner' or 'critical'
    """
    branches: ClassVar[tuple] = ('outer', 'inner', 'critical')

#   ****************** 
#      INITIALIZER
#   ******************  
    def __init__(self, w: float, branch: str) -> None:
        super().__init__()

        self.fW: float = w
        self.fBranch: str = branch
        self.fAOverD: float = 1 / (2 * w)
        self.fAreaCoeff: float = self.AreaCoefficient(w)

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fBranch not in self.branches:
            self.DebugStop(f'ERROR: unknown catenoid branch {self.fBranch}')

        if not self.fW > 0:
            self.DebugStop(f'ERROR: w must be positive, got {self.fW}')

        return

#   ****************** 
#        METHODS
#   ******************  
    @staticmethod
    def AreaCoefficient(w: float) -> float:
        return 1 / w + np.sinh(2 * w) / (2 * w**2)

    def Ratio(self) -> float:
        """
        Ring diameter over ring distance generating this branch
        """
        return np.cosh(self.fW) / self.fW

    def Profile(self, npoints: int = 65) -> tuple[np.ndarray, np.ndarray]:
        """
        (z, r) samples of the meridian in units of d
        """
        u = np.linspace(-self.fW, self.fW, npoints)

        return self.fAOverD * u, self.fAOverD * np.cosh(u)
