"""
Zero energy solutions of the Riccati equation

    4x(W' + W^2) + 2W + B/(1+x) + D/(1+x)^2 = 0,     x = y^2 > 0,

met by W = chi'/chi when phi(y) = chi(y^2) is an even or odd zero mode of
-d^2/dy^2 - B/(1+y^2) - D/(1+y^2)^2.
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZErrors import TPZPoleError
from src.TPZNumerics import TPZNumerics

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZRiccatiSolution(TPZBasicDataStructure):
    """
    One parameter family W = W0 + 1/Y around the particular solution
    W0 = (2+x)/(4x(1+x)), with Y = Yh*G,

        Yh = x^(3/2)/sqrt(1+x),   G = cTilde - 2 sqrt((1+x)/x) + 2 asinh(sqrt(x)).

    G increases from -inf to +inf, so every member has exactly one pole.

    Fields:
        - cTilde: integration constant
    """
    B: ClassVar[float] = 0.25
    D: ClassVar[float] = 1.25

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, cTilde: float) -> None:
        super().__init__()

        self.fCTilde: float = cTilde

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if not np.isfinite(self.fCTilde):
            self.DebugStop(f'ERROR: integration constant must be finite, got {self.fCTilde}')

        return

#   ******************
#        METHODS
#   ******************
    @staticmethod
    def Particular(x):
        x = np.asarray(x, dtype=float)

        return (2 + x) / (4 * x * (1 + x))

    @staticmethod
    def ParticularDerivative(x):
        x = np.asarray(x, dtype=float)

        return -(1 + 1 / (1 + x)) / (4 * x**2) - 1 / (4 * x * (1 + x)**2)

    def G(self, x):
        x = np.asarray(x, dtype=float)

        return self.fCTilde - 2 * np.sqrt((1 + x) / x) + 2 * np.arcsinh(np.sqrt(x))

    def Pole(self) -> float:
        """
        The zero of G
        """
        lower, upper = 1., 1.
        while self.G(lower) >= 0:
            lower /= 10
        while self.G(upper) <= 0:
            upper *= 10

        return TPZNumerics.FindRoot(self.G, lower, upper, tol=1e-15 * upper)

    def CheckRange(self, x) -> None:
        x = np.asarray(x, dtype=float)
        pole = self.Pole()

        if np.min(x) <= pole <= np.max(x):
            raise TPZPoleError(f'W has a pole at x={pole:.12g} inside [{np.min(x):.6g}, {np.max(x):.6g}]', pole)

        return

    def Evaluate(self, x):
        """
        W(x). Samples spanning the pole raise TPZPoleError.
        """
        self.CheckRange(x)
        x = np.asarray(x, dtype=float)
        homogeneous = x**1.5 / np.sqrt(1 + x)

        return self.Particular(x) + 1 / (homogeneous * self.G(x))

    def Derivative(self, x):
        self.CheckRange(x)
        x = np.asarray(x, dtype=float)

        homogeneous = x**1.5 / np.sqrt(1 + x)
        dhomogeneous = homogeneous * (3 / (2 * x) - 1 / (2 * (1 + x)))

        y = homogeneous * self.G(x)
        dy = dhomogeneous * self.G(x) + 1.

        return self.ParticularDerivative(x) - dy / y**2

    def Residual(self, x, w=None, dw=None):
        """
        Left hand side of the Riccati equation. W and W' default to this solution.
        """
        x = np.asarray(x, dtype=float)
        w = self.Evaluate(x) if w is None else w
        dw = self.Derivative(x) if dw is None else dw

        return 4 * x * (dw + w**2) + 2 * w + self.B / (1 + x) + self.D / (1 + x)**2

    def ParticularResidual(self, x):
        return self.Residual(x, self.Particular(x), self.ParticularDerivative(x))

    @staticmethod
    def FromZeroModes(y, c: float):
        """
        W = -U/(2y) with U = -phi'/phi for phi = c*phi1 + phi2, where
        phi1 = y (1+y^2)^(-1/4) and phi2 = (1+y^2)^(1/4) - y (1+y^2)^(-1/4) asinh(y).
        It equals the family member with cTilde = -2c.
        """
        y = np.asarray(y, dtype=float)
        p = 1 + y**2
        logarithm = np.arcsinh(y)

        numerator = c * (2 + y**2) / p - y / np.sqrt(p) - (2 + y**2) * logarithm / p
        denominator = c * y + np.sqrt(p) - y * logarithm

        return numerator / (4 * y * denominator)

    def AsymptoticDefect(self, x):
        """
        4xW - 1, which decays like 4/log(x) for large x
        """
        x = np.asarray(x, dtype=float)

        return 4 * x * self.Evaluate(x) - 1
