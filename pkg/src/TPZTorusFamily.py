"""
One parameter family of minimal tori in the unit three sphere, graphs
x = (cos(theta) e^{i phi1}, sin(theta) e^{i phi2}) over the Clifford torus with theta a
function of phi = phi1 + phi2.
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZFundamentalForms import TPZFundamentalForms
from src.TPZSurfaceMapS3 import TPZSurfaceMapS3

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZTorusFamily(TPZBasicDataStructure):
    """
    Fields:
        - e: family parameter sinh(gamma), zero for the Clifford torus
        - phi0: phase
        - energy: conserved E = 1/(2 sqrt(1 + e^2)), at most 1/2
    """
#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, e: float, phi0: float = 0.) -> None:
        super().__init__()

        self.fE: float = float(e)
        self.fPhi0: float = float(phi0)
        self.fEnergy: float = 0.

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if not self.fE >= 0:
            self.DebugStop(f'ERROR: family parameter must be non negative, got {self.fE}')

        self.fEnergy = 1 / (2 * np.sqrt(1 + self.fE**2))

        return

#   ******************
#      PROFILE ANGLE
#   ******************
    def _Q(self, phi):
        return np.sqrt(1 + (self.fE * np.sin(phi - self.fPhi0))**2)

    def Alpha(self, phi) -> tuple:
        """
        alpha = 2 theta together with sin(alpha) and cos(alpha)
        """
        phi = np.asarray(phi, dtype=float)
        q = self._Q(phi)

        sin, cos = 1 / q, -self.fE * np.sin(phi - self.fPhi0) / q

        return np.arctan2(sin, cos), sin, cos

    def ThetaOfPhi(self, phi) -> tuple:
        """
        Returns:
        --------
        (theta, sin(alpha), cos(alpha)) with alpha = 2 theta
        """
        alpha, sin, cos = self.Alpha(phi)

        return alpha / 2, sin, cos

    def AlphaDot(self, phi):
        phi = np.asarray(phi, dtype=float)
        return self.fE * np.cos(phi - self.fPhi0) / self._Q(phi)**2

    def ThetaDot(self, phi):
        return self.AlphaDot(phi) / 2

    def ThetaDDot(self, phi):
        phi = np.asarray(phi, dtype=float)
        e, q = self.fE, self._Q(phi)
        sin, cos = np.sin(phi - self.fPhi0), np.cos(phi - self.fPhi0)

        return -(e * sin / 2) * (q**2 + 2 * e**2 * cos**2) / q**4

    def TurningAngles(self) -> tuple:
        """
        Range of alpha: arcsin(2E) and pi - arcsin(2E)
        """
        lower = np.arcsin(min(2 * self.fEnergy, 1.))

        return lower, np.pi - lower

    #   ******************
    #      EMBEDDING
    #   ******************
    def Point(self, phi1, phi2) -> np.ndarray:
        theta, _, _ = self.ThetaOfPhi(np.asarray(phi1) + np.asarray(phi2))
        c, s = np.cos(theta), np.sin(theta)

        return np.array([c * np.cos(phi1), c * np.sin(phi1), s * np.cos(phi2), s * np.sin(phi2)])

    def Jacobian(self, phi1: float, phi2: float) -> np.ndarray:
        phi = phi1 + phi2
        theta, _, _ = self.ThetaOfPhi(phi)
        c, s, thetaDot = np.cos(theta), np.sin(theta), self.ThetaDot(phi)

        radial = np.array([-s * np.cos(phi1), -s * np.sin(phi1), c * np.cos(phi2), c * np.sin(phi2)])
        first = c * np.array([-np.sin(phi1), np.cos(phi1), 0., 0.]) + thetaDot * radial
        second = s * np.array([0., 0., -np.sin(phi2), np.cos(phi2)]) + thetaDot * radial

        return np.column_stack([first, second])

    def Map(self) -> TPZSurfaceMapS3:
        return TPZSurfaceMapS3(self.Point, self.Jacobian)

    #   ******************
    #   FUNDAMENTAL FORMS
    #   ******************
    def SqrtDetMetric(self, phi):
        """
        sqrt(det g) = s^2 c^2 / E
        """
        _, sin, _ = self.ThetaOfPhi(phi)

        return (sin / 2)**2 / self.fEnergy

    def FundamentalForms(self, phi: float) -> TPZFundamentalForms:
        theta, _, _ = self.ThetaOfPhi(phi)
        c2, s2 = np.cos(theta)**2, np.sin(theta)**2
        dot2 = self.ThetaDot(phi)**2
        root = self.SqrtDetMetric(phi)

        g = [[c2 + dot2, dot2], [dot2, s2 + dot2]]
        h = root * np.array([[2 * c2, c2 - s2], [c2 - s2, -2 * s2]])

        return TPZFundamentalForms(g, h)

    def ReparamUV(self, phi: float) -> tuple:
        """
        Derivatives u = f1', v = f2' of the reparametrization that pulls the flat
        Clifford metric back to the metric of the family member.

        Returns:
        --------
        (u, v, uExplicit, vExplicit) from sqrt(g) - s^2, sqrt(g) - c^2 and from the
        closed expressions in sin(phi - phi0)
        """
        theta, _, _ = self.ThetaOfPhi(phi)
        root = self.SqrtDetMetric(phi)
        u, v = root - np.sin(theta)**2, root - np.cos(theta)**2

        e, q = self.fE, self._Q(phi)
        ratio = e * np.sin(phi - self.fPhi0) / q
        tail = np.sqrt(1 + e**2) / q**2
        uExplicit, vExplicit = 0.5 * (-1 - ratio + tail), 0.5 * (-1 + ratio + tail)

        return u, v, uExplicit, vExplicit

    def ReparamJacobian(self, phi: float) -> np.ndarray:
        u, v, _, _ = self.ReparamUV(phi)

        return np.array([[1 + u, u], [v, 1 + v]])

    def TransformedCliffordForms(self, phi: float) -> TPZFundamentalForms:
        """
        Clifford forms (1/2) I and (1/2) diag(1, -1) pulled back through the reparametrization
        """
        jac = self.ReparamJacobian(phi)

        return TPZFundamentalForms(0.5 * jac.T @ jac, 0.5 * jac.T @ np.diag([1., -1.]) @ jac, normal='clifford')
