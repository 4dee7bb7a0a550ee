"""
Characteristic initial value problem in null coordinates
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from typing import Callable, ClassVar

import numpy as np

from src.TPZCharacteristicFields import TPZCharacteristicFields
from src.TPZErrors import TPZBlowupError, TPZChartBreakdownError, TPZError, TPZNotAGraphError
from src.TPZNumerics import TPZNumerics

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZNullMarch:
    rFloor: ClassVar[float] = 1e-6
    correctorPasses: ClassVar[int] = 2
    chartTol: ClassVar[float] = 1e-10
    graphStep: ClassVar[float] = 1e-3

    #   ******************
    #    GOURSAT PROBLEM
    #   ******************
    @staticmethod
    def March(thetaPlus, thetaMinus, alongPlus, alongMinus) -> TPZCharacteristicFields:
        """
        Second order march of x+- = F(x, x+, x-) from data on two null lines.

        Inputs:
        ------
        thetaPlus, thetaMinus : array
            Uniform axes.
        alongPlus : array (3, n+)
            (t, r, z) on the line theta- = thetaMinus[0].
        alongMinus : array (3, n-)
            (t, r, z) on the line theta+ = thetaPlus[0]. Its first column must equal
            the first column of alongPlus.

        Returns:
        --------
        TPZCharacteristicFields of the marched embedding. Null constraints are imposed
        only through the data and are left to propagate.
        """
        thetaPlus = np.asarray(thetaPlus, dtype=float)
        thetaMinus = np.asarray(thetaMinus, dtype=float)
        alongPlus = np.asarray(alongPlus, dtype=float)
        alongMinus = np.asarray(alongMinus, dtype=float)

        if not np.allclose(alongPlus[:, 0], alongMinus[:, 0]):
            raise TPZError(f'null data disagree at the corner: {alongPlus[:, 0]} and {alongMinus[:, 0]}')

        nPlus, nMinus = len(thetaPlus), len(thetaMinus)
        hPlus, hMinus = thetaPlus[1] - thetaPlus[0], thetaMinus[1] - thetaMinus[0]

        X = np.zeros((3, nPlus, nMinus))
        X[:, :, 0] = alongPlus
        X[:, 0, :] = alongMinus

        # cells (i, j) -> (i + 1, j + 1) on the anti-diagonal i + j = k
        for k in range(nPlus + nMinus - 3):
            i = np.arange(max(0, k - nMinus + 2), min(k, nPlus - 2) + 1)
            j = k - i

            x00, x10, x01 = X[:, i, j], X[:, i + 1, j], X[:, i, j + 1]
            x11 = x10 + x01 - x00 + hPlus * hMinus * TPZCharacteristicFields.SecondOrderRhs(
                (x10[1] + x01[1]) / 2, (x10 - x00) / hPlus, (x01 - x00) / hMinus)

            for _ in range(TPZNullMarch.correctorPasses):
                r = (x00[1] + x10[1] + x01[1] + x11[1]) / 4
                plus = (x10 - x00 + x11 - x01) / (2 * hPlus)
                minus = (x01 - x00 + x11 - x10) / (2 * hMinus)
                x11 = x10 + x01 - x00 + hPlus * hMinus * TPZCharacteristicFields.SecondOrderRhs(r, plus, minus)

            if not np.all(np.isfinite(x11)) or np.min(x11[1]) < TPZNullMarch.rFloor:
                worst = int(np.nanargmin(np.where(np.isfinite(x11[1]), x11[1], -np.inf)))
                location = (float(thetaPlus[i[worst] + 1]), float(thetaMinus[j[worst] + 1]))
                logger.warning('null march crossed the radius floor at theta = %s', location)
                raise TPZBlowupError(f'radius below {TPZNullMarch.rFloor} in the null march',
                                     lastTime=float(np.min(X[0, i + 1, j])), location=location)

            X[:, i + 1, j + 1] = x11

        fields = TPZCharacteristicFields(thetaPlus, thetaMinus, *X)
        logger.info('null march on %d x %d cells: null defect %.3g', nPlus - 1, nMinus - 1,
                    max(np.max(np.abs(defect)) for defect in fields.NullDefects()))

        return fields

    #   ******************
    #      LIGHT CONE
    #   ******************
    @staticmethod
    def LightCone(fields: TPZCharacteristicFields) -> dict:
        """
        tau = (t + z)/2 and xi = t - z. The constraints solve xi+- = r+-^2/(2 tau+-) and
        leave the pair
            2r tau+- + (r+ tau- + r- tau+) = 0,
            4 tau+ tau- r r+- + (r+ tau- + r- tau+)^2 = 0.
        With r = exp(-2 rho) the pair reads tau+- = K and 2 rho+- - 4 rho+ rho- = K^2/(tau+ tau-),
        K = rho+ tau- + rho- tau+. xi is the embedding function zeta = t - z.

        Returns:
        --------
        dict of residual arrays: xi_plus, xi_minus, tau_equation, tau_conservation,
        r_equation, rho_tau, rho_equation
        """
        xi = fields.fT - fields.fZ
        tauPlus = (fields.fPlus[0] + fields.fPlus[2]) / 2
        tauMinus = (fields.fMinus[0] + fields.fMinus[2]) / 2

        if min(np.min(np.abs(tauPlus)), np.min(np.abs(tauMinus))) < TPZNullMarch.chartTol:
            raise TPZChartBreakdownError('tau+ or tau- vanishes on the grid')

        r, rPlus, rMinus = fields.fR, fields.fPlus[1], fields.fMinus[1]
        tauMixed = fields.DMinus(tauPlus)
        rMixed = fields.DMinus(rPlus)
        source = rPlus * tauMinus + rMinus * tauPlus

        rho = -0.5 * np.log(r)
        rhoPlus, rhoMinus = -rPlus / (2 * r), -rMinus / (2 * r)
        K = rhoPlus * tauMinus + rhoMinus * tauPlus

        residuals = {
            'xi_plus': fields.DPlus(xi) - rPlus**2 / (2 * tauPlus),
            'xi_minus': fields.DMinus(xi) - rMinus**2 / (2 * tauMinus),
            'tau_equation': 2 * r * tauMixed + source,
            'tau_conservation': fields.DMinus(r * tauPlus) + fields.DPlus(r * tauMinus),
            'r_equation': 4 * tauPlus * tauMinus * r * rMixed + source**2,
            'rho_tau': tauMixed - K,
            'rho_equation': 2 * fields.DMinus(fields.DPlus(rho)) - 4 * rhoPlus * rhoMinus - K**2 / (tauPlus * tauMinus),
        }

        logger.debug('light cone residuals: %s', {name: float(np.max(np.abs(value))) for name, value in residuals.items()})

        return residuals

    #   ******************
    #      GRAPH FORMS
    #   ******************
    @staticmethod
    def GraphOperator(tr, tz, trr, tzz, trz, r) -> np.ndarray:
        """
        t_rr (t_z^2 - 1) + t_zz (t_r^2 - 1) - 2 t_r t_z t_rz + (t_r/r)(t_r^2 + t_z^2 - 1)
        """
        return trr * (tz**2 - 1) + tzz * (tr**2 - 1) - 2 * tr * tz * trz + tr / r * (tr**2 + tz**2 - 1)

    @staticmethod
    def GraphResidual(t: Callable, r, z, h: float = None) -> np.ndarray:
        """
        Field equation of a time graph t(r, z), t called on arrays of points (r, z)
        stacked along the first axis
        """
        h = h or TPZNullMarch.graphStep
        point = np.array([np.asarray(r, dtype=float), np.asarray(z, dtype=float)])
        D = lambda directions, order: TPZNumerics.FdDeriv(t, point, directions, order, h, accuracy=4)

        return TPZNullMarch.GraphOperator(D((0,), 1), D((1,), 1), D((0,), 2), D((1,), 2), D((0, 1), 2), point[0])

    @staticmethod
    def GraphResidualOfFields(fields: TPZCharacteristicFields) -> np.ndarray:
        """
        Graph residual of marched or exact fields. Partial derivatives in (r, z) follow from
        d/dr f = (f+ z- - f- z+)/m0 and d/dz f = (r+ f- - r- f+)/m0 with m0 = r+ z- - r- z+.
        """
        m = fields.MVector()
        if np.min(np.abs(m[0])) < TPZNullMarch.chartTol or np.ptp(np.sign(m[0])) > 0:
            raise TPZNotAGraphError('(theta+, theta-) -> (r, z) folds on the grid, t(r, z) is not single valued')

        (rPlus, zPlus), (rMinus, zMinus) = fields.fPlus[1:], fields.fMinus[1:]

        def Dr(f):
            return (fields.DPlus(f) * zMinus - fields.DMinus(f) * zPlus) / m[0]

        def Dz(f):
            return (rPlus * fields.DMinus(f) - rMinus * fields.DPlus(f)) / m[0]

        tr, tz = -m[1] / m[0], -m[2] / m[0]

        return TPZNullMarch.GraphOperator(tr, tz, Dr(tr), Dz(tz), 0.5 * (Dz(tr) + Dr(tz)), fields.fR)

    @staticmethod
    def MongeAmpere(q: Callable, x1, x2, h: float = None) -> np.ndarray:
        """
        q2 [(1 - x1^2) q11 + (1 - x2^2) q22 - 2 x1 x2 q12] - x2 (x1^2 + x2^2 - 1)(q11 q22 - q12^2)
        for a potential q with z = q1 and r = q2, orientation as in the hodograph plane
        """
        h = h or TPZNullMarch.graphStep
        point = np.array([np.asarray(x1, dtype=float), np.asarray(x2, dtype=float)])
        D = lambda directions, order: TPZNumerics.FdDeriv(q, point, directions, order, h, accuracy=4)

        q2, q11, q22, q12 = D((1,), 1), D((0,), 2), D((1,), 2), D((0, 1), 2)
        x1, x2 = point

        return q2 * ((1 - x1**2) * q11 + (1 - x2**2) * q22 - 2 * x1 * x2 * q12) - x2 * (x1**2 + x2**2 - 1) * (q11 * q22 - q12**2)
