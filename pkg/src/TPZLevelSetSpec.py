"""
Separable level set u(x) = sum_i f_i(x_i)
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZLevelSetSpec(TPZBasicDataStructure):
    """
    Fields:
        - name: catalog name
        - components: one (f, f', f'') triple of vectorized functions per coordinate
        - domains: sampling interval per coordinate. The last component must be
        monotone on its interval, since on-surface points are found by solving for it.
        - triples: optional (a, b, c, kappa) per coordinate with f'^2 = a + b e^(kappa f) + c e^(-kappa f)
    """
#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, name: str, components: list, domains: list, triples: list = None) -> None:
        super().__init__()

        self.fName: str = name
        self.fComponents: list = list(components)
        self.fDomains: list = [tuple(map(float, domain)) for domain in domains]
        self.fTriples: list = triples

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if len(self.fComponents) != len(self.fDomains):
            self.DebugStop(f'ERROR: {len(self.fComponents)} components but {len(self.fDomains)} domains')

        if any(len(component) != 3 for component in self.fComponents):
            self.DebugStop('ERROR: every component needs f, its first and its second derivative')

        if self.fTriples is not None and len(self.fTriples) != len(self.fComponents):
            self.DebugStop('ERROR: one coefficient triple per component')

        return

#   ******************
#        METHODS
#   ******************
    def Dim(self) -> int:
        return len(self.fComponents)

    def Value(self, x) -> float:
        return float(sum(f(xi) for (f, _, _), xi in zip(self.fComponents, x)))

    def Gradient(self, x) -> np.ndarray:
        return np.array([df(xi) for (_, df, _), xi in zip(self.fComponents, x)], dtype=float)

    def Hessian(self, x) -> np.ndarray:
        return np.diag([d2f(xi) for (_, _, d2f), xi in zip(self.fComponents, x)]).astype(float)

    def DerivativeDefect(self, points, h: float = 1e-5) -> float:
        """
        Largest relative mismatch between central differences of f, f' and the
        given f', f'' over the sample points
        """
        worst = 0.
        for x in points:
            for (f, df, d2f), xi in zip(self.fComponents, x):
                slope = (f(xi + h) - f(xi - h)) / (2 * h)
                curvature = (df(xi + h) - df(xi - h)) / (2 * h)

                worst = max(worst, abs(slope - df(xi)) / (1 + abs(df(xi))), abs(curvature - d2f(xi)) / (1 + abs(d2f(xi))))

        return worst

    def TripleDefect(self, points) -> float:
        """
        Largest |f'^2 - (a + b e^(kappa f) + c e^(-kappa f))| over the sample points
        """
        if self.fTriples is None:
            self.DebugStop(f'ERROR: {self.fName} carries no coefficient triples')

        worst = 0.
        for x in points:
            for (f, df, _), (a, b, c, kappa), xi in zip(self.fComponents, self.fTriples, x):
                value = f(xi)
                worst = max(worst, abs(df(xi)**2 - (a + b * np.exp(kappa * value) + c * np.exp(-kappa * value))))

        return worst
