"""
Lowest Dirichlet eigenvalue of the Jacobi operator of a catenoid branch
"""
from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZGridFunction import TPZGridFunction

class TPZStabilityReport(TPZBasicDataStructure):
    def __init__(self, lowestEigenvalue: float, eigenfunction: TPZGridFunction, stable: bool, annotation: str = '') -> None:
        super().__init__()

        self.fLowestEigenvalue: float = lowestEigenvalue
        self.fEigenfunction: TPZGridFunction = eigenfunction
        self.fStable: bool = stable
        self.fAnnotation: str = annotation

        self.DeactivateAttr()

        return
