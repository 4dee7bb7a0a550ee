from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZGridFunction import TPZGridFunction

class TPZEigenResult(TPZBasicDataStructure):
    def __init__(self, eigenvalue: float, eigenfunction: TPZGridFunction, index: int) -> None:
        super().__init__()

        self.fEigenvalue: float = eigenvalue
        self.fEigenfunction: TPZGridFunction = eigenfunction
        self.fIndex: int = index

        self.DeactivateAttr()

        return
