"""
Small dense real matrix stored row-major
"""
#%% ****************** 
#   IMPORTED MODULES
#   ******************
import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZErrors import TPZShapeError

#%% ****************** 
#   CLASS DEFINITION
#   ******************
class TPZDenseMatrix(TPZBasicDataStructure):
#   ****************** 
#      INITIALIZER
#   ******************  
    def __init__(self, rows: int, cols: int, entries) -> None:
        super().__init__()

        self.fRows: int = rows
        self.fCols: int = cols
        self.fEntries: np.ndarray = np.asarray(entries, dtype=float).ravel()

        self.DeactivateAttr()

        self.__post_init__()

        return

    def __post_init__(self) -> None:
        if self.fRows < 1 or self.fCols < 1:
            self.DebugStop(f'ERROR: invalid matrix shape {self.fRows}x{self.fCols}', TPZShapeError)

        if len(self.fEntries) != self.fRows * self.fCols:
            self.DebugStop(f'ERROR: {len(self.fEntries)} entries do not fill a {self.fRows}x{self.fCols} matrix', TPZShapeError)

        return

#   ****************** 
#        METHODS
#   ******************  
    @classmethod
    def FromArray(cls, array) -> 'TPZDenseMatrix':
        array = np.atleast_2d(np.asarray(array, dtype=float))
        rows, cols = array.shape

        return cls(rows, cols, array.ravel())

    def AsArray(self) -> np.ndarray:
        return self.fEntries.reshape(self.fRows, self.fCols).copy()

    def IsSquare(self) -> bool:
        return self.fRows == self.fCols
