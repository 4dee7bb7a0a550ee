"""
Recorded time evolution
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZErrors import TPZBlowupError

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZTrajectory(TPZBasicDataStructure):
    """
    Fields:
        - times: snapshot times
        - states: snapshots (membrane or R states)
        - monitor: constraint defect or energy drift per snapshot
        - losses: TPZConstraintLoss records
        - blowup: the TPZBlowupError that stopped the march, None if it ran to the end
    """
#   ******************
#      INITIALIZER
#   ******************
    def __init__(self) -> None:
        super().__init__()

        self.fTimes: list = []
        self.fStates: list = []
        self.fMonitor: list = []
        self.fLosses: list = []
        self.fBlowup: TPZBlowupError = None

        self.DeactivateAttr()

        return

#   ******************
#        METHODS
#   ******************
    def Append(self, time: float, state, monitor: float) -> None:
        self.fTimes.append(float(time))
        self.fStates.append(state)
        self.fMonitor.append(float(monitor))

        return

    def __len__(self) -> int:
        return len(self.fStates)

    def Times(self) -> np.ndarray:
        return np.array(self.fTimes)

    def Monitor(self) -> np.ndarray:
        return np.array(self.fMonitor)

    def Final(self):
        return self.fStates[-1]

    def BlewUp(self) -> bool:
        return self.fBlowup is not None
