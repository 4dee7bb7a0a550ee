"""
Basic data structure with locked attributes, shape aware printing and DebugStop
"""
import logging
from abc import ABCMeta
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from src.TPZErrors import TPZError

logger = logging.getLogger(__name__)

@dataclass
class TPZBasicDataStructure(metaclass=ABCMeta):
    fDeactivateAttr: bool = field(default=False)

    def DeactivateAttr(self) -> None:
        """
        Locks the field set; assigning an existing field stays allowed
        """
        self.fDeactivateAttr = True

    def __setattr__(self, name: str, value: Any) -> None:
        if self.fDeactivateAttr and not hasattr(self, name):
            self.DebugStop(f"ERROR: {self.__class__.__name__} has no field '{name}' and its fields are locked")

        super().__setattr__(name, value)

    @staticmethod
    def Summary(value) -> str:
        if isinstance(value, np.ndarray) and value.size > 8:
            return f"array{value.shape}"

        if isinstance(value, list):
            return '[' + ', '.join(TPZBasicDataStructure.Summary(item) for item in value) + ']'

        return repr(value)

    def __str__(self):
        fields = ', '.join(f"{key}={self.Summary(value)}" for key, value in self.__dict__.items() if key != 'fDeactivateAttr')
        return f"{self.__class__.__name__}({fields})"

    #   ******************
    #        METHODS
    #   ******************
    def DebugStop(self, message='', error: type[TPZError] = TPZError) -> None:
        logger.debug('%s raised %s: %s', self.__class__.__name__, error.__name__, message)
        raise error(message + ' YOUR CHANCE TO PUT A BREAK POINT HERE')
