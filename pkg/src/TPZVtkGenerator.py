"""
class to write legacy VTK files of sampled surfaces and curves
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from pathlib import Path
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZVtkGenerator(TPZBasicDataStructure):
    vtkTypes: ClassVar[dict] = {'polyline': 4, 'quad': 9}
    digits: ClassVar[str] = '.17g'

    def __init__(self) -> None:
        super().__init__()

        self.fPoints: list[np.ndarray] = []
        self.fScalars: list[np.ndarray] = []
        self.fCells: list[list[int]] = []
        self.fCellTypes: list[int] = []
        self.fPointCount: int = 0

        self.DeactivateAttr()

        return

    #   ******************
    #      GEOMETRIES
    #   ******************
    def AddPoints(self, points, scalars=None) -> int:
        """
        Appends points of shape (..., 2) or (..., 3). Planar points get z = 0.

        Returns:
        --------
        int
            index of the first appended point
        """
        points = np.asarray(points, dtype=float)
        flat = points.reshape(-1, points.shape[-1])

        if flat.shape[1] == 2:
            flat = np.column_stack([flat, np.zeros(len(flat))])

        elif flat.shape[1] != 3:
            self.DebugStop(f'ERROR: points need 2 or 3 coordinates, got {flat.shape[1]}')

        values = np.zeros(len(flat)) if scalars is None else np.asarray(scalars, dtype=float).reshape(-1)
        if len(values) != len(flat):
            self.DebugStop(f'ERROR: {len(values)} scalars for {len(flat)} points')

        first = self.fPointCount
        self.fPoints.append(flat)
        self.fScalars.append(values)
        self.fPointCount += len(flat)

        return first

    def AddSurface(self, points, scalars=None, closedU: bool = False, closedV: bool = False) -> None:
        """
        Quadrilaterals of a grid of points with shape (nu, nv, 3). Closed directions
        connect the last row (column) to the first.
        """
        points = np.asarray(points, dtype=float)
        if points.ndim != 3:
            self.DebugStop(f'ERROR: surface points must have shape (nu, nv, 3), got {points.shape}')

        nu, nv = points.shape[:2]
        first = self.AddPoints(points, scalars)
        index = lambda i, j: first + (i % nu) * nv + (j % nv)

        for i in range(nu if closedU else nu - 1):
            for j in range(nv if closedV else nv - 1):
                self.fCells.append([index(i, j), index(i + 1, j), index(i + 1, j + 1), index(i, j + 1)])
                self.fCellTypes.append(self.vtkTypes['quad'])

        return

    def AddCurve(self, points, scalars=None, closed: bool = False) -> None:
        points = np.asarray(points, dtype=float)
        first = self.AddPoints(points, scalars)

        cell = list(range(first, first + len(points)))
        if closed:
            cell.append(first)

        self.fCells.append(cell)
        self.fCellTypes.append(self.vtkTypes['polyline'])

        return

    #   ******************
    #        WRITERS
    #   ******************
    def WriteVTKPointData(self) -> str:
        points = np.concatenate(self.fPoints) if self.fPoints else np.zeros((0, 3))
        pointData = ''.join(' '.join(format(x, self.digits) for x in point) + '\n' for point in points)

        return f"POINTS {self.fPointCount} double\n" + pointData + "\n"

    def WriteVTKCellData(self) -> str:
        cellData = ''.join(f"{len(cell)} " + ' '.join(map(str, cell)) + '\n' for cell in self.fCells)
        totalNumIndices = sum(len(cell) for cell in self.fCells)

        return f"CELLS {len(self.fCells)} {totalNumIndices + len(self.fCells)}\n" + cellData + "\n"

    def WriteVTKCellTypes(self) -> str:
        cellTypes = ''.join(f"{cellType}\n" for cellType in self.fCellTypes)

        return f"CELL_TYPES {len(self.fCellTypes)}\n" + cellTypes + "\n"

    def WriteVTKPointScalars(self, name: str) -> str:
        values = np.concatenate(self.fScalars) if self.fScalars else np.zeros(0)

        text = f"POINT_DATA {self.fPointCount}\n"
        text += f"SCALARS {name} double 1\n"
        text += "LOOKUP_TABLE default\n"
        text += ''.join(format(value, self.digits) + '\n' for value in values)

        return text

    def WriteVTK(self, vtkFileName, scalarName: str = 'value', title: str = 'minimal surfaces') -> Path:
        """
        Writes the collected geometry to vtkFileName.vtk

        inputs:
            vtkFileName: name of the output VTK file (without extension)
            scalarName: name of the point scalar field
        """
        if not self.fCells:
            self.DebugStop('ERROR: nothing to write, add a surface or a curve first')

        text = "# vtk DataFile Version 2.0\n"
        text += f"{title}\n"
        text += "ASCII\n"
        text += "DATASET UNSTRUCTURED_GRID\n"

        text += self.WriteVTKPointData()

        text += self.WriteVTKCellData()

        text += self.WriteVTKCellTypes()

        text += self.WriteVTKPointScalars(scalarName)

        path = Path(f"{vtkFileName}.vtk")
        path.write_text(text, encoding='utf-8')

        logger.debug('wrote %s: %d points, %d cells', path, self.fPointCount, len(self.fCells))

        return path
