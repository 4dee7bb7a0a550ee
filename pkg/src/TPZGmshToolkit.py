"""
Discrete gmsh meshes of sampled surfaces and curves
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import logging
from pathlib import Path
from typing import ClassVar

import gmsh
import numpy as np

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZGmshToolkit:
    # gmsh element types: 2 node line and 4 node quadrangle
    elementTypes: ClassVar[dict] = {'line': 1, 'quad': 3}

    @staticmethod
    def Begin(modelName: str = 'minimal_surfaces', verbose: bool = False) -> None:
        """
        Initializes gmsh with an empty model
        """
        gmsh.initialize(interruptible=False)
        gmsh.option.setNumber("General.Terminal", int(verbose))
        gmsh.model.add(modelName)

    @staticmethod
    def End() -> None:
        """
        Finalizes gmsh
        """
        gmsh.finalize()

    @staticmethod
    def NextNodeTags(count: int) -> np.ndarray:
        first = gmsh.model.mesh.getMaxNodeTag() + 1

        return np.arange(first, first + count, dtype=np.uint64)

    @staticmethod
    def AddDiscreteSurface(points, closedU: bool = False, closedV: bool = False) -> int:
        """
        Quadrangle mesh of a grid of points with shape (nu, nv, 3). Returns the surface tag.
        """
        points = np.asarray(points, dtype=float)
        nu, nv = points.shape[:2]

        tag = gmsh.model.addDiscreteEntity(2)
        nodes = TPZGmshToolkit.NextNodeTags(nu * nv)
        gmsh.model.mesh.addNodes(2, tag, nodes, points.reshape(-1))

        grid = nodes.reshape(nu, nv)
        quads = [[grid[i % nu, j % nv], grid[(i + 1) % nu, j % nv], grid[(i + 1) % nu, (j + 1) % nv], grid[i % nu, (j + 1) % nv]]
                 for i in range(nu if closedU else nu - 1) for j in range(nv if closedV else nv - 1)]

        gmsh.model.mesh.addElementsByType(tag, TPZGmshToolkit.elementTypes['quad'], [], np.array(quads, dtype=np.uint64).reshape(-1))

        return tag

    @staticmethod
    def AddDiscreteCurve(points, closed: bool = False) -> int:
        """
        Line mesh through points of shape (n, 3). Returns the curve tag.
        """
        points = np.asarray(points, dtype=float)
        if points.shape[-1] == 2:
            points = np.column_stack([points, np.zeros(len(points))])

        tag = gmsh.model.addDiscreteEntity(1)
        nodes = TPZGmshToolkit.NextNodeTags(len(points))
        gmsh.model.mesh.addNodes(1, tag, nodes, points.reshape(-1))

        ends = np.append(nodes[1:], nodes[0]) if closed else nodes[1:]
        lines = np.column_stack([nodes[:len(ends)], ends]).reshape(-1)

        gmsh.model.mesh.addElementsByType(tag, TPZGmshToolkit.elementTypes['line'], [], lines)

        return tag

    @staticmethod
    def CreatePhysicalGroup(GroupData: list) -> None:
        """
        Creates the physical groups from a list of (dimension, entity tags, name)
        """
        for dimension, tags, name in GroupData:
            gmsh.model.addPhysicalGroup(dimension, tags, name=name)

    @staticmethod
    def WriteMeshFiles(FileName: str, *extensions: str) -> None:
        """
        Creates files with given extensions from the gmsh model
        """
        for extension in extensions:
            gmsh.write(FileName + extension)

    @staticmethod
    def WriteGeometries(fileName, surfaces: dict = None, curves: dict = None) -> Path:
        """
        One .msh file holding every surface and curve, each in its own physical group.

        Inputs:
        -------
        surfaces : dict
            name -> (points (nu, nv, 3), closedU, closedV)
        curves : dict
            name -> (points (n, 3), closed)
        """
        TPZGmshToolkit.Begin(Path(fileName).name)
        try:
            groups = []
            for name, (points, closedU, closedV) in (surfaces or {}).items():
                groups.append((2, [TPZGmshToolkit.AddDiscreteSurface(points, closedU, closedV)], name))

            for name, (points, closed) in (curves or {}).items():
                groups.append((1, [TPZGmshToolkit.AddDiscreteCurve(points, closed)], name))

            TPZGmshToolkit.CreatePhysicalGroup(groups)
            TPZGmshToolkit.WriteMeshFiles(str(fileName), ".msh")

        finally:
            TPZGmshToolkit.End()

        logger.debug('wrote %s.msh with %d physical groups', fileName, len(groups))

        return Path(f"{fileName}.msh")
