"""
Checks and tables collected during a run, written as CSV or JSON tables and one
JSON manifest
"""
#%% ******************
#   IMPORTED MODULES
#   ******************
import csv
import json
import logging
import math
import time
from pathlib import Path
from typing import ClassVar

import numpy as np

from src.TPZBasicDataStructure import TPZBasicDataStructure
from src.TPZRunConfig import TPZRunConfig

logger = logging.getLogger(__name__)

#%% ******************
#   CLASS DEFINITION
#   ******************
class TPZCheckReport(TPZBasicDataStructure):
    version: ClassVar[str] = '1.0.0'
    digits: ClassVar[str] = '.17g'
    relations: ClassVar[dict] = {
        '<=': lambda value, tolerance: value <= tolerance,
        '<': lambda value, tolerance: value < tolerance,
        '>=': lambda value, tolerance: value >= tolerance,
        '>': lambda value, tolerance: value > tolerance,
    }

#   ******************
#      INITIALIZER
#   ******************
    def __init__(self, config: TPZRunConfig) -> None:
        super().__init__()

        self.fConfig: TPZRunConfig = config
        self.fChecks: list[dict] = []
        self.fTables: dict[str, list[dict]] = {}
        self.fArtifacts: list[str] = []
        self.fStart: float = time.perf_counter()

        self.DeactivateAttr()

        return

#   ******************
#        CHECKS
#   ******************
    def Check(self, name: str, value: float, tolerance: float, relation: str = '<=') -> bool:
        """
        Records value <relation> tolerance. Non finite values fail.
        """
        if relation not in self.relations:
            self.DebugStop(f'ERROR: unknown relation {relation}')

        value = float(value)
        passed = bool(math.isfinite(value) and self.relations[relation](value, tolerance))

        self.fChecks.append({"name": name, "value": value, "relation": relation, "tolerance": float(tolerance), "passed": passed})

        if passed:
            logger.debug('%s: %.6g %s %.3g', name, value, relation, tolerance)
        else:
            logger.warning('check failed %s: %.6g %s %.3g', name, value, relation, tolerance)

        return passed

    def Flag(self, name: str, condition: bool) -> bool:
        return self.Check(name, float(bool(condition)), 1., '>=')

    def Passed(self) -> bool:
        return all(check["passed"] for check in self.fChecks)

    def Failures(self) -> list[str]:
        return [check["name"] for check in self.fChecks if not check["passed"]]

    def Table(self, name: str, rows: list[dict]) -> None:
        self.fTables[name] = rows
        return

#   ******************
#        OUTPUT
#   ******************
    @staticmethod
    def FormatValue(value) -> str:
        if isinstance(value, (bool, np.bool_)):
            return str(bool(value)).lower()

        if isinstance(value, (int, np.integer)):
            return str(int(value))

        if isinstance(value, (float, np.floating)):
            return format(float(value), TPZCheckReport.digits)

        return str(value)

    @staticmethod
    def JsonValue(value):
        if isinstance(value, (bool, np.bool_)):
            return bool(value)

        if isinstance(value, (int, np.integer)):
            return int(value)

        if isinstance(value, (float, np.floating)):
            return float(value) if math.isfinite(value) else None

        if isinstance(value, dict):
            return {key: TPZCheckReport.JsonValue(item) for key, item in value.items()}

        if isinstance(value, (list, tuple)):
            return [TPZCheckReport.JsonValue(item) for item in value]

        return value

    def WriteTables(self, outputDir: Path) -> None:
        for name, rows in self.fTables.items():
            if self.fConfig.fFormat == 'csv':
                path = outputDir / f'{name}.csv'
                header = list(rows[0]) if rows else []

                with open(path, 'w', newline='', encoding='utf-8') as file:
                    writer = csv.writer(file, lineterminator='\n')
                    writer.writerow(header)
                    for row in rows:
                        writer.writerow([self.FormatValue(row[key]) for key in header])

            else:
                path = outputDir / f'{name}.json'
                path.write_text(json.dumps(self.JsonValue(rows), indent=2), encoding='utf-8')

            self.fArtifacts.append(path.name)

        return

    def Manifest(self) -> dict:
        return {
            "version": self.version,
            "subcommand": self.fConfig.fSubcommand,
            "config": self.JsonValue(self.fConfig.Echo()),
            "wall_time": time.perf_counter() - self.fStart,
            "checks": self.JsonValue(self.fChecks),
            "passed": self.Passed(),
            "artifacts": list(self.fArtifacts),
        }

    def WriteManifest(self, outputDir: Path) -> Path:
        path = outputDir / f'{self.fConfig.fSubcommand}_manifest.json'
        path.write_text(json.dumps(self.Manifest(), indent=2), encoding='utf-8')

        logger.info('%d checks, %d failed, manifest %s', len(self.fChecks), len(self.Failures()), path)

        return path
