# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright 2023 Canonical Ltd.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Command to evaluate the string equations on a parameter grid."""
from typing import Any, Callable, Dict, List, Mapping

from reductive_geom.algebra.lie_core import ReductiveModel
from reductive_geom.commands.base import BaseGeomCommand, Result
from reductive_geom.geometry.string_check import StringTolerances, scan
from reductive_geom.settings import DEFAULT_JOBS


class ScanCommand(BaseGeomCommand):
    """Scan command."""

    def execute(  # type: ignore[override] # pylint: disable=R0913
        self,
        family: str,
        build: Callable[[Dict[str, float]], ReductiveModel],
        t_grid: List[float],
        param_grid: Mapping[str, List[float]],
        tolerances: StringTolerances = StringTolerances(),
        jobs: int = DEFAULT_JOBS,
        **kwargs: Any,
    ) -> Result:
        """Scan the grid, the command fails only if no grid point could be constructed."""
        report = scan(family, build, t_grid, param_grid, tol=tolerances, jobs=jobs)
        failed = len(report.rows) - report.constructed
        if failed:
            self.logger.warning("%d of %d grid point(s) failed", failed, len(report.rows))
        return Result(report.constructed > 0 or not report.rows, output=report.to_dict())
