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

"""ReductiveGeom report command."""
import textwrap

from reductive_geom.cli.base import ModelCMD
from reductive_geom.commands.report import ReportCommand


class ReportCMD(ModelCMD):
    """ReductiveGeom report command for connection and Dirac operator data."""

    name = "report"
    help_msg = "Report torsion, curvature, holonomy and Kostant-Parthasarathy data of ∇^t"
    overview = textwrap.dedent(
        """
        The report command collects torsion, Ricci tensor, scalar curvature and
        holonomy of ∇^t together with the scalar terms of the square of the
        Dirac operator, the number of constant spinors, the eigenvalue bound and
        the vanishing theorem flags.

        Example:
        $ reductive-geom report --builtin chavel-ziller --param s=1/2 --t 1/3
        {
         "model": "chavel-ziller",
         ...
         "kp": {
          ...
          "kp_scalar_third": 1.0,
          ...
        }
        """
    )
    command = ReportCommand
    needs_t = True
