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

"""ReductiveGeom scan command."""
import textwrap
from typing import Any

from reductive_geom.cli.base import GridCMD, format_table
from reductive_geom.commands.scan import ScanCommand


class ScanCMD(GridCMD):
    """ReductiveGeom scan command evaluating the string equations on a grid."""

    name = "scan"
    help_msg = "Evaluate the string equations on a grid of t and model parameters"
    overview = textwrap.dedent(
        """
        The scan command evaluates the string equations with constant dilaton
        for every combination of model parameters and t. Each row holds the
        minimal residuals over the constant spinors, rows are ordered with the
        model parameters outermost and t innermost.

        Example:
        $ reductive-geom scan --builtin chavel-ziller --param-grid s=1/4,1/2,1,2 \\
            --t-grid 0:1:1/3 --format csv --out scan.csv
        """
    )
    command = ScanCommand

    @staticmethod
    def format_text(data: Any) -> str:
        """Return table of grid points."""
        return f"family {data['family']}\n" + format_table(data["rows"])
