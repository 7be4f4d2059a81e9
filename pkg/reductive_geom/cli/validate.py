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

"""ReductiveGeom validate command."""
import textwrap
from typing import Any, Dict, List

from reductive_geom.cli.base import ModelCMD, format_table
from reductive_geom.commands.validate import ValidateCommand


class ValidateCMD(ModelCMD):
    """ReductiveGeom validate command to check the validity conditions of a model."""

    name = "validate"
    help_msg = "Check structure constants, reductivity, metric and natural reductivity"
    overview = textwrap.dedent(
        """
        The validate command evaluates every validity condition of a model and
        exits with 1 if any of them fails.

        Example:
        $ reductive-geom validate --builtin jensen --param s=0.7 --format text
        model     antisymmetry  ...  natural_reductivity
        ...
        """
    )
    command = ValidateCommand

    @staticmethod
    def tabulate(data: Any) -> List[Dict[str, Any]]:
        """Return one csv row per check."""
        return [{"model": data["model"], **check} for check in data["checks"]]

    @staticmethod
    def format_text(data: Any) -> str:
        """Return table of checks with overall verdict."""
        verdict = "passed" if data["passed"] else "failed"
        return f"model {data['model']}: {verdict}\n" + format_table(data["checks"])
