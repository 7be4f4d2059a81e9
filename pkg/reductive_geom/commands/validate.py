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

"""Command to validate a model."""
from typing import Any

from reductive_geom.algebra.lie_core import ReductiveModel, validate
from reductive_geom.commands.base import BaseGeomCommand, Result
from reductive_geom.settings import DEFAULT_TOLERANCE


class ValidateCommand(BaseGeomCommand):
    """Validate command."""

    def execute(  # type: ignore[override]
        self, model: ReductiveModel, tolerance: float = DEFAULT_TOLERANCE, **kwargs: Any
    ) -> Result:
        """Evaluate every validity condition, the command fails if any check fails."""
        report = validate(model, tolerance)
        if not report.passed:
            self.logger.warning("model %s failed checks %s", model.name, report.failed)
        return Result(report.passed, output=report.to_dict())
