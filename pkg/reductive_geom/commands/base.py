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

"""Base classes for geometry commands and their results."""
import dataclasses
import logging
from abc import ABCMeta, abstractmethod
from typing import Any, Optional

from reductive_geom.algebra.lie_core import ReductiveModel, natural_reductivity_residual
from reductive_geom.exceptions import NotNaturallyReductiveError
from reductive_geom.settings import DEFAULT_TOLERANCE


@dataclasses.dataclass(frozen=True)
class Result:
    """Outcome of a command: payload on success, the raised error otherwise."""

    success: bool
    output: Optional[Any] = None
    error: Optional[Exception] = None


class BaseGeomCommand(metaclass=ABCMeta):
    """Command computing something from a reductive model."""

    def __init__(self) -> None:
        self.name = getattr(self.__class__, "__name__", "unknown")
        self.logger = logging.getLogger(self.name)

    # pylint: disable=W0613
    def pre_check(self, **kwargs: Any) -> Optional[Result]:
        """Return a Result to stop before execute, None to go on."""
        return None

    def run(self, **kwargs: Any) -> Result:
        """Run pre_check and execute, never raise."""
        self.logger.info("running %s command", self.name)
        try:
            pre_check = self.pre_check(**kwargs)
            if pre_check is not None:
                return pre_check

            output = self.execute(**kwargs)
            if not isinstance(output, Result):
                output = Result(True, output=output)

            return output
        except Exception as error:  # pylint: disable=W0718
            self.logger.exception(error)
            return Result(False, output=None, error=error)

    @abstractmethod
    def execute(self, **kwargs: Any) -> Any:  # pragma: no cover
        """Compute the command output.

        Args:
            kwargs: model or family selection, parameter values and tolerances
        """


class NaturallyReductiveCommand(BaseGeomCommand, metaclass=ABCMeta):
    """Command defined only on naturally reductive models."""

    def pre_check(self, **kwargs: Any) -> Optional[Result]:
        """Check that the model is naturally reductive."""
        model: ReductiveModel = kwargs["model"]
        tolerance = kwargs.get("tolerance", DEFAULT_TOLERANCE)
        residual = natural_reductivity_residual(model)
        self.logger.debug("%s natural reductivity residual %.3e", model.name, residual)
        if residual > tolerance:
            return Result(
                False,
                error=NotNaturallyReductiveError(
                    f"model {model.name!r} is not naturally reductive (residual {residual:.3e})"
                ),
            )

        return None
