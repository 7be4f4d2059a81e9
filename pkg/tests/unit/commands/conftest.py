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
from unittest.mock import MagicMock

import pytest

from reductive_geom.commands.base import BaseGeomCommand, NaturallyReductiveCommand


class TestGeomCommand(BaseGeomCommand):
    execute = MagicMock()


class TestNaturallyReductiveCommand(NaturallyReductiveCommand):
    execute = MagicMock()


@pytest.fixture
def test_geom_command():
    """Return test geometry command object."""
    command = TestGeomCommand()
    command.execute.reset_mock(return_value=True, side_effect=True)
    yield command


@pytest.fixture
def test_nat_red_command():
    """Return test command restricted to naturally reductive models."""
    command = TestNaturallyReductiveCommand()
    command.execute.reset_mock(return_value=True, side_effect=True)
    yield command
