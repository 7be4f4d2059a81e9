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

from reductive_geom.cli.base import BaseCMD
from reductive_geom.cli.report import ReportCMD
from reductive_geom.cli.scan import ScanCMD
from reductive_geom.cli.validate import ValidateCMD
from reductive_geom.config import Config


class TestCMD(BaseCMD):
    name = "test"
    help_msg = "Test command"
    overview = "Test command overview"

    # define execute_cli as MagicMock
    execute_cli = MagicMock()


@pytest.fixture
def base_cmd():
    """Return test CMD inherited from BaseCMD."""
    TestCMD.execute_cli.reset_mock(return_value=True, side_effect=True)
    return TestCMD(config=Config())


@pytest.fixture
def validate_cmd():
    """Return validate CMD with default configuration."""
    return ValidateCMD(config=Config())


@pytest.fixture
def report_cmd():
    """Return report CMD with default configuration."""
    return ReportCMD(config=Config())


@pytest.fixture
def scan_cmd():
    """Return scan CMD with default configuration."""
    return ScanCMD(config=Config())
