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

"""Tests for validate cli command."""
import argparse
from unittest import mock

from reductive_geom.cli.validate import ValidateCMD


def _namespace(**kwargs):
    values = {"format": None, "tol": None, "out": None, "model": None, "param": None}
    values.update(kwargs)
    return argparse.Namespace(**values)


def test_validate_tabulate():
    """Test one csv row per check."""
    data = {
        "model": "m",
        "passed": False,
        "checks": [
            {"name": "jacobi", "passed": True, "residual": 0.0, "detail": ""},
            {"name": "reductivity", "passed": False, "residual": 1.0, "detail": ""},
        ],
    }

    rows = ValidateCMD.tabulate(data)

    assert [row["name"] for row in rows] == ["jacobi", "reductivity"]
    assert all(row["model"] == "m" for row in rows)


def test_validate_format_text():
    """Test verdict line followed by table of checks."""
    data = {
        "model": "m",
        "passed": True,
        "checks": [{"name": "jacobi", "passed": True, "residual": 0.0, "detail": ""}],
    }

    lines = ValidateCMD.format_text(data).splitlines()

    assert lines[0] == "model m: passed"
    assert lines[1].split() == ["name", "passed", "residual", "detail"]
    assert lines[2].split() == ["jacobi", "True", "0"]


@mock.patch("reductive_geom.cli.base.emit")
def test_validate_cmd_run_failed(mock_emit, validate_cmd):
    """Test validate exits with 1 on Jensen metric with s != 1/2."""
    parsed_args = _namespace(builtin="jensen", param=[("s", 0.7)], format="text")

    assert validate_cmd.run(parsed_args) == 1

    message = mock_emit.message.call_args.args[0]
    assert message.startswith("model jensen: failed\n")
    assert "natural_reductivity" in message


@mock.patch("reductive_geom.cli.base.emit")
def test_validate_cmd_run_passed(mock_emit, validate_cmd):
    """Test validate exits with 0 on a builtin preset."""
    assert validate_cmd.run(_namespace(builtin="jensen-normal", format="csv")) == 0

    header = mock_emit.message.call_args.args[0].splitlines()[0]
    assert header == "model,name,passed,residual,detail"
