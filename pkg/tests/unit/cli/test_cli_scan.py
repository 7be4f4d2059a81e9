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

"""Tests for scan cli command."""
import argparse
from unittest import mock

from reductive_geom.cli.scan import ScanCMD


def test_scan_format_text():
    """Test family line followed by table of grid points."""
    data = {"family": "su2", "rows": [{"t": 0.0, "all_passed": False}]}

    lines = ScanCMD.format_text(data).splitlines()

    assert lines[0] == "family su2"
    assert lines[1].split() == ["t", "all_passed"]
    assert lines[2].split() == ["0", "False"]


def test_scan_format_text_empty():
    """Test scan without grid points."""
    assert ScanCMD.format_text({"family": "su2", "rows": []}) == "family su2\n(empty)"


@mock.patch("reductive_geom.cli.base.emit")
def test_scan_cmd_run(mock_emit, scan_cmd, tmp_path):
    """Test scan on SU(2) written as csv file."""
    path = tmp_path / "scan.csv"
    parsed_args = argparse.Namespace(
        builtin="su2",
        t_grid=[0.0, 1.0],
        param_grid=None,
        jobs=None,
        tol=None,
        format="csv",
        out=str(path),
    )

    assert scan_cmd.run(parsed_args) == 0

    lines = path.read_text(encoding="UTF-8").splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("t,ricci_norm,delta_T_norm")
    assert [line.split(",")[0] for line in lines[1:]] == ["0", "1"]
    mock_emit.message.assert_not_called()
