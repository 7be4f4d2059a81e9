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

"""Tests for base cli functions."""
import argparse
import json
from unittest import mock
from unittest.mock import MagicMock, patch

import pytest

from reductive_geom.cli.base import (
    ModelCMD,
    flatten,
    format_csv,
    format_table,
    format_text,
)
from reductive_geom.commands.base import Result
from reductive_geom.exceptions import InputError, ReductiveGeomError
from reductive_geom.geometry.string_check import StringTolerances


def _namespace(**kwargs):
    values = {"format": None, "tol": None, "out": None}
    values.update(kwargs)
    return argparse.Namespace(**values)


def test_flatten():
    """Test flattening nested output into dotted keys."""
    data = {"a": {"b": 1, "c": [1, 2]}, "d": [{"e": 1}]}

    assert flatten(data) == {"a.b": 1, "a.c": [1, 2], "d.0.e": 1}
    assert flatten(5) == {"value": 5}


def test_format_text():
    """Test indented text rendering."""
    data = {"a": 1, "b": {"c": [0.5, True]}, "d": [{"e": None}], "f": {}}

    assert format_text(data) == [
        "a: 1",
        "b:",
        "  c: [0.5, True]",
        "d:",
        "  - [0]",
        "    e: ",
        "f:",
        "  {}",
    ]


def test_format_text_significant_digits():
    """Test text rendering uses significant digits."""
    assert format_text({"t": 1 / 3}) == ["t: 0.333333333333"]


def test_format_csv():
    """Test csv rendering with columns in order of first appearance."""
    rows = [{"a": 1}, {"a": 2, "b": [1, 2]}]

    assert format_csv(rows) == 'a,b\n1,\n2,"[1, 2]"'


@pytest.mark.parametrize(
    "rows, exp_table",
    [
        ([], "(empty)"),
        (
            [{"a": 1, "bb": "x"}, {"a": 22.5, "bb": "yy"}],
            "a     bb\n1     x\n22.5  yy",
        ),
    ],
)
def test_format_table(rows, exp_table):
    """Test aligned text table."""
    assert format_table(rows) == exp_table


def test_base_cmd_fill_parser(base_cmd):
    """Test add CLI arguments with BaseCMD."""
    parser = MagicMock()
    base_cmd.fill_parser(parser)

    added = [call.args[0] for call in parser.add_argument.call_args_list]
    assert added == ["--format", "--tol", "--out"]


def test_base_cmd_get_config(base_cmd):
    """Test command line overrides of configuration."""
    config = base_cmd.get_config(_namespace(tol=1e-3, format="csv"))

    assert config.tolerance == 1e-3
    assert config.output_format == "csv"
    assert base_cmd.get_config(_namespace()) == base_cmd.config


@pytest.mark.parametrize(
    "output, output_format, exp_formatted_output",
    [
        ({"a": 1}, "json", '{\n "a": 1\n}'),
        ({"a": 1, "b": {"c": 2}}, "csv", "a,b.c\n1,2"),
        ({"rows": [{"x": 1}, {"x": 2}]}, "csv", "x\n1\n2"),
        ({"a": 1, "b": {"c": 2}}, "text", "a: 1\nb:\n  c: 2"),
        ({"z": complex(1, 2)}, "json", '{\n "z": [\n  1.0,\n  2.0\n ]\n}'),
    ],
)
def test_base_cmd_format_output(output, output_format, exp_formatted_output, base_cmd):
    """Test output formatting in BaseCMD."""
    assert base_cmd.format_output(output, output_format) == exp_formatted_output


@pytest.mark.parametrize("success, exp_code", [(True, 0), (False, 1)])
@patch("reductive_geom.cli.base.emit")
def test_base_cmd_run(mock_emit, success, exp_code, base_cmd):
    """Test run from BaseCMD."""
    parsed_args = _namespace()
    base_cmd.before = mock_before = MagicMock()
    base_cmd.after = mock_after = MagicMock()
    base_cmd.execute_cli.return_value = Result(success, output={"a": 1})

    assert base_cmd.run(parsed_args) == exp_code

    mock_before.assert_called_once_with(parsed_args)
    base_cmd.execute_cli.assert_called_once_with(parsed_args)
    mock_emit.message.assert_called_once_with(json.dumps({"a": 1}, indent=1))
    mock_after.assert_called_once_with(parsed_args)


@patch("reductive_geom.cli.base.emit")
def test_base_cmd_run_out(mock_emit, base_cmd, tmp_path):
    """Test run from BaseCMD writing output to file."""
    path = tmp_path / "out.csv"
    base_cmd.execute_cli.return_value = Result(True, output={"a": 1})

    assert base_cmd.run(_namespace(format="csv", out=str(path))) == 0

    assert path.read_text(encoding="UTF-8") == "a\n1\n"
    mock_emit.message.assert_not_called()


@patch("reductive_geom.cli.base.emit")
def test_base_cmd_run_result_error(_, base_cmd):
    """Test error carried by result is raised."""
    exp_error = InputError("bad input")
    base_cmd.execute_cli.return_value = Result(False, error=exp_error)

    with pytest.raises(InputError) as error:
        base_cmd.run(_namespace())

    assert error.value is exp_error


@patch("reductive_geom.cli.base.emit")
def test_base_cmd_run_exception(_, base_cmd):
    """Test run exceptions from BaseCMD."""
    base_cmd.before = MagicMock(side_effect=ValueError("Some value failed"))

    with pytest.raises(ReductiveGeomError, match="test failed to run with error"):
        base_cmd.run(_namespace())


def test_model_cmd_execute_cli_exception(report_cmd):
    """Test misconfigured command class."""
    report_cmd.command = None

    with pytest.raises(RuntimeError):
        report_cmd.execute_cli(_namespace())


@pytest.mark.parametrize(
    "builtin, model, param, exp_error",
    [
        ("jensen", "model.json", None, "--builtin and --model are mutually exclusive"),
        (None, "model.json", [("s", 1.0)], "--param applies only to --builtin models"),
        (None, None, None, "one of --builtin or --model is required"),
    ],
)
def test_model_cmd_load_model_error(builtin, model, param, exp_error):
    """Test invalid model selection."""
    parsed_args = _namespace(builtin=builtin, model=model, param=param)

    with pytest.raises(InputError, match=exp_error):
        ModelCMD.load_model(parsed_args)


def test_model_cmd_load_model_builtin():
    """Test builtin model with parameters."""
    model = ModelCMD.load_model(_namespace(builtin="jensen", model=None, param=[("s", 0.7)]))

    assert model.name == "jensen"
    assert model.params == {"s": 0.7}


def test_model_cmd_load_model_file(su2_model_dict, tmp_path):
    """Test model loaded from json file."""
    path = tmp_path / "su2.json"
    path.write_text(json.dumps(su2_model_dict), encoding="UTF-8")

    model = ModelCMD.load_model(_namespace(builtin=None, model=str(path), param=None))

    assert model.name == "su2-file"
    assert model.n == 3


def test_model_cmd_fill_parser(report_cmd):
    """Test model selection arguments."""
    parser = MagicMock()
    report_cmd.fill_parser(parser)

    added = [call.args[0] for call in parser.add_argument.call_args_list]
    assert added == ["--format", "--tol", "--out", "--builtin", "--model", "--param", "--t"]


def test_model_cmd_command_kwargs(report_cmd):
    """Test keyword arguments passed to the command."""
    parsed_args = _namespace(
        builtin="chavel-ziller", model=None, param=[("s", 1.0)], t=1 / 3, tol=1e-7
    )

    kwargs = report_cmd.command_kwargs(parsed_args)

    assert kwargs["model"].name == "chavel-ziller"
    assert kwargs["t"] == 1 / 3
    assert kwargs["tolerance"] == 1e-7
    assert kwargs["rank_threshold"] == report_cmd.config.rank_threshold
    assert kwargs["tolerances"] == report_cmd.config.string_tolerances


def test_grid_cmd_command_kwargs(scan_cmd):
    """Test keyword arguments of grid command."""
    parsed_args = _namespace(
        builtin="chavel-ziller", t_grid=[0.0, 1.0], param_grid=[("s", [0.5, 1.0])], jobs=None
    )

    kwargs = scan_cmd.command_kwargs(parsed_args)

    assert kwargs["family"] == "chavel-ziller"
    assert kwargs["t_grid"] == [0.0, 1.0]
    assert kwargs["param_grid"] == {"s": [0.5, 1.0]}
    assert kwargs["jobs"] == scan_cmd.config.jobs
    assert kwargs["tolerances"] == scan_cmd.config.string_tolerances
    assert kwargs["build"]({"s": 1.0}).name == "chavel-ziller"


def test_grid_cmd_command_kwargs_tol(scan_cmd):
    """Test --tol applies to every string equation."""
    parsed_args = _namespace(builtin="su2", t_grid=[0.0], param_grid=None, jobs=3, tol=1e-3)

    kwargs = scan_cmd.command_kwargs(parsed_args)

    assert kwargs["tolerances"] == StringTolerances.uniform(1e-3)
    assert kwargs["jobs"] == 3
    assert kwargs["param_grid"] == {}


@pytest.mark.parametrize(
    "param_grid, exp_error",
    [
        ([("s", [1.0]), ("s", [2.0])], "given more than once"),
        ([("r", [1.0])], "unknown parameter 'r'"),
    ],
)
def test_grid_cmd_command_kwargs_error(param_grid, exp_error, scan_cmd):
    """Test invalid parameter grids."""
    parsed_args = _namespace(
        builtin="chavel-ziller", t_grid=[0.0], param_grid=param_grid, jobs=None
    )

    with pytest.raises(InputError, match=exp_error):
        scan_cmd.command_kwargs(parsed_args)


@mock.patch("reductive_geom.cli.base.emit")
def test_model_cmd_run_not_naturally_reductive(_, report_cmd):
    """Test report on model without natural reductivity raises its error."""
    parsed_args = _namespace(builtin="jensen", model=None, param=[("s", 0.7)], t=0.0)

    with pytest.raises(ReductiveGeomError, match="not naturally reductive"):
        report_cmd.run(parsed_args)
