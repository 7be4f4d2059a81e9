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
"""Tests for cmd."""
from unittest import mock

import pytest
from craft_cli import (
    ArgumentParsingError,
    CraftError,
    Dispatcher,
    EmitterMode,
    ProvideHelpException,
)

from reductive_geom.cli import ReportCMD, ScanCMD, SpinorCMD, ValidateCMD
from reductive_geom.cli.base import GridCMD, ModelCMD
from reductive_geom.cmd import (
    GLOBAL_ARGS,
    _run_dispatcher,
    exec_cmd,
    get_all_subclasses,
    get_command_groups,
    get_verbosity,
)
from reductive_geom.exceptions import InputError, NotNaturallyReductiveError
from reductive_geom.settings import APP_NAME, APP_VERSION, CONFIG_PATH


def test_get_all_subclasses():
    """Test commands are collected from the cli package."""
    assert get_all_subclasses(ModelCMD) == [ReportCMD, SpinorCMD, ValidateCMD]
    assert get_all_subclasses(GridCMD) == [ScanCMD]


def test_get_command_groups():
    """Test command groups."""
    groups = get_command_groups()

    assert [group.name for group in groups] == ["Model", "Grid"]
    assert groups[1].commands == [ScanCMD]


@pytest.mark.parametrize(
    "cli_args",
    [
        (["--version"]),
        (["validate", "--version", "--builtin", "su2"]),
        (["validate", "--builtin", "su2"]),
        (["scan", "--builtin", "jensen", "--t-grid", "0", "--config", "/tmp/config.yaml"]),
    ],
)
@mock.patch("reductive_geom.cmd.sys")
@mock.patch("reductive_geom.cmd.emit")
@mock.patch("reductive_geom.cmd.load_config")
def test_run_dispatcher(mock_load_config, mock_emit, mock_sys, cli_args):
    """Test run dispatcher."""
    mock_sys.argv = ["reductive-geom", *cli_args]

    dispatcher = Dispatcher(APP_NAME, get_command_groups(), extra_global_args=GLOBAL_ARGS)
    dispatcher.load_command = mock.MagicMock()
    dispatcher.run = mock.MagicMock(return_value=None)
    args, filtered_params = dispatcher._parse_options(dispatcher.global_arguments, cli_args)

    return_code = _run_dispatcher(dispatcher)

    assert return_code == 0
    if args.get("version"):
        mock_emit.message.assert_called_once_with(f"ReductiveGeom: {APP_VERSION}")

    if args.get("version") and not filtered_params:
        mock_load_config.assert_not_called()
        dispatcher.run.assert_not_called()
    else:
        if args.get("config"):
            mock_load_config.assert_called_once_with(args.get("config"), required=True)
        else:
            mock_load_config.assert_called_once_with(CONFIG_PATH)

        dispatcher.load_command.assert_called_once_with(mock_load_config.return_value)
        dispatcher.run.assert_called_once()


@mock.patch("reductive_geom.cmd.sys")
@mock.patch("reductive_geom.cmd.load_config")
def test_run_dispatcher_return_code(mock_load_config, mock_sys):
    """Test return code of the command is passed on."""
    mock_sys.argv = ["reductive-geom", "validate", "--builtin", "jensen"]
    dispatcher = Dispatcher(APP_NAME, get_command_groups(), extra_global_args=GLOBAL_ARGS)
    dispatcher.load_command = mock.MagicMock()
    dispatcher.run = mock.MagicMock(return_value=1)

    assert _run_dispatcher(dispatcher) == 1


@pytest.mark.parametrize(
    "isatty, env, exp_verbosity",
    [
        (True, {}, EmitterMode.BRIEF),
        (False, {}, EmitterMode.VERBOSE),
        (True, {"REDUCTIVE_GEOM_ENABLE_DEVELOPER_DEBUG": "yes"}, EmitterMode.DEBUG),
        (True, {"REDUCTIVE_GEOM_ENABLE_DEVELOPER_DEBUG": "maybe"}, EmitterMode.BRIEF),
        (True, {"REDUCTIVE_GEOM_VERBOSITY_LEVEL": "quiet"}, EmitterMode.QUIET),
        (False, {"REDUCTIVE_GEOM_VERBOSITY_LEVEL": " Trace "}, EmitterMode.TRACE),
    ],
)
@mock.patch("reductive_geom.cmd.sys")
def test_get_verbosity(mock_sys, isatty, env, exp_verbosity):
    """Test verbosity from tty and environment."""
    mock_sys.stdin.isatty.return_value = isatty

    with mock.patch.dict("os.environ", env, clear=True):
        assert get_verbosity() == exp_verbosity


@mock.patch("reductive_geom.cmd.sys")
def test_get_verbosity_exception(mock_sys):
    """Test invalid verbosity level."""
    mock_sys.stdin.isatty.return_value = True

    with mock.patch.dict("os.environ", {"REDUCTIVE_GEOM_VERBOSITY_LEVEL": "loud"}, clear=True):
        with pytest.raises(ArgumentParsingError, match="cannot parse verbosity level 'loud'"):
            get_verbosity()


@pytest.mark.parametrize(
    "side_effect, exp_return_code",
    [
        (None, 0),
        (ArgumentParsingError("bad argument"), 2),
        (ProvideHelpException("usage"), 0),
        (InputError("--t-grid is empty"), 2),
        (NotNaturallyReductiveError("not naturally reductive"), 1),
        (CraftError("craft"), 1),
        (KeyboardInterrupt(), 130),
        (ValueError("unexpected"), 1),
    ],
)
@mock.patch("reductive_geom.cmd.emit")
@mock.patch("reductive_geom.cmd._run_dispatcher")
@mock.patch("reductive_geom.cmd.get_dispatcher")
def test_exec_cmd(
    mock_get_dispatcher, mock_run_dispatcher, mock_emit, side_effect, exp_return_code
):
    """Test exit codes of the application."""
    mock_run_dispatcher.side_effect = side_effect
    mock_run_dispatcher.return_value = 0

    assert exec_cmd() == exp_return_code
    mock_run_dispatcher.assert_called_once_with(mock_get_dispatcher.return_value)
    if isinstance(side_effect, (CraftError, KeyboardInterrupt, ValueError)):
        mock_emit.error.assert_called_once()
    else:
        mock_emit.ended_ok.assert_called_once()
