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

"""ReductiveGeom base cli command."""
import argparse
import csv
import io
import json
import os
from abc import ABCMeta, abstractmethod
from typing import Any, Dict, List, Optional, Type

from craft_cli import BaseCommand, emit
from craft_cli.dispatcher import _CustomArgumentParser

from reductive_geom.algebra.lie_core import ReductiveModel
from reductive_geom.cli.utils import (
    parse_grid,
    parse_param,
    parse_param_grid,
    parse_positive_int,
    parse_positive_real,
    parse_real,
)
from reductive_geom.commands.base import BaseGeomCommand, Result
from reductive_geom.config import Config, load_model_source
from reductive_geom.exceptions import InputError, ReductiveGeomError
from reductive_geom.geometry.string_check import StringTolerances
from reductive_geom.models import available_models, build_model, get_family
from reductive_geom.settings import OUTPUT_FORMATS
from reductive_geom.utils import format_number, humanize_list, to_jsonable, write_output


def _is_flat(value: Any) -> bool:
    if isinstance(value, dict):
        return False
    if isinstance(value, list):
        return all(_is_flat(item) for item in value)
    return True


def _scalar_text(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_scalar_text(item) for item in value) + "]"
    return format_number(value)


def format_text(value: Any, indent: int = 0) -> List[str]:
    """Return indented `key: value` lines of nested data."""
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return [f"{pad}{{}}"]
        lines = []
        for key, item in value.items():
            if _is_flat(item):
                lines.append(f"{pad}{key}: {_scalar_text(item)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(format_text(item, indent + 1))
        return lines
    if isinstance(value, list) and not _is_flat(value):
        lines = []
        for index, item in enumerate(value):
            lines.append(f"{pad}- [{index}]")
            lines.extend(format_text(item, indent + 1))
        return lines

    return [f"{pad}{_scalar_text(value)}"]


def flatten(value: Any, prefix: str = "") -> Dict[str, Any]:
    """Flatten nested dictionaries into one row with dotted keys."""
    if isinstance(value, dict):
        row: Dict[str, Any] = {}
        for key, item in value.items():
            row.update(flatten(item, f"{prefix}.{key}" if prefix else str(key)))
        return row
    if isinstance(value, list) and not _is_flat(value):
        row = {}
        for index, item in enumerate(value):
            row.update(flatten(item, f"{prefix}.{index}" if prefix else str(index)))
        return row

    return {prefix or "value": value}


def _cell(value: Any) -> str:
    if isinstance(value, list):
        return json.dumps(value)
    return format_number(value)


def format_csv(rows: List[Dict[str, Any]]) -> str:
    """Return rows as csv, columns in order of first appearance."""
    fieldnames: List[str] = []
    for row in rows:
        fieldnames.extend(key for key in row if key not in fieldnames)

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(row.get(key)) for key in fieldnames})
    return buffer.getvalue().rstrip("\n")


def format_table(rows: List[Dict[str, Any]]) -> str:
    """Return rows as aligned text table."""
    if not rows:
        return "(empty)"
    columns = list(rows[0])
    cells = [columns] + [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max(len(line[index]) for line in cells) for index in range(len(columns))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in cells
    )


class BaseCMD(BaseCommand, metaclass=ABCMeta):
    """Base CLI command for handling contexts."""

    def __init__(self, config: Config) -> None:
        """Initialize BaseCMD."""
        super().__init__(config=None)
        # overwrite config in BaseCommand
        self.config: Config = config  # type: ignore

    def run(self, parsed_args: argparse.Namespace) -> Optional[int]:
        """Execute CLI command.

        Errors carried by the command result are raised, an unsuccessful
        result returns exit code 1.

        **This function should not be changed.**
        """
        try:
            self.before(parsed_args)
            emit.trace(f"function 'before' was run for {self.name} command")
            result = self.execute_cli(parsed_args)
            emit.trace(f"raw output of {self.name} command: {result}")
            if result.error is not None:
                raise result.error

            message = self.format_output(result.output, self.get_config(parsed_args).output_format)
            if getattr(parsed_args, "out", None):
                write_output(message, parsed_args.out)
                emit.progress(f"output written to {parsed_args.out}")
            else:
                emit.message(message)  # print the output
            self.after(parsed_args)
            emit.trace(f"function 'after' was run for {self.name} command")
            return 0 if result.success else 1
        except ReductiveGeomError:
            raise
        except Exception as error:
            raise ReductiveGeomError(
                f"{self.name} failed to run with error{os.linesep}  {error}"
            ) from error

    def get_config(self, parsed_args: argparse.Namespace) -> Config:
        """Return configuration with command line overrides applied."""
        return self.config.override(
            tolerance=getattr(parsed_args, "tol", None),
            output_format=getattr(parsed_args, "format", None),
        )

    def format_output(self, retval: Any, output_format: str) -> str:
        """Render output as json, csv or text."""
        data = to_jsonable(retval)
        emit.debug(f"formatting output of {self.name} as {output_format}")
        if output_format == "csv":
            return format_csv(self.tabulate(data))
        if output_format == "text":
            return self.format_text(data)

        return json.dumps(data, indent=1)

    @staticmethod
    def tabulate(data: Any) -> List[Dict[str, Any]]:
        """Return csv rows of the output."""
        if isinstance(data, dict) and isinstance(data.get("rows"), list):
            return [flatten(row) for row in data["rows"]]
        return [flatten(data)]

    @staticmethod
    def format_text(data: Any) -> str:
        """Return human-readable text of the output."""
        return "\n".join(format_text(data))

    @abstractmethod
    def execute_cli(self, parsed_args: argparse.Namespace) -> Result:  # pragma: no cover
        """Abstract function need to be defined for each ReductiveGeom CLI command."""

    def before(self, parsed_args: argparse.Namespace) -> None:  # pragma: no cover
        """Run before execution."""

    def after(self, parsed_args: argparse.Namespace) -> None:  # pragma: no cover
        """Run after execution."""

    def fill_parser(self, parser: _CustomArgumentParser) -> None:
        parser.add_argument(
            "--format",
            type=str,
            choices=OUTPUT_FORMATS,
            default=None,
            help="Output format, defaults to the configured one (json).",
        )
        parser.add_argument(
            "--tol",
            type=parse_positive_real,
            default=None,
            help="Comparison tolerance.",
        )
        parser.add_argument(
            "--out",
            type=str,
            default=None,
            help="Write output to file instead of stdout.",
        )


class ModelCMD(BaseCMD, metaclass=ABCMeta):
    """Base CLI command working on a single model."""

    command: Type[BaseGeomCommand]
    needs_t: bool = False

    def fill_parser(self, parser: _CustomArgumentParser) -> None:
        """Define arguments for model selection."""
        super().fill_parser(parser)
        parser.add_argument(
            "--builtin",
            type=str,
            default=None,
            help=f"Builtin model, one of {humanize_list(available_models(), 'or')}.",
        )
        parser.add_argument(
            "--model",
            type=str,
            default=None,
            help="Path to json model file.",
        )
        parser.add_argument(
            "--param",
            type=parse_param,
            action="append",
            default=None,
            help="Parameter of builtin model as key=value, e.g. s=2/3 (repeatable).",
        )
        if self.needs_t:
            parser.add_argument(
                "--t",
                type=parse_real,
                default=0.0,
                help="Connection parameter t of ∇^t, fractions allowed (default 0).",
            )

    @staticmethod
    def load_model(parsed_args: argparse.Namespace) -> ReductiveModel:
        """Return model selected by --builtin or --model."""
        params = dict(parsed_args.param or [])
        if parsed_args.builtin and parsed_args.model:
            raise InputError("--builtin and --model are mutually exclusive")
        if parsed_args.model:
            if params:
                raise InputError("--param applies only to --builtin models")
            return load_model_source(parsed_args.model)
        if parsed_args.builtin:
            return build_model(parsed_args.builtin, params)

        raise InputError("one of --builtin or --model is required")

    def command_kwargs(self, parsed_args: argparse.Namespace) -> Dict[str, Any]:
        """Return keyword arguments of the command."""
        config = self.get_config(parsed_args)
        kwargs = {
            "model": self.load_model(parsed_args),
            "tolerance": config.tolerance,
            "rank_threshold": config.rank_threshold,
            "tolerances": config.string_tolerances,
        }
        if self.needs_t:
            kwargs["t"] = parsed_args.t
        return kwargs

    def execute_cli(self, parsed_args: argparse.Namespace) -> Result:
        """Execute command on the selected model."""
        if self.command is None or not issubclass(self.command, BaseGeomCommand):
            raise RuntimeError(f"command `{self.command}` is incorrect")

        return self.command().run(**self.command_kwargs(parsed_args))


class GridCMD(BaseCMD, metaclass=ABCMeta):
    """Base CLI command working on a parameter grid of a builtin family."""

    command: Type[BaseGeomCommand]

    def fill_parser(self, parser: _CustomArgumentParser) -> None:
        """Define arguments for the grid."""
        super().fill_parser(parser)
        parser.add_argument(
            "--builtin",
            type=str,
            required=True,
            help=f"Builtin model family, one of {humanize_list(available_models(), 'or')}.",
        )
        parser.add_argument(
            "--t-grid",
            type=parse_grid,
            required=True,
            help="Values of t as start:stop:step (stop included) or comma separated list.",
        )
        parser.add_argument(
            "--param-grid",
            type=parse_param_grid,
            action="append",
            default=None,
            help="Parameter values as key=start:stop:step or key=v1,v2 (repeatable).",
        )
        parser.add_argument(
            "--jobs",
            type=parse_positive_int,
            default=None,
            help="Number of grid points evaluated in parallel.",
        )

    def command_kwargs(self, parsed_args: argparse.Namespace) -> Dict[str, Any]:
        """Return keyword arguments of the command."""
        config = self.get_config(parsed_args)
        name = parsed_args.builtin
        family = get_family(name)
        param_grid: Dict[str, List[float]] = {}
        for key, values in parsed_args.param_grid or []:
            if key in param_grid:
                raise InputError(f"parameter {key!r} given more than once in --param-grid")
            if key not in family.defaults:
                raise InputError(
                    f"unknown parameter {key!r} for model {family.name!r}, "
                    f"expected {humanize_list(family.defaults, 'or')}"
                )
            param_grid[key] = values

        tolerances = (
            StringTolerances.uniform(parsed_args.tol)
            if parsed_args.tol is not None
            else config.string_tolerances
        )
        return {
            "family": name,
            "build": lambda params: build_model(name, params),
            "t_grid": parsed_args.t_grid,
            "param_grid": param_grid,
            "tolerances": tolerances,
            "jobs": parsed_args.jobs or config.jobs,
        }

    def execute_cli(self, parsed_args: argparse.Namespace) -> Result:
        """Execute command on the grid."""
        if self.command is None or not issubclass(self.command, BaseGeomCommand):
            raise RuntimeError(f"command `{self.command}` is incorrect")

        return self.command().run(**self.command_kwargs(parsed_args))
