# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright 2021-2023 Canonical Ltd.
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

"""Utilities for ReductiveGeom."""
import dataclasses
import enum
import json
import logging
from pathlib import Path
from typing import Any, Iterable, Union

import numpy as np
import yaml

from reductive_geom.exceptions import InputError
from reductive_geom.settings import SIGNIFICANT_DIGITS

logger = logging.getLogger(__name__)


def strtobool(value: str) -> bool:
    """Convert a string representation of truth to true (1) or false (0).

    :param value: a True value of 'y', 'yes', 't', 'true', 'on', and '1'
        or a False value of 'n', 'no', 'f', 'false', 'off', and '0'.
    :raises ValueError: if `value` is not a valid boolean value.
    """
    parsed_value = value.lower()

    if parsed_value in ("y", "yes", "t", "true", "on", "1"):
        return True
    if parsed_value in ("n", "no", "f", "false", "off", "0"):
        return False

    raise ValueError(f"Invalid boolean value of {value!r}")


def humanize_list(
    items: Iterable[str],
    conjunction: str,
    item_format: str = "{!r}",
    sort: bool = True,
) -> str:
    """Format a list into a human-readable string.

    :param items: list to humanize.
    :param conjunction: the conjunction used to join the final element to
                        the rest of the list (e.g. 'and').
    :param item_format: format string to use per item.
    :param sort: if true, sort the list.
    """
    if not items:
        return ""

    quoted_items = [item_format.format(item) for item in items]

    if sort:
        quoted_items = sorted(quoted_items)

    if len(quoted_items) == 1:
        return quoted_items[0]

    humanized = ", ".join(quoted_items[:-1])

    if len(quoted_items) > 2:
        humanized += ","

    return f"{humanized} {conjunction} {quoted_items[-1]}"


def load_yaml_file(path: Union[str, Path]) -> Any:
    """Load yaml file.

    raises: FileNotFoundError -> InputError if file does not exist
    raises: PermissionError -> InputError if user has no permission to path
    raises: yaml.YAMLError -> InputError if the file is not valid yaml
    """
    try:
        with open(path, "r", encoding="UTF-8") as file:
            source = yaml.safe_load(file)
            logger.info("load yaml file from %s path", path)
            return source
    except FileNotFoundError as error:
        raise InputError(f"file {path} does not exist") from error
    except PermissionError as error:
        raise InputError(f"permission denied to read file {path}") from error
    except yaml.YAMLError as error:
        raise InputError(f"file {path} is not valid yaml: {error}") from error


def load_json_file(path: Union[str, Path]) -> Any:
    """Load json file.

    raises: FileNotFoundError -> InputError if file does not exist
    raises: PermissionError -> InputError if user has no permission to path
    raises: json.JSONDecodeError -> InputError if the file is not valid json
    """
    try:
        with open(path, "r", encoding="UTF-8") as file:
            source = json.load(file)
            logger.info("load json file from %s path", path)
            return source
    except FileNotFoundError as error:
        raise InputError(f"file {path} does not exist") from error
    except PermissionError as error:
        raise InputError(f"permission denied to read file {path}") from error
    except json.JSONDecodeError as error:
        raise InputError(f"file {path} is not valid json: {error}") from error


def to_jsonable(value: Any) -> Any:  # pylint: disable=R0911
    """Convert numpy, dataclass and enum values into json serializable objects.

    Complex numbers are written as `[re, im]` pairs, which is also the format
    used for exported spinor matrices.
    """
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {
            field.name: to_jsonable(getattr(value, field.name))
            for field in dataclasses.fields(value)
        }
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)

    return value


def format_number(value: Any) -> str:
    """Format number with the configured number of significant digits."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (complex, np.complexfloating)):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    if isinstance(value, (int, float, np.integer, np.floating)):
        return f"{float(value):.{SIGNIFICANT_DIGITS}g}"

    return str(value)


def write_output(text: str, path: Union[str, Path]) -> None:
    """Write rendered output to file."""
    try:
        with open(path, "w", encoding="UTF-8") as file:
            file.write(text)
            if not text.endswith("\n"):
                file.write("\n")
            logger.info("output written to %s", path)
    except (PermissionError, IsADirectoryError, FileNotFoundError) as error:
        raise InputError(f"cannot write output file {path}: {error}") from error
