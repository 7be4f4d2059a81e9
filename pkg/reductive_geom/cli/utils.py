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

"""Parsers for command line values."""
from argparse import ArgumentTypeError
from fractions import Fraction
from typing import List, Tuple

GRID_SEPARATOR = ":"


def parse_real(value: str) -> float:
    """Parse real number, fractions like 1/3 are allowed."""
    try:
        return float(Fraction(value.strip()))
    except (ValueError, ZeroDivisionError) as error:
        raise ArgumentTypeError(f"invalid real number: {value!r}") from error


def parse_positive_real(value: str) -> float:
    """Parse positive real number."""
    number = parse_real(value)
    if number <= 0:
        raise ArgumentTypeError(f"value must be positive: {value!r}")

    return number


def parse_positive_int(value: str) -> int:
    """Parse integer >= 1."""
    try:
        number = int(value)
    except ValueError as error:
        raise ArgumentTypeError(f"invalid integer: {value!r}") from error
    if number < 1:
        raise ArgumentTypeError(f"value must be at least 1: {value!r}")

    return number


def parse_param(value: str) -> Tuple[str, float]:
    """Parse `key=value` parameter assignment."""
    key, separator, number = value.partition("=")
    if not separator or not key.strip():
        raise ArgumentTypeError(f"parameter must have the form key=value: {value!r}")

    return key.strip(), parse_real(number)


def _fraction(value: str) -> Fraction:
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as error:
        raise ArgumentTypeError(f"invalid grid value: {value!r}") from error


def parse_grid(value: str) -> List[float]:
    """Parse grid given as `start:stop:step` (stop included) or comma separated list.

    Grid values are evaluated as exact fractions, so `0:1:1/3` contains 1.
    """
    if GRID_SEPARATOR in value:
        parts = value.split(GRID_SEPARATOR)
        if len(parts) != 3:
            raise ArgumentTypeError(f"grid range must have the form start:stop:step: {value!r}")
        start, stop, step = (_fraction(part) for part in parts)
        if step <= 0:
            raise ArgumentTypeError(f"grid step must be positive: {value!r}")
        if stop < start:
            raise ArgumentTypeError(f"grid stop is smaller than start: {value!r}")
        count = int((stop - start) // step) + 1
        return [float(start + index * step) for index in range(count)]

    values = [_fraction(part) for part in value.split(",") if part.strip()]
    if not values:
        raise ArgumentTypeError(f"grid must not be empty: {value!r}")

    return [float(item) for item in values]


def parse_param_grid(value: str) -> Tuple[str, List[float]]:
    """Parse `key=grid` parameter grid."""
    key, separator, grid = value.partition("=")
    if not separator or not key.strip():
        raise ArgumentTypeError(f"parameter grid must have the form key=grid: {value!r}")

    return key.strip(), parse_grid(grid)
