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
"""Tests for assignment.runner."""
import threading
from unittest import mock

import pytest

from reductive_geom.assignment.runner import run, run_parallel, run_serial


@pytest.mark.asyncio
@pytest.mark.parametrize(
    "points, exp_result",
    [
        ([], []),
        ([1], [2]),
        ([3, 1, 2], [6, 2, 4]),
    ],
)
async def test_run_serial(points, exp_result):
    """Test serial evaluation keeps grid order."""
    evaluate = mock.MagicMock(side_effect=lambda point: 2 * point)

    result = await run_serial(points, evaluate)

    assert result == exp_result
    evaluate.assert_has_calls([mock.call(point) for point in points])


@pytest.mark.asyncio
async def test_run_parallel():
    """Test parallel evaluation keeps grid order and uses worker threads."""
    threads = set()

    def evaluate(point):
        threads.add(threading.get_ident())
        return point**2

    result = await run_parallel(list(range(10)), evaluate, 3)

    assert result == [point**2 for point in range(10)]
    assert threading.get_ident() not in threads


@pytest.mark.asyncio
@mock.patch("reductive_geom.assignment.runner.run_parallel", new_callable=mock.AsyncMock)
@mock.patch("reductive_geom.assignment.runner.run_serial", new_callable=mock.AsyncMock)
@pytest.mark.parametrize(
    "points, jobs, exp_parallel",
    [
        ([1, 2], 1, False),
        ([1], 4, False),
        ([], 4, False),
        ([1, 2], 2, True),
    ],
)
async def test_run(mock_run_serial, mock_run_parallel, points, jobs, exp_parallel):
    """Test worker pool is used only for several jobs and several points."""
    evaluate = mock.MagicMock()

    result = await run(points, evaluate, jobs)

    if exp_parallel:
        mock_run_parallel.assert_awaited_once_with(points, evaluate, jobs)
        mock_run_serial.assert_not_awaited()
        assert result == mock_run_parallel.return_value
    else:
        mock_run_serial.assert_awaited_once_with(points, evaluate)
        mock_run_parallel.assert_not_awaited()
        assert result == mock_run_serial.return_value
