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
"""Tests for the Jensen and Chavel-Ziller models of V_4,2."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from reductive_geom.algebra.lie_core import validate
from reductive_geom.exceptions import DimensionMismatchError, InputError
from reductive_geom.geometry.homogeneous import levi_civita_map, ricci, ricci_of_connection
from reductive_geom.models.stiefel import (
    V42_MODELS,
    chavel_ziller,
    isotropy_matrix,
    stiefel_jensen,
)


@pytest.mark.parametrize("constructor", [stiefel_jensen, chavel_ziller])
@pytest.mark.parametrize("s", [0.0, -1.0])
def test_invalid_parameter(constructor, s):
    """Test s must be positive."""
    with pytest.raises(InputError, match="must be positive"):
        constructor(s)


@pytest.mark.parametrize("s", [0.25, 0.7, 1.0])
def test_jensen_brackets(s):
    """Test [Z_1, Z_3]_m has length sqrt(2s) and [Z_1, Z_5] has length 1/sqrt(2s)."""
    root = math.sqrt(2 * s)
    model = stiefel_jensen(s)
    brackets = model.m_bracket_coefficients()

    assert model.name in V42_MODELS
    assert (model.dim, model.n) == (6, 5)
    assert_allclose(model.metric_m, np.eye(5))
    assert abs(brackets[0, 2, 4]) == pytest.approx(root)
    assert abs(brackets[0, 4, 2]) == pytest.approx(1 / root)


def test_jensen_normal_is_naturally_reductive(jensen_normal):
    """Test only the normal metric is naturally reductive w.r.t. SO(4)."""
    assert validate(jensen_normal).passed
    assert validate(stiefel_jensen(0.7)).failed == ["q_extends_metric", "natural_reductivity"]


def test_chavel_ziller_brackets(cz_one):
    """Test the h-part of the brackets of m."""
    h_part = cz_one.h_bracket_coefficients()

    assert cz_one.dim == 7
    assert cz_one.h_idx == (0, 1)
    assert_allclose(cz_one.metric_m, np.eye(5), atol=1e-12)
    assert_allclose(h_part[0, 3], np.zeros(2), atol=1e-12)
    assert abs(h_part[1, 3, 1]) == pytest.approx(1.0)
    assert h_part[1, 3, 0] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("s", [0.25, 2 / 3, 1.0, 2.0])
def test_chavel_ziller_q(s):
    """Test Q is indefinite exactly for s > 1/2."""
    eigenvalues = np.linalg.eigvalsh(chavel_ziller(s).Q)
    assert (np.min(eigenvalues) < 0) == (s > 0.5)


def test_chavel_ziller_normal_reduces_to_jensen(jensen_normal):
    """Test s=1/2 returns the normal metric on SO(4)/SO(2)."""
    model = chavel_ziller(0.5)

    assert model.name == "chavel-ziller"
    assert model.dim == 6
    assert_allclose(model.algebra.c, jensen_normal.algebra.c)


@pytest.mark.parametrize("s", [0.25, 2 / 3, 1.0])
def test_same_riemannian_metric(s):
    """Test both constructions carry the same metric and Ricci tensor on the shared basis."""
    jensen = stiefel_jensen(s)
    extended = chavel_ziller(s)

    assert_allclose(jensen.metric_m, extended.metric_m, atol=1e-12)
    assert_allclose(
        ricci_of_connection(jensen, levi_civita_map(jensen)),
        ricci(extended, 0.5).matrix,
        atol=1e-9,
    )


def test_jensen_einstein(jensen_einstein):
    """Test s=2/3 is Einstein."""
    matrix = ricci_of_connection(jensen_einstein, levi_civita_map(jensen_einstein))
    assert_allclose(matrix, matrix[0, 0] * np.eye(5), atol=1e-9)


@pytest.mark.parametrize("theta", [0.3, math.pi / 2, 2.0])
def test_isotropy_matrix(jensen_normal, theta):
    """Test exp(theta ad(h)) rotates (Z_1, Z_2) and (Z_3, Z_4) alike and fixes Z_5."""
    matrix = isotropy_matrix(jensen_normal, theta)

    assert_allclose(matrix @ matrix.T, np.eye(5), atol=1e-12)
    assert np.linalg.det(matrix) == pytest.approx(1.0)
    assert_allclose(matrix[:, 4], np.eye(5)[4], atol=1e-12)
    assert_allclose(matrix[:2, :2], matrix[2:4, 2:4], atol=1e-12)
    assert_allclose(matrix[:2, 2:4], np.zeros((2, 2)), atol=1e-12)
    assert abs(matrix[0, 0]) == pytest.approx(abs(math.cos(theta)), abs=1e-12)


def test_isotropy_matrix_full_turn(jensen_normal):
    """Test a full turn is the identity."""
    assert_allclose(isotropy_matrix(jensen_normal, 2 * math.pi), np.eye(5), atol=1e-10)


def test_isotropy_matrix_invalid_index(jensen_normal):
    """Test index of a generator that does not exist."""
    with pytest.raises(DimensionMismatchError):
        isotropy_matrix(jensen_normal, 0.1, index=1)
