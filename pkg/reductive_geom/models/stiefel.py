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

"""Deformed metrics on the Stiefel manifold V_{4,2} = SO(4)/SO(2).

Both constructors use the orthonormal basis

    Z_1 = E_13, Z_2 = E_14, Z_3 = E_23, Z_4 = E_24, Z_5 ~ E_12

of m, where Z_5 spans the isotropy fixed direction and s scales its length.
"""
import dataclasses
import logging
import math

import numpy as np
import numpy.typing as npt
from scipy import linalg

from reductive_geom.algebra.lie_core import LieAlgebraData, ReductiveModel, ensure_orthonormal
from reductive_geom.exceptions import DimensionMismatchError, InputError
from reductive_geom.models.classical import so_generator, trace_form

logger = logging.getLogger(__name__)

V42_MODELS = ("jensen", "chavel-ziller")


def _check_parameter(s: float) -> None:
    if s <= 0:
        raise InputError(f"deformation parameter s must be positive, got {s}")


def stiefel_jensen(s: float) -> ReductiveModel:
    """Return the Jensen metric on SO(4)/SO(2).

    Q is the Ad(SO(4))-invariant form -1/2 tr, which extends the metric only
    for the normal metric s = 1/2.
    """
    _check_parameter(s)
    basis = [
        so_generator(4, 2, 3),
        so_generator(4, 0, 2),
        so_generator(4, 0, 3),
        so_generator(4, 1, 2),
        so_generator(4, 1, 3),
        so_generator(4, 0, 1) / math.sqrt(2 * s),
    ]
    return ReductiveModel(
        algebra=LieAlgebraData.from_matrices(basis),
        h_idx=(0,),
        m_idx=(1, 2, 3, 4, 5),
        metric_m=np.eye(5),
        Q=trace_form(basis),
        name="jensen",
        params={"s": s},
    )


def chavel_ziller(s: float) -> ReductiveModel:
    """Return the Jensen metric as naturally reductive space (SO(4) x SO(2))/(SO(2) x SO(2)).

    The extra SO(2) factor is realized by F = diag(0, 0, 0, 0, 1) in 5x5
    matrices. At s = 1/2 the extension degenerates and the normal metric on
    SO(4)/SO(2) is returned instead.
    """
    _check_parameter(s)
    if math.isclose(s, 0.5):
        logger.info("chavel-ziller at s=1/2 reduces to the normal metric on SO(4)/SO(2)")
        return dataclasses.replace(stiefel_jensen(0.5), name="chavel-ziller")

    root = math.sqrt(2 * s)
    extra = np.zeros((5, 5))
    extra[4, 4] = 1.0

    def embed(matrix: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        padded = np.zeros((5, 5))
        padded[:4, :4] = matrix
        return padded

    basis = [
        embed(so_generator(4, 2, 3)),
        embed(so_generator(4, 0, 1)) + extra,
        embed(so_generator(4, 0, 2)),
        embed(so_generator(4, 0, 3)),
        embed(so_generator(4, 1, 2)),
        embed(so_generator(4, 1, 3)),
        root * embed(so_generator(4, 0, 1)) + (2 * s - 1) / root * extra,
    ]
    weight = 2 * s / (1 - 2 * s)
    blocks = np.asarray(basis)
    form = trace_form(blocks[:, :4, :4]) + weight * np.outer(blocks[:, 4, 4], blocks[:, 4, 4])

    model = ReductiveModel(
        algebra=LieAlgebraData.from_matrices(basis),
        h_idx=(0, 1),
        m_idx=(2, 3, 4, 5, 6),
        metric_m=form[2:, 2:],
        Q=form,
        name="chavel-ziller",
        params={"s": s},
    )
    return ensure_orthonormal(model)


def isotropy_matrix(
    model: ReductiveModel, theta: float, index: int = 0
) -> npt.NDArray[np.float64]:
    """Return exp(theta ad(h_index)) restricted to m."""
    matrices = model.isotropy_matrices()
    if not 0 <= index < len(matrices):
        raise DimensionMismatchError(
            f"isotropy generator {index} out of range for model {model.name!r}"
        )
    return linalg.expm(theta * matrices[index])
