"""Symmetric spaces and compact Lie groups with bi-invariant metrics."""
import itertools
import logging

import numpy as np
import numpy.typing as npt

from reductive_geom.algebra.lie_core import (
    LieAlgebraData,
    ReductiveModel,
    orthonormalize_m,
)
from reductive_geom.exceptions import InputError, MetricError, StructureConstantsError
from reductive_geom.settings import DEFAULT_TOLERANCE, MAX_SPHERE_DIM, MIN_SPHERE_DIM

logger = logging.getLogger(__name__)


def so_generator(size: int, i: int, j: int) -> npt.NDArray[np.float64]:
    """Return E_ij = e_j e_i^T - e_i e_j^T, mapping e_i to e_j."""
    matrix = np.zeros((size, size))
    matrix[j, i] = 1.0
    matrix[i, j] = -1.0
    return matrix


def trace_form(basis: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Return Q(X, Y) = -1/2 tr(XY) on a list of matrices."""
    matrices = np.asarray(basis, dtype=float)
    return -0.5 * np.einsum("aij,bji->ab", matrices, matrices)


def round_sphere(n: int) -> ReductiveModel:
    """Return the symmetric space SO(n+1)/SO(n) with the round metric of curvature one."""
    if not MIN_SPHERE_DIM <= n <= MAX_SPHERE_DIM:
        raise InputError(
            f"round sphere dimension must be between {MIN_SPHERE_DIM} and {MAX_SPHERE_DIM}, "
            f"got {n}"
        )

    size = n + 1
    isotropy = [so_generator(size, i, j) for i, j in itertools.combinations(range(n), 2)]
    tangent = [so_generator(size, i, n) for i in range(n)]
    basis = isotropy + tangent
    form = trace_form(basis)
    p = len(isotropy)

    return ReductiveModel(
        algebra=LieAlgebraData.from_matrices(basis),
        h_idx=tuple(range(p)),
        m_idx=tuple(range(p, p + n)),
        metric_m=form[p:, p:],
        Q=form,
        name="round-sphere",
        params={"n": n},
    )


def bi_invariant_group(
    structure_constants: npt.ArrayLike,
    scale: float = 1.0,
    name: str = "bi-invariant",
    tol: float = DEFAULT_TOLERANCE,
) -> ReductiveModel:
    """Return a compact Lie group G = G/{e} with the metric scale * (-Killing form)."""
    if scale <= 0:
        raise InputError(f"scale must be positive, got {scale}")

    algebra = LieAlgebraData(np.asarray(structure_constants, dtype=float))
    if algebra.antisymmetry_residual() > tol or algebra.jacobi_residual() > tol:
        raise StructureConstantsError("structure constants do not define a Lie algebra")

    form = -scale * algebra.killing_form()
    if np.min(np.linalg.eigvalsh(form)) <= tol:
        raise MetricError(
            "negative Killing form is not positive definite, the group is not compact semisimple"
        )

    model = ReductiveModel(
        algebra=algebra,
        h_idx=(),
        m_idx=tuple(range(algebra.dim)),
        metric_m=form,
        Q=form,
        name=name,
        params={"scale": scale},
    )
    return orthonormalize_m(model)


def su2(scale: float = 1.0) -> ReductiveModel:
    """Return SU(2) with [e_i, e_j] = eps_ijk e_k and its bi-invariant metric."""
    epsilon = np.zeros((3, 3, 3))
    for (i, j, k), sign in zip(itertools.permutations(range(3)), (1, -1, -1, 1, 1, -1)):
        epsilon[i, j, k] = sign
    return bi_invariant_group(epsilon, scale, name="su2")
