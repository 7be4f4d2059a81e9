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

"""Invariant metric connections on reductive homogeneous spaces.

An invariant connection is given by its Nomizu map, one skew matrix Λ(Z_i)
for each vector of an orthonormal basis of m. All tensors are evaluated at the
origin in that basis, e.g. `R[x, y, z, v] = <R(Z_x, Z_y) Z_z, Z_v>`. Models
with a non orthonormal m-basis are orthonormalized first, so Nomizu maps are
always expressed in the orthonormal frame.
"""
import dataclasses
import enum
import itertools
import logging
from typing import Any, Dict, List, Optional, Union

import numpy as np
import numpy.typing as npt
from scipy import linalg

from reductive_geom.algebra.forms import antisymmetry_residual, form_components, require_form
from reductive_geom.algebra.lie_core import (
    Array,
    BilinearFormOnM,
    FormRole,
    ReductiveModel,
    casimir_A,
    ensure_orthonormal,
    killing_beta,
    require_naturally_reductive,
)
from reductive_geom.exceptions import DimensionMismatchError, FormError
from reductive_geom.settings import DEFAULT_RANK_THRESHOLD, DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)


class ConnectionTag(str, enum.Enum):
    """Origin of a Nomizu map."""

    CANONICAL_T = "canonical_t"
    LEVI_CIVITA = "levi_civita_general"
    CONTACT = "contact"
    CUSTOM = "custom"


@dataclasses.dataclass(frozen=True, eq=False)
class ConnectionMap:
    """Nomizu map of an invariant connection.

    `lam[i]` is the matrix of Λ(Z_i) acting on m-coordinates.
    """

    lam: Array
    tag: ConnectionTag = ConnectionTag.CUSTOM
    t: Optional[float] = None

    def __post_init__(self) -> None:
        """Validate shape."""
        lam = np.array(self.lam, dtype=float)
        if lam.ndim != 3 or len(set(lam.shape)) != 1:
            raise DimensionMismatchError(f"Nomizu map must be an (n, n, n) array, got {lam.shape}")
        lam.setflags(write=False)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "tag", ConnectionTag(self.tag))

    @property
    def n(self) -> int:
        """Dimension of m."""
        return int(self.lam.shape[0])

    def __call__(self, x: npt.ArrayLike) -> Array:
        """Return the matrix of Λ(x)."""
        return np.einsum("i,ijk->jk", np.asarray(x, dtype=float), self.lam)

    def skew_residual(self) -> float:
        """Return max deviation of Λ(Z_i) from skew symmetry."""
        return float(np.max(np.abs(self.lam + np.transpose(self.lam, (0, 2, 1)))))

    def is_metric(self, tol: float = DEFAULT_TOLERANCE) -> bool:
        """Check if the connection preserves the metric."""
        return self.skew_residual() <= tol

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {"tag": self.tag.value, "t": self.t, "lambda": self.lam.tolist()}


@dataclasses.dataclass(frozen=True, eq=False)
class TorsionForm:
    """Totally antisymmetric torsion, `components[i, j, k] = T(Z_i, Z_j, Z_k)`."""

    components: Array

    def __post_init__(self) -> None:
        """Validate antisymmetry."""
        components = np.array(require_form(self.components), dtype=float)
        if components.ndim != 3:
            raise FormError(f"torsion form must have three indices, got {components.ndim}")
        components.setflags(write=False)
        object.__setattr__(self, "components", components)

    @property
    def n(self) -> int:
        """Dimension of m."""
        return int(self.components.shape[0])

    def norm(self) -> float:
        """Return max absolute component."""
        return float(np.max(np.abs(self.components), initial=0.0))

    def to_dict(self) -> List[Dict[str, Any]]:
        """Return increasing-index components."""
        return [
            {"indices": list(indices), "value": value}
            for indices, value in form_components(self.components).items()
        ]


@dataclasses.dataclass(frozen=True, eq=False)
class Torsion:
    """Torsion of an invariant connection, `tensor[i, j, k] = <T(Z_i, Z_j), Z_k>`."""

    tensor: Array
    antisymmetry_residual: float
    tol: float = DEFAULT_TOLERANCE

    @property
    def is_skew(self) -> bool:
        """Check whether the (0,3) tensor is a 3-form."""
        return self.antisymmetry_residual <= self.tol

    @property
    def form(self) -> TorsionForm:
        """Return the torsion 3-form, raise FormError when the torsion is not skew."""
        if not self.is_skew:
            raise FormError(
                f"torsion is not totally antisymmetric (residual {self.antisymmetry_residual:.3e})"
            )
        return TorsionForm(self.tensor)

    def __call__(self, x: npt.ArrayLike, y: npt.ArrayLike) -> Array:
        """Return T(x, y) as m-vector."""
        return np.einsum("i,j,ijk->k", np.asarray(x), np.asarray(y), self.tensor)


@dataclasses.dataclass(frozen=True, eq=False)
class HolonomyAlgebra:
    """Holonomy algebra as a basis of skew matrices on m."""

    basis: Array

    @property
    def dimension(self) -> int:
        """Dimension of the holonomy algebra."""
        return int(self.basis.shape[0])


@dataclasses.dataclass(frozen=True)
class SelfAdjointness:
    """Result of the Dirac operator self adjointness condition."""

    passed: bool
    residual: float
    trace_vector: List[float]


@dataclasses.dataclass(frozen=True, eq=False)
class ConnectionReport:  # pylint: disable=R0902
    """Data of the connection ∇^t of a model."""

    model: str
    t: float
    torsion: TorsionForm
    ricci: BilinearFormOnM
    scalar: float
    holonomy_dimension: int
    self_adjointness_residual: float
    ricci_wz_residual: float
    delta_torsion_norm: float
    d_torsion_norm: float

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {
            "model": self.model,
            "t": self.t,
            "torsion": self.torsion.to_dict(),
            "torsion_norm": self.torsion.norm(),
            "ricci": self.ricci.matrix.tolist(),
            "scalar": self.scalar,
            "holonomy_dimension": self.holonomy_dimension,
            "self_adjointness_residual": self.self_adjointness_residual,
            "ricci_wz_residual": self.ricci_wz_residual,
            "delta_torsion_norm": self.delta_torsion_norm,
            "d_torsion_norm": self.d_torsion_norm,
        }


TorsionLike = Union[TorsionForm, Torsion, npt.ArrayLike]


def _frame(model: ReductiveModel) -> ReductiveModel:
    return ensure_orthonormal(model)


def _require_family(model: ReductiveModel, t: float) -> None:
    """The family ∇^t is metric for t != 0 only on naturally reductive models."""
    if t != 0:
        require_naturally_reductive(model)


def _torsion_array(torsion_like: TorsionLike) -> Array:
    if isinstance(torsion_like, TorsionForm):
        return torsion_like.components
    if isinstance(torsion_like, Torsion):
        return torsion_like.tensor
    return np.asarray(torsion_like, dtype=float)


def _check_connection(model: ReductiveModel, conn: ConnectionMap) -> None:
    if conn.n != model.n:
        raise DimensionMismatchError(
            f"Nomizu map for dim m = {conn.n} used with model {model.name!r} of dim m = {model.n}"
        )


def lambda_t(model: ReductiveModel, t: float) -> ConnectionMap:
    """Return Λ^t(X)Y = t[X, Y]_m."""
    model = _frame(model)
    _require_family(model, t)
    brackets = model.m_bracket_coefficients()
    lam = t * np.transpose(brackets, (0, 2, 1))
    return ConnectionMap(lam, ConnectionTag.CANONICAL_T, float(t))


def levi_civita_map(model: ReductiveModel) -> ConnectionMap:
    """Return the Nomizu map of the Levi-Civita connection.

    <Λ(X)Y, Z> = 1/2 (<[X,Y]_m, Z> - <[Y,Z]_m, X> + <[Z,X]_m, Y>), which needs
    no natural reductivity.
    """
    model = _frame(model)
    brackets = model.m_bracket_coefficients()
    values = 0.5 * (
        brackets
        - np.transpose(brackets, (2, 0, 1))
        + np.transpose(brackets, (1, 2, 0))
    )
    return ConnectionMap(np.transpose(values, (0, 2, 1)), ConnectionTag.LEVI_CIVITA)


def torsion(model: ReductiveModel, conn: ConnectionMap, tol: float = DEFAULT_TOLERANCE) -> Torsion:
    """Return T(X, Y) = Λ(X)Y - Λ(Y)X - [X, Y]_m.

    A torsion that is not a 3-form is reported on the result and logged, it is
    not an error.
    """
    model = _frame(model)
    _check_connection(model, conn)
    applied = np.transpose(conn.lam, (0, 2, 1))  # applied[i, j, k] = <Λ(Z_i)Z_j, Z_k>
    tensor = applied - np.transpose(applied, (1, 0, 2)) - model.m_bracket_coefficients()
    residual = antisymmetry_residual(tensor)
    if residual > tol:
        logger.warning(
            "torsion of %s connection on %s is not a 3-form (residual %.3e)",
            conn.tag.value,
            model.name,
            residual,
        )
    return Torsion(tensor, residual, tol)


def torsion_t(model: ReductiveModel, t: float) -> TorsionForm:
    """Return the torsion form T^t = (2t - 1)<[X, Y]_m, Z>."""
    model = _frame(model)
    require_naturally_reductive(model)
    return TorsionForm((2 * t - 1) * model.m_bracket_coefficients())


def curvature_tensor(model: ReductiveModel, t: float) -> Array:
    """Return R^t[x, y, z, v] from the closed formula for the family.

    R(X,Y)Z = t^2 [X,[Y,Z]_m]_m + t^2 [Y,[Z,X]_m]_m + t [Z,[X,Y]_m]_m + [Z,[X,Y]_h]
    """
    model = _frame(model)
    _require_family(model, t)
    brackets = model.m_bracket_coefficients()
    h_part = model.h_bracket_coefficients()
    isotropy = model.algebra.c[np.ix_(model.h_idx, model.m_idx, model.m_idx)]

    first = np.einsum("yzw,xwv->xyzv", brackets, brackets)
    second = np.einsum("zxw,ywv->xyzv", brackets, brackets)
    third = np.einsum("xyw,zwv->xyzv", brackets, brackets)
    fourth = -np.einsum("xya,azv->xyzv", h_part, isotropy)
    return t**2 * (first + second) + t * third + fourth


def curvature(
    model: ReductiveModel, t: float, x: npt.ArrayLike, y: npt.ArrayLike
) -> Array:
    """Return the matrix of R^t(x, y) acting on m-coordinates."""
    tensor = curvature_tensor(model, t)
    return np.einsum("x,y,xyzv->vz", np.asarray(x), np.asarray(y), tensor)


def wang_curvature_tensor(model: ReductiveModel, conn: ConnectionMap) -> Array:
    """Return R[x, y, z, v] with R(X,Y) = [Λ(X), Λ(Y)] - Λ([X,Y]_m) - ad([X,Y]_h)."""
    model = _frame(model)
    _check_connection(model, conn)
    lam = conn.lam
    commutators = np.einsum("xvw,ywz->xyvz", lam, lam) - np.einsum("yvw,xwz->xyvz", lam, lam)
    along_m = np.einsum("xyw,wvz->xyvz", model.m_bracket_coefficients(), lam)
    along_h = np.einsum("xya,avz->xyvz", model.h_bracket_coefficients(), model.isotropy_matrices())
    return np.transpose(commutators - along_m - along_h, (0, 1, 3, 2))


def wang_curvature(
    model: ReductiveModel, conn: ConnectionMap, x: npt.ArrayLike, y: npt.ArrayLike
) -> Array:
    """Return the matrix of R(x, y) of an arbitrary invariant connection."""
    tensor = wang_curvature_tensor(model, conn)
    return np.einsum("x,y,xyzv->vz", np.asarray(x), np.asarray(y), tensor)


def ricci(model: ReductiveModel, t: float) -> BilinearFormOnM:
    """Return Ric^t(X,Y) = sum_i (t - t^2)<[X,Z_i]_m,[Y,Z_i]_m> + Q_h([X,Z_i],[Y,Z_i])."""
    model = _frame(model)
    _require_family(model, t)
    brackets = model.m_bracket_coefficients()
    h_part = model.h_bracket_coefficients()
    matrix = (t - t**2) * np.einsum("xiw,yiw->xy", brackets, brackets) + np.einsum(
        "xia,ab,yib->xy", h_part, model.Q_h, h_part
    )
    return BilinearFormOnM(matrix, FormRole.RICCI)


def ricci_of_connection(model: ReductiveModel, conn: ConnectionMap) -> Array:
    """Return Ric(X,Y) = sum_i <R(X,Z_i)Z_i, Y> of an arbitrary invariant connection.

    The result is not symmetric in general, so a plain matrix is returned.
    """
    return np.einsum("xiiy->xy", wang_curvature_tensor(model, conn))


def scal(model: ReductiveModel, t: float) -> float:
    """Return the scalar curvature of ∇^t."""
    return float(np.trace(ricci(model, t).matrix))


def ricci_wz(model: ReductiveModel, t: float) -> BilinearFormOnM:
    """Return (t - t^2) beta + (2t^2 - 2t + 1) A."""
    model = _frame(model)
    _require_family(model, t)
    beta = killing_beta(model).matrix
    casimir = casimir_A(model).matrix
    return BilinearFormOnM((t - t**2) * beta + (2 * t**2 - 2 * t + 1) * casimir, FormRole.RICCI)


def _derivation(matrices: Array, omega: Array) -> Array:
    """Return D[z, x_1, ..., x_r] = -sum_k omega(..., A_z x_k, ...)."""
    n = matrices.shape[-1]
    result = np.zeros((matrices.shape[0],) + (n,) * omega.ndim)
    for axis in range(omega.ndim):
        contracted = np.tensordot(matrices, omega, axes=([1], [axis]))
        result -= np.moveaxis(contracted, 1, 1 + axis)
    return result


def isotropy_invariance_residual(model: ReductiveModel, omega: npt.ArrayLike) -> float:
    """Return max deviation of a tensor on m from invariance under ad(h)."""
    model = _frame(model)
    array = np.asarray(omega, dtype=float)
    if not model.h_idx or array.ndim == 0:
        return 0.0
    return float(np.max(np.abs(_derivation(model.isotropy_matrices(), array))))


def covariant_derivative(conn: ConnectionMap, omega: npt.ArrayLike) -> Array:
    """Return (∇_Z omega)[z, x_1, ..., x_r] of an invariant tensor."""
    array = np.asarray(omega, dtype=float)
    if array.ndim and array.shape[0] != conn.n:
        raise DimensionMismatchError(f"tensor on dim {array.shape[0]} for dim m = {conn.n}")
    return _derivation(conn.lam, array)


def nabla_torsion(model: ReductiveModel, t: float) -> Array:
    """Return N[z, x, y, v] = (∇^t_Z T^t)(X, Y, V)."""
    return covariant_derivative(lambda_t(model, t), torsion_t(model, t).components)


def _jacobi_cycle(first: Array) -> Array:
    return first + np.einsum("yzxk->xyzk", first) + np.einsum("zxyk->xyzk", first)


def jac_m_tensor(model: ReductiveModel) -> Array:
    """Return J[x, y, z, k] = <Jac_m(Z_x, Z_y, Z_z), Z_k>."""
    model = _frame(model)
    brackets = model.m_bracket_coefficients()
    return _jacobi_cycle(np.einsum("yzw,xwk->xyzk", brackets, brackets))


def jac_h_tensor(model: ReductiveModel) -> Array:
    """Return <Jac_h(Z_x, Z_y, Z_z), Z_k>, Jac_h(X,Y,Z) = [X,[Y,Z]_h] + cyclic."""
    model = _frame(model)
    return _jacobi_cycle(
        -np.einsum("yza,akx->xyzk", model.h_bracket_coefficients(), model.isotropy_matrices())
    )


def jac_m(model: ReductiveModel, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike) -> Array:
    """Return Jac_m(x, y, z) = [x,[y,z]_m]_m + cyclic."""
    return np.einsum("x,y,z,xyzk->k", x, y, z, jac_m_tensor(model))


def jac_h(model: ReductiveModel, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike) -> Array:
    """Return Jac_h(x, y, z) = [x,[y,z]_h] + cyclic."""
    return np.einsum("x,y,z,xyzk->k", x, y, z, jac_h_tensor(model))


def exterior_derivative(
    model: ReductiveModel,
    conn: ConnectionMap,
    omega: npt.ArrayLike,
    tol: float = DEFAULT_TOLERANCE,
) -> Array:
    """Return d omega of an invariant r-form.

    d omega(X_0..X_r) = sum_i (-1)^i (∇_{X_i} omega)(..X_i omitted..)
                        - sum_{i<j} (-1)^{i+j} omega(T(X_i, X_j), ..X_i, X_j omitted..)

    with the torsion T of conn. The result does not depend on the connection.
    """
    model = _frame(model)
    _check_connection(model, conn)
    array = require_form(omega, tol)
    if array.ndim == 0:
        return np.zeros(model.n)
    if array.shape[0] != model.n:
        raise DimensionMismatchError(f"form on dim {array.shape[0]} for dim m = {model.n}")

    residual = isotropy_invariance_residual(model, array)
    if residual > tol:
        raise FormError(
            f"form is not invariant under the isotropy algebra (residual {residual:.3e})"
        )

    degree = array.ndim
    nabla = covariant_derivative(conn, array)
    derivative_terms = sum(
        (-1) ** i * np.moveaxis(nabla, 0, i) for i in range(degree + 1)
    )
    inserted = np.tensordot(torsion(model, conn).tensor, array, axes=([2], [0]))
    torsion_terms = sum(
        (-1) ** (i + j) * np.moveaxis(inserted, [0, 1], [i, j])
        for i, j in itertools.combinations(range(degree + 1), 2)
    )
    return derivative_terms - torsion_terms


def codifferential(model: ReductiveModel, omega: npt.ArrayLike) -> Array:
    """Return δ omega = -sum_i (∇^LC_{Z_i} omega)(Z_i, ...)."""
    nabla = covariant_derivative(levi_civita_map(model), omega)
    return -np.trace(nabla, axis1=0, axis2=1)


def d_torsion(model: ReductiveModel, t: float) -> Array:
    """Return dT^t(X,Y,Z,V) = 2(2t - 1)<Jac_m(X,Y,Z), V>."""
    model = _frame(model)
    require_naturally_reductive(model)
    return 2 * (2 * t - 1) * jac_m_tensor(model)


def delta_torsion(model: ReductiveModel, t: float) -> Array:
    """Return the codifferential of T^t."""
    return codifferential(model, torsion_t(model, t).components)


def reconstruct_brackets(torsion_form: TorsionLike, tol: float = DEFAULT_TOLERANCE) -> Array:
    """Return B[i, j, k], the Z_k coefficient of [Z_i, Z_j]_m = -sum_k T(Z_i, Z_j, Z_k) Z_k."""
    return -require_form(_torsion_array(torsion_form), tol)


def _span(columns: Array, threshold: float) -> Array:
    if columns.size == 0 or np.max(np.abs(columns)) <= threshold:
        return np.zeros((columns.shape[0], 0))
    return linalg.orth(columns, rcond=threshold)


def holonomy_algebra(
    model: ReductiveModel, conn: ConnectionMap, threshold: float = DEFAULT_RANK_THRESHOLD
) -> HolonomyAlgebra:
    """Return the holonomy algebra of an invariant connection.

    It is spanned by the curvature endomorphisms m_0 and their iterated
    commutators with Λ(m), computed as an ascending chain of subspaces.
    """
    model = _frame(model)
    n = model.n
    curvature_values = wang_curvature_tensor(model, conn)
    matrices = np.transpose(curvature_values, (0, 1, 3, 2)).reshape(-1, n * n)
    basis = _span(matrices.T, threshold)

    while True:
        current = basis.T.reshape(-1, n, n)
        commutators = np.einsum("ivw,bwz->ibvz", conn.lam, current) - np.einsum(
            "bvw,iwz->ibvz", current, conn.lam
        )
        extended = _span(np.hstack([basis, commutators.reshape(-1, n * n).T]), threshold)
        if extended.shape[1] == basis.shape[1]:
            break
        basis = extended

    logger.debug("holonomy of %s connection has dimension %d", conn.tag.value, basis.shape[1])
    return HolonomyAlgebra(basis.T.reshape(-1, n, n))


def self_adjointness_check(
    model: ReductiveModel, conn: ConnectionMap, tol: float = DEFAULT_TOLERANCE
) -> SelfAdjointness:
    """Check sum_i <Λ(Z_i)X, Z_i> = sum_i <[Z_i, X]_m, Z_i> for every basis vector X."""
    model = _frame(model)
    _check_connection(model, conn)
    left = np.einsum("iix->x", conn.lam)
    right = np.einsum("ixi->x", model.m_bracket_coefficients())
    residual = float(np.max(np.abs(left - right)))
    trace_vector = np.einsum("iki->k", conn.lam)
    return SelfAdjointness(residual <= tol, residual, trace_vector.tolist())


def ricci_torsion_identity(model: ReductiveModel, t: float) -> float:
    """Return residual of Ric^LC = Ric^t + 1/4 sum_i <T^t(X,Z_i), T^t(Y,Z_i)>."""
    form = torsion_t(model, t).components
    correction = 0.25 * np.einsum("xiw,yiw->xy", form, form)
    difference = ricci(model, 0.5).matrix - ricci(model, t).matrix - correction
    return float(np.max(np.abs(difference)))


def connection_report(
    model: ReductiveModel, t: float, threshold: float = DEFAULT_RANK_THRESHOLD
) -> ConnectionReport:
    """Collect torsion, curvature and holonomy data of ∇^t."""
    model = _frame(model)
    require_naturally_reductive(model)
    conn = lambda_t(model, t)
    ricci_form = ricci(model, t)
    wz_residual = float(np.max(np.abs(ricci_form.matrix - ricci_wz(model, t).matrix)))

    return ConnectionReport(
        model=model.name,
        t=float(t),
        torsion=torsion_t(model, t),
        ricci=ricci_form,
        scalar=float(np.trace(ricci_form.matrix)),
        holonomy_dimension=holonomy_algebra(model, conn, threshold).dimension,
        self_adjointness_residual=self_adjointness_check(model, conn).residual,
        ricci_wz_residual=wz_residual,
        delta_torsion_norm=float(np.max(np.abs(delta_torsion(model, t)), initial=0.0)),
        d_torsion_norm=float(np.max(np.abs(d_torsion(model, t)), initial=0.0)),
    )
