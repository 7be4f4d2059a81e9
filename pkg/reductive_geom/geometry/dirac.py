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

"""Cubic Dirac element, lifted Casimir and the Kostant-Parthasarathy scalars.

Only the Clifford algebraic constituents of (D^t)^2 and its action on constant
spinors are computed. Spinor fields that are not constant are rejected.
"""
import dataclasses
import itertools
import logging
from typing import Any, Dict, List, Optional

import numpy as np
import numpy.typing as npt
from scipy import linalg

from reductive_geom.algebra.clifford import (
    CliffordElement,
    Spinor,
    SpinorRep,
    gamma_rep,
    spin_lift,
)
from reductive_geom.algebra.lie_core import (
    Array,
    ReductiveModel,
    casimir_trace,
    dual_form,
    ensure_orthonormal,
    require_naturally_reductive,
)
from reductive_geom.exceptions import DimensionMismatchError, SpinorError
from reductive_geom.geometry.homogeneous import (
    ConnectionMap,
    holonomy_algebra,
    jac_h_tensor,
    jac_m_tensor,
    lambda_t,
)
from reductive_geom.settings import DEFAULT_RANK_THRESHOLD, DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class HSquared:
    """Closed form grades of H^2."""

    grade0: float
    grade4: CliffordElement

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {"grade0": self.grade0, "grade4": self.grade4.to_json()}


@dataclasses.dataclass(frozen=True, eq=False)
class KPReport:  # pylint: disable=R0902
    """Scalar and Clifford terms of (D^t)^2 = Omega_g + first order + degree4 + scalar."""

    model: str
    n: int
    t: float
    scalar_h_part: float
    scalar_m_part: float
    first_order_coeff: float
    degree4: CliffordElement
    kp_scalar_third: float
    rho_g_sq: float
    rho_h_sq: float

    @property
    def scalar(self) -> float:
        """Return the total scalar term at t."""
        return self.scalar_h_part + self.scalar_m_part

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {
            "model": self.model,
            "n": self.n,
            "t": self.t,
            "scalar_h_part": self.scalar_h_part,
            "scalar_m_part": self.scalar_m_part,
            "scalar": self.scalar,
            "first_order_coeff": self.first_order_coeff,
            "degree4": self.degree4.to_json(),
            "kp_scalar_third": self.kp_scalar_third,
            "rho_g_sq": self.rho_g_sq,
            "rho_h_sq": self.rho_h_sq,
        }


@dataclasses.dataclass(frozen=True)
class EigenvalueBound:
    """Lower bound for the square of the eigenvalues of D^{1/3}."""

    bound: float
    omega_nonneg_certified: bool
    equality_possible: bool
    certificate: str


@dataclasses.dataclass(frozen=True)
class HEigenstructure:
    """Eigenvalues of H on the space of constant spinors."""

    eigenvalues: List[float]
    invariance_residual: float


def _frame(model: ReductiveModel) -> ReductiveModel:
    model = ensure_orthonormal(model)
    require_naturally_reductive(model)
    return model


def _check_rep(model: ReductiveModel, rep: SpinorRep) -> None:
    if rep.n != model.n:
        raise DimensionMismatchError(
            f"spinor representation of Cl({rep.n}) used with model {model.name!r} "
            f"of dim m = {model.n}"
        )


def _four_blades(n: int, coefficients: Array, factor: float) -> CliffordElement:
    """Return factor * sum_{i<j<k<l} coefficients[j, k, l, i] Z_i Z_j Z_k Z_l."""
    return CliffordElement(
        n,
        {
            (i, j, k, l): factor * coefficients[j, k, l, i]
            for i, j, k, l in itertools.combinations(range(n), 4)
        },
    )


def cubic_H(model: ReductiveModel) -> CliffordElement:  # pylint: disable=C0103
    """Return H = 3/2 sum_{i<j<k} <[Z_i, Z_j]_m, Z_k> Z_i Z_j Z_k."""
    model = _frame(model)
    brackets = model.m_bracket_coefficients()
    return CliffordElement(
        model.n,
        {
            (i, j, k): 1.5 * brackets[i, j, k]
            for i, j, k in itertools.combinations(range(model.n), 3)
        },
    )


def h_squared_grades(model: ReductiveModel) -> HSquared:
    """Return grades 0 and 4 of H^2 from the bracket data.

    The degree four part vanishes identically for n <= 4.
    """
    model = _frame(model)
    brackets = model.m_bracket_coefficients()
    grade0 = 0.375 * float(np.sum(brackets**2))
    if model.n < 5:
        return HSquared(grade0, CliffordElement.zero(model.n))
    return HSquared(grade0, _four_blades(model.n, jac_m_tensor(model), -4.5))


def casimir_lift(model: ReductiveModel, tol: float = DEFAULT_TOLERANCE) -> CliffordElement:
    """Return C_h = -1/16 sum Q_h([Z_j,Z_k],[Z_l,Z_p]) Z_j Z_k Z_l Z_p."""
    model = ensure_orthonormal(model)
    if not model.h_idx:
        return CliffordElement.zero(model.n)

    dual_form(model.Q_h, tol)
    h_part = model.h_bracket_coefficients()
    pairs = [
        CliffordElement(
            model.n,
            {(j, k): 2 * h_part[j, k, a] for j, k in itertools.combinations(range(model.n), 2)},
        )
        for a in range(len(model.h_idx))
    ]
    lift = CliffordElement.zero(model.n)
    for a, left in enumerate(pairs):
        for b, right in enumerate(pairs):
            if model.Q_h[a, b] != 0:
                lift = lift + (-model.Q_h[a, b] / 16) * (left * right)
    return lift


def casimir_lift_dual(model: ReductiveModel, tol: float = DEFAULT_TOLERANCE) -> CliffordElement:
    """Return -sum ad~(X_a) ad~(Y_a) over Q_h-dual bases of h."""
    model = ensure_orthonormal(model)
    if not model.h_idx:
        return CliffordElement.zero(model.n)

    dual = dual_form(model.Q_h, tol)
    lifts = [spin_lift(matrix) for matrix in model.isotropy_matrices()]
    lift = CliffordElement.zero(model.n)
    for a, left in enumerate(lifts):
        for b, right in enumerate(lifts):
            if dual[a, b] != 0:
                lift = lift - dual[a, b] * (left * right)
    return lift


def kp_report(model: ReductiveModel, t: float, tol: float = DEFAULT_TOLERANCE) -> KPReport:
    """Return the Kostant-Parthasarathy data of ∇^t."""
    model = _frame(model)
    brackets = model.m_bracket_coefficients()
    h_part = model.h_bracket_coefficients()
    m_norm = float(np.sum(brackets**2))
    h_norm = float(np.einsum("ija,ab,ijb->", h_part, model.Q_h, h_part)) if model.h_idx else 0.0

    coefficients = jac_h_tensor(model)
    if model.n >= 5:
        coefficients = coefficients + 9 * t**2 * jac_m_tensor(model)

    report = KPReport(
        model=model.name,
        n=model.n,
        t=float(t),
        scalar_h_part=h_norm / 8,
        scalar_m_part=0.375 * t**2 * m_norm,
        first_order_coeff=(1 - 3 * t) / 2,
        degree4=_four_blades(model.n, coefficients, -0.5),
        kp_scalar_third=h_norm / 8 + m_norm / 24,
        rho_g_sq=casimir_trace(model, "g", tol) / 24,
        rho_h_sq=casimir_trace(model, "h", tol) / 24,
    )
    logger.debug("KP scalar of %s at t=%s is %s", model.name, t, report.scalar)
    return report


def isotropy_lifts(model: ReductiveModel, rep: SpinorRep) -> List[npt.NDArray[np.complex128]]:
    """Return the spin lift of ad(h_a)|_m as matrices on spinors."""
    model = ensure_orthonormal(model)
    _check_rep(model, rep)
    return [rep.matrix(spin_lift(matrix)) for matrix in model.isotropy_matrices()]


def _common_kernel(
    matrices: List[npt.NDArray[np.complex128]], dim: int, threshold: float
) -> List[Spinor]:
    if not matrices:
        return list(np.eye(dim, dtype=complex))
    kernel = linalg.null_space(np.vstack(matrices), rcond=threshold)
    return [kernel[:, index] for index in range(kernel.shape[1])]


def constant_spinors(
    model: ReductiveModel, rep: SpinorRep, threshold: float = DEFAULT_RANK_THRESHOLD
) -> List[Spinor]:
    """Return an orthonormal basis of the spinors fixed by the lifted isotropy algebra."""
    spinors = _common_kernel(isotropy_lifts(model, rep), rep.dim_spinor, threshold)
    logger.debug("model %s has %d constant spinor(s)", model.name, len(spinors))
    return spinors


def isotropy_spin_action(
    model: ReductiveModel, rep: SpinorRep, theta: float, index: int = 0
) -> npt.NDArray[np.complex128]:
    """Return exp(theta ad~(h_index)) acting on spinors."""
    lifts = isotropy_lifts(model, rep)
    if not 0 <= index < len(lifts):
        raise DimensionMismatchError(
            f"isotropy generator {index} out of range 0..{len(lifts) - 1}"
        )
    return linalg.expm(theta * lifts[index])


def holonomy_invariant_spinors(
    model: ReductiveModel,
    rep: SpinorRep,
    conn: ConnectionMap,
    threshold: float = DEFAULT_RANK_THRESHOLD,
) -> List[Spinor]:
    """Return the spinors annihilated by the spin lift of the holonomy algebra."""
    model = ensure_orthonormal(model)
    _check_rep(model, rep)
    holonomy = holonomy_algebra(model, conn, threshold)
    lifts = [rep.matrix(spin_lift(matrix)) for matrix in holonomy.basis]
    return _common_kernel(lifts, rep.dim_spinor, threshold)


def _spinor(rep: SpinorRep, psi: npt.ArrayLike, is_constant: bool) -> Spinor:
    if not is_constant:
        raise SpinorError("non-constant spinor fields unsupported")
    spinor = np.asarray(psi, dtype=complex)
    if spinor.shape != (rep.dim_spinor,):
        raise DimensionMismatchError(
            f"spinor of shape {spinor.shape} for representation of dimension {rep.dim_spinor}"
        )
    return spinor


def spinor_covariant_derivative(  # pylint: disable=R0913
    model: ReductiveModel,
    rep: SpinorRep,
    t: float,
    z: npt.ArrayLike,
    psi: npt.ArrayLike,
    is_constant: bool = True,
    conn: Optional[ConnectionMap] = None,
) -> Spinor:
    """Return ∇_Z psi = Λ~(Z) psi of a constant spinor.

    `conn` defaults to ∇^t, any other invariant metric connection may be given.
    """
    spinor = _spinor(rep, psi, is_constant)
    model = ensure_orthonormal(model)
    _check_rep(model, rep)
    if conn is None:
        conn = lambda_t(model, t)
    return rep.matrix(spin_lift(conn(z))) @ spinor


def dirac_square_on_constant(
    model: ReductiveModel, rep: SpinorRep, t: float, psi: npt.ArrayLike, is_constant: bool = True
) -> Spinor:
    """Return (D^t)^2 psi = t^2 H^2 psi of a constant spinor."""
    spinor = _spinor(rep, psi, is_constant)
    _check_rep(model, rep)
    cubic = cubic_H(model)
    return t**2 * (rep.matrix(cubic * cubic) @ spinor)


def _positive_definite(form: Array, tol: float) -> bool:
    return bool(form.size == 0 or np.min(np.linalg.eigvalsh(form)) > tol)


def _certify_nonnegative(model: ReductiveModel, tol: float) -> str:
    """Return which sufficient condition certifies Omega_g >= 0, empty if none applies."""
    form = model.Q
    if _positive_definite(form, tol):
        return "positive_definite"

    center = model.algebra.center_basis(tol)
    derived = model.algebra.derived_basis(tol)
    if center.shape[1] + derived.shape[1] != model.dim:
        return ""
    mixed = center.T @ form @ derived
    if np.max(np.abs(mixed), initial=0.0) <= tol and _positive_definite(
        derived.T @ form @ derived, tol
    ):
        return "indefinite_on_center"
    return ""


def eigenvalue_bound(
    model: ReductiveModel, rep: Optional[SpinorRep] = None, tol: float = DEFAULT_TOLERANCE
) -> EigenvalueBound:
    """Return rho_g^2 - rho_h^2 with the certificate that the bound applies."""
    model = ensure_orthonormal(model)
    rep = rep or gamma_rep(model.n)
    certificate = _certify_nonnegative(model, tol)
    bound = (casimir_trace(model, "g", tol) - casimir_trace(model, "h", tol)) / 24
    return EigenvalueBound(
        bound=bound,
        omega_nonneg_certified=bool(certificate),
        equality_possible=bool(constant_spinors(model, rep)),
        certificate=certificate or "unknown",
    )


def d_new_operator_symbol(model: ReductiveModel) -> Dict[int, CliffordElement]:
    """Return the Clifford coefficient sum_{i,j} <[Z_i, Z_j]_m, Z_k> Z_i Z_j of Z_k(psi)."""
    model = _frame(model)
    brackets = model.m_bracket_coefficients()
    return {
        k: CliffordElement(
            model.n,
            {(i, j): 2 * brackets[i, j, k] for i, j in itertools.combinations(range(model.n), 2)},
        )
        for k in range(model.n)
    }


def h_eigenstructure(model: ReductiveModel, rep: SpinorRep) -> HEigenstructure:
    """Return the eigenvalues of H restricted to the constant spinors."""
    spinors = constant_spinors(model, rep)
    if not spinors:
        return HEigenstructure([], 0.0)

    frame = np.stack(spinors, axis=1)
    cubic = rep.matrix(cubic_H(model))
    image = cubic @ frame
    restricted = frame.conj().T @ image
    residual = float(np.max(np.abs(image - frame @ restricted)))
    eigenvalues = linalg.eigvalsh((restricted + restricted.conj().T) / 2)
    return HEigenstructure([float(value) for value in eigenvalues], residual)
