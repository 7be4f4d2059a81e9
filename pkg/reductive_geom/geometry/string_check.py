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

"""String equations with constant dilaton for the family ∇^t.

    Ric^t = 0,  δT^t = 0,  ∇^t psi = 0,  T^t . psi = 0

Only constant spinors are evaluated.
"""
import asyncio
import dataclasses
import itertools
import logging
import math
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

import numpy as np
import numpy.typing as npt

from reductive_geom.algebra.clifford import SpinorRep, form_to_clifford, gamma_rep
from reductive_geom.algebra.forms import interior
from reductive_geom.algebra.lie_core import ReductiveModel, ensure_orthonormal
from reductive_geom.assignment import runner
from reductive_geom.exceptions import ReductiveGeomError, SpinorError
from reductive_geom.geometry.dirac import (
    constant_spinors,
    eigenvalue_bound,
    spinor_covariant_derivative,
)
from reductive_geom.geometry.homogeneous import d_torsion, delta_torsion, ricci, scal, torsion_t
from reductive_geom.settings import DEFAULT_STRING_TOLERANCE, DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)

EQUATIONS = ("ricci", "delta_torsion", "nabla_spinor", "torsion_spinor")


@dataclasses.dataclass(frozen=True)
class StringTolerances:
    """Pass/fail tolerance per string equation."""

    ricci: float = DEFAULT_STRING_TOLERANCE
    delta_torsion: float = DEFAULT_STRING_TOLERANCE
    nabla_spinor: float = DEFAULT_STRING_TOLERANCE
    torsion_spinor: float = DEFAULT_STRING_TOLERANCE

    @classmethod
    def uniform(cls, tol: float) -> "StringTolerances":
        """Return the same tolerance for every equation."""
        return cls(tol, tol, tol, tol)


@dataclasses.dataclass(frozen=True)
class StringEqResiduals:
    """Residuals of the four string equations at one (model, t, psi)."""

    ricci_norm: float
    delta_T_norm: float  # pylint: disable=C0103
    nabla_psi_norm: Optional[float]
    T_psi_norm: Optional[float]  # pylint: disable=C0103
    flags: Dict[str, bool]

    @property
    def passed(self) -> bool:
        """Return True if all four equations hold."""
        return all(self.flags.get(name, False) for name in EQUATIONS)


@dataclasses.dataclass(frozen=True)
class NoGoVerdict:
    """Consistency of residuals with the compact no-go theorem."""

    consistent: bool
    torsion_norm: float
    detail: str = ""


@dataclasses.dataclass(frozen=True)
class VanishingFlag:
    """Structural statement implied by the model data."""

    name: str
    fired: bool
    detail: str


@dataclasses.dataclass(frozen=True)
class DTKernelResult:
    """Residuals |(Z_i -| dT^0) . psi| per basis direction."""

    residuals: List[float]
    max_residual: float
    preconditions_met: bool


@dataclasses.dataclass(frozen=True)
class ScanRow:  # pylint: disable=R0902
    """Minimal residuals over the constant spinors at one grid point.

    Each residual is minimized on its own, so the four minima may come from
    different spinors. `joint_residual` is the minimum over the spinors of
    the largest residual of one spinor, `joint_passed` is set when a single
    spinor solves all four equations.
    """

    params: Dict[str, float]
    t: float
    constant_spinor_count: int
    residuals: Optional[StringEqResiduals]
    consistent: bool = True
    error: str = ""
    joint_residual: Optional[float] = None
    joint_passed: bool = False

    def to_dict(self) -> Dict[str, Any]:
        """Return flat serializable representation."""
        residuals = self.residuals
        flags = residuals.flags if residuals else {}
        return {
            **self.params,
            "t": self.t,
            "ricci_norm": residuals.ricci_norm if residuals else None,
            "delta_T_norm": residuals.delta_T_norm if residuals else None,
            "nabla_psi_norm": residuals.nabla_psi_norm if residuals else None,
            "T_psi_norm": residuals.T_psi_norm if residuals else None,
            **{f"{name}_passed": flags.get(name, False) for name in EQUATIONS},
            "all_passed": residuals.passed if residuals else False,
            "joint_residual": self.joint_residual,
            "joint_passed": self.joint_passed,
            "constant_spinors": self.constant_spinor_count,
            "consistent": self.consistent,
            "error": self.error,
        }


@dataclasses.dataclass(frozen=True)
class ScanReport:
    """Grid of string equation residuals in grid order."""

    family: str
    rows: List[ScanRow]

    @property
    def constructed(self) -> int:
        """Return number of points whose model could be built."""
        return sum(1 for row in self.rows if row.residuals is not None)

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {"family": self.family, "rows": [row.to_dict() for row in self.rows]}


def _tolerances(tol: Any) -> StringTolerances:
    if isinstance(tol, StringTolerances):
        return tol
    return StringTolerances.uniform(float(tol))


def _flags(values: Mapping[str, Optional[float]], tolerances: StringTolerances) -> Dict[str, bool]:
    return {
        name: values[name] is not None and values[name] < getattr(tolerances, name)  # type: ignore
        for name in EQUATIONS
    }


def _unit(psi: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    spinor = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(spinor)
    if norm == 0:
        raise SpinorError("string equations need a non-zero spinor")
    return spinor / norm


def _spinor_residuals(
    model: ReductiveModel, rep: SpinorRep, t: float, psi: npt.ArrayLike
) -> Dict[str, float]:
    spinor = _unit(psi)
    derivatives = [
        spinor_covariant_derivative(model, rep, t, direction, spinor)
        for direction in np.eye(model.n)
    ]
    torsion_element = form_to_clifford(torsion_t(model, t).components)
    return {
        "nabla_spinor": max(float(np.linalg.norm(vector)) for vector in derivatives),
        "torsion_spinor": float(np.linalg.norm(rep.matrix(torsion_element) @ spinor)),
    }


def _residuals_of(
    values: Mapping[str, float], tolerances: StringTolerances
) -> StringEqResiduals:
    return StringEqResiduals(
        values["ricci"],
        values["delta_torsion"],
        values["nabla_spinor"],
        values["torsion_spinor"],
        _flags(values, tolerances),
    )


def _largest_residual(residuals: StringEqResiduals) -> float:
    return max(
        residuals.ricci_norm,
        residuals.delta_T_norm,
        residuals.nabla_psi_norm or 0.0,
        residuals.T_psi_norm or 0.0,
    )


def _field_residuals(model: ReductiveModel, t: float) -> Dict[str, float]:
    return {
        "ricci": float(np.max(np.abs(ricci(model, t).matrix))),
        "delta_torsion": float(np.max(np.abs(delta_torsion(model, t)), initial=0.0)),
    }


def check_string_equations(  # pylint: disable=R0913
    model: ReductiveModel,
    rep: SpinorRep,
    t: float,
    psi: npt.ArrayLike,
    tol: Any = DEFAULT_STRING_TOLERANCE,
    is_constant: bool = True,
) -> StringEqResiduals:
    """Return residuals of the string equations for a constant spinor.

    The spinor is normalized to unit length, spinor residuals are Euclidean
    norms, field residuals are maximal absolute entries.
    """
    if not is_constant:
        raise SpinorError("non-constant spinor fields unsupported")

    model = ensure_orthonormal(model)
    values: Dict[str, Optional[float]] = {
        **_field_residuals(model, t),
        **_spinor_residuals(model, rep, t, psi),
    }
    return StringEqResiduals(
        ricci_norm=values["ricci"],  # type: ignore
        delta_T_norm=values["delta_torsion"],  # type: ignore
        nabla_psi_norm=values["nabla_spinor"],
        T_psi_norm=values["torsion_spinor"],
        flags=_flags(values, _tolerances(tol)),
    )


def no_go_audit(
    results: StringEqResiduals, model: ReductiveModel, t: float, tol: float = DEFAULT_TOLERANCE
) -> NoGoVerdict:
    """Check that a full solution of the equations has vanishing torsion.

    A violation can only come from an implementation error.
    """
    torsion_norm = torsion_t(model, t).norm()
    if results.passed and torsion_norm >= tol:
        logger.error(
            "no-go audit failed on %s at t=%s: all equations pass with torsion %.3e",
            model.name,
            t,
            torsion_norm,
        )
        return NoGoVerdict(
            False, torsion_norm, "all string equations pass but the torsion does not vanish"
        )
    return NoGoVerdict(True, torsion_norm)


def _fixed_vectors(model: ReductiveModel, tol: float) -> int:
    matrices = model.isotropy_matrices()
    if not len(matrices):
        return model.n
    stacked = np.vstack(list(matrices))
    return int(model.n - np.linalg.matrix_rank(stacked, tol=tol))


def vanishing_theorem_flags(
    model: ReductiveModel,
    t: float,
    rep: Optional[SpinorRep] = None,
    tol: float = DEFAULT_TOLERANCE,
) -> List[VanishingFlag]:
    """Return the structural consequences of the vanishing theorems for the model."""
    model = ensure_orthonormal(model)
    bound = eigenvalue_bound(model, rep, tol)
    levi_civita = math.isclose(t, 0.5)
    flags = [
        VanishingFlag(
            "omega_nonneg",
            bound.omega_nonneg_certified and not levi_civita,
            f"Casimir non-negativity certificate {bound.certificate!r}: spinor equations "
            "nabla psi = 0 and T psi = 0 have no common solution for t != 1/2",
        )
    ]

    fixed = _fixed_vectors(model, tol)
    flags.append(
        VanishingFlag(
            "isotropy_fixed_vectors",
            fixed > 0,
            f"{fixed} isotropy fixed direction(s): Ric^t = 0 is only possible for t in {{0, 1}}",
        )
    )

    scal0 = scal(model, 0.0)
    smallest = float(np.min(np.linalg.eigvalsh(model.Q_h))) if model.h_idx else 0.0
    flags.append(
        VanishingFlag(
            "scal0_zero",
            abs(scal0) <= tol,
            f"Scal^0 = {scal0:.6g}: h must be non-simple and the metric non-normal, "
            f"smallest eigenvalue of Q_h is {smallest:.6g}",
        )
    )
    return flags


def dT_kernel_check(  # pylint: disable=C0103
    model: ReductiveModel,
    rep: SpinorRep,
    psi: npt.ArrayLike,
    t: float = 0.0,
    tol: float = DEFAULT_TOLERANCE,
) -> DTKernelResult:
    """Return |(X -| dT^t) . psi| for every basis vector X."""
    model = ensure_orthonormal(model)
    spinor = _unit(psi)
    ricci_norm = float(np.max(np.abs(ricci(model, t).matrix)))
    derivative_norm = max(
        float(np.linalg.norm(spinor_covariant_derivative(model, rep, t, direction, spinor)))
        for direction in np.eye(model.n)
    )
    preconditions = ricci_norm <= tol and derivative_norm <= tol
    if not preconditions:
        logger.warning(
            "dT kernel check on %s without Ric = 0 and parallel spinor "
            "(|Ric| %.3e, |∇psi| %.3e)",
            model.name,
            ricci_norm,
            derivative_norm,
        )

    form = d_torsion(model, t)
    residuals = [
        float(np.linalg.norm(rep.matrix(form_to_clifford(interior(direction, form))) @ spinor))
        for direction in np.eye(model.n)
    ]
    return DTKernelResult(residuals, max(residuals), preconditions)


def evaluate_point(  # pylint: disable=R0913
    build: Callable[[Dict[str, float]], ReductiveModel],
    params: Dict[str, float],
    t: float,
    rep: Optional[SpinorRep] = None,
    tol: Any = DEFAULT_STRING_TOLERANCE,
) -> ScanRow:
    """Return the minimal residuals over the constant spinor basis at one grid point."""
    try:
        model = ensure_orthonormal(build(params))
        representation = rep or gamma_rep(model.n)
        spinors = constant_spinors(model, representation)
        fields = _field_residuals(model, t)
        per_spinor = [_spinor_residuals(model, representation, t, spinor) for spinor in spinors]
    except ReductiveGeomError as error:
        logger.warning("grid point %s t=%s failed: %s", params, t, error)
        return ScanRow(dict(params), t, 0, None, error=str(error))

    tolerances = _tolerances(tol)
    if not spinors:
        values: Dict[str, Optional[float]] = {
            **fields,
            "nabla_spinor": None,
            "torsion_spinor": None,
        }
        residuals = StringEqResiduals(
            fields["ricci"], fields["delta_torsion"], None, None, _flags(values, tolerances)
        )
        return ScanRow(dict(params), t, 0, residuals, error="no constant spinors")

    values = {
        **fields,
        "nabla_spinor": min(item["nabla_spinor"] for item in per_spinor),
        "torsion_spinor": min(item["torsion_spinor"] for item in per_spinor),
    }
    residuals = StringEqResiduals(
        values["ricci"],  # type: ignore
        values["delta_torsion"],  # type: ignore
        values["nabla_spinor"],
        values["torsion_spinor"],
        _flags(values, tolerances),
    )

    joint = [_residuals_of({**fields, **item}, tolerances) for item in per_spinor]
    joint_residual = min(_largest_residual(item) for item in joint)
    # audit a spinor solving every equation, else the one closest to it
    best = next(
        (item for item in joint if item.passed),
        min(joint, key=_largest_residual),
    )
    if residuals.passed and not best.passed:
        logger.debug(
            "%s t=%s: every equation holds for some spinor, none holds for all",
            params,
            t,
        )
    verdict = no_go_audit(best, model, t)
    return ScanRow(
        dict(params),
        t,
        len(spinors),
        residuals,
        verdict.consistent,
        joint_residual=joint_residual,
        joint_passed=best.passed,
    )


def grid_points(
    t_grid: Sequence[float], param_grid: Mapping[str, Sequence[float]]
) -> List[Dict[str, Any]]:
    """Return grid points in lexicographic grid order, parameters outermost."""
    names = list(param_grid)
    return [
        {"params": dict(zip(names, values)), "t": float(t)}
        for values in itertools.product(*(param_grid[name] for name in names))
        for t in t_grid
    ]


def scan(  # pylint: disable=R0913
    family: str,
    build: Callable[[Dict[str, float]], ReductiveModel],
    t_grid: Sequence[float],
    param_grid: Mapping[str, Sequence[float]],
    rep: Optional[SpinorRep] = None,
    tol: Any = DEFAULT_STRING_TOLERANCE,
    jobs: int = 1,
) -> ScanReport:
    """Evaluate the string equations on every point of the grid."""
    points = grid_points(t_grid, param_grid)

    def evaluate(point: Dict[str, Any]) -> ScanRow:
        return evaluate_point(build, point["params"], point["t"], rep, tol)

    rows = asyncio.run(runner.run(points, evaluate, jobs)) if points else []
    logger.info("scanned %d point(s) of %s", len(rows), family)
    return ScanReport(family, rows)
