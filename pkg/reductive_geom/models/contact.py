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

"""Metric almost contact structures and spinors on V_{4,2}."""
import dataclasses
import enum
import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import numpy.typing as npt
from scipy import linalg

from reductive_geom.algebra.clifford import CliffordElement, Spinor, SpinorRep, spin_lift
from reductive_geom.algebra.forms import basis_form, wedge
from reductive_geom.algebra.lie_core import Array, ReductiveModel
from reductive_geom.exceptions import SpinorError, WrongModelError
from reductive_geom.geometry.dirac import constant_spinors
from reductive_geom.geometry.homogeneous import (
    ConnectionMap,
    ConnectionTag,
    TorsionForm,
    exterior_derivative,
    levi_civita_map,
)
from reductive_geom.models.stiefel import V42_MODELS
from reductive_geom.settings import DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)

REEB_INDEX = 4


class ContactTag(str, enum.Enum):
    """Name of a structure."""

    S = "S"
    QS = "qS"
    STAR = "star"


class ContactType(str, enum.Enum):
    """Classification of a metric almost contact structure."""

    SASAKI = "sasaki"
    QUASI_SASAKI = "quasi-sasaki"
    NORMAL = "normal"
    ALMOST_CONTACT = "almost-contact"


_PHI = {
    ContactTag.S: [
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [-1, 0, 0, 0, 0],
        [0, -1, 0, 0, 0],
        [0, 0, 0, 0, 0],
    ],
    ContactTag.QS: [
        [0, 1, 0, 0, 0],
        [-1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, -1, 0, 0],
        [0, 0, 0, 0, 0],
    ],
    ContactTag.STAR: [
        [0, 1, 0, 0, 0],
        [-1, 0, 0, 0, 0],
        [0, 0, 0, -1, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0],
    ],
}


@dataclasses.dataclass(frozen=True, eq=False)
class ContactStructure:
    """Metric almost contact structure (phi, xi, eta) on m."""

    phi: Array
    xi: Array
    eta: Array
    tag: ContactTag

    def fundamental_form(self) -> Array:
        """Return F(X, Y) = <X, phi Y>."""
        return np.array(self.phi, dtype=float)

    def invariant_residuals(self, model: ReductiveModel) -> Dict[str, float]:
        """Return residuals of the compatibility conditions and of isotropy invariance."""
        phi, xi, eta = self.phi, self.xi, self.eta
        identity = np.eye(len(xi))
        commutators = [
            float(np.max(np.abs(matrix @ phi - phi @ matrix)))
            for matrix in model.isotropy_matrices()
        ]
        return {
            "phi_squared": float(np.max(np.abs(phi @ phi + identity - np.outer(xi, eta)))),
            "compatibility": float(
                np.max(np.abs(phi.T @ model.metric_m @ phi - model.metric_m + np.outer(eta, eta)))
            ),
            "phi_xi": float(np.max(np.abs(phi @ xi))),
            "isotropy": max(commutators, default=0.0),
        }

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {"tag": self.tag.value, "phi": self.phi.tolist(), "xi": self.xi.tolist()}


@dataclasses.dataclass(frozen=True)
class KillingSpinorResult:
    """Outcome of the Riemannian Killing spinor test."""

    is_killing: bool
    mu: Optional[complex]
    residual: float


def require_v42(model: ReductiveModel) -> None:
    """Raise WrongModelError unless model is a V_{4,2} model."""
    if model.name not in V42_MODELS or model.n != 5:
        raise WrongModelError(
            f"operation is defined only for V_4,2 models {V42_MODELS}, got {model.name!r}"
        )


def contact_structures(model: ReductiveModel) -> List[ContactStructure]:
    """Return the structures phi_S, phi_qS and phi_* with Reeb field Z_5."""
    require_v42(model)
    reeb = np.eye(model.n)[REEB_INDEX]
    return [
        ContactStructure(np.array(matrix, dtype=float), reeb, reeb, tag)
        for tag, matrix in _PHI.items()
    ]


def contact_structure(model: ReductiveModel, tag: ContactTag) -> ContactStructure:
    """Return one of the structures by tag."""
    for structure in contact_structures(model):
        if structure.tag == ContactTag(tag):
            return structure

    raise KeyError(tag)  # pragma: no cover


def d_eta(model: ReductiveModel, structure: ContactStructure) -> Array:
    """Return the exterior derivative of the contact form."""
    return exterior_derivative(model, levi_civita_map(model), structure.eta)


def d_fundamental_form(model: ReductiveModel, structure: ContactStructure) -> Array:
    """Return dF."""
    return exterior_derivative(model, levi_civita_map(model), structure.fundamental_form())


def nijenhuis(model: ReductiveModel, structure: ContactStructure) -> Array:
    """Return N[x, y, k], the Z_k coefficient of N(Z_x, Z_y).

    N(X,Y) = [phi X, phi Y] + phi^2 [X,Y] - phi[phi X, Y] - phi[X, phi Y] + d eta(X,Y) xi

    where brackets are the m-parts of the Lie algebra bracket, the convention
    for which d eta(X, Y) = -eta([X, Y]_m).
    """
    require_v42(model)
    brackets = model.m_bracket_coefficients()
    phi = structure.phi

    def bracket(left: Array, right: Array) -> Array:
        # columns of left and right are vectors, result[x, y, k]
        return np.einsum("ix,jy,ijk->xyk", left, right, brackets)

    identity = np.eye(model.n)
    plain = bracket(identity, identity)
    tensor = (
        bracket(phi, phi)
        + np.einsum("kl,xyl->xyk", phi @ phi, plain)
        - np.einsum("kl,xyl->xyk", phi, bracket(phi, identity))
        - np.einsum("kl,xyl->xyk", phi, bracket(identity, phi))
        + np.einsum("xy,k->xyk", d_eta(model, structure), structure.xi)
    )
    return tensor


def classify_contact(
    model: ReductiveModel, structure: ContactStructure, tol: float = DEFAULT_TOLERANCE
) -> ContactType:
    """Classify a structure as Sasaki, quasi-Sasaki, normal or only almost contact."""
    if np.max(np.abs(nijenhuis(model, structure))) > tol:
        return ContactType.ALMOST_CONTACT

    derivative = d_eta(model, structure)
    form = structure.fundamental_form()
    scale = np.vdot(form, derivative) / np.vdot(form, form)
    if abs(scale) > tol and np.max(np.abs(derivative - scale * form)) <= tol:
        return ContactType.SASAKI
    if np.max(np.abs(d_fundamental_form(model, structure))) <= tol:
        return ContactType.QUASI_SASAKI
    return ContactType.NORMAL


def contact_torsion(model: ReductiveModel) -> TorsionForm:
    """Return T = eta ^ d eta of the Sasaki structure."""
    structure = contact_structure(model, ContactTag.S)
    return TorsionForm(wedge(structure.eta, d_eta(model, structure)))


def contact_connection(model: ReductiveModel) -> Tuple[ConnectionMap, TorsionForm]:
    """Return the almost contact connection ∇ = ∇^LC + 1/2 T with T = eta ^ d eta."""
    require_v42(model)
    form = contact_torsion(model)
    levi_civita = levi_civita_map(model)
    correction = 0.5 * np.transpose(form.components, (0, 2, 1))
    return ConnectionMap(levi_civita.lam + correction, ConnectionTag.CONTACT), form


def _reeb_operator(model: ReductiveModel, rep: SpinorRep) -> npt.NDArray[np.complex128]:
    """Return the matrix of -Z_5 (Z_5 -| T~) with T~ = (Z_1^Z_3 + Z_2^Z_4)^Z_5."""
    n = model.n
    contraction = CliffordElement.blade(n, (0, 2)) + CliffordElement.blade(n, (1, 3))
    return -rep.matrix(CliffordElement.generator(n, REEB_INDEX) * contraction)


def killing_spinor_candidates(
    model: ReductiveModel, rep: SpinorRep
) -> Tuple[Spinor, Spinor]:
    """Return constant spinors psi+ and psi- with (Z_5 -| T~) psi = +-2 Z_5 psi."""
    require_v42(model)
    spinors = constant_spinors(model, rep)
    if len(spinors) != 2:
        raise SpinorError(
            f"model {model.name!r} has {len(spinors)} constant spinors, expected 2"
        )

    frame = np.stack(spinors, axis=1)
    restricted = frame.conj().T @ _reeb_operator(model, rep) @ frame
    _, vectors = linalg.eigh((restricted + restricted.conj().T) / 2)
    minus, plus = frame @ vectors[:, 0], frame @ vectors[:, 1]
    return plus, minus


def killing_spinor_check(
    model: ReductiveModel, rep: SpinorRep, psi: npt.ArrayLike, tol: float = DEFAULT_TOLERANCE
) -> KillingSpinorResult:
    """Test ∇^LC_{Z_i} psi = mu Z_i psi with one mu fitted along Z_5."""
    require_v42(model)
    spinor = np.asarray(psi, dtype=complex)
    if not np.any(np.abs(spinor) > tol):
        raise SpinorError("Killing spinor test needs a non-zero spinor")

    levi_civita = levi_civita_map(model)
    basis = np.eye(model.n)
    derivatives = [rep.matrix(spin_lift(levi_civita(vector))) @ spinor for vector in basis]
    products = [
        rep.matrix(CliffordElement.generator(model.n, index)) @ spinor for index in range(model.n)
    ]

    reeb = products[REEB_INDEX]
    mu = complex(np.vdot(reeb, derivatives[REEB_INDEX]) / np.vdot(reeb, reeb))
    residual = max(
        float(np.max(np.abs(derivative - mu * product)))
        for derivative, product in zip(derivatives, products)
    )
    logger.debug("Killing spinor fit on %s: mu=%s residual=%.3e", model.name, mu, residual)
    return KillingSpinorResult(residual <= tol, mu, residual)


def fundamental_forms(model: ReductiveModel) -> Dict[str, Array]:
    """Return the fundamental forms keyed by tag value."""
    return {
        structure.tag.value: structure.fundamental_form()
        for structure in contact_structures(model)
    }


def reeb_form(model: ReductiveModel) -> Array:
    """Return the 1-form eta = Z_5."""
    require_v42(model)
    return basis_form(model.n, (REEB_INDEX,))
