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

"""Command to report constant spinors and spinorial diagnostics of a model."""
from typing import Any, Dict, List

import numpy as np

from reductive_geom.algebra.clifford import Spinor, SpinorRep, gamma_rep
from reductive_geom.algebra.lie_core import (
    ReductiveModel,
    ensure_orthonormal,
    natural_reductivity_residual,
)
from reductive_geom.commands.base import BaseGeomCommand
from reductive_geom.exceptions import SpinorError
from reductive_geom.geometry.dirac import (
    constant_spinors,
    dirac_square_on_constant,
    eigenvalue_bound,
    h_eigenstructure,
    spinor_covariant_derivative,
)
from reductive_geom.geometry.string_check import StringTolerances, check_string_equations
from reductive_geom.models.contact import (
    classify_contact,
    contact_connection,
    contact_structures,
    killing_spinor_candidates,
    killing_spinor_check,
    nijenhuis,
)
from reductive_geom.models.stiefel import V42_MODELS
from reductive_geom.settings import DEFAULT_RANK_THRESHOLD, DEFAULT_TOLERANCE


def _max_derivative(
    model: ReductiveModel, rep: SpinorRep, t: float, psi: Spinor, **kwargs: Any
) -> float:
    return max(
        float(np.linalg.norm(spinor_covariant_derivative(model, rep, t, direction, psi, **kwargs)))
        for direction in np.eye(model.n)
    )


class SpinorCommand(BaseGeomCommand):
    """Spinor command."""

    def execute(  # type: ignore[override] # pylint: disable=R0913
        self,
        model: ReductiveModel,
        t: float,
        tolerance: float = DEFAULT_TOLERANCE,
        rank_threshold: float = DEFAULT_RANK_THRESHOLD,
        tolerances: StringTolerances = StringTolerances(),
        **kwargs: Any,
    ) -> Dict[str, Any]:
        """Report constant spinors, H eigenvalues and ∇^t, (D^t)^2 and string residuals."""
        model = ensure_orthonormal(model, tolerance)
        rep = gamma_rep(model.n)
        spinors = constant_spinors(model, rep, rank_threshold)
        naturally_reductive = natural_reductivity_residual(model) <= tolerance
        output: Dict[str, Any] = {
            "model": model.name,
            "params": dict(model.params),
            "n": model.n,
            "t": float(t),
            "dim_spinor": rep.dim_spinor,
            "naturally_reductive": naturally_reductive,
            "constant_spinors": spinors,
        }
        if naturally_reductive:
            output["h_eigenvalues"] = h_eigenstructure(model, rep).eigenvalues
            output["eigenvalue_bound"] = eigenvalue_bound(model, rep, tolerance)
            output["spinors"] = [
                {
                    "nabla_residual": _max_derivative(model, rep, t, psi),
                    "dirac_square": dirac_square_on_constant(model, rep, t, psi),
                    "string_equations": check_string_equations(model, rep, t, psi, tolerances),
                }
                for psi in spinors
            ]
        else:
            self.logger.info(
                "%s is not naturally reductive, ∇^t diagnostics skipped", model.name
            )

        if model.name in V42_MODELS and model.n == 5:
            output["contact"] = self.contact_diagnostics(model, rep, tolerance)
        return output

    def contact_diagnostics(
        self, model: ReductiveModel, rep: SpinorRep, tolerance: float
    ) -> Dict[str, Any]:
        """Classify the almost contact structures and test the Killing spinor candidates."""
        structures: List[Dict[str, Any]] = [
            {
                "tag": structure.tag.value,
                "type": classify_contact(model, structure, tolerance),
                "nijenhuis_norm": float(np.max(np.abs(nijenhuis(model, structure)))),
                "residuals": structure.invariant_residuals(model),
            }
            for structure in contact_structures(model)
        ]
        output: Dict[str, Any] = {"structures": structures}
        try:
            plus, minus = killing_spinor_candidates(model, rep)
        except SpinorError as error:
            self.logger.info("no Killing spinor candidates on %s: %s", model.name, error)
            output["killing_spinors"] = {"error": str(error)}
            return output

        connection, _ = contact_connection(model)
        output["killing_spinors"] = {
            label: {
                "spinor": psi,
                "killing": killing_spinor_check(model, rep, psi, tolerance),
                "contact_nabla_residual": _max_derivative(model, rep, 0.0, psi, conn=connection),
            }
            for label, psi in (("plus", plus), ("minus", minus))
        }
        return output
