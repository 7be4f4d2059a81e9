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

"""Command to report connection and Dirac operator data of a model."""
from typing import Any, Dict

from reductive_geom.algebra.clifford import gamma_rep
from reductive_geom.algebra.lie_core import ReductiveModel, ensure_orthonormal
from reductive_geom.commands.base import NaturallyReductiveCommand
from reductive_geom.geometry.dirac import (
    constant_spinors,
    cubic_H,
    eigenvalue_bound,
    h_squared_grades,
    kp_report,
)
from reductive_geom.geometry.homogeneous import connection_report, ricci_torsion_identity
from reductive_geom.geometry.string_check import vanishing_theorem_flags
from reductive_geom.settings import DEFAULT_RANK_THRESHOLD, DEFAULT_TOLERANCE


class ReportCommand(NaturallyReductiveCommand):
    """Report command."""

    def execute(  # type: ignore[override]
        self,
        model: ReductiveModel,
        t: float,
        tolerance: float = DEFAULT_TOLERANCE,
        rank_threshold: float = DEFAULT_RANK_THRESHOLD,
        **kwargs: Any,
    ) -> Dict[str, Any]:
        """Collect torsion, curvature, holonomy, KP scalars and spinor summary of ∇^t."""
        model = ensure_orthonormal(model, tolerance)
        rep = gamma_rep(model.n)
        connection = connection_report(model, t, rank_threshold)
        self.logger.debug(
            "%s t=%s holonomy dimension %d", model.name, t, connection.holonomy_dimension
        )
        cubic = cubic_H(model)
        return {
            "model": model.name,
            "params": dict(model.params),
            "n": model.n,
            "t": float(t),
            "connection": connection.to_dict(),
            "ricci_torsion_identity_residual": ricci_torsion_identity(model, t),
            "cubic_H_norm": cubic.max_abs(),
            "h_squared": h_squared_grades(model).to_dict(),
            "kp": kp_report(model, t, tolerance).to_dict(),
            "constant_spinors": len(constant_spinors(model, rep, rank_threshold)),
            "eigenvalue_bound": eigenvalue_bound(model, rep, tolerance),
            "vanishing_flags": vanishing_theorem_flags(model, t, rep, tolerance),
        }
