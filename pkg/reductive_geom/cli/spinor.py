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

"""ReductiveGeom spinor command."""
import textwrap

from reductive_geom.cli.base import ModelCMD
from reductive_geom.commands.spinor import SpinorCommand


class SpinorCMD(ModelCMD):
    """ReductiveGeom spinor command for constant spinors and Killing spinor diagnostics."""

    name = "spinor"
    help_msg = "Report constant spinors, H eigenvalues, string residuals and contact data"
    overview = textwrap.dedent(
        """
        The spinor command computes the constant spinors of a model with the
        action of ∇^t, (D^t)^2 and the string equations on them. On the Stiefel
        manifold V_4,2 it also classifies the almost contact structures and
        tests the Killing spinor candidates.

        Spinors are written as lists of [re, im] pairs.

        Example:
        $ reductive-geom spinor --builtin jensen-einstein --format text
        model: jensen
        ...
        """
    )
    command = SpinorCommand
    needs_t = True
