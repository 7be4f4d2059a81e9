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

"""Exceptions."""


class ReductiveGeomError(Exception):
    """Base exception for ReductiveGeom."""


class InputError(ReductiveGeomError):
    """Invalid user input, e.g. unreadable model file or malformed flag value."""


class DimensionMismatchError(ReductiveGeomError):
    """Operands live in spaces of different dimension."""


class StructureConstantsError(ReductiveGeomError):
    """Structure constants do not define a Lie algebra of the declared shape."""


class MetricError(ReductiveGeomError):
    """Inner product on m is not symmetric positive definite."""


class DegenerateFormError(ReductiveGeomError):
    """Invariant form is degenerate where dual bases are needed."""


class NotNaturallyReductiveError(ReductiveGeomError):
    """Operation requires a naturally reductive model."""


class FormError(ReductiveGeomError):
    """Tensor is not an (invariant) antisymmetric form."""


class SpinorError(ReductiveGeomError):
    """Spinor input outside of the supported class."""


class UnsupportedDimensionError(ReductiveGeomError):
    """Requested dimension is outside of the supported range."""


class WrongModelError(ReductiveGeomError):
    """Operation is defined only for a specific family of models."""
