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

"""Builtin models addressable by name."""
import dataclasses
import logging
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from reductive_geom.algebra.lie_core import ReductiveModel
from reductive_geom.exceptions import InputError
from reductive_geom.models.classical import bi_invariant_group, round_sphere, su2
from reductive_geom.models.stiefel import chavel_ziller, isotropy_matrix, stiefel_jensen
from reductive_geom.utils import humanize_list

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ModelFamily:
    """Builtin model constructor with its named parameters."""

    name: str
    constructor: Callable[..., ReductiveModel]
    defaults: Mapping[str, float]
    integer_params: Tuple[str, ...] = ()
    description: str = ""

    def build(self, params: Optional[Mapping[str, float]] = None) -> ReductiveModel:
        """Construct the model, missing parameters take their default values."""
        params = dict(params or {})
        unknown = set(params) - set(self.defaults)
        if unknown:
            raise InputError(
                f"unknown parameter(s) {humanize_list(unknown, 'and')} for model {self.name!r}, "
                f"expected {humanize_list(self.defaults, 'or')}"
            )

        values: Dict[str, float] = {**self.defaults, **params}
        kwargs = {}
        for key, value in values.items():
            if key in self.integer_params:
                if not float(value).is_integer():
                    raise InputError(
                        f"parameter {key!r} of model {self.name!r} must be an integer"
                    )
                kwargs[key] = int(value)
            else:
                kwargs[key] = float(value)

        logger.debug("building model %s with %s", self.name, kwargs)
        return self.constructor(**kwargs)


MODEL_FAMILIES: Dict[str, ModelFamily] = {
    family.name: family
    for family in (
        ModelFamily(
            "jensen", stiefel_jensen, {"s": 0.5}, description="Jensen metrics on SO(4)/SO(2)"
        ),
        ModelFamily(
            "chavel-ziller",
            chavel_ziller,
            {"s": 0.5},
            description="Jensen metrics as (SO(4) x SO(2))/(SO(2) x SO(2))",
        ),
        ModelFamily(
            "round-sphere", round_sphere, {"n": 4}, ("n",), description="SO(n+1)/SO(n)"
        ),
        ModelFamily("su2", su2, {"scale": 1.0}, description="SU(2) with bi-invariant metric"),
    )
}

PRESETS: Dict[str, Tuple[str, Dict[str, float]]] = {
    "jensen-normal": ("jensen", {"s": 0.5}),
    "jensen-einstein": ("jensen", {"s": 2 / 3}),
}


def available_models() -> List[str]:
    """Return names of builtin families and presets."""
    return sorted(MODEL_FAMILIES) + sorted(PRESETS)


def get_family(name: str) -> ModelFamily:
    """Return builtin family by name, presets resolve to their family."""
    family_name = PRESETS[name][0] if name in PRESETS else name
    try:
        return MODEL_FAMILIES[family_name]
    except KeyError as error:
        raise InputError(
            f"unknown builtin model {name!r}, available models are "
            f"{humanize_list(available_models(), 'and')}"
        ) from error


def build_model(name: str, params: Optional[Mapping[str, float]] = None) -> ReductiveModel:
    """Construct builtin model by name, explicit params override preset values."""
    family = get_family(name)
    preset = PRESETS[name][1] if name in PRESETS else {}
    return family.build({**preset, **dict(params or {})})


__all__ = [
    "MODEL_FAMILIES",
    "PRESETS",
    "ModelFamily",
    "available_models",
    "bi_invariant_group",
    "build_model",
    "chavel_ziller",
    "get_family",
    "isotropy_matrix",
    "round_sphere",
    "stiefel_jensen",
    "su2",
]
