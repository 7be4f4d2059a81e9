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
import numpy as np
import pytest

from reductive_geom.algebra.clifford import gamma_rep
from reductive_geom.models import build_model
from reductive_geom.models.classical import round_sphere, su2
from reductive_geom.models.stiefel import chavel_ziller, stiefel_jensen

# deformation parameters for which every builtin check must pass
CZ_PARAMETERS = [0.25, 0.5, 2 / 3, 1.0]


@pytest.fixture
def jensen_normal():
    """Return the normal metric on SO(4)/SO(2)."""
    return stiefel_jensen(0.5)


@pytest.fixture
def jensen_einstein():
    """Return the Einstein metric s=2/3 on SO(4)/SO(2)."""
    return build_model("jensen-einstein")


@pytest.fixture(params=CZ_PARAMETERS)
def cz_model(request):
    """Return the Chavel-Ziller model for every tested s."""
    return chavel_ziller(request.param)


@pytest.fixture
def cz_one():
    """Return the Ricci flat Chavel-Ziller model s=1."""
    return chavel_ziller(1.0)


@pytest.fixture
def sphere4():
    """Return the round sphere S^4."""
    return round_sphere(4)


@pytest.fixture
def su2_model():
    """Return SU(2) with its bi-invariant metric."""
    return su2()


@pytest.fixture
def rep5():
    """Return spinor representation for n=5."""
    return gamma_rep(5)


@pytest.fixture
def rep3():
    """Return spinor representation for n=3."""
    return gamma_rep(3)


@pytest.fixture
def test_config_yaml(tmp_path):
    """Return path to test configuration file."""
    path = tmp_path / "config.yaml"
    path.write_text(
        "tolerance: 1e-7\n"
        "rank_threshold: 1e-6\n"
        "string_tolerances:\n"
        "  ricci: 1e-4\n"
        "jobs: 2\n"
        "output_format: csv\n",
        encoding="UTF-8",
    )
    return path


@pytest.fixture
def su2_model_dict():
    """Return json model file content describing su(2)."""
    return {
        "name": "su2-file",
        "dim": 3,
        "h_indices": [],
        "m_indices": [0, 1, 2],
        "structure_constants": [
            {"i": 0, "j": 1, "k": 2, "c": 1.0},
            {"i": 1, "j": 2, "k": 0, "c": 1.0},
            {"i": 2, "j": 0, "k": 1, "c": 1.0},
        ],
        "metric_m": np.eye(3).tolist(),
        "Q": np.eye(3).tolist(),
        "params": {"scale": 0.5},
    }
