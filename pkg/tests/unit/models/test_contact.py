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
"""Tests for the contact toolkit on V_4,2."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from reductive_geom.algebra.clifford import CliffordElement, act, gamma_rep
from reductive_geom.algebra.forms import form_components
from reductive_geom.exceptions import SpinorError, WrongModelError
from reductive_geom.geometry.dirac import spinor_covariant_derivative
from reductive_geom.geometry.homogeneous import ConnectionTag, torsion_t
from reductive_geom.models.contact import (
    ContactTag,
    ContactType,
    classify_contact,
    contact_connection,
    contact_structure,
    contact_structures,
    contact_torsion,
    d_eta,
    d_fundamental_form,
    fundamental_forms,
    killing_spinor_candidates,
    killing_spinor_check,
    nijenhuis,
    reeb_form,
    require_v42,
)
from reductive_geom.models.stiefel import chavel_ziller, stiefel_jensen

S_VALUES = [0.5, 2 / 3, 1.0, 1.5]


@pytest.mark.parametrize("s", S_VALUES)
def test_contact_structures_are_metric_and_invariant(s):
    """Test phi^2 = -1 + xi (x) eta, compatibility and isotropy invariance."""
    model = stiefel_jensen(s)
    structures = contact_structures(model)

    assert [structure.tag for structure in structures] == [
        ContactTag.S,
        ContactTag.QS,
        ContactTag.STAR,
    ]
    for structure in structures:
        residuals = structure.invariant_residuals(model)
        assert set(residuals) == {"phi_squared", "compatibility", "phi_xi", "isotropy"}
        assert max(residuals.values()) < 1e-10
        assert_allclose(structure.fundamental_form(), -structure.fundamental_form().T)


def test_contact_structure_by_tag(jensen_normal):
    """Test lookup by tag value."""
    structure = contact_structure(jensen_normal, "qS")

    assert structure.tag == ContactTag.QS
    assert structure.to_dict()["tag"] == "qS"


@pytest.mark.parametrize("s", S_VALUES)
def test_d_eta(s):
    """Test d eta = -sqrt(2s) F_S."""
    model = stiefel_jensen(s)
    structure = contact_structure(model, ContactTag.S)

    assert_allclose(
        d_eta(model, structure), -math.sqrt(2 * s) * structure.fundamental_form(), atol=1e-10
    )


@pytest.mark.parametrize("s", S_VALUES)
def test_d_fundamental_forms(s):
    """Test F_S and F_qS are closed, dF_* is proportional to (Z_14 - Z_23) ^ Z_5."""
    model = stiefel_jensen(s)
    for tag in (ContactTag.S, ContactTag.QS):
        derivative = d_fundamental_form(model, contact_structure(model, tag))
        assert_allclose(derivative, 0, atol=1e-10)

    star = d_fundamental_form(model, contact_structure(model, ContactTag.STAR))
    components = form_components(star, tol=1e-9)
    assert set(components) == {(0, 3, 4), (1, 2, 4)}
    assert components[(0, 3, 4)] == pytest.approx(-components[(1, 2, 4)])


@pytest.mark.parametrize("s", S_VALUES)
def test_nijenhuis(s):
    """Test phi_S and phi_qS are normal, phi_* is not."""
    model = stiefel_jensen(s)
    for tag in (ContactTag.S, ContactTag.QS):
        assert_allclose(nijenhuis(model, contact_structure(model, tag)), 0, atol=1e-10)

    star = nijenhuis(model, contact_structure(model, ContactTag.STAR))
    assert_allclose(star, -np.transpose(star, (1, 0, 2)), atol=1e-12)
    assert abs(star[0, 2, 4]) == pytest.approx(2 * math.sqrt(2 * s))


@pytest.mark.parametrize(
    "tag, exp_type",
    [
        (ContactTag.S, ContactType.SASAKI),
        (ContactTag.QS, ContactType.QUASI_SASAKI),
        (ContactTag.STAR, ContactType.ALMOST_CONTACT),
    ],
)
@pytest.mark.parametrize("s", S_VALUES)
def test_classify_contact(s, tag, exp_type):
    """Test classification of the three structures."""
    model = stiefel_jensen(s)
    assert classify_contact(model, contact_structure(model, tag)) == exp_type


@pytest.mark.parametrize("s", S_VALUES)
def test_contact_torsion_is_canonical_torsion(s):
    """Test eta ^ d eta is the torsion of the canonical Chavel-Ziller connection."""
    expected = torsion_t(chavel_ziller(s), 0.0).components
    assert_allclose(contact_torsion(stiefel_jensen(s)).components, expected, atol=1e-10)


@pytest.mark.parametrize("s, exp_parallel", [(0.5, True), (2 / 3, False), (1.0, False)])
def test_contact_connection_parallel_spinors(s, exp_parallel):
    """Test psi+ and psi- are parallel for the contact connection only at s=1/2."""
    model = stiefel_jensen(s)
    rep = gamma_rep(5)
    conn, form = contact_connection(model)

    assert conn.tag == ConnectionTag.CONTACT
    assert conn.is_metric()
    assert form.norm() == pytest.approx(math.sqrt(2 * s))

    norms = [
        np.linalg.norm(spinor_covariant_derivative(model, rep, 0.0, direction, psi, conn=conn))
        for psi in killing_spinor_candidates(model, rep)
        for direction in np.eye(5)
    ]
    assert (max(norms) < 1e-9) == exp_parallel


@pytest.mark.parametrize("s", S_VALUES)
def test_killing_spinor_candidates(s, rep5):
    """Test (Z_5 -| T~) psi+- = +-2 Z_5 psi+-."""
    model = stiefel_jensen(s)
    plus, minus = killing_spinor_candidates(model, rep5)
    contraction = CliffordElement.blade(5, (0, 2)) + CliffordElement.blade(5, (1, 3))
    reeb = CliffordElement.generator(5, 4)

    assert np.linalg.norm(plus) == pytest.approx(1.0)
    assert abs(np.vdot(plus, minus)) < 1e-10
    assert_allclose(act(rep5, contraction, plus), 2 * act(rep5, reeb, plus), atol=1e-10)
    assert_allclose(act(rep5, contraction, minus), -2 * act(rep5, reeb, minus), atol=1e-10)


def test_killing_spinor_candidates_without_constant_spinors(cz_one, rep5):
    """Test Chavel-Ziller s != 1/2 has no candidates."""
    with pytest.raises(SpinorError, match="0 constant spinors"):
        killing_spinor_candidates(cz_one, rep5)


def test_killing_spinor_einstein(jensen_einstein, rep5):
    """Test psi+ is a Riemannian Killing spinor of the Einstein metric."""
    plus, _ = killing_spinor_candidates(jensen_einstein, rep5)
    result = killing_spinor_check(jensen_einstein, rep5, plus)

    assert result.is_killing
    assert abs(result.mu) == pytest.approx(1 / (2 * math.sqrt(3)))
    assert result.residual < 1e-9


@pytest.mark.parametrize("s", [0.5, 1.0])
def test_killing_spinor_not_einstein(s, rep5):
    """Test no Killing spinor off the Einstein metric."""
    model = stiefel_jensen(s)
    plus, _ = killing_spinor_candidates(model, rep5)

    assert not killing_spinor_check(model, rep5, plus).is_killing


def test_killing_spinor_check_zero_spinor(jensen_normal, rep5):
    """Test zero spinor is rejected."""
    with pytest.raises(SpinorError):
        killing_spinor_check(jensen_normal, rep5, np.zeros(4))


def test_fundamental_forms(jensen_normal):
    """Test forms are keyed by tag."""
    forms = fundamental_forms(jensen_normal)

    assert sorted(forms) == ["S", "qS", "star"]
    assert forms["S"][0, 2] == 1.0
    assert_allclose(reeb_form(jensen_normal), np.eye(5)[4])


@pytest.mark.parametrize("function", [contact_structures, reeb_form, contact_torsion])
def test_require_v42(su2_model, function):
    """Test contact toolkit rejects models other than V_4,2."""
    with pytest.raises(WrongModelError, match="su2"):
        function(su2_model)

    require_v42(chavel_ziller(0.25))
