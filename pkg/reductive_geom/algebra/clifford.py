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

"""Clifford algebra of m and its spinor representation.

Generators Z_0, ..., Z_{n-1} satisfy Z_i Z_j + Z_j Z_i = -2 delta_ij. Blades
are strictly increasing index tuples; internally they are handled as bit masks
so the product of two blades is a xor together with a reordering sign.
"""
import dataclasses
import functools
import logging
import numbers
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt

from reductive_geom.algebra.forms import require_form
from reductive_geom.exceptions import DimensionMismatchError, FormError, UnsupportedDimensionError
from reductive_geom.settings import MAX_CLIFFORD_DIM, MIN_CLIFFORD_DIM

logger = logging.getLogger(__name__)

Blade = Tuple[int, ...]
Spinor = npt.NDArray[np.complex128]
Scalar = Union[int, float, np.floating]


def _to_mask(blade: Blade) -> int:
    mask = 0
    for index in blade:
        mask |= 1 << index
    return mask


def _to_blade(mask: int) -> Blade:
    blade = []
    index = 0
    while mask:
        if mask & 1:
            blade.append(index)
        mask >>= 1
        index += 1
    return tuple(blade)


@functools.lru_cache(maxsize=None)
def _blade_product(left: int, right: int) -> Tuple[int, int]:
    """Return (sign, mask) of the product of two blades given as masks."""
    swaps = 0
    shifted = left >> 1
    while shifted:
        swaps += bin(shifted & right).count("1")
        shifted >>= 1
    # every common generator squares to -1
    swaps += bin(left & right).count("1")
    return (-1 if swaps % 2 else 1), left ^ right


def _normalize_blade(indices: Sequence[int]) -> Tuple[int, Blade]:
    """Sort generator indices, returning the sign and the reduced blade."""
    sign, mask = 1, 0
    for index in indices:
        step_sign, mask = _blade_product(mask, 1 << index)
        sign *= step_sign
    return sign, _to_blade(mask)


@dataclasses.dataclass(frozen=True, eq=False)
class CliffordElement:
    """Element of Cl(m) as a map from blades to real coefficients."""

    n: int
    terms: Mapping[Blade, float] = dataclasses.field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate blades and drop zero coefficients."""
        if self.n < 0:
            raise DimensionMismatchError(f"invalid dimension {self.n}")

        terms: Dict[Blade, float] = {}
        for blade, coeff in dict(self.terms).items():
            blade = tuple(int(index) for index in blade)
            if any(left >= right for left, right in zip(blade, blade[1:])):
                raise ValueError(f"blade {blade} is not strictly increasing")
            if blade and (blade[0] < 0 or blade[-1] >= self.n):
                raise DimensionMismatchError(f"blade {blade} out of range for n={self.n}")
            if coeff != 0:
                terms[blade] = float(coeff)

        ordered = sorted(terms.items(), key=lambda item: (len(item[0]), item[0]))
        object.__setattr__(self, "terms", dict(ordered))

    @classmethod
    def zero(cls, n: int) -> "CliffordElement":
        """Return 0."""
        return cls(n, {})

    @classmethod
    def scalar(cls, n: int, value: float) -> "CliffordElement":
        """Return scalar element."""
        return cls(n, {(): value})

    @classmethod
    def generator(cls, n: int, index: int) -> "CliffordElement":
        """Return Z_index."""
        return cls(n, {(index,): 1.0})

    @classmethod
    def blade(cls, n: int, indices: Sequence[int], coeff: float = 1.0) -> "CliffordElement":
        """Return coeff * Z_{i_1} ... Z_{i_r} for arbitrary generator order."""
        if any(index < 0 or index >= n for index in indices):
            raise DimensionMismatchError(f"generator index out of range for n={n}")
        sign, blade = _normalize_blade(indices)
        return cls(n, {blade: sign * coeff})

    @classmethod
    def vector(cls, coeffs: npt.ArrayLike) -> "CliffordElement":
        """Return sum_i coeffs[i] Z_i."""
        values = np.asarray(coeffs, dtype=float)
        return cls(len(values), {(index,): value for index, value in enumerate(values)})

    def _check(self, other: "CliffordElement") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(
                f"clifford elements of different dimension: {self.n} and {other.n}"
            )

    def __add__(self, other: Any) -> "CliffordElement":
        if isinstance(other, numbers.Real):
            other = CliffordElement.scalar(self.n, float(other))
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for blade, coeff in other.terms.items():
            terms[blade] = terms.get(blade, 0.0) + coeff
        return CliffordElement(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.n, {blade: -coeff for blade, coeff in self.terms.items()})

    def __sub__(self, other: Any) -> "CliffordElement":
        return self + (-other)

    def __rsub__(self, other: Any) -> "CliffordElement":
        return (-self) + other

    def __mul__(self, other: Any) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            return clifford_product(self, other)
        if isinstance(other, numbers.Real):
            return CliffordElement(
                self.n, {blade: coeff * float(other) for blade, coeff in self.terms.items()}
            )
        return NotImplemented

    def __rmul__(self, other: Any) -> "CliffordElement":
        if isinstance(other, numbers.Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other: Any) -> "CliffordElement":
        if isinstance(other, numbers.Real):
            return self * (1.0 / float(other))
        return NotImplemented

    def __repr__(self) -> str:
        if not self.terms:
            return f"CliffordElement(n={self.n}, 0)"
        body = " + ".join(
            f"{coeff:.6g}" + ("*Z" + "".join(str(index + 1) for index in blade) if blade else "")
            for blade, coeff in self.terms.items()
        )
        return f"CliffordElement(n={self.n}, {body})"

    def coefficient(self, blade: Sequence[int]) -> float:
        """Return coefficient of an increasing blade."""
        return self.terms.get(tuple(blade), 0.0)

    @property
    def scalar_part(self) -> float:
        """Return the grade zero coefficient."""
        return self.coefficient(())

    def grade(self, k: int) -> "CliffordElement":
        """Return the part made of length-k blades."""
        return grade(self, k)

    def grades(self) -> List[int]:
        """Return the grades present."""
        return sorted({len(blade) for blade in self.terms})

    def max_abs(self) -> float:
        """Return the largest absolute coefficient."""
        return max((abs(coeff) for coeff in self.terms.values()), default=0.0)

    def is_zero(self, tol: float = 0.0) -> bool:
        """Check if every coefficient is within tolerance of zero."""
        return self.max_abs() <= tol

    def allclose(self, other: "CliffordElement", tol: float = 1e-9) -> bool:
        """Compare coefficientwise."""
        return (self - other).is_zero(tol)

    def chop(self, tol: float) -> "CliffordElement":
        """Drop coefficients not larger than tol."""
        return CliffordElement(
            self.n, {blade: coeff for blade, coeff in self.terms.items() if abs(coeff) > tol}
        )

    def commutator(self, other: "CliffordElement") -> "CliffordElement":
        """Return ab - ba."""
        return self * other - other * self

    def anticommutator(self, other: "CliffordElement") -> "CliffordElement":
        """Return ab + ba."""
        return self * other + other * self

    def to_json(self) -> List[Dict[str, Any]]:
        """Return list of {"blade": [...], "coeff": ...} entries."""
        return [{"blade": list(blade), "coeff": coeff} for blade, coeff in self.terms.items()]

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {"n": self.n, "terms": self.to_json()}

    @classmethod
    def from_json(cls, n: int, data: Iterable[Mapping[str, Any]]) -> "CliffordElement":
        """Build element from its json serialization."""
        element = cls.zero(n)
        for entry in data:
            element = element + cls.blade(n, list(entry["blade"]), float(entry["coeff"]))
        return element


def clifford_product(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    """Return the Clifford product ab."""
    a._check(b)  # pylint: disable=W0212
    terms: Dict[Blade, float] = {}
    for left, left_coeff in a.terms.items():
        left_mask = _to_mask(left)
        for right, right_coeff in b.terms.items():
            sign, mask = _blade_product(left_mask, _to_mask(right))
            blade = _to_blade(mask)
            terms[blade] = terms.get(blade, 0.0) + sign * left_coeff * right_coeff
    return CliffordElement(a.n, terms)


def grade(a: CliffordElement, k: int) -> CliffordElement:
    """Return the length-k blade part of a."""
    return CliffordElement(
        a.n, {blade: coeff for blade, coeff in a.terms.items() if len(blade) == k}
    )


def form_to_clifford(omega: npt.ArrayLike, n: int = 0, tol: float = 1e-9) -> CliffordElement:
    """Map an antisymmetric r-tensor on m to sum_{i_1<...<i_r} omega(Z_i...) Z_i...

    `n` is only needed for 0-forms.
    """
    array = np.asarray(omega, dtype=float)
    if array.ndim == 0:
        return CliffordElement.scalar(n, float(array))

    try:
        require_form(array, tol)
    except FormError as error:
        raise FormError(f"cannot map tensor to Clifford algebra: {error}") from error

    dim = array.shape[0]
    terms: Dict[Blade, float] = {}
    for indices in zip(*np.nonzero(array)):
        blade = tuple(int(index) for index in indices)
        if all(left < right for left, right in zip(blade, blade[1:])):
            terms[blade] = float(array[indices])
    return CliffordElement(dim, terms)


def interior_product(z: npt.ArrayLike, a: CliffordElement) -> CliffordElement:
    """Return the contraction z -| a of a vector with the form represented by a."""
    vector = np.asarray(z, dtype=float)
    if vector.shape != (a.n,):
        raise DimensionMismatchError(f"vector of dimension {vector.shape} for n={a.n}")

    terms: Dict[Blade, float] = {}
    for blade, coeff in a.terms.items():
        for position, index in enumerate(blade):
            if vector[index] == 0:
                continue
            rest = blade[:position] + blade[position + 1 :]
            sign = -1.0 if position % 2 else 1.0
            terms[rest] = terms.get(rest, 0.0) + sign * vector[index] * coeff
    return CliffordElement(a.n, terms)


def spin_lift(matrix: npt.ArrayLike, tol: float = 1e-9) -> CliffordElement:
    """Return (1/4) sum_{i,j} <A Z_i, Z_j> Z_i Z_j for a skew matrix A."""
    skew = np.asarray(matrix, dtype=float)
    if skew.ndim != 2 or skew.shape[0] != skew.shape[1]:
        raise DimensionMismatchError(f"expected square matrix, got shape {skew.shape}")
    if np.max(np.abs(skew + skew.T), initial=0.0) > tol:
        raise FormError("spin lift needs a skew-symmetric matrix")

    n = skew.shape[0]
    return CliffordElement(
        n, {(i, j): 0.5 * skew[j, i] for i in range(n) for j in range(i + 1, n)}
    )


@dataclasses.dataclass(frozen=True, eq=False)
class SpinorRep:
    """Complex gamma matrices realizing Cl(m) on the spinor module."""

    gammas: Tuple[npt.NDArray[np.complex128], ...]

    def __post_init__(self) -> None:
        """Validate matrix shapes."""
        gammas = tuple(np.array(gamma, dtype=complex) for gamma in self.gammas)
        if not gammas:
            raise DimensionMismatchError("spinor representation needs at least one generator")
        expected = 2 ** (len(gammas) // 2)
        for gamma in gammas:
            if gamma.shape != (expected, expected):
                raise DimensionMismatchError(
                    f"gamma matrices for n={len(gammas)} must be {expected}x{expected}, "
                    f"got shape {gamma.shape}"
                )
            gamma.setflags(write=False)
        object.__setattr__(self, "gammas", gammas)

    @property
    def n(self) -> int:
        """Dimension of m."""
        return len(self.gammas)

    @property
    def dim_spinor(self) -> int:
        """Dimension of the spinor module."""
        return int(self.gammas[0].shape[0])

    def blade_matrix(self, blade: Blade) -> npt.NDArray[np.complex128]:
        """Return the product of gamma matrices of a blade."""
        result = np.eye(self.dim_spinor, dtype=complex)
        for index in blade:
            result = result @ self.gammas[index]
        return result

    def matrix(self, a: CliffordElement) -> npt.NDArray[np.complex128]:
        """Return the matrix by which a acts on spinors."""
        if a.n != self.n:
            raise DimensionMismatchError(f"element of Cl({a.n}) acting on spinors of Cl({self.n})")
        result = np.zeros((self.dim_spinor, self.dim_spinor), dtype=complex)
        for blade, coeff in a.terms.items():
            result += coeff * self.blade_matrix(blade)
        return result

    def check(self) -> Dict[str, float]:
        """Return residuals of the anticommutation, skew-Hermitian and unitarity relations."""
        identity = np.eye(self.dim_spinor)
        anticommutation = 0.0
        for i, left in enumerate(self.gammas):
            for j, right in enumerate(self.gammas):
                relation = left @ right + right @ left + 2 * (i == j) * identity
                anticommutation = max(anticommutation, float(np.max(np.abs(relation))))
        skew = max(float(np.max(np.abs(gamma.conj().T + gamma))) for gamma in self.gammas)
        unitary = max(
            float(np.max(np.abs(gamma.conj().T @ gamma - identity))) for gamma in self.gammas
        )
        return {"anticommutation": anticommutation, "skew_hermitian": skew, "unitarity": unitary}

    def to_dict(self) -> Dict[str, Any]:
        """Return gamma matrices as nested [re, im] arrays."""
        return {
            "n": self.n,
            "dim_spinor": self.dim_spinor,
            "gammas": [
                np.stack([gamma.real, gamma.imag], axis=-1).tolist() for gamma in self.gammas
            ],
        }


def act(rep: SpinorRep, a: CliffordElement, psi: npt.ArrayLike) -> Spinor:
    """Return the Clifford product a . psi."""
    spinor = np.asarray(psi, dtype=complex)
    if spinor.shape != (rep.dim_spinor,):
        raise DimensionMismatchError(
            f"spinor of shape {spinor.shape} for representation of dimension {rep.dim_spinor}"
        )
    return rep.matrix(a) @ spinor


_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_IDENTITY_2 = np.eye(2, dtype=complex)


def _kron(factors: Sequence[npt.NDArray[np.complex128]]) -> npt.NDArray[np.complex128]:
    return functools.reduce(np.kron, factors, np.eye(1, dtype=complex))


@functools.lru_cache(maxsize=None)
def gamma_rep(n: int) -> SpinorRep:
    """Return the standard spinor representation of Cl(n).

    Hermitian generators are built as tensor products of Pauli matrices
    (one factor per complex dimension), the odd case adds the chirality
    operator. Multiplying by i gives skew-Hermitian unitary generators
    squaring to -1.
    """
    if not MIN_CLIFFORD_DIM <= n <= MAX_CLIFFORD_DIM:
        raise UnsupportedDimensionError(
            f"gamma matrices are supported for {MIN_CLIFFORD_DIM} <= n <= {MAX_CLIFFORD_DIM}, "
            f"got {n}"
        )

    factors = n // 2
    hermitian = []
    for position in range(factors):
        prefix = [_PAULI_Z] * position
        suffix = [_IDENTITY_2] * (factors - position - 1)
        hermitian.append(_kron(prefix + [_PAULI_X] + suffix))
        hermitian.append(_kron(prefix + [_PAULI_Y] + suffix))
    if n % 2:
        hermitian.append(_kron([_PAULI_Z] * factors))

    logger.debug("built gamma matrices for n=%d", n)
    return SpinorRep(tuple(1j * gamma for gamma in hermitian))


def reference_rep5() -> SpinorRep:
    """Return the explicit five-dimensional realization e_1, ..., e_5."""
    i = 1j
    return SpinorRep(
        (
            np.array([[0, 0, 0, i], [0, 0, i, 0], [0, i, 0, 0], [i, 0, 0, 0]]),
            np.array([[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]),
            np.array([[0, 0, -i, 0], [0, 0, 0, i], [-i, 0, 0, 0], [0, i, 0, 0]]),
            np.array([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
            np.diag([i, i, -i, -i]),
        )
    )
