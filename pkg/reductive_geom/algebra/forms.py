"""Dense antisymmetric forms on m.

An r-form is stored as an array with r axes of length n, so that
`omega[i_1, ..., i_r]` is the value on (Z_{i_1}, ..., Z_{i_r}).
"""
import itertools
import math
from typing import Dict, Iterator, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from reductive_geom.exceptions import DimensionMismatchError, FormError

Array = npt.NDArray[np.float64]


def permutation_sign(order: Sequence[int]) -> int:
    """Return the sign of a permutation given as a sequence of distinct integers."""
    inversions = sum(
        1
        for left, right in itertools.combinations(range(len(order)), 2)
        if order[left] > order[right]
    )
    return -1 if inversions % 2 else 1


def _signed_permutations(degree: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    for order in itertools.permutations(range(degree)):
        yield order, permutation_sign(order)


def antisymmetry_residual(omega: npt.ArrayLike) -> float:
    """Return max deviation from total antisymmetry."""
    array = np.asarray(omega)
    residual = 0.0
    for axis in range(array.ndim - 1):
        swapped = np.swapaxes(array, axis, axis + 1)
        residual = max(residual, float(np.max(np.abs(array + swapped), initial=0.0)))
    return residual


def is_antisymmetric(omega: npt.ArrayLike, tol: float = 1e-9) -> bool:
    """Check total antisymmetry."""
    return antisymmetry_residual(omega) <= tol


def alternation(tensor: npt.ArrayLike) -> Array:
    """Return Alt(T) = 1/r! sum_sigma sign(sigma) T o sigma."""
    array = np.asarray(tensor, dtype=float)
    if array.ndim < 2:
        return array.copy()

    total = np.zeros_like(array)
    for order, sign in _signed_permutations(array.ndim):
        total += sign * np.transpose(array, order)
    return total / math.factorial(array.ndim)


def basis_form(n: int, indices: Sequence[int], coeff: float = 1.0) -> Array:
    """Return coeff * Z_{i_1} ^ ... ^ Z_{i_r} as a dense form."""
    if len(set(indices)) != len(indices):
        return np.zeros((n,) * len(indices))
    if any(index < 0 or index >= n for index in indices):
        raise DimensionMismatchError(f"form index out of range 0..{n - 1}")

    omega = np.zeros((n,) * len(indices))
    for order, sign in _signed_permutations(len(indices)):
        omega[tuple(indices[position] for position in order)] = sign * coeff
    return omega


def wedge(alpha: npt.ArrayLike, beta: npt.ArrayLike) -> Array:
    """Return alpha ^ beta = (p+q)!/(p! q!) Alt(alpha (x) beta)."""
    left, right = np.asarray(alpha, dtype=float), np.asarray(beta, dtype=float)
    if left.ndim and right.ndim and left.shape[0] != right.shape[0]:
        raise DimensionMismatchError("forms live on spaces of different dimension")
    if left.ndim == 0 or right.ndim == 0:
        return left * right

    degree_left, degree_right = left.ndim, right.ndim
    factor = math.factorial(degree_left + degree_right) / (
        math.factorial(degree_left) * math.factorial(degree_right)
    )
    return factor * alternation(np.multiply.outer(left, right))


def interior(x: npt.ArrayLike, omega: npt.ArrayLike) -> Array:
    """Return the contraction x -| omega in the first slot."""
    array = np.asarray(omega, dtype=float)
    if array.ndim == 0:
        return np.zeros(())
    return np.tensordot(np.asarray(x, dtype=float), array, axes=(0, 0))


def require_form(omega: npt.ArrayLike, tol: float = 1e-9) -> Array:
    """Return omega as array, raise FormError if it is not totally antisymmetric."""
    array = np.asarray(omega, dtype=float)
    if array.ndim and len(set(array.shape)) != 1:
        raise FormError(f"form must have equal axis lengths, got shape {array.shape}")
    residual = antisymmetry_residual(array)
    if residual > tol:
        raise FormError(f"tensor is not antisymmetric (residual {residual:.3e})")
    return array


def form_components(omega: npt.ArrayLike, tol: float = 0.0) -> Dict[Tuple[int, ...], float]:
    """Return the components with strictly increasing indices."""
    array = np.asarray(omega, dtype=float)
    if array.ndim == 0:
        return {(): float(array)} if abs(float(array)) > tol else {}

    return {
        indices: float(array[indices])
        for indices in itertools.combinations(range(array.shape[0]), array.ndim)
        if abs(array[indices]) > tol
    }
