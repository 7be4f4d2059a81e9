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

"""Structure-constant Lie algebra arithmetic and reductive decompositions.

A Lie algebra g is stored by its structure constants in a fixed basis
e_0, ..., e_{dim-1}; vectors of g are numpy arrays in that basis. A reductive
model additionally records which basis vectors span the isotropy algebra h and
the complement m, an inner product on m and the Ad-invariant extension Q.
"""
import dataclasses
import enum
import logging
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt
from scipy import linalg

from reductive_geom.exceptions import (
    DegenerateFormError,
    DimensionMismatchError,
    FormError,
    MetricError,
    NotNaturallyReductiveError,
    StructureConstantsError,
)
from reductive_geom.settings import DEFAULT_TOLERANCE

logger = logging.getLogger(__name__)

Array = npt.NDArray[np.float64]

PARTS = ("h", "m")


def _frozen(array: Any, dtype: Any = float) -> Array:
    """Return read-only copy of array."""
    value = np.array(array, dtype=dtype)
    value.setflags(write=False)
    return value


def _param_value(value: Any) -> Union[int, float]:
    # integer parameters such as a sphere dimension stay int
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return int(value)
    return float(value)


@dataclasses.dataclass(frozen=True, eq=False)
class LieAlgebraData:
    """Lie algebra given by structure constants.

    `c[i, j, k]` is the coefficient of e_k in [e_i, e_j].
    """

    c: Array

    def __post_init__(self) -> None:
        """Validate shape of structure constants."""
        c = np.asarray(self.c, dtype=float)
        if c.ndim != 3 or len(set(c.shape)) != 1 or c.shape[0] == 0:
            raise StructureConstantsError(
                f"structure constants must be a non-empty (d, d, d) array, got shape {c.shape}"
            )
        object.__setattr__(self, "c", _frozen(c))

    @property
    def dim(self) -> int:
        """Dimension of the algebra."""
        return int(self.c.shape[0])

    @classmethod
    def from_matrices(
        cls, basis: Sequence[npt.ArrayLike], tol: float = DEFAULT_TOLERANCE
    ) -> "LieAlgebraData":
        """Compute structure constants of a matrix Lie algebra.

        Every commutator of two basis matrices is decomposed in the basis by
        least squares. A commutator outside of the span means the matrices do
        not close under the bracket.
        """
        matrices = [np.asarray(matrix, dtype=float) for matrix in basis]
        dim = len(matrices)
        flat = np.stack([matrix.ravel() for matrix in matrices], axis=1)
        if np.linalg.matrix_rank(flat) < dim:
            raise StructureConstantsError("basis matrices are linearly dependent")

        commutators = np.stack(
            [
                (matrices[i] @ matrices[j] - matrices[j] @ matrices[i]).ravel()
                for i in range(dim)
                for j in range(dim)
            ],
            axis=1,
        )
        coefficients, *_ = np.linalg.lstsq(flat, commutators, rcond=None)
        residual = np.max(np.abs(flat @ coefficients - commutators), initial=0.0)
        if residual > tol * max(1.0, np.max(np.abs(commutators), initial=0.0)):
            raise StructureConstantsError(
                f"basis matrices are not closed under the bracket (residual {residual:.3e})"
            )

        return cls(coefficients.T.reshape(dim, dim, dim))

    def _check_vector(self, value: npt.ArrayLike) -> Array:
        vector = np.asarray(value, dtype=float)
        if vector.shape != (self.dim,):
            raise DimensionMismatchError(
                f"expected vector of dimension {self.dim}, got shape {vector.shape}"
            )
        return vector

    def bracket(self, x: npt.ArrayLike, y: npt.ArrayLike) -> Array:
        """Return [x, y]."""
        return np.einsum("i,j,ijk->k", self._check_vector(x), self._check_vector(y), self.c)

    def ad(self, x: npt.ArrayLike) -> Array:
        """Return matrix of ad(x) acting on column vectors."""
        return np.einsum("i,ijk->kj", self._check_vector(x), self.c)

    def ad_matrices(self) -> Array:
        """Return ad(e_i) for every basis vector, stacked along the first axis."""
        return np.transpose(self.c, (0, 2, 1))

    def killing_form(self) -> Array:
        """Return tr(ad e_a ad e_b)."""
        ads = self.ad_matrices()
        return np.einsum("akj,bjk->ab", ads, ads)

    def antisymmetry_residual(self) -> float:
        """Return max |c[i,j,k] + c[j,i,k]|."""
        return float(np.max(np.abs(self.c + np.transpose(self.c, (1, 0, 2)))))

    def jacobi_residual(self) -> float:
        """Return max violation of the Jacobi identity over basis triples."""
        # nested[i, j, k, l]: coefficient of e_l in [[e_i, e_j], e_k]
        nested = np.einsum("ijm,mkl->ijkl", self.c, self.c)
        cyclic = (
            nested
            + np.einsum("jkil->ijkl", nested)
            + np.einsum("kijl->ijkl", nested)
        )
        return float(np.max(np.abs(cyclic)))

    def change_basis(self, transform: npt.ArrayLike) -> "LieAlgebraData":
        """Return structure constants in the basis given by the columns of `transform`."""
        matrix = np.asarray(transform, dtype=float)
        if matrix.shape != (self.dim, self.dim):
            raise DimensionMismatchError(
                f"basis change must be {self.dim}x{self.dim}, got shape {matrix.shape}"
            )
        try:
            inverse = linalg.inv(matrix)
        except linalg.LinAlgError as error:
            raise StructureConstantsError("basis change is not invertible") from error

        return LieAlgebraData(np.einsum("ia,jb,ijk,ck->abc", matrix, matrix, self.c, inverse))

    def center_basis(self, tol: float = DEFAULT_TOLERANCE) -> Array:
        """Return basis of the center as columns."""
        return linalg.null_space(self.c.reshape(self.dim, -1).T, rcond=tol)

    def derived_basis(self, tol: float = DEFAULT_TOLERANCE) -> Array:
        """Return basis of [g, g] as columns."""
        brackets = self.c.reshape(-1, self.dim).T
        if not np.any(np.abs(brackets) > tol):
            return np.zeros((self.dim, 0))
        return linalg.orth(brackets, rcond=tol)


class FormRole(str, enum.Enum):
    """Role of a bilinear form on m."""

    KILLING_BETA = "killing_beta"
    CASIMIR_A = "casimir_A"
    RICCI = "ricci"
    GENERIC = "generic"


@dataclasses.dataclass(frozen=True, eq=False)
class BilinearFormOnM:
    """Symmetric bilinear form on m, indexed by the m-basis."""

    matrix: Array
    role: FormRole = FormRole.GENERIC

    def __post_init__(self) -> None:
        """Validate symmetry."""
        matrix = np.asarray(self.matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f"bilinear form must be square, got {matrix.shape}")
        scale = max(1.0, float(np.max(np.abs(matrix), initial=0.0)))
        if np.max(np.abs(matrix - matrix.T), initial=0.0) > 1e-8 * scale:
            raise FormError(f"{self.role.value} form is not symmetric")
        object.__setattr__(self, "matrix", _frozen((matrix + matrix.T) / 2))

    def __call__(self, x: npt.ArrayLike, y: npt.ArrayLike) -> float:
        """Evaluate the form."""
        return float(np.asarray(x) @ self.matrix @ np.asarray(y))

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {"role": self.role.value, "matrix": self.matrix.tolist()}


@dataclasses.dataclass(frozen=True, eq=False)
class ReductiveModel:  # pylint: disable=R0902
    """Reductive decomposition g = h + m with an inner product on m.

    `Q` is the symmetric Ad-invariant extension to g of the inner product,
    it is validated by `validate` and never solved for.
    """

    algebra: LieAlgebraData
    h_idx: Tuple[int, ...]
    m_idx: Tuple[int, ...]
    metric_m: Array
    Q: Array
    name: str = "custom"
    params: Mapping[str, Union[int, float]] = dataclasses.field(default_factory=dict)

    def __post_init__(self) -> None:
        """Normalize fields and check dimensions."""
        h_idx = tuple(int(index) for index in self.h_idx)
        m_idx = tuple(int(index) for index in self.m_idx)
        dim = self.algebra.dim
        if any(index < 0 or index >= dim for index in h_idx + m_idx):
            raise DimensionMismatchError(f"basis index out of range 0..{dim - 1}")
        if not m_idx:
            raise DimensionMismatchError("m must not be empty")

        metric = np.asarray(self.metric_m, dtype=float)
        if metric.shape != (len(m_idx), len(m_idx)):
            raise DimensionMismatchError(
                f"metric_m must be {len(m_idx)}x{len(m_idx)}, got shape {metric.shape}"
            )
        form = np.asarray(self.Q, dtype=float)
        if form.shape != (dim, dim):
            raise DimensionMismatchError(f"Q must be {dim}x{dim}, got shape {form.shape}")

        object.__setattr__(self, "h_idx", h_idx)
        object.__setattr__(self, "m_idx", m_idx)
        object.__setattr__(self, "metric_m", _frozen(metric))
        object.__setattr__(self, "Q", _frozen(form))
        params = {key: _param_value(value) for key, value in dict(self.params).items()}
        object.__setattr__(self, "params", params)

    @property
    def dim(self) -> int:
        """Dimension of g."""
        return self.algebra.dim

    @property
    def n(self) -> int:
        """Dimension of m."""
        return len(self.m_idx)

    @property
    def Q_h(self) -> Array:  # pylint: disable=C0103
        """Q restricted to h."""
        return self.Q[np.ix_(self.h_idx, self.h_idx)]

    def embed_m(self, coords: npt.ArrayLike) -> Array:
        """Return g-vector of m-coordinates."""
        vector = np.zeros(self.dim)
        vector[list(self.m_idx)] = np.asarray(coords, dtype=float)
        return vector

    def m_coords(self, vector: npt.ArrayLike) -> Array:
        """Return m-coordinates of g-vector."""
        return np.asarray(vector, dtype=float)[list(self.m_idx)]

    def m_bracket_coefficients(self) -> Array:
        """Return B[i, j, k], the Z_k coefficient of [Z_i, Z_j]_m."""
        return self.algebra.c[np.ix_(self.m_idx, self.m_idx, self.m_idx)]

    def h_bracket_coefficients(self) -> Array:
        """Return the h_a coefficient of [Z_i, Z_j]_h as array (i, j, a)."""
        return self.algebra.c[np.ix_(self.m_idx, self.m_idx, self.h_idx)]

    def m_bracket_tensor(self) -> Array:
        """Return <[Z_i, Z_j]_m, Z_k>."""
        return self.m_bracket_coefficients() @ self.metric_m

    def isotropy_matrices(self) -> Array:
        """Return ad(h_a) restricted to m for each h-basis vector, shape (p, n, n)."""
        return np.transpose(
            self.algebra.c[np.ix_(self.h_idx, self.m_idx, self.m_idx)], (0, 2, 1)
        )

    def is_orthonormal(self, tol: float = DEFAULT_TOLERANCE) -> bool:
        """Check if metric_m is the identity."""
        return bool(np.max(np.abs(self.metric_m - np.eye(self.n))) <= tol)


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """Named validity check with its maximal residual."""

    name: str
    passed: bool
    residual: float
    detail: str = ""


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    """All validity checks of a model."""

    model: str
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        """Return True if every check passed."""
        return all(check.passed for check in self.checks)

    @property
    def failed(self) -> List[str]:
        """Return names of failed checks."""
        return [check.name for check in self.checks if not check.passed]

    def __getitem__(self, name: str) -> CheckResult:
        """Return check by name."""
        for check in self.checks:
            if check.name == name:
                return check

        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        """Return serializable representation."""
        return {
            "model": self.model,
            "passed": self.passed,
            "checks": [dataclasses.asdict(check) for check in self.checks],
        }


def bracket(model: ReductiveModel, x: npt.ArrayLike, y: npt.ArrayLike) -> Array:
    """Return [x, y] for g-vectors in the model basis."""
    return model.algebra.bracket(x, y)


def project(model: ReductiveModel, x: npt.ArrayLike, part: str) -> Array:
    """Return the h- or m-component of a g-vector."""
    if part not in PARTS:
        raise ValueError(f"part must be one of {PARTS}, got {part!r}")

    vector = model.algebra._check_vector(x)  # pylint: disable=W0212
    indices = model.h_idx if part == "h" else model.m_idx
    projected = np.zeros_like(vector)
    projected[list(indices)] = vector[list(indices)]
    return projected


def natural_reductivity_residual(model: ReductiveModel) -> float:
    """Return max |<[X,Y]_m, Z> + <Y, [X,Z]_m>| over m-basis triples."""
    tensor = model.m_bracket_tensor()
    return float(np.max(np.abs(tensor + np.transpose(tensor, (0, 2, 1)))))


def require_naturally_reductive(model: ReductiveModel, tol: float = DEFAULT_TOLERANCE) -> None:
    """Raise NotNaturallyReductiveError if the metric is not naturally reductive."""
    residual = natural_reductivity_residual(model)
    if residual > tol:
        raise NotNaturallyReductiveError(
            f"model {model.name!r} is not naturally reductive (residual {residual:.3e})"
        )


def _transitivity_defect(model: ReductiveModel, tol: float) -> int:
    m_vectors = np.eye(model.dim)[:, list(model.m_idx)]
    brackets = model.algebra.c[np.ix_(model.m_idx, model.m_idx)].reshape(-1, model.dim).T
    rank = np.linalg.matrix_rank(np.hstack([m_vectors, brackets]), tol=tol)
    return int(model.dim - rank)


def validate(  # pylint: disable=R0914
    model: ReductiveModel, tol: float = DEFAULT_TOLERANCE
) -> ValidationReport:
    """Evaluate every validity condition of the model.

    Failures are report entries, never exceptions.
    """
    h_idx, m_idx = list(model.h_idx), list(model.m_idx)
    checks: List[CheckResult] = []

    def add(name: str, residual: float, detail: str = "", passed: Optional[bool] = None) -> None:
        ok = residual <= tol if passed is None else passed
        checks.append(CheckResult(name, bool(ok), float(residual), detail))

    add("antisymmetry", model.algebra.antisymmetry_residual())
    add("jacobi", model.algebra.jacobi_residual())

    overlap = set(h_idx) & set(m_idx)
    missing = set(range(model.dim)) - set(h_idx) - set(m_idx)
    duplicated = len(h_idx) + len(m_idx) - len(set(h_idx + m_idx))
    partition_ok = not overlap and not missing and not duplicated
    add(
        "partition",
        0.0 if partition_ok else 1.0,
        "" if partition_ok else f"overlap={sorted(overlap)} missing={sorted(missing)}",
        partition_ok,
    )

    hmh = model.algebra.c[np.ix_(h_idx, m_idx, h_idx)]
    add("reductivity", float(np.max(np.abs(hmh), initial=0.0)))

    metric = model.metric_m
    asymmetry = float(np.max(np.abs(metric - metric.T)))
    smallest = float(np.min(np.linalg.eigvalsh((metric + metric.T) / 2)))
    add(
        "metric_positive_definite",
        max(asymmetry, -smallest, 0.0),
        f"smallest eigenvalue {smallest:.6g}",
        asymmetry <= tol and smallest > tol,
    )

    add("q_extends_metric", float(np.max(np.abs(model.Q[np.ix_(m_idx, m_idx)] - metric))))
    add("q_orthogonality", float(np.max(np.abs(model.Q[np.ix_(h_idx, m_idx)]), initial=0.0)))

    if h_idx:
        q_h_min = float(np.min(np.abs(np.linalg.eigvalsh(model.Q_h))))
        add(
            "q_nondegenerate_on_h",
            0.0 if q_h_min > tol else 1.0,
            f"smallest |eigenvalue| {q_h_min:.6g}",
            q_h_min > tol,
        )
    else:
        add("q_nondegenerate_on_h", 0.0, "h = 0")

    ads = model.algebra.ad_matrices()
    invariance = np.einsum("xky,kz->xyz", ads, model.Q) + np.einsum(
        "yk,xkz->xyz", model.Q, ads
    )
    add("ad_invariance", float(np.max(np.abs(invariance))))
    add("natural_reductivity", natural_reductivity_residual(model))

    defect = _transitivity_defect(model, tol)
    add("transitivity", float(defect), f"m + [m, m] misses {defect} dimension(s)")

    report = ValidationReport(model.name, tuple(checks))
    logger.debug("validated model %s, failed checks: %s", model.name, report.failed)
    return report


def killing_beta(model: ReductiveModel) -> BilinearFormOnM:
    """Return beta(X, Y) = -tr(ad X ad Y) on m-basis pairs."""
    killing = model.algebra.killing_form()
    return BilinearFormOnM(-killing[np.ix_(model.m_idx, model.m_idx)], FormRole.KILLING_BETA)


def dual_form(form: Array, tol: float = DEFAULT_TOLERANCE) -> Array:
    """Return the inverse matrix of an invariant form, used for dual bases."""
    if form.size == 0:
        return form
    if np.min(np.abs(np.linalg.eigvalsh(form))) <= tol:
        raise DegenerateFormError("degenerate invariant form on isotropy algebra")
    return linalg.inv(form)


def casimir_operator(
    model: ReductiveModel, part: str = "h", tol: float = DEFAULT_TOLERANCE
) -> Array:
    """Return C = -sum ad X_i ad Y_i over Q-dual bases of h or g, as dim x dim matrix."""
    if part not in ("h", "g"):
        raise ValueError(f"part must be 'h' or 'g', got {part!r}")

    indices = list(model.h_idx) if part == "h" else list(range(model.dim))
    if not indices:
        return np.zeros((model.dim, model.dim))

    dual = dual_form(model.Q[np.ix_(indices, indices)], tol)
    ads = model.algebra.ad_matrices()[indices]
    return -np.einsum("ab,aij,bjk->ik", dual, ads, ads)


def casimir_trace(model: ReductiveModel, part: str = "h", tol: float = DEFAULT_TOLERANCE) -> float:
    """Return the trace of the Casimir operator of h or g on its own adjoint representation."""
    indices = list(model.h_idx) if part == "h" else list(range(model.dim))
    if not indices:
        return 0.0

    operator = casimir_operator(model, part, tol)
    return float(np.trace(operator[np.ix_(indices, indices)]))


def casimir_A(  # pylint: disable=C0103
    model: ReductiveModel, tol: float = DEFAULT_TOLERANCE
) -> BilinearFormOnM:
    """Return A(X, Y) = <C_h X, Y> on m-basis pairs."""
    operator = casimir_operator(model, "h", tol)[np.ix_(model.m_idx, model.m_idx)]
    return BilinearFormOnM(operator.T @ model.metric_m, FormRole.CASIMIR_A)


def casimir_A_from_brackets(  # pylint: disable=C0103
    model: ReductiveModel,
) -> BilinearFormOnM:
    """Return sum_i Q_h([X, Z_i], [Y, Z_i]) over a metric-orthonormal frame of m."""
    h_part = model.h_bracket_coefficients()
    inverse_metric = linalg.inv(model.metric_m)
    matrix = np.einsum("xia,ab,yjb,ij->xy", h_part, model.Q_h, h_part, inverse_metric)
    return BilinearFormOnM(matrix, FormRole.CASIMIR_A)


def orthonormalize_m(model: ReductiveModel, tol: float = DEFAULT_TOLERANCE) -> ReductiveModel:
    """Return equivalent model whose m-basis is orthonormal.

    The new m-basis is obtained from the Cholesky factor of metric_m, the
    h-basis is kept, structure constants and Q are transformed accordingly.
    """
    metric = model.metric_m
    if np.max(np.abs(metric - metric.T)) > tol:
        raise MetricError("metric on m is not symmetric")
    try:
        lower = linalg.cholesky(metric, lower=True)
    except linalg.LinAlgError as error:
        raise MetricError("metric on m is not positive definite") from error

    transform = linalg.solve_triangular(lower, np.eye(model.n), lower=True).T
    basis_change = np.eye(model.dim)
    basis_change[np.ix_(model.m_idx, model.m_idx)] = transform
    gram = transform.T @ metric @ transform

    return dataclasses.replace(
        model,
        algebra=model.algebra.change_basis(basis_change),
        Q=basis_change.T @ model.Q @ basis_change,
        metric_m=(gram + gram.T) / 2,
    )


def ensure_orthonormal(model: ReductiveModel, tol: float = DEFAULT_TOLERANCE) -> ReductiveModel:
    """Return model itself if its m-basis is orthonormal, an orthonormalized copy otherwise."""
    if model.is_orthonormal(tol):
        return model

    logger.info("orthonormalizing m-basis of model %s", model.name)
    return orthonormalize_m(model, tol)


def model_to_dict(model: ReductiveModel, tol: float = 0.0) -> Dict[str, Any]:
    """Export model to the json model-file format.

    Only brackets with i < j are written, their antisymmetric partners are
    implied.
    """
    constants = [
        {"i": i, "j": j, "k": k, "c": float(model.algebra.c[i, j, k])}
        for i in range(model.dim)
        for j in range(i + 1, model.dim)
        for k in range(model.dim)
        if abs(model.algebra.c[i, j, k]) > tol
    ]
    return {
        "name": model.name,
        "dim": model.dim,
        "h_indices": list(model.h_idx),
        "m_indices": list(model.m_idx),
        "structure_constants": constants,
        "metric_m": model.metric_m.tolist(),
        "Q": model.Q.tolist(),
        "params": dict(model.params),
    }
