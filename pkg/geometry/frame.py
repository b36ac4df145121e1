"""
Lie-algebra frames with a constant (left-invariant) metric
"""

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

import numpy as np

from algebra.symmatrix import SymMatrix, determinant, invert_symmetric
from algebra.rational import to_rational
from geometry.checks import IdentityReport, failing, passing, vanishes
from geometry.tensor import exact_array, zeros
from utils.errors import DimensionMismatch
from utils.logger import Logger

logger = Logger.get_logger()


@dataclass(frozen=True, eq=False)
class FrameManifold:
    """Frame E_1..E_d with [E_i, E_j] = Σ_k c[i, j, k] E_k and constant metric g.

    Validity (antisymmetry, Jacobi, det g ≠ 0) is not enforced here so that
    invalid input can still be reported on; see validate_frame.
    """

    structure_constants: np.ndarray
    metric: SymMatrix

    def __post_init__(self):
        c = np.array(self.structure_constants, dtype=object)
        d = self.metric.dim
        if c.shape != (d, d, d):
            raise DimensionMismatch(f"structure constants have shape {c.shape}, metric needs {(d, d, d)}")
        c.flags.writeable = False
        object.__setattr__(self, 'structure_constants', c)

    @classmethod
    def from_brackets(cls, metric: SymMatrix, brackets: Iterable[Tuple[int, int, int, object]]) -> "FrameManifold":
        """Build from sparse 1-based (i, j, k, value) entries with i < j, antisymmetry implied"""
        d = metric.dim
        c = zeros((d, d, d))
        for i, j, k, value in brackets:
            value = to_rational(value)
            c[i - 1, j - 1, k - 1] += value
            c[j - 1, i - 1, k - 1] -= value
        return cls(c, metric)

    @classmethod
    def abelian(cls, metric: SymMatrix) -> "FrameManifold":
        d = metric.dim
        return cls(zeros((d, d, d)), metric)

    @property
    def dim(self) -> int:
        return self.metric.dim

    @property
    def c(self) -> np.ndarray:
        return self.structure_constants

    @cached_property
    def g(self) -> np.ndarray:
        return self.metric.as_array()

    @cached_property
    def g_inv(self) -> np.ndarray:
        """Inverse metric; raises SingularMatrix when det g = 0"""
        return invert_symmetric(self.metric).as_array()

    def vector(self, values: Sequence) -> np.ndarray:
        v = exact_array(values)
        if v.shape != (self.dim,):
            raise DimensionMismatch(f"vector of length {len(v)} on a {self.dim}-dimensional frame")
        return v

    def bracket(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """[u, v] for constant-coefficient vectors"""
        return np.dot(v, np.tensordot(u, self.c, axes=([0], [0])))

    def inner(self, u: np.ndarray, v: np.ndarray):
        return np.dot(u, np.dot(self.g, v))

    def lower(self, v: np.ndarray) -> np.ndarray:
        """Vector to covector: (v♭)_j = g(v, E_j)"""
        return np.dot(v, self.g)


@dataclass(frozen=True)
class FrameValidation:
    antisymmetry: IdentityReport
    jacobi: IdentityReport
    nondegenerate: IdentityReport

    @property
    def valid(self) -> bool:
        return self.antisymmetry.passed and self.jacobi.passed and self.nondegenerate.passed

    @property
    def reports(self) -> Tuple[IdentityReport, ...]:
        return (self.antisymmetry, self.jacobi, self.nondegenerate)

    def first_violation(self):
        return next((report for report in self.reports if not report.passed), None)


def _check_antisymmetry(c: np.ndarray) -> IdentityReport:
    # residual indexed as (k, i, j): the upper index of c^k_ij first
    residual = c + np.transpose(c, (1, 0, 2))
    return vanishes("antisymmetry", np.transpose(residual, (2, 0, 1)))


def _check_jacobi(c: np.ndarray) -> IdentityReport:
    d = c.shape[0]
    for i, j, l, n in itertools.product(range(d), repeat=4):
        total = sum(
            c[a, b, m] * c[m, e, n]
            for a, b, e in ((i, j, l), (j, l, i), (l, i, j))
            for m in range(d)
        )
        if total != 0:
            return failing("jacobi", (i + 1, j + 1, l + 1, n + 1), total)
    return passing("jacobi")


def validate_frame(f: FrameManifold) -> FrameValidation:
    """Check antisymmetry, the Jacobi identity and det g ≠ 0, reporting the first violation of each"""
    det = determinant(f.metric)
    if det == 0:
        nondegenerate = failing("nondegenerate", (), 0, "metric has zero determinant")
    else:
        nondegenerate = passing("nondegenerate")

    validation = FrameValidation(
        antisymmetry=_check_antisymmetry(f.c),
        jacobi=_check_jacobi(f.c),
        nondegenerate=nondegenerate,
    )
    if not validation.valid:
        logger.warning(f"Invalid frame: {validation.first_violation().describe()}")
    return validation
