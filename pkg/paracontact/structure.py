"""
Almost paracontact structures (φ, ξ, η) on a frame and their basic invariants
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from algebra.symmatrix import signature
from geometry.checks import IdentityReport, compare, failing, first_failure, passing
from geometry.frame import FrameManifold
from geometry.tensor import TensorField, exact_array
from utils.errors import DimensionMismatch, EvenDimension, NoNonNullHorizontalDirection, SingularMatrix
from utils.logger import Logger

logger = Logger.get_logger()


@dataclass(frozen=True, eq=False)
class ParacontactStructure:
    """(φ, ξ, η) with constant components: phi[i, l] is the E_l component of φE_i"""

    base: FrameManifold
    phi: TensorField
    xi: np.ndarray
    eta: np.ndarray

    def __post_init__(self):
        d = self.base.dim
        if self.phi.valence != (1, 1) or self.phi.dim != d:
            raise DimensionMismatch(f"φ must be a (1,1) tensor on the {d}-dimensional frame")
        for label in ('xi', 'eta'):
            array = np.array(getattr(self, label), dtype=object)
            if array.shape != (d,):
                raise DimensionMismatch(f"{label} has shape {array.shape}, expected ({d},)")
            array.flags.writeable = False
            object.__setattr__(self, label, array)

    @classmethod
    def create(cls, base: FrameManifold, phi_rows: Sequence, xi: Sequence, eta: Sequence) -> "ParacontactStructure":
        """phi_rows[i] lists the components of φE_{i+1}"""
        return cls(base, TensorField.from_values((1, 1), phi_rows), exact_array(xi), exact_array(eta))

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def n(self) -> int:
        """Half the rank of the paracontact distribution (d = 2n + 1)"""
        return (self.dim - 1) // 2

    @property
    def phi_matrix(self) -> np.ndarray:
        return self.phi.components

    @property
    def g(self) -> np.ndarray:
        return self.base.g

    def apply_phi(self, v: np.ndarray) -> np.ndarray:
        return np.dot(v, self.phi_matrix)

    def eta_of(self, v: np.ndarray):
        return np.dot(self.eta, v)


def projection_h(s: ParacontactStructure) -> np.ndarray:
    """h = φ², the projection onto Ker η along ξ (row i is hE_i)"""
    return np.dot(s.phi_matrix, s.phi_matrix)


def trace_phi(s: ParacontactStructure) -> Fraction:
    return Fraction(sum(s.phi_matrix[i, i] for i in range(s.dim)))


def horizontal_directions(s: ParacontactStructure):
    """Non-null projected basis vectors hE_i, as (i, hE_i) pairs with 0-based i"""
    h = projection_h(s)
    directions = []
    for i in range(s.dim):
        v = h[i]
        if s.base.inner(v, v) != 0:
            directions.append((i, v))
    return directions


def first_horizontal_direction(s: ParacontactStructure) -> np.ndarray:
    directions = horizontal_directions(s)
    if not directions:
        raise NoNonNullHorizontalDirection("no basis direction projects to a non-null vector of Ker η")
    index, v = directions[0]
    logger.debug(f"Horizontal probe direction hE_{index + 1}")
    return v


@dataclass(frozen=True)
class AxiomReport:
    phi_xi: IdentityReport
    eta_phi: IdentityReport
    eta_xi: IdentityReport
    phi_squared: IdentityReport
    compatible_metric: IdentityReport
    eta_metric_dual: IdentityReport
    signature_ok: IdentityReport

    @property
    def almost_paracontact(self) -> IdentityReport:
        return first_failure("almost_paracontact", [self.phi_xi, self.eta_phi, self.eta_xi, self.phi_squared])

    @property
    def reports(self):
        return (self.phi_xi, self.eta_phi, self.eta_xi, self.phi_squared,
                self.compatible_metric, self.eta_metric_dual, self.signature_ok)

    @property
    def all_passed(self) -> bool:
        return all(report.passed for report in self.reports)


def _check_signature(s: ParacontactStructure) -> IdentityReport:
    expected = (s.n + 1, s.n)
    try:
        found = signature(s.base.metric)
    except SingularMatrix:
        return failing("signature_ok", (), 0, "metric is degenerate")
    if found != expected:
        return failing("signature_ok", (), found[0] - expected[0],
                       f"signature {found}, expected {expected}")
    return passing("signature_ok")


def check_axioms(s: ParacontactStructure) -> AxiomReport:
    """φξ = 0, η∘φ = 0, η(ξ) = 1, φ² = id − η⊗ξ, g(φX,φY) = −g(X,Y) + η(X)η(Y),
    η = g(·, ξ) and signature (n+1, n)
    """
    d = s.dim
    if d % 2 == 0:
        raise EvenDimension(f"almost paracontact structures need an odd dimension, got {d}")

    phi, xi, eta, g = s.phi_matrix, s.xi, s.eta, s.g
    identity = np.identity(d, dtype=int).astype(object)
    eta_eta = np.outer(eta, eta)

    report = AxiomReport(
        phi_xi=compare("phi_xi", np.dot(xi, phi), np.zeros(d, dtype=int)),
        # (η∘φ)(E_i) = η(φE_i)
        eta_phi=compare("eta_phi", np.dot(phi, eta), np.zeros(d, dtype=int)),
        eta_xi=compare("eta_xi", np.array([np.dot(eta, xi)], dtype=object), np.array([1], dtype=object)),
        # φ²E_i = E_i − η(E_i)ξ
        phi_squared=compare("phi_squared", np.dot(phi, phi), identity - np.outer(eta, xi)),
        # g(φE_i, φE_j) = −g_ij + η_i η_j
        compatible_metric=compare("compatible_metric", np.dot(np.dot(phi, g), phi.T), -g + eta_eta),
        eta_metric_dual=compare("eta_metric_dual", eta, s.base.lower(xi)),
        signature_ok=_check_signature(s),
    )
    if not report.all_passed:
        failed = [r.describe() for r in report.reports if not r.passed]
        logger.debug(f"Axiom failures: {failed}")
    return report


def d_eta(s: ParacontactStructure) -> TensorField:
    """dη(E_i, E_j) = −½ η([E_i, E_j]) for constant η"""
    return TensorField((0, 2), -np.dot(s.base.c, s.eta) / 2)


def phi_bracket(s: ParacontactStructure) -> TensorField:
    """[φ,φ](X,Y) = φ²[X,Y] + [φX,φY] − φ[φX,Y] − φ[X,φY] on basis pairs"""
    phi = s.phi_matrix
    c = s.base.c
    phi_sq = np.dot(phi, phi)
    # c_phi_phi[i,j,:] = [φE_i, φE_j]
    c_phi_phi = np.tensordot(np.tensordot(phi, c, axes=([1], [0])), phi, axes=([1], [1]))
    c_phi_phi = np.transpose(c_phi_phi, (0, 2, 1))
    c_phi_left = np.tensordot(phi, c, axes=([1], [0]))           # [φE_i, E_j]
    c_phi_right = np.transpose(np.tensordot(phi, c, axes=([1], [1])), (1, 0, 2))  # [E_i, φE_j]

    components = (np.dot(c, phi_sq)
                  + c_phi_phi
                  - np.dot(c_phi_left, phi)
                  - np.dot(c_phi_right, phi))
    return TensorField((1, 2), components)


@dataclass(frozen=True, eq=False)
class NormalityResult:
    bracket: TensorField
    n1: TensorField
    report: IdentityReport

    @property
    def normal(self) -> bool:
        return self.report.passed


def nijenhuis_normality(s: ParacontactStructure) -> NormalityResult:
    """N⁽¹⁾ = [φ,φ] − 2dη⊗ξ; the structure is normal iff N⁽¹⁾ = 0"""
    bracket = phi_bracket(s)
    n1 = bracket.components - 2 * np.multiply.outer(d_eta(s).components, s.xi)
    n1_field = TensorField((1, 2), n1)
    return NormalityResult(bracket, n1_field, compare("normal", n1, np.zeros(n1.shape, dtype=int)))
