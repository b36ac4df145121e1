"""
Riemann, Ricci and scalar curvature of a frame connection
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from algebra.rational import to_rational
from algebra.symmatrix import SymMatrix, invert_symmetric
from geometry.checks import IdentityReport, first_failure, vanishes
from geometry.connection import Connection, covariant_derivative
from geometry.frame import FrameManifold
from geometry.tensor import TensorField, contract, exact_array, zeros
from utils.errors import DegeneratePlane, DimensionMismatch
from utils.logger import Logger, log_performance

logger = Logger.get_logger()


@dataclass(frozen=True, eq=False)
class CurvatureBundle:
    """Curvature data of one metric.

    riemann[i,j,k,l]   = E_l component of R(E_i,E_j)E_k
    riemann4[i,j,k,w]  = g(R(E_i,E_j)E_k, E_w)
    ricci[j,k]         = trace(Z ↦ R(Z,E_j)E_k)
    ricci_operator     = Q with g(QX, Y) = Ric(X, Y)
    """

    metric: SymMatrix
    riemann: TensorField
    riemann4: TensorField
    ricci: TensorField
    ricci_operator: TensorField
    scal: Fraction

    @property
    def dim(self) -> int:
        return self.metric.dim

    @property
    def g(self) -> np.ndarray:
        return self.metric.as_array()

    def with_ricci(self, ricci) -> "CurvatureBundle":
        """Copy with a replaced Ricci tensor; Q and scal are re-derived, R is kept as is"""
        ricci = TensorField((0, 2), exact_array(ricci))
        g_inv = invert_symmetric(self.metric).as_array()
        return CurvatureBundle(
            metric=self.metric,
            riemann=self.riemann,
            riemann4=self.riemann4,
            ricci=ricci,
            ricci_operator=TensorField((1, 1), np.dot(ricci.components, g_inv)),
            scal=_trace_g(g_inv, ricci.components),
        )


def _trace_g(g_inv: np.ndarray, form: np.ndarray) -> Fraction:
    return Fraction(sum(g_inv[i, j] * form[i, j] for i, j in np.ndindex(form.shape)))


def bundle_from_riemann(metric: SymMatrix, riemann: np.ndarray) -> CurvatureBundle:
    """Derive R4, Ric, Q and scal from the (1,3) curvature components"""
    g = metric.as_array()
    g_inv = invert_symmetric(metric).as_array()
    d = metric.dim

    riemann4 = np.tensordot(riemann, g, axes=([3], [0]))
    ricci = zeros((d, d))
    for j, k in itertools.product(range(d), repeat=2):
        ricci[j, k] = sum(riemann[i, j, k, i] for i in range(d))

    return CurvatureBundle(
        metric=metric,
        riemann=TensorField((1, 3), riemann),
        riemann4=TensorField((0, 4), riemann4),
        ricci=TensorField((0, 2), ricci),
        ricci_operator=TensorField((1, 1), np.dot(ricci, g_inv)),
        scal=_trace_g(g_inv, ricci),
    )


@log_performance
def curvature_bundle(f: FrameManifold, conn: Connection) -> CurvatureBundle:
    """R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]}Z on basis vectors.

    As matrices acting on the right, R(E_i,E_j) = Γ_j Γ_i − Γ_i Γ_j − Σ_m c[i,j,m] Γ_m.
    """
    if conn.dim != f.dim:
        raise DimensionMismatch(f"connection of dimension {conn.dim} on a {f.dim}-dimensional frame")
    d = f.dim
    gamma = conn.gamma
    riemann = zeros((d, d, d, d))
    for i, j in itertools.product(range(d), repeat=2):
        riemann[i, j] = (np.dot(gamma[j], gamma[i])
                         - np.dot(gamma[i], gamma[j])
                         - np.tensordot(f.c[i, j], gamma, axes=([0], [0])))

    bundle = bundle_from_riemann(f.metric, riemann)
    logger.debug(f"Curvature computed: scal = {bundle.scal}")
    return bundle


def space_form_bundle(metric: SymMatrix, curvature) -> CurvatureBundle:
    """Synthetic constant-curvature bundle R(X,Y)Z = c(g(Y,Z)X − g(X,Z)Y)"""
    c = to_rational(curvature)
    g = metric.as_array()
    d = metric.dim
    riemann = zeros((d, d, d, d))
    for i, j, k in itertools.product(range(d), repeat=3):
        riemann[i, j, k, i] += c * g[j, k]
        riemann[i, j, k, j] -= c * g[i, k]
    return bundle_from_riemann(metric, riemann)


def sectional_curvature(cb: CurvatureBundle, x, y) -> Fraction:
    """K(X,Y) = R4(X,Y,Y,X) / (g(X,X)g(Y,Y) − g(X,Y)²)"""
    x = exact_array(x)
    y = exact_array(y)
    if x.shape != (cb.dim,) or y.shape != (cb.dim,):
        raise DimensionMismatch(f"sectional curvature needs two vectors of length {cb.dim}")
    g = cb.g
    gxx, gyy, gxy = np.dot(x, np.dot(g, x)), np.dot(y, np.dot(g, y)), np.dot(x, np.dot(g, y))
    denominator = gxx * gyy - gxy * gxy
    if denominator == 0:
        raise DegeneratePlane(f"plane spanned by {list(map(str, x))} and {list(map(str, y))} is degenerate")

    return Fraction(contract(cb.riemann4.components, x, y, y, x)) / denominator


@log_performance
def nabla_curvature(f: FrameManifold, conn: Connection, cb: CurvatureBundle) -> TensorField:
    """∇R as a (1,4) tensor: [z, i, j, k, l] = E_l component of (∇_{E_z}R)(E_i,E_j)E_k"""
    if cb.dim != f.dim:
        raise DimensionMismatch(f"curvature of dimension {cb.dim} on a {f.dim}-dimensional frame")
    return covariant_derivative(conn, cb.riemann)


def check_first_bianchi(cb: CurvatureBundle) -> IdentityReport:
    """R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0"""
    r = cb.riemann.components
    return vanishes("first_bianchi", r + np.transpose(r, (2, 0, 1, 3)) + np.transpose(r, (1, 2, 0, 3)))


def check_second_bianchi(nabla_r: TensorField) -> IdentityReport:
    """(∇_Z R)(X,Y) + (∇_X R)(Y,Z) + (∇_Y R)(Z,X) = 0"""
    n = nabla_r.components
    cyclic = n + np.transpose(n, (2, 0, 1, 3, 4)) + np.transpose(n, (1, 2, 0, 3, 4))
    return vanishes("second_bianchi", cyclic)


def check_pair_symmetry(cb: CurvatureBundle) -> IdentityReport:
    """R4 antisymmetric in each pair and symmetric under exchange of the pairs"""
    r4 = cb.riemann4.components
    return first_failure("pair_symmetry", [
        vanishes("first_pair_antisymmetry", r4 + np.transpose(r4, (1, 0, 2, 3))),
        vanishes("second_pair_antisymmetry", r4 + np.transpose(r4, (0, 1, 3, 2))),
        vanishes("pair_exchange", r4 - np.transpose(r4, (2, 3, 0, 1))),
    ])


def check_ricci_symmetric(cb: CurvatureBundle) -> IdentityReport:
    ric = cb.ricci.components
    return vanishes("ricci_symmetric", ric - ric.T)
