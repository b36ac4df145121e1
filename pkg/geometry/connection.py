"""
Levi-Civita connection of a left-invariant metric and covariant derivatives
"""

from dataclasses import dataclass

import numpy as np

from geometry.checks import IdentityReport, vanishes
from geometry.frame import FrameManifold
from geometry.tensor import TensorField, derivation
from utils.errors import DimensionMismatch
from utils.logger import Logger, log_performance

logger = Logger.get_logger()


@dataclass(frozen=True, eq=False)
class Connection:
    """Connection coefficients: ∇_{E_i}E_j = Σ_k gamma[i, j, k] E_k"""

    frame: FrameManifold
    gamma: np.ndarray

    def __post_init__(self):
        gamma = np.array(self.gamma, dtype=object)
        d = self.frame.dim
        if gamma.shape != (d, d, d):
            raise DimensionMismatch(f"connection coefficients have shape {gamma.shape}, expected {(d, d, d)}")
        gamma.flags.writeable = False
        object.__setattr__(self, 'gamma', gamma)

    @property
    def dim(self) -> int:
        return self.frame.dim

    def endomorphism(self, i: int) -> np.ndarray:
        """Matrix of ∇_{E_i}: row m holds the components of ∇_{E_i}E_m"""
        return self.gamma[i]

    def nabla(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """∇_u v for constant-coefficient vectors"""
        return np.dot(v, np.tensordot(u, self.gamma, axes=([0], [0])))


@log_performance
def levi_civita(f: FrameManifold) -> Connection:
    """Koszul formula for a left-invariant metric.

    2g(∇_{E_i}E_j, E_k) = g([E_i,E_j],E_k) − g([E_j,E_k],E_i) + g([E_k,E_i],E_j),
    then raise the last index with g⁻¹.
    """
    g_inv = f.g_inv
    lowered_c = np.tensordot(f.c, f.g, axes=([2], [0]))  # C[i,j,k] = g([E_i,E_j], E_k)

    lowered = (lowered_c
               - np.transpose(lowered_c, (2, 0, 1))
               + np.transpose(lowered_c, (1, 2, 0))) / 2

    gamma = np.tensordot(lowered, g_inv, axes=([2], [0]))
    logger.debug(f"Levi-Civita connection computed on a {f.dim}-dimensional frame")
    return Connection(f, gamma)


def covariant_derivative(conn: Connection, tensor: TensorField) -> TensorField:
    """∇T with the new covariant slot first: (∇T)[z, ...] = (∇_{E_z}T)[...]"""
    if tensor.dim != conn.dim:
        raise DimensionMismatch(f"tensor of dimension {tensor.dim} on a {conn.dim}-dimensional frame")
    p, q = tensor.valence
    components = np.stack([
        derivation(tensor.components, conn.endomorphism(z), p)
        for z in range(conn.dim)
    ])
    return TensorField((p, q + 1), components)


def check_torsion_free(conn: Connection) -> IdentityReport:
    """Γ[i,j,k] − Γ[j,i,k] = c[i,j,k]"""
    gamma = conn.gamma
    return vanishes("torsion_free", gamma - np.transpose(gamma, (1, 0, 2)) - conn.frame.c)


def check_metric_compatible(conn: Connection) -> IdentityReport:
    """g(∇_{E_i}E_j, E_k) + g(E_j, ∇_{E_i}E_k) = 0"""
    lowered = np.tensordot(conn.gamma, conn.frame.g, axes=([2], [0]))
    return vanishes("metric_compatible", lowered + np.transpose(lowered, (0, 2, 1)))
