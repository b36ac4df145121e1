"""
Semisymmetry, local (φ-)symmetry and parallelism conditions on curvature
"""

import numpy as np

from geometry.checks import IdentityReport, vanishes
from geometry.connection import Connection, covariant_derivative
from geometry.curvature import CurvatureBundle
from geometry.tensor import TensorField, apply_to_slots, derivation
from paracontact.structure import ParacontactStructure, projection_h
from utils.errors import DimensionMismatch


def derivation_action(cb: CurvatureBundle, tensor: TensorField) -> np.ndarray:
    """Components of R(E_i,E_j)·T, with the curvature operator acting as a derivation.

    Result index order: [i, j, <slots of T>].
    """
    if tensor.dim != cb.dim:
        raise DimensionMismatch(f"tensor of dimension {tensor.dim} against curvature of dimension {cb.dim}")
    d = cb.dim
    r = cb.riemann.components
    p = tensor.contravariant
    return np.stack([
        np.stack([derivation(tensor.components, r[i, j], p) for j in range(d)])
        for i in range(d)
    ])


def check_ricci_semisymmetry(cb: CurvatureBundle) -> IdentityReport:
    """R(X,Y)·Ric = 0"""
    return vanishes("ricci_semisymmetric", derivation_action(cb, cb.ricci))


def check_semisymmetry(cb: CurvatureBundle) -> IdentityReport:
    """R(X,Y)·R = 0"""
    return vanishes("semisymmetric", derivation_action(cb, cb.riemann))


def local_symmetry_test(nabla_r: TensorField) -> IdentityReport:
    return vanishes("locally_symmetric", nabla_r.components)


def local_phi_symmetry_test(s: ParacontactStructure, nabla_r: TensorField) -> IdentityReport:
    """φ²((∇_{hW}R)(hX,hY)hZ) = 0 with h = φ²"""
    h = projection_h(s)
    projected = apply_to_slots(nabla_r.components, h, range(4))
    return vanishes("locally_phi_symmetric", np.tensordot(projected, h, axes=([4], [0])))


def eta_parallel_ricci_test(s: ParacontactStructure, conn: Connection, cb: CurvatureBundle) -> IdentityReport:
    """(∇_X Ric)(φY, φZ) = 0"""
    nabla_ric = covariant_derivative(conn, cb.ricci).components
    return vanishes("eta_parallel_ricci", apply_to_slots(nabla_ric, s.phi_matrix, (1, 2)))


def cyclic_parallel_ricci_test(conn: Connection, cb: CurvatureBundle) -> IdentityReport:
    """(∇_X Ric)(Y,Z) + (∇_Y Ric)(Z,X) + (∇_Z Ric)(X,Y) = 0"""
    n = covariant_derivative(conn, cb.ricci).components
    return vanishes("cyclic_parallel_ricci", n + np.transpose(n, (2, 0, 1)) + np.transpose(n, (1, 2, 0)))
