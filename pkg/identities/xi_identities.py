"""
Curvature identities of quasi-para-Sasakian manifolds involving ξ and φ
"""

from typing import List, Optional

from geometry.checks import IdentityReport, failing, passing
from geometry.connection import Connection
from geometry.curvature import CurvatureBundle, sectional_curvature
from geometry.tensor import TensorField
from identities.calculus import StructureCalculus, check_on_basis
from paracontact.classify import require_quasi_para_sasakian
from paracontact.structure import ParacontactStructure, horizontal_directions
from utils.logger import Logger

logger = Logger.get_logger()


def _xi_sectional_curvature(s: ParacontactStructure, cb: CurvatureBundle) -> Optional[IdentityReport]:
    """K(X, ξ) = −1 for the non-null horizontal directions X = hE_i; None when there are none"""
    directions = horizontal_directions(s)
    if not directions:
        logger.warning("xi_sectional_curvature skipped: no non-null horizontal basis direction")
        return None
    for i, x in directions:
        k = sectional_curvature(cb, x, s.xi)
        if k != -1:
            return failing("xi_sectional_curvature", (i + 1,), k + 1, f"K(hE_{i + 1}, ξ) = {k}")
    return passing("xi_sectional_curvature")


def verify_xi_curvature_identities(s: ParacontactStructure, cb: CurvatureBundle, nabla_r: TensorField,
                                   conn: Optional[Connection] = None) -> List[IdentityReport]:
    """Check, on all basis tuples,

        R(X,Y)ξ = η(X)Y − η(Y)X
        R(X,ξ)Y = g(X,Y)ξ − η(Y)X
        Ric(X,ξ) = −2n η(X)
        K(X,ξ) = −1 for X in Ker η
        (∇_Z R)(X,Y)ξ = −R(X,Y)φZ + g(X,φZ)Y − g(Y,φZ)X

    The K(X,ξ) report is left out when Ker η has no non-null basis direction.
    """
    require_quasi_para_sasakian(s, conn)
    calc = StructureCalculus(cb, s, nabla_r)
    d, xi, n = calc.dim, s.xi, calc.n

    reports = [
        check_on_basis("curvature_on_xi", d, 2,
                       lambda x, y: calc.R(x, y, xi) - (calc.eta(x) * y - calc.eta(y) * x)),
        check_on_basis("curvature_xi_slot", d, 2,
                       lambda x, y: calc.R(x, xi, y) - (calc.g(x, y) * xi - calc.eta(y) * x)),
        check_on_basis("ricci_on_xi", d, 1,
                       lambda x: calc.ric(x, xi) + 2 * n * calc.eta(x)),
        _xi_sectional_curvature(s, cb),
        check_on_basis("nabla_curvature_on_xi", d, 3,
                       lambda z, x, y: calc.nabla_R(z, x, y, xi)
                       - (-calc.R(x, y, calc.phi(z))
                          + calc.g(x, calc.phi(z)) * y
                          - calc.g(y, calc.phi(z)) * x)),
    ]
    reports = [report for report in reports if report is not None]
    logger.debug(f"ξ-curvature identities: {[r.describe() for r in reports]}")
    return reports


def verify_phi_curvature_identities(s: ParacontactStructure, cb: CurvatureBundle,
                                    conn: Optional[Connection] = None) -> List[IdentityReport]:
    """Check, on all basis triples,

        R(X,Y)φZ − φR(X,Y)Z = g(Y,Z)φX − g(X,Z)φY − g(Y,φZ)X + g(X,φZ)Y
        R(φX,φY)Z = −R(X,Y)Z − g(Y,Z)X + g(X,Z)Y + g(Y,φZ)φX − g(X,φZ)φY
    """
    require_quasi_para_sasakian(s, conn)
    calc = StructureCalculus(cb, s)
    g, phi, R = calc.g, calc.phi, calc.R

    def commutator(x, y, z):
        lhs = R(x, y, phi(z)) - phi(R(x, y, z))
        rhs = g(y, z) * phi(x) - g(x, z) * phi(y) - g(y, phi(z)) * x + g(x, phi(z)) * y
        return lhs - rhs

    def phi_pair(x, y, z):
        lhs = R(phi(x), phi(y), z)
        rhs = -R(x, y, z) - g(y, z) * x + g(x, z) * y + g(y, phi(z)) * phi(x) - g(x, phi(z)) * phi(y)
        return lhs - rhs

    return [
        check_on_basis("curvature_phi_commutator", calc.dim, 3, commutator),
        check_on_basis("curvature_phi_pair", calc.dim, 3, phi_pair),
    ]

