"""
Three-dimensional curvature forms
"""

from typing import Dict, Optional

from geometry.checks import IdentityReport
from geometry.connection import Connection
from geometry.curvature import CurvatureBundle
from identities.calculus import StructureCalculus, check_on_basis
from paracontact.classify import classify
from paracontact.structure import ParacontactStructure
from utils.errors import WrongDimension
from utils.logger import Logger

logger = Logger.get_logger()


def verify_three_dimensional_forms(s: ParacontactStructure, cb: CurvatureBundle, qps: Optional[bool] = None,
                                   conn: Optional[Connection] = None) -> Dict[str, Optional[IdentityReport]]:
    """Check the curvature decomposition every 3-manifold has, plus the Ricci and
    curvature forms of quasi-para-Sasakian 3-manifolds.

    Forms that need a quasi-para-Sasakian structure map to None on other input.
    """
    if cb.dim != 3:
        raise WrongDimension(f"three-dimensional forms need dimension 3, got {cb.dim}")

    calc = StructureCalculus(cb, s)
    g, eta, Q, R, ric = calc.g, calc.eta, calc.Q, calc.R, calc.ric
    scal = cb.scal
    xi = s.xi

    def decomposition(x, y, z):
        rhs = (g(y, z) * Q(x) - g(x, z) * Q(y) + g(Q(y), z) * x - g(Q(x), z) * y
               - scal / 2 * (g(y, z) * x - g(x, z) * y))
        return R(x, y, z) - rhs

    results: Dict[str, Optional[IdentityReport]] = {
        "ricci_decomposition_3d": check_on_basis("ricci_decomposition_3d", 3, 3, decomposition),
        "ricci_operator_xi_3d": None,
        "ricci_form_3d": None,
        "curvature_form_3d": None,
    }

    if qps is None:
        qps = classify(s, conn).quasi_para_sasakian.passed
    if not qps:
        logger.debug("Structure is not quasi-para-Sasakian; skipping the 3D Ricci and curvature forms")
        return results

    def ricci_operator_xi(x, y):
        return eta(y) * Q(x) - eta(x) * Q(y) - (scal / 2 + 1) * (eta(y) * x - eta(x) * y)

    def ricci_form(y, z):
        return ric(y, z) - ((scal + 2) / 2 * g(y, z) - (scal + 6) / 2 * eta(y) * eta(z))

    def curvature_form(x, y, z):
        rhs = ((scal + 4) / 2 * (g(y, z) * x - g(x, z) * y)
               - (scal + 6) / 2 * (g(y, z) * eta(x) * xi - g(x, z) * eta(y) * xi
                                   + eta(y) * eta(z) * x - eta(x) * eta(z) * y))
        return R(x, y, z) - rhs

    results["ricci_operator_xi_3d"] = check_on_basis("ricci_operator_xi_3d", 3, 2, ricci_operator_xi)
    results["ricci_form_3d"] = check_on_basis("ricci_form_3d", 3, 2, ricci_form)
    results["curvature_form_3d"] = check_on_basis("curvature_form_3d", 3, 3, curvature_form)
    return results
