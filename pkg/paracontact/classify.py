"""
Classification of almost paracontact metric structures
"""

from dataclasses import dataclass, fields
from typing import Dict, Optional

import numpy as np

from geometry.checks import IdentityReport, compare, first_failure, vanishes
from geometry.connection import Connection, covariant_derivative, levi_civita
from geometry.tensor import TensorField
from paracontact.structure import ParacontactStructure, check_axioms, d_eta, nijenhuis_normality
from utils.errors import NotQuasiParaSasakian
from utils.logger import Logger

logger = Logger.get_logger()


@dataclass(frozen=True, eq=False)
class LieDerivativeReport:
    """£_ξg, £_ξφ and £_ξη with their vanishing checks"""

    metric: TensorField
    phi: TensorField
    eta: TensorField
    metric_report: IdentityReport
    phi_report: IdentityReport
    eta_report: IdentityReport

    @property
    def invariant(self) -> IdentityReport:
        return first_failure("lie_invariant", [self.metric_report, self.phi_report, self.eta_report])


def _nabla_xi(s: ParacontactStructure, conn: Connection) -> np.ndarray:
    """Row x holds ∇_{E_x}ξ"""
    return covariant_derivative(conn, TensorField((1, 0), s.xi)).components


def _killing_form(s: ParacontactStructure, conn: Connection) -> np.ndarray:
    """(£_ξg)(E_x, E_y) = g(∇_{E_x}ξ, E_y) + g(E_x, ∇_{E_y}ξ)"""
    lowered = np.dot(_nabla_xi(s, conn), s.g)
    return lowered + lowered.T


def lie_derivatives_along_xi(s: ParacontactStructure, conn: Connection) -> LieDerivativeReport:
    d = s.dim
    frame = s.base
    phi = s.phi_matrix
    # ad_xi[x, :] = [ξ, E_x]
    ad_xi = np.tensordot(s.xi, frame.c, axes=([0], [0]))

    # (£_ξφ)E_x = [ξ, φE_x] − φ[ξ, E_x]
    lie_phi = np.dot(phi, ad_xi) - np.dot(ad_xi, phi)
    # (£_ξη)E_x = −η([ξ, E_x])
    lie_eta = -np.dot(ad_xi, s.eta)
    lie_g = _killing_form(s, conn)

    zero = np.zeros((d, d), dtype=int)
    return LieDerivativeReport(
        metric=TensorField((0, 2), lie_g),
        phi=TensorField((1, 1), lie_phi),
        eta=TensorField((0, 1), lie_eta),
        metric_report=compare("lie_xi_metric", lie_g, zero),
        phi_report=compare("lie_xi_phi", lie_phi, zero),
        eta_report=vanishes("lie_xi_eta", lie_eta),
    )


@dataclass(frozen=True)
class ClassificationReport:
    """One IdentityReport per structural property; a flag is true iff its report passed"""

    almost_paracontact: IdentityReport
    compatible_metric: IdentityReport
    signature_ok: IdentityReport
    paracontact_metric_defn21: IdentityReport
    paracontact_metric_neg: IdentityReport
    k_paracontact: IdentityReport
    para_sasakian: IdentityReport
    quasi_para_sasakian: IdentityReport
    nabla_xi_is_phi: IdentityReport
    normal: IdentityReport
    lie_invariant: IdentityReport

    @classmethod
    def flag_names(cls):
        return [f.name for f in fields(cls)]

    def reports(self) -> Dict[str, IdentityReport]:
        return {name: getattr(self, name) for name in self.flag_names()}

    def flags(self) -> Dict[str, bool]:
        return {name: report.passed for name, report in self.reports().items()}

    def flag(self, name: str) -> bool:
        return getattr(self, name).passed


def classify(s: ParacontactStructure, conn: Optional[Connection] = None) -> ClassificationReport:
    """Evaluate every flag by exhaustive checks over basis pairs"""
    conn = conn or levi_civita(s.base)
    d = s.dim
    g, phi, xi, eta = s.g, s.phi_matrix, s.xi, s.eta
    axioms = check_axioms(s)

    # nabla_phi[x, y, :] = (∇_{E_x}φ)E_y
    nabla_phi = covariant_derivative(conn, s.phi).components
    # model[x, y, :] = g(E_x, E_y)ξ − η(E_y)E_x
    model = np.multiply.outer(g, xi) - np.multiply.outer(np.identity(d, dtype=int).astype(object), eta).transpose(0, 2, 1)

    deta = d_eta(s).components
    # g(E_x, φE_y)
    g_x_phi_y = np.dot(g, phi.T)

    normality = nijenhuis_normality(s)
    lie = lie_derivatives_along_xi(s, conn)

    report = ClassificationReport(
        almost_paracontact=axioms.almost_paracontact,
        compatible_metric=axioms.compatible_metric,
        signature_ok=axioms.signature_ok,
        paracontact_metric_defn21=compare("paracontact_metric_defn21", deta, g_x_phi_y),
        paracontact_metric_neg=compare("paracontact_metric_neg", deta, -g_x_phi_y),
        k_paracontact=vanishes("k_paracontact", _killing_form(s, conn)),
        para_sasakian=compare("para_sasakian", nabla_phi, -model),
        quasi_para_sasakian=compare("quasi_para_sasakian", nabla_phi, model),
        nabla_xi_is_phi=compare("nabla_xi_is_phi", _nabla_xi(s, conn), phi),
        normal=normality.report,
        lie_invariant=lie.invariant,
    )
    logger.debug(f"Classification flags: {report.flags()}")
    return report


def require_quasi_para_sasakian(s: ParacontactStructure, conn: Optional[Connection] = None) -> None:
    """Raise NotQuasiParaSasakian unless (∇_Xφ)Y = g(X,Y)ξ − η(Y)X holds on all basis pairs"""
    qps = classify(s, conn).quasi_para_sasakian
    if not qps.passed:
        raise NotQuasiParaSasakian(f"structure is not quasi-para-Sasakian: {qps.witness.describe()}", qps.witness)
