"""
Weyl conformal tensor and the PC-Bochner tensor
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from algebra.symmatrix import invert_symmetric
from geometry.checks import IdentityReport, first_failure, vanishes
from geometry.connection import Connection
from geometry.curvature import CurvatureBundle
from geometry.tensor import TensorField
from identities.calculus import StructureCalculus, tensor_on_basis
from paracontact.classify import require_quasi_para_sasakian
from paracontact.structure import ParacontactStructure
from utils.errors import DimensionTooSmall
from utils.logger import Logger

logger = Logger.get_logger()


def weyl_tensor(cb: CurvatureBundle) -> TensorField:
    """C = R4 − (Ric ∧ g terms)/(d−2) + scal/((d−1)(d−2)) (g ∧ g), fully covariant"""
    d = cb.dim
    if d <= 3:
        raise DimensionTooSmall(f"the Weyl tensor needs dimension at least 4, got {d}")

    calc = StructureCalculus(cb)
    g, ric = calc.g, calc.ric
    first = Fraction(1, d - 2)
    second = cb.scal / ((d - 1) * (d - 2))

    def component(x, y, z, w):
        ricci_terms = ric(y, z) * g(x, w) - ric(x, z) * g(y, w) + g(y, z) * ric(x, w) - g(x, z) * ric(y, w)
        metric_terms = g(y, z) * g(x, w) - g(x, z) * g(y, w)
        return calc.R4(x, y, z, w) - first * ricci_terms + second * metric_terms

    return TensorField((0, 4), tensor_on_basis(d, 4, component))


def weyl_zero(cb: CurvatureBundle) -> IdentityReport:
    return vanishes("weyl_zero", weyl_tensor(cb).components)


def check_trace_free(tensor: TensorField, cb: CurvatureBundle) -> IdentityReport:
    """Every metric contraction of a (0,4) tensor vanishes"""
    g_inv = invert_symmetric(cb.metric).as_array()
    reports = []
    for a, b in itertools.combinations(range(4), 2):
        trace = np.tensordot(tensor.components, g_inv, axes=([a, b], [0, 1]))
        reports.append(vanishes(f"trace_{a + 1}{b + 1}", trace))
    return first_failure("trace_free", reports)


@dataclass(frozen=True, eq=False)
class PCBochnerResult:
    tensor: TensorField
    k: Fraction
    report: IdentityReport

    @property
    def vanishes(self) -> bool:
        return self.report.passed


def pc_bochner(s: ParacontactStructure, cb: CurvatureBundle, conn: Optional[Connection] = None) -> PCBochnerResult:
    """PC-Bochner curvature tensor B(X,Y,Z,W) with k = −(scal − 2n)/(2n + 2)"""
    require_quasi_para_sasakian(s, conn)
    calc = StructureCalculus(cb, s)
    g, ric, phi, eta = calc.g, calc.ric, calc.phi, calc.eta
    n = calc.n
    k = -(cb.scal - 2 * n) / (2 * n + 2)
    denominator = 2 * n + 4

    def component(x, y, z, w):
        ricci_terms = (ric(x, z) * g(y, w) - ric(y, z) * g(x, w)
                       + ric(y, w) * g(x, z) - ric(x, w) * g(y, z)
                       + ric(phi(x), z) * g(y, phi(w)) - ric(phi(y), z) * g(x, phi(w))
                       + ric(phi(y), w) * g(x, phi(z)) - ric(phi(x), w) * g(y, phi(z))
                       + 2 * ric(phi(x), y) * g(z, phi(w)) + 2 * ric(phi(z), w) * g(x, phi(y))
                       - ric(x, z) * eta(y) * eta(w) + ric(y, z) * eta(x) * eta(w)
                       - ric(y, w) * eta(x) * eta(z) + ric(x, w) * eta(y) * eta(z))
        metric_terms = g(x, z) * g(y, w) - g(y, z) * g(x, w)
        phi_terms = (g(y, phi(w)) * g(x, phi(z)) - g(x, phi(w)) * g(y, phi(z))
                     + 2 * g(x, phi(y)) * g(z, phi(w)))
        eta_terms = (g(x, z) * eta(y) * eta(w) - g(y, z) * eta(x) * eta(w)
                     + g(y, w) * eta(x) * eta(z) - g(x, w) * eta(y) * eta(z))
        return (calc.R4(x, y, z, w)
                + Fraction(ricci_terms) / denominator
                + (k - 4) / denominator * metric_terms
                - (k + 2 * n) / denominator * phi_terms
                - k / denominator * eta_terms)

    tensor = TensorField((0, 4), tensor_on_basis(calc.dim, 4, component))
    report = vanishes("pc_bochner_zero", tensor.components)
    logger.debug(f"PC-Bochner tensor with k = {k}: {report.describe()}")
    return PCBochnerResult(tensor, Fraction(k), report)
