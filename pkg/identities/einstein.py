"""
η-Einstein fitting, constant curvature and constant φ-para-holomorphic
sectional curvature
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np

from algebra.rational import to_rational
from geometry.checks import IdentityReport, compare, failing, passing
from geometry.connection import Connection
from geometry.curvature import CurvatureBundle, sectional_curvature
from geometry.tensor import TensorField, zeros
from identities.calculus import StructureCalculus
from paracontact.classify import classify, require_quasi_para_sasakian
from paracontact.structure import ParacontactStructure, first_horizontal_direction, horizontal_directions
from utils.errors import DegenerateDirection, DegeneratePlane
from utils.logger import Logger

logger = Logger.get_logger()


@dataclass(frozen=True)
class EtaEinsteinFit:
    """Ric ≈ a·g + b·η⊗η; exact iff the fit reproduces Ric componentwise"""

    a: Fraction
    b: Fraction
    report: IdentityReport
    trace_report: Optional[IdentityReport] = None

    @property
    def exact(self) -> bool:
        return self.report.passed


def eta_einstein_fit(s: ParacontactStructure, cb: CurvatureBundle, qps: Optional[bool] = None,
                     conn: Optional[Connection] = None) -> EtaEinsteinFit:
    """Fit a from the first non-null horizontal direction X, b from Ric(ξ,ξ).

    On quasi-para-Sasakian input an exact fit must also satisfy a + b = −2n;
    qps=None classifies the structure to find out.
    """
    calc = StructureCalculus(cb, s)
    x = first_horizontal_direction(s)
    xi = s.xi

    a = Fraction(calc.ric(x, x)) / calc.g(x, x)
    eta_xi = calc.eta(xi)
    b = (Fraction(calc.ric(xi, xi)) - a * calc.g(xi, xi)) / (eta_xi * eta_xi) if eta_xi else Fraction(0)

    model = a * cb.g + b * np.outer(s.eta, s.eta)
    report = compare("eta_einstein", cb.ricci.components, model)

    if qps is None:
        qps = classify(s, conn).quasi_para_sasakian.passed

    trace_report = None
    if qps and report.passed:
        expected = -2 * calc.n
        if a + b != expected:
            trace_report = failing("eta_einstein_trace", (), a + b - expected, f"a + b = {a + b}")
        else:
            trace_report = passing("eta_einstein_trace")

    logger.debug(f"η-Einstein fit a = {a}, b = {b}, exact = {report.passed}")
    return EtaEinsteinFit(a, b, report, trace_report)


def space_form_residual(cb: CurvatureBundle, c) -> IdentityReport:
    """Compare R4(X,Y,Z,W) with c(g(Y,Z)g(X,W) − g(X,Z)g(Y,W))"""
    c = to_rational(c)
    g = cb.g
    d = cb.dim
    model = zeros((d, d, d, d))
    for i, j, k, w in itertools.product(range(d), repeat=4):
        model[i, j, k, w] = c * (g[j, k] * g[i, w] - g[i, k] * g[j, w])
    return compare("constant_curvature", cb.riemann4.components, model)


def constant_curvature_test(cb: CurvatureBundle) -> Optional[Fraction]:
    """Return c when R is that of a space form of curvature c, else None"""
    d = cb.dim
    basis = np.identity(d, dtype=int).astype(object)
    candidate = None
    for i, j in itertools.combinations(range(d), 2):
        try:
            candidate = sectional_curvature(cb, basis[i], basis[j])
            break
        except DegeneratePlane:
            continue

    if candidate is None:
        logger.warning("No nondegenerate basis plane for the constant curvature test")
        return None
    if not space_form_residual(cb, candidate).passed:
        return None
    return candidate


def holomorphic_einstein_coefficients(n: int, h) -> Tuple[Fraction, Fraction]:
    """η-Einstein coefficients forced by constant φ-para-holomorphic curvature H"""
    h = to_rational(h)
    return (n * (h - 3) + h + 1) / 2, -(n + 1) * (h + 1) / 2


def para_holomorphic_model(s: ParacontactStructure, h, conn: Optional[Connection] = None) -> TensorField:
    """Curvature of constant φ-para-holomorphic sectional curvature H:

    4R(X,Y)Z = (H−3)(g(Y,Z)X − g(X,Z)Y)
             + (H+1)(η(X)η(Z)Y − η(Y)η(Z)X + η(Y)g(X,Z)ξ − η(X)g(Y,Z)ξ
                     + g(Y,φZ)φX − g(X,φZ)φY + 2g(φX,Y)φZ)
    """
    require_quasi_para_sasakian(s, conn)
    h = to_rational(h)
    d = s.dim
    g_arr = s.g
    basis = np.identity(d, dtype=int).astype(object)

    def g(u, v):
        return np.dot(u, np.dot(g_arr, v))

    def eta(v):
        return np.dot(s.eta, v)

    phi = s.apply_phi
    xi = s.xi

    components = zeros((d, d, d, d))
    for i, j, k in itertools.product(range(d), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        value = ((h - 3) * (g(y, z) * x - g(x, z) * y)
                 + (h + 1) * (eta(x) * eta(z) * y - eta(y) * eta(z) * x
                              + eta(y) * g(x, z) * xi - eta(x) * g(y, z) * xi
                              + g(y, phi(z)) * phi(x) - g(x, phi(z)) * phi(y)
                              + 2 * g(phi(x), y) * phi(z)))
        components[i, j, k] = value / 4
    return TensorField((1, 3), components)


@dataclass(frozen=True)
class HolSectionalResult:
    """Candidate H, whether R equals the constant-H model, and K(X, φX) per horizontal direction"""

    h: Optional[Fraction]
    report: IdentityReport
    direction_values: Dict[int, Fraction] = field(default_factory=dict)

    @property
    def matches_model(self) -> bool:
        return self.report.passed


def _holomorphic_value(calc: StructureCalculus, x) -> Fraction:
    """R4(X,φX,X,φX) / g(X,X)²"""
    phi_x = calc.phi(x)
    gxx = calc.g(x, x)
    return Fraction(calc.R4(x, phi_x, x, phi_x)) / (gxx * gxx)


def detect_holomorphic_curvature(s: ParacontactStructure, cb: CurvatureBundle,
                                 conn: Optional[Connection] = None) -> HolSectionalResult:
    """Take H from the first non-null horizontal direction; matching the constant-H model decides constancy"""
    require_quasi_para_sasakian(s, conn)
    calc = StructureCalculus(cb, s)

    directions = horizontal_directions(s)
    if not directions:
        raise DegenerateDirection("no non-null horizontal basis direction to read H from")
    h = _holomorphic_value(calc, directions[0][1])
    values = {i + 1: _holomorphic_value(calc, x) for i, x in directions}
    model = para_holomorphic_model(s, h, conn)
    report = compare("holomorphic_model", cb.riemann.components, model.components)

    if report.passed:
        logger.debug(f"Constant φ-para-holomorphic sectional curvature H = {h}")
    else:
        logger.debug(f"Curvature differs from the H = {h} model: {report.witness.describe()}")
    return HolSectionalResult(h, report, values)
