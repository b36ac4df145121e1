"""
Full check of one model: validation, classification, curvature and the identity suite
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from geometry.checks import IdentityReport
from geometry.connection import check_metric_compatible, check_torsion_free, levi_civita
from geometry.curvature import (check_first_bianchi, check_pair_symmetry, check_ricci_symmetric,
                                check_second_bianchi, curvature_bundle, nabla_curvature)
from geometry.frame import validate_frame
from identities.conformal import pc_bochner, weyl_zero
from identities.einstein import constant_curvature_test, detect_holomorphic_curvature, eta_einstein_fit
from identities.implications import CurvatureFacts, ImplicationCheck, evaluate_implications
from identities.symmetry import (check_ricci_semisymmetry, check_semisymmetry, cyclic_parallel_ricci_test,
                                 eta_parallel_ricci_test, local_phi_symmetry_test, local_symmetry_test)
from identities.three_dim import verify_three_dimensional_forms
from identities.xi_identities import verify_phi_curvature_identities, verify_xi_curvature_identities
from models.catalog import ModelSpec, to_structure
from paracontact.classify import ClassificationReport, classify
from utils.errors import DegenerateDirection, InvalidFrame, NoNonNullHorizontalDirection, UnknownFlag, UnknownIdentity
from utils.helpers import PerformanceTimer
from utils.logger import Logger, log_performance

logger = Logger.get_logger()

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
INFORMATIVE = "informative"

# Identities that must hold whenever their setting applies
REQUIRED_IDENTITIES = (
    "torsion_free", "metric_compatible", "first_bianchi", "second_bianchi", "pair_symmetry", "ricci_symmetric",
    "curvature_on_xi", "curvature_xi_slot", "ricci_on_xi", "xi_sectional_curvature", "nabla_curvature_on_xi",
    "curvature_phi_commutator", "curvature_phi_pair", "eta_einstein_trace",
    "ricci_decomposition_3d", "ricci_operator_xi_3d", "ricci_form_3d", "curvature_form_3d",
)

# Properties a model may or may not have; reported, never failing the run
INFORMATIVE_IDENTITIES = (
    "eta_einstein", "holomorphic_model", "pc_bochner_zero", "weyl_zero",
    "ricci_semisymmetric", "semisymmetric", "locally_symmetric", "locally_phi_symmetric",
    "eta_parallel_ricci", "cyclic_parallel_ricci",
)

IDENTITY_KEYS = REQUIRED_IDENTITIES + INFORMATIVE_IDENTITIES


@dataclass(frozen=True)
class IdentityOutcome:
    name: str
    status: str
    report: Optional[IdentityReport] = None

    @property
    def holds(self) -> Optional[bool]:
        return None if self.report is None else self.report.passed


@dataclass(frozen=True)
class ExpectationOutcome:
    flag: str
    expected: bool
    actual: bool

    @property
    def matched(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class CurvatureSummary:
    scal: Fraction
    constant_curvature: Optional[Fraction] = None
    holomorphic_curvature: Optional[Fraction] = None
    eta_einstein: Optional[Tuple[Fraction, Fraction]] = None
    pc_bochner_k: Optional[Fraction] = None


@dataclass(frozen=True)
class RunReport:
    model_name: str
    dim: int
    classification: ClassificationReport
    summary: CurvatureSummary
    identities: List[IdentityOutcome]
    implications: List[ImplicationCheck]
    expectations: List[ExpectationOutcome] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return (all(outcome.status != FAIL for outcome in self.identities)
                and all(check.verified for check in self.implications)
                and all(expectation.matched for expectation in self.expectations))


def parse_identity_filter(names: Optional[Iterable[str]]) -> Optional[List[str]]:
    """Validate identity keys; None or ['all'] selects everything"""
    if names is None:
        return None
    names = [name.strip() for name in names if name.strip()]
    if not names or names == ["all"]:
        return None
    unknown = [name for name in names if name not in IDENTITY_KEYS]
    if unknown:
        raise UnknownIdentity(f"unknown identity key(s): {', '.join(unknown)}; known keys: {', '.join(IDENTITY_KEYS)}")
    return names


def _required(report: Optional[IdentityReport], name: str) -> IdentityOutcome:
    if report is None:
        return IdentityOutcome(name, SKIPPED)
    return IdentityOutcome(name, PASS if report.passed else FAIL, report)


def _informative(report: Optional[IdentityReport], name: str) -> IdentityOutcome:
    if report is None:
        return IdentityOutcome(name, SKIPPED)
    return IdentityOutcome(name, INFORMATIVE, report)


@log_performance
def run_check(spec: ModelSpec, identities: Optional[Iterable[str]] = None,
              expectations: Optional[Dict[str, bool]] = None) -> RunReport:
    """Validate → classify → curvature → every applicable verifier.

    Raises ParacontactError subclasses for input that cannot be analysed
    (invalid frame, even dimension, singular metric); identity failures are
    reported, not raised.
    """
    selected = parse_identity_filter(identities)
    unknown_flags = sorted(set(expectations or {}) - set(ClassificationReport.flag_names()))
    if unknown_flags:
        raise UnknownFlag(f"unknown classification flag(s): {', '.join(unknown_flags)}")

    with PerformanceTimer(f"Check of model '{spec.name}'") as timer:
        s = to_structure(spec)
        validation = validate_frame(s.base)
        if not validation.valid:
            raise InvalidFrame(f"invalid frame: {validation.first_violation().describe()}")

        conn = levi_civita(s.base)
        classification = classify(s, conn)
        qps = classification.quasi_para_sasakian.passed
        cb = curvature_bundle(s.base, conn)
        nabla_r = nabla_curvature(s.base, conn, cb)

        reports: Dict[str, Optional[IdentityReport]] = dict.fromkeys(IDENTITY_KEYS)
        reports.update({
            "torsion_free": check_torsion_free(conn),
            "metric_compatible": check_metric_compatible(conn),
            "first_bianchi": check_first_bianchi(cb),
            "second_bianchi": check_second_bianchi(nabla_r),
            "pair_symmetry": check_pair_symmetry(cb),
            "ricci_symmetric": check_ricci_symmetric(cb),
        })

        if qps:
            for report in verify_xi_curvature_identities(s, cb, nabla_r, conn):
                reports[report.identity_name] = report
            for report in verify_phi_curvature_identities(s, cb, conn):
                reports[report.identity_name] = report
        if s.dim == 3:
            reports.update(verify_three_dimensional_forms(s, cb, qps, conn))

        try:
            fit = eta_einstein_fit(s, cb, qps, conn)
        except NoNonNullHorizontalDirection as e:
            logger.warning(f"η-Einstein fit skipped: {e}")
            fit = None
        reports["eta_einstein"] = fit.report if fit else None
        reports["eta_einstein_trace"] = fit.trace_report if fit else None

        holomorphic = None
        if qps:
            try:
                holomorphic = detect_holomorphic_curvature(s, cb, conn)
            except DegenerateDirection as e:
                logger.warning(f"φ-para-holomorphic curvature skipped: {e}")
        bochner = pc_bochner(s, cb, conn) if qps else None
        reports["holomorphic_model"] = holomorphic.report if holomorphic else None
        reports["pc_bochner_zero"] = bochner.report if bochner else None
        reports["weyl_zero"] = weyl_zero(cb) if s.dim >= 4 else None

        reports["ricci_semisymmetric"] = check_ricci_semisymmetry(cb)
        reports["semisymmetric"] = check_semisymmetry(cb)
        reports["locally_symmetric"] = local_symmetry_test(nabla_r)
        reports["locally_phi_symmetric"] = local_phi_symmetry_test(s, nabla_r)
        reports["eta_parallel_ricci"] = eta_parallel_ricci_test(s, conn, cb)
        reports["cyclic_parallel_ricci"] = cyclic_parallel_ricci_test(conn, cb)

        constant_curvature = constant_curvature_test(cb)

    outcomes = [
        _required(reports[name], name) if name in REQUIRED_IDENTITIES else _informative(reports[name], name)
        for name in IDENTITY_KEYS
        if selected is None or name in selected
    ]

    def holds(name: str) -> bool:
        report = reports[name]
        return report is not None and report.passed

    facts = CurvatureFacts(
        dim=s.dim,
        qps=qps,
        normal=classification.normal.passed,
        para_sasakian=classification.para_sasakian.passed,
        lie_invariant=classification.lie_invariant.passed,
        contact_sign_neg=classification.paracontact_metric_neg.passed,
        scal=cb.scal,
        constant_curvature=constant_curvature,
        locally_symmetric=holds("locally_symmetric"),
        semisymmetric=holds("semisymmetric"),
        ricci_semisymmetric=holds("ricci_semisymmetric"),
        phi_symmetric=holds("locally_phi_symmetric"),
        eta_parallel=holds("eta_parallel_ricci"),
        cyclic_parallel=holds("cyclic_parallel_ricci"),
        holomorphic_h=holomorphic.h if holomorphic else None,
        holomorphic_matches=bool(holomorphic and holomorphic.matches_model),
        eta_einstein_exact=bool(fit and fit.exact),
        eta_einstein_coefficients=(fit.a, fit.b) if fit else None,
        bochner_zero=bochner.vanishes if bochner else None,
        weyl_zero=holds("weyl_zero") if s.dim >= 4 else None,
    )
    implications = evaluate_implications(facts)

    summary = CurvatureSummary(
        scal=cb.scal,
        constant_curvature=constant_curvature,
        holomorphic_curvature=holomorphic.h if holomorphic and holomorphic.matches_model else None,
        eta_einstein=(fit.a, fit.b) if fit and fit.exact else None,
        pc_bochner_k=bochner.k if bochner else None,
    )

    flags = classification.flags()
    expectation_outcomes = [
        ExpectationOutcome(flag, expected, flags[flag])
        for flag, expected in sorted((expectations or {}).items())
    ]

    report = RunReport(spec.name, s.dim, classification, summary, outcomes, implications, expectation_outcomes)
    logger.info(f"Model '{spec.name}': overall {'pass' if report.overall else 'fail'} "
                f"after {timer.get_duration():.3f} s of computation")
    return report
