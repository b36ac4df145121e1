"""
Theorems stated as implications, evaluated on the facts computed for one model.

Each check records whether its hypothesis and conclusion hold and whether
the implication (or equivalence) is therefore verified. A check whose
structural setting does not apply (wrong dimension, not quasi-para-Sasakian
where the statement is about such manifolds only), or that compares a
quantity the model gave no direction to measure, is marked not applicable.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from identities.einstein import holomorphic_einstein_coefficients

IMPLIES = "implies"
IFF = "iff"


@dataclass(frozen=True)
class CurvatureFacts:
    """Everything the implication checks look at, already decided"""

    dim: int
    qps: bool
    normal: bool
    para_sasakian: bool
    lie_invariant: bool
    contact_sign_neg: bool
    scal: Fraction
    constant_curvature: Optional[Fraction]
    locally_symmetric: bool
    semisymmetric: bool
    ricci_semisymmetric: bool
    phi_symmetric: bool
    eta_parallel: bool
    cyclic_parallel: bool
    holomorphic_h: Optional[Fraction] = None
    holomorphic_matches: bool = False
    eta_einstein_exact: bool = False
    eta_einstein_coefficients: Optional[Tuple[Fraction, Fraction]] = None
    bochner_zero: Optional[bool] = None
    weyl_zero: Optional[bool] = None

    @property
    def n(self) -> int:
        return (self.dim - 1) // 2

    @property
    def space_form_minus_one(self) -> bool:
        return self.constant_curvature == -1


@dataclass(frozen=True)
class ImplicationCheck:
    name: str
    kind: str
    statement: str
    applicable: bool
    hypothesis: bool = False
    conclusion: bool = False

    @property
    def verified(self) -> bool:
        if not self.applicable:
            return True
        if self.kind == IFF:
            return self.hypothesis == self.conclusion
        return (not self.hypothesis) or self.conclusion

    @property
    def status(self) -> str:
        if not self.applicable:
            return "skipped"
        return "pass" if self.verified else "fail"


def _holomorphic_coefficients_hold(facts: CurvatureFacts) -> bool:
    if not facts.eta_einstein_exact or facts.holomorphic_h is None:
        return False
    return facts.eta_einstein_coefficients == holomorphic_einstein_coefficients(facts.n, facts.holomorphic_h)


def evaluate_implications(facts: CurvatureFacts) -> List[ImplicationCheck]:
    qps = facts.qps
    qps_3d = qps and facts.dim == 3
    constant_h = qps and facts.holomorphic_matches

    return [
        ImplicationCheck(
            "qps_normal_not_para_sasakian", IMPLIES,
            "quasi-para-Sasakian ⇒ normal and not para-Sasakian", True,
            qps, facts.normal and not facts.para_sasakian),
        ImplicationCheck(
            "qps_lie_invariant", IMPLIES,
            "quasi-para-Sasakian ⇒ £_ξg = £_ξφ = £_ξη = 0", True,
            qps, facts.lie_invariant),
        ImplicationCheck(
            "qps_contact_sign", IMPLIES,
            "quasi-para-Sasakian ⇒ dη(X,Y) = −g(X,φY)", True,
            qps, facts.contact_sign_neg),
        ImplicationCheck(
            "locally_symmetric_space_form", IMPLIES,
            "quasi-para-Sasakian and ∇R = 0 ⇒ constant curvature −1", True,
            qps and facts.locally_symmetric, facts.space_form_minus_one),
        ImplicationCheck(
            "semisymmetric_space_form", IMPLIES,
            "quasi-para-Sasakian and R·R = 0 ⇒ constant curvature −1", True,
            qps and facts.semisymmetric, facts.space_form_minus_one),
        ImplicationCheck(
            "holomorphic_eta_einstein", IMPLIES,
            "quasi-para-Sasakian with constant H ⇒ η-Einstein with a = (n(H−3)+H+1)/2, b = −(n+1)(H+1)/2", True,
            constant_h, _holomorphic_coefficients_hold(facts)),
        ImplicationCheck(
            "holomorphic_minus_one_space_form", IMPLIES,
            "quasi-para-Sasakian with constant H = −1 ⇒ constant curvature", True,
            constant_h and facts.holomorphic_h == -1, facts.constant_curvature is not None),
        ImplicationCheck(
            "holomorphic_iff_einstein_bochner_flat", IFF,
            "quasi-para-Sasakian: constant H ⇔ η-Einstein and B = 0", qps and facts.holomorphic_h is not None,
            constant_h, facts.eta_einstein_exact and bool(facts.bochner_zero)),
        ImplicationCheck(
            "conformally_flat_space_form", IMPLIES,
            "quasi-para-Sasakian, dimension ≥ 5, C = 0 ⇒ constant curvature −1", facts.dim >= 5,
            qps and bool(facts.weyl_zero), facts.space_form_minus_one),
        ImplicationCheck(
            "space_form_iff_scal", IFF,
            "3D quasi-para-Sasakian: constant curvature −1 ⇔ scal = −6", qps_3d,
            facts.space_form_minus_one, facts.scal == -6),
        ImplicationCheck(
            "ricci_semisymmetric_space_form", IMPLIES,
            "3D quasi-para-Sasakian: R·Ric = 0 ⇒ scal = −6 and constant curvature −1", qps_3d,
            facts.ricci_semisymmetric, facts.scal == -6 and facts.space_form_minus_one),
        ImplicationCheck(
            "ricci_semisymmetric_locally_symmetric", IMPLIES,
            "3D quasi-para-Sasakian: R·Ric = 0 ⇒ ∇R = 0", qps_3d,
            facts.ricci_semisymmetric, facts.locally_symmetric),
        # scal has constant frame components, so it is always constant here
        ImplicationCheck(
            "phi_symmetric_iff_constant_scal", IFF,
            "3D quasi-para-Sasakian: locally φ-symmetric ⇔ scal constant", qps_3d,
            facts.phi_symmetric, True),
        ImplicationCheck(
            "eta_parallel_phi_symmetric", IMPLIES,
            "3D quasi-para-Sasakian: η-parallel Ricci ⇒ locally φ-symmetric", qps_3d,
            facts.eta_parallel, facts.phi_symmetric),
        ImplicationCheck(
            "eta_parallel_cyclic", IMPLIES,
            "3D quasi-para-Sasakian: η-parallel Ricci ⇒ cyclic-parallel Ricci", qps_3d,
            facts.eta_parallel, facts.cyclic_parallel),
    ]
