"""Tests for semisymmetry, parallelism conditions, 3D curvature forms and implication checks."""

from fractions import Fraction

import numpy as np
import pytest

from geometry.tensor import TensorField
from identities.implications import IFF, IMPLIES, CurvatureFacts, ImplicationCheck, evaluate_implications
from identities.symmetry import (check_ricci_semisymmetry, check_semisymmetry, cyclic_parallel_ricci_test,
                                 derivation_action, eta_parallel_ricci_test, local_phi_symmetry_test,
                                 local_symmetry_test)
from identities.three_dim import verify_three_dimensional_forms
from utils.errors import DimensionMismatch, WrongDimension


def with_extra_ricci(cb, i, j):
    ricci = np.array(cb.ricci.components)
    ricci[i, j] += 1
    if i != j:
        ricci[j, i] += 1
    return cb.with_ricci(ricci)


class TestSemisymmetry:

    def test_example(self, example):
        assert check_ricci_semisymmetry(example.cb).passed
        assert check_semisymmetry(example.cb).passed

    def test_heisenberg(self, heisenberg):
        report = check_ricci_semisymmetry(heisenberg.cb)
        assert not report.passed
        assert report.witness.residual != 0
        assert not check_semisymmetry(heisenberg.cb).passed

    def test_derivation_action_shape(self, heisenberg):
        assert derivation_action(heisenberg.cb, heisenberg.cb.ricci).shape == (3, 3, 3, 3)
        assert derivation_action(heisenberg.cb, heisenberg.cb.riemann).shape == (3,) * 6

    def test_derivation_action_dimension_check(self, heisenberg):
        with pytest.raises(DimensionMismatch):
            derivation_action(heisenberg.cb, TensorField.from_values((0, 1), [1, 0, 0, 0, 0]))

    def test_curvature_annihilates_the_metric(self, heisenberg):
        metric = TensorField((0, 2), heisenberg.s.g)
        assert all(v == 0 for v in derivation_action(heisenberg.cb, metric).flat)


class TestLocalSymmetry:

    def test_example(self, example):
        assert local_symmetry_test(example.nabla_r).passed
        assert local_phi_symmetry_test(example.s, example.nabla_r).passed

    def test_heisenberg_is_phi_symmetric_only(self, heisenberg):
        assert not local_symmetry_test(heisenberg.nabla_r).passed
        assert local_phi_symmetry_test(heisenberg.s, heisenberg.nabla_r).passed


class TestParallelRicci:

    @pytest.mark.parametrize("model", ["example", "heisenberg"])
    def test_pass_on_quasi_para_sasakian_models(self, model, request):
        data = request.getfixturevalue(model)
        assert eta_parallel_ricci_test(data.s, data.conn, data.cb).passed
        assert cyclic_parallel_ricci_test(data.conn, data.cb).passed

    def test_corrupted_ricci(self, heisenberg):
        cb = with_extra_ricci(heisenberg.cb, 0, 0)
        eta_parallel = eta_parallel_ricci_test(heisenberg.s, heisenberg.conn, cb)
        cyclic = cyclic_parallel_ricci_test(heisenberg.conn, cb)
        assert not eta_parallel.passed and eta_parallel.witness.residual != 0
        assert not cyclic.passed and cyclic.witness.residual != 0

    def test_any_symmetric_ricci_is_cyclic_parallel_on_example(self, example):
        assert cyclic_parallel_ricci_test(example.conn, with_extra_ricci(example.cb, 0, 1)).passed


class TestThreeDimensionalForms:

    @pytest.mark.parametrize("model", ["example", "heisenberg"])
    def test_all_forms_hold(self, model, request):
        data = request.getfixturevalue(model)
        results = verify_three_dimensional_forms(data.s, data.cb, conn=data.conn)
        assert list(results) == ["ricci_decomposition_3d", "ricci_operator_xi_3d", "ricci_form_3d",
                                 "curvature_form_3d"]
        for report in results.values():
            assert report.passed, report.describe()

    def test_non_quasi_para_sasakian_keeps_decomposition_only(self, abelian):
        results = verify_three_dimensional_forms(abelian.s, abelian.cb, conn=abelian.conn)
        assert results["ricci_decomposition_3d"].passed
        assert results["ricci_operator_xi_3d"] is None
        assert results["ricci_form_3d"] is None
        assert results["curvature_form_3d"] is None

    def test_corrupted_ricci_breaks_the_ricci_form(self, heisenberg):
        results = verify_three_dimensional_forms(heisenberg.s, with_extra_ricci(heisenberg.cb, 0, 0), qps=True)
        assert not results["ricci_form_3d"].passed
        assert results["ricci_form_3d"].witness.index == (1, 1)
        assert not results["ricci_decomposition_3d"].passed

    def test_five_dimensions_refused(self, heisenberg5):
        with pytest.raises(WrongDimension):
            verify_three_dimensional_forms(heisenberg5.s, heisenberg5.cb)


def facts(**overrides) -> CurvatureFacts:
    values = dict(dim=3, qps=True, normal=True, para_sasakian=False, lie_invariant=True, contact_sign_neg=True,
                  scal=Fraction(-6), constant_curvature=Fraction(-1), locally_symmetric=True, semisymmetric=True,
                  ricci_semisymmetric=True, phi_symmetric=True, eta_parallel=True, cyclic_parallel=True,
                  holomorphic_h=Fraction(-1), holomorphic_matches=True, eta_einstein_exact=True,
                  eta_einstein_coefficients=(Fraction(-2), Fraction(0)), bochner_zero=True, weyl_zero=None)
    values.update(overrides)
    return CurvatureFacts(**values)


class TestImplications:

    def test_check_logic(self):
        assert ImplicationCheck("a", IMPLIES, "", True, False, False).verified
        assert not ImplicationCheck("a", IMPLIES, "", True, True, False).verified
        assert ImplicationCheck("a", IFF, "", True, False, False).verified
        assert not ImplicationCheck("a", IFF, "", True, False, True).verified
        skipped = ImplicationCheck("a", IMPLIES, "", False, True, False)
        assert skipped.verified and skipped.status == "skipped"

    def test_space_form_facts_verify_everything(self):
        checks = evaluate_implications(facts())
        assert len(checks) == 15
        assert all(check.verified for check in checks)
        skipped = [check.name for check in checks if not check.applicable]
        assert skipped == ["conformally_flat_space_form"]

    def test_heisenberg_like_facts(self):
        checks = {c.name: c for c in evaluate_implications(facts(
            scal=Fraction(2), constant_curvature=None, locally_symmetric=False, semisymmetric=False,
            ricci_semisymmetric=False, holomorphic_h=Fraction(3), eta_einstein_coefficients=(Fraction(2), Fraction(-4))))}
        assert all(check.verified for check in checks.values())
        assert checks["ricci_semisymmetric_space_form"].status == "pass"
        assert not checks["ricci_semisymmetric_space_form"].hypothesis
        assert checks["holomorphic_eta_einstein"].conclusion

    def test_counterexample_is_caught(self):
        checks = {c.name: c for c in evaluate_implications(facts(ricci_semisymmetric=True, scal=Fraction(2),
                                                                  constant_curvature=None))}
        assert checks["ricci_semisymmetric_space_form"].status == "fail"
        assert checks["space_form_iff_scal"].status == "pass"

    def test_undetermined_holomorphic_curvature_skips_the_equivalence(self):
        checks = {c.name: c for c in evaluate_implications(facts(
            holomorphic_h=None, holomorphic_matches=False, eta_einstein_exact=False, eta_einstein_coefficients=None))}
        assert not checks["holomorphic_iff_einstein_bochner_flat"].applicable
        assert checks["holomorphic_eta_einstein"].applicable
        assert not checks["holomorphic_eta_einstein"].hypothesis
        assert all(check.verified for check in checks.values())

    def test_wrong_coefficients_fail(self):
        checks = {c.name: c for c in evaluate_implications(facts(
            eta_einstein_coefficients=(Fraction(-1), Fraction(-1))))}
        assert checks["holomorphic_eta_einstein"].status == "fail"

    def test_three_dimensional_checks_skip_elsewhere(self):
        checks = evaluate_implications(facts(dim=5, weyl_zero=False))
        by_name = {c.name: c for c in checks}
        assert not by_name["space_form_iff_scal"].applicable
        assert by_name["conformally_flat_space_form"].applicable
        assert by_name["conformally_flat_space_form"].verified
