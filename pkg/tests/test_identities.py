"""Tests for the curvature identities of quasi-para-Sasakian models."""

from fractions import Fraction

import numpy as np
import pytest

from algebra.symmatrix import SymMatrix
from geometry.curvature import space_form_bundle
from identities.conformal import check_trace_free, pc_bochner, weyl_tensor, weyl_zero
from identities.einstein import (constant_curvature_test, detect_holomorphic_curvature, eta_einstein_fit,
                                 holomorphic_einstein_coefficients, para_holomorphic_model, space_form_residual)
from identities.xi_identities import verify_phi_curvature_identities, verify_xi_curvature_identities
from utils.errors import DegenerateDirection, DimensionTooSmall, NoNonNullHorizontalDirection, NotQuasiParaSasakian

QPS_MODELS = ["example", "heisenberg", "heisenberg5"]


def corrupted_ricci(cb):
    ricci = np.array(cb.ricci.components)
    ricci[0, 0] += 1
    return cb.with_ricci(ricci)


class TestXiIdentities:

    @pytest.mark.parametrize("model", QPS_MODELS)
    def test_all_pass(self, model, request):
        data = request.getfixturevalue(model)
        reports = verify_xi_curvature_identities(data.s, data.cb, data.nabla_r, data.conn)
        assert [r.identity_name for r in reports] == [
            "curvature_on_xi", "curvature_xi_slot", "ricci_on_xi", "xi_sectional_curvature",
            "nabla_curvature_on_xi",
        ]
        for report in reports:
            assert report.passed, report.describe()

    def test_non_quasi_para_sasakian_input_is_refused(self, abelian):
        with pytest.raises(NotQuasiParaSasakian):
            verify_xi_curvature_identities(abelian.s, abelian.cb, abelian.nabla_r, abelian.conn)

    def test_corrupted_ricci_breaks_ricci_on_xi(self, heisenberg):
        cb = heisenberg.cb
        ricci = np.array(cb.ricci.components)
        ricci[0, 2] += 1
        ricci[2, 0] += 1
        reports = verify_xi_curvature_identities(heisenberg.s, cb.with_ricci(ricci), heisenberg.nabla_r,
                                                 heisenberg.conn)
        by_name = {r.identity_name: r for r in reports}
        assert not by_name["ricci_on_xi"].passed
        assert by_name["ricci_on_xi"].witness.index == (1,)
        assert by_name["curvature_on_xi"].passed

    def test_null_horizontal_basis_leaves_out_xi_sectional_curvature(self, null_example):
        data = null_example
        reports = verify_xi_curvature_identities(data.s, data.cb, data.nabla_r, data.conn)
        assert [r.identity_name for r in reports] == [
            "curvature_on_xi", "curvature_xi_slot", "ricci_on_xi", "nabla_curvature_on_xi",
        ]
        for report in reports:
            assert report.passed, report.describe()


class TestPhiIdentities:

    @pytest.mark.parametrize("model", QPS_MODELS)
    def test_all_pass(self, model, request):
        data = request.getfixturevalue(model)
        for report in verify_phi_curvature_identities(data.s, data.cb, data.conn):
            assert report.passed, report.describe()

    def test_non_quasi_para_sasakian_input_is_refused(self, abelian):
        with pytest.raises(NotQuasiParaSasakian):
            verify_phi_curvature_identities(abelian.s, abelian.cb, abelian.conn)


class TestEtaEinstein:

    @pytest.mark.parametrize("model, a, b", [
        ("example", -2, 0),
        ("heisenberg", 2, -4),
        ("heisenberg5", 2, -6),
    ])
    def test_fit(self, model, a, b, request):
        data = request.getfixturevalue(model)
        fit = eta_einstein_fit(data.s, data.cb, conn=data.conn)
        assert (fit.a, fit.b) == (a, b)
        assert fit.exact
        assert fit.trace_report.passed

    def test_inexact_fit_has_no_trace_check(self, heisenberg):
        fit = eta_einstein_fit(heisenberg.s, corrupted_ricci(heisenberg.cb), qps=True)
        assert not fit.exact
        assert fit.trace_report is None

    def test_wrong_trace_is_reported(self, heisenberg):
        # Ric = 2g − 4η⊗η + η⊗η keeps the η-Einstein shape but breaks a + b = −2
        ricci = np.array(heisenberg.cb.ricci.components)
        ricci[2, 2] += 1
        fit = eta_einstein_fit(heisenberg.s, heisenberg.cb.with_ricci(ricci), qps=True)
        assert fit.exact
        assert (fit.a, fit.b) == (2, -3)
        assert not fit.trace_report.passed
        assert fit.trace_report.witness.residual == 1

    @pytest.mark.parametrize("n, h, expected", [
        (1, -1, (-2, 0)),
        (1, 3, (2, -4)),
        (2, 3, (2, -6)),
        (1, Fraction(1, 2), (Fraction(-1, 2), Fraction(-3, 2))),
    ])
    def test_holomorphic_coefficients(self, n, h, expected):
        assert holomorphic_einstein_coefficients(n, h) == expected


class TestConstantCurvature:

    def test_example_is_a_space_form(self, example, heisenberg):
        assert constant_curvature_test(example.cb) == -1
        assert space_form_residual(example.cb, -1).passed
        assert not space_form_residual(example.cb, 1).passed
        assert constant_curvature_test(heisenberg.cb) is None

    def test_synthetic_space_form(self):
        cb = space_form_bundle(SymMatrix.diagonal([-1, 1, 1, 1]), Fraction(2, 3))
        assert constant_curvature_test(cb) == Fraction(2, 3)

    def test_flat(self, abelian):
        assert constant_curvature_test(abelian.cb) == 0


class TestHolomorphicCurvature:

    def test_example(self, example):
        result = detect_holomorphic_curvature(example.s, example.cb, example.conn)
        assert result.h == -1
        assert result.matches_model
        assert result.direction_values == {1: -1, 2: -1}

    def test_heisenberg(self, heisenberg, heisenberg5):
        for data in (heisenberg, heisenberg5):
            result = detect_holomorphic_curvature(data.s, data.cb, data.conn)
            assert result.h == 3
            assert result.matches_model
        assert detect_holomorphic_curvature(heisenberg.s, heisenberg.cb).direction_values == {1: 3, 2: 3}

    def test_model_tensor_reproduces_curvature(self, example, heisenberg):
        assert para_holomorphic_model(example.s, -1).equals(example.cb.riemann)
        assert para_holomorphic_model(heisenberg.s, 3).equals(heisenberg.cb.riemann)
        assert not para_holomorphic_model(heisenberg.s, -1).equals(heisenberg.cb.riemann)

    def test_refuses_non_quasi_para_sasakian(self, abelian):
        with pytest.raises(NotQuasiParaSasakian):
            detect_holomorphic_curvature(abelian.s, abelian.cb)

    def test_null_horizontal_basis(self, null_example):
        data = null_example
        with pytest.raises(DegenerateDirection) as excinfo:
            detect_holomorphic_curvature(data.s, data.cb, data.conn)
        assert type(excinfo.value) is DegenerateDirection
        with pytest.raises(NoNonNullHorizontalDirection):
            eta_einstein_fit(data.s, data.cb, conn=data.conn)
        assert para_holomorphic_model(data.s, -1, data.conn).equals(data.cb.riemann)
        assert constant_curvature_test(data.cb) == -1


class TestConformal:

    def test_weyl_needs_four_dimensions(self, example):
        with pytest.raises(DimensionTooSmall):
            weyl_tensor(example.cb)

    def test_space_form_is_conformally_flat(self):
        cb = space_form_bundle(SymMatrix.diagonal([1, 1, -1, -1, 1]), -1)
        assert weyl_zero(cb).passed

    def test_heisenberg5_weyl_is_trace_free(self, heisenberg5):
        assert not weyl_zero(heisenberg5.cb).passed
        assert check_trace_free(weyl_tensor(heisenberg5.cb), heisenberg5.cb).passed

    def test_riemann_is_not_trace_free(self, heisenberg5):
        assert not check_trace_free(heisenberg5.cb.riemann4, heisenberg5.cb).passed

    @pytest.mark.parametrize("model, k", [("example", 2), ("heisenberg", 0)])
    def test_pc_bochner_vanishes(self, model, k, request):
        data = request.getfixturevalue(model)
        result = pc_bochner(data.s, data.cb, data.conn)
        assert result.k == k
        assert result.vanishes, result.report.describe()

    def test_pc_bochner_on_corrupted_bundle(self, example):
        result = pc_bochner(example.s, corrupted_ricci(example.cb), example.conn)
        assert not result.vanishes
        assert result.report.witness is not None
        assert result.tensor[0, 1, 0, 1] == Fraction(-1, 3)
