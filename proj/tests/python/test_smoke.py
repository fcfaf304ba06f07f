"""Smoke tests for the pybind11 module."""

import math

import pytest

try:
    from eisarc import _core as ea
except ImportError:  # in-tree build: the module sits directly on PYTHONPATH
    import _core as ea


def test_eval_agreement():
    tau = ea.UpperHalfPoint(re=0.21, im=1.1)
    q = ea.eval_qexp_auto(12, tau)
    lat = ea.eval_lattice(12, tau, 50)
    assert abs(q.value - lat.value) / abs(q.value) < 1e-9
    assert q.abs_error_bound >= 0.0


def test_forced_zero_and_main_terms():
    v = ea.f_k(4, 2.0 * math.pi / 3.0)
    assert abs(v.real_part) < 1e-8
    m, n = ea.main_terms(12, math.pi / 2.0)
    assert n == pytest.approx(2.0 ** -6)
    assert m == pytest.approx(-2.0)


def test_scan_counts_match_budget():
    form = ea.FormSpec.power(2, 10)
    scan = ea.scan_and_refine(form)
    budget = ea.valence_budget(form.weight())
    assert scan.interior_count() == budget.interior == 1
    z = scan.zeros[0]
    assert math.pi / 2 < z.theta_hat < 2 * math.pi / 3
    assert z.residual < 1e-7


def test_sample_grid_and_counts():
    pts = ea.sample_points(ea.FormSpec.single(12))
    assert [p.m for p in pts] == [3, 4]
    assert ea.expected_count(ea.FormSpec.single(24)) == 3
    assert ea.m_odd_power(12, 2) == 7


def test_reduction():
    r = ea.reduce_to_fundamental_domain(ea.UpperHalfPoint(re=5.0, im=1.0))
    assert r.tau.re == pytest.approx(0.0)
    assert ea.in_fundamental_domain(r.tau)
    a, b, c, d = r.matrix
    assert a * d - b * c == 1


def test_verify_theorem_small():
    rep = ea.verify_theorem(ea.FormFamily.rsd, ea.IntRange(4, 20))
    assert rep.status == ea.CheckStatus.ok
    assert not rep.witnesses


def test_contract_errors():
    with pytest.raises(ValueError):
        ea.FormSpec.power(2, 8)
    with pytest.raises(ValueError):
        ea.eval_qexp(4, ea.UpperHalfPoint(re=0.0, im=0.3), 10)


def test_left_boundary_minus_form():
    form = ea.FormSpec.product(16, 14, ea.Sign.minus)
    scan = ea.locate_left_boundary(form)
    assert len(scan.zeros) == 1
    assert scan.zeros[0].y_hat == pytest.approx(1.2739541128606485, rel=1e-9)
