import json
from math import gcd

import pytest
from hypothesis import given, strategies as st

from sasakijoin.brieskorn import SasakiType
from sasakijoin.errors import InvalidInput, TypeMismatch, UnknownInvariant, Unsupported
from sasakijoin.join import (
    POINCARE_SUMMARY,
    JoinSpec,
    LinkSummary,
    Pi1Kind,
    Ring,
    contact_c1,
    eta_einstein_plan,
    h2_rank,
    join_report,
    join_smooth,
    pi1_descriptor,
    relative_indices,
    ring_prediction,
    sasaki_einstein_plan,
    sphere_summary,
    summarize_brieskorn,
    summarize_hypersurface,
)
from sasakijoin.search import gomez_series
from sasakijoin.whlink import analyze_poly

M237 = summarize_brieskorn((2, 3, 7))
M51113 = summarize_brieskorn((5, 11, 13))
ROW2 = summarize_hypersurface(analyze_poly("z0^12+z1^6+z2^4+z3^2*z0"))


def test_poincare_summary():
    s = POINCARE_SUMMARY
    assert (s.upsilon, s.index, s.fano_index, s.d_total) == (30, -1, 1, 30)
    assert s.is_poincare and s.is_homology_sphere and not s.is_simply_connected
    assert s.type is SasakiType.POSITIVE


def test_sphere_summary():
    s = sphere_summary(5)
    assert (s.upsilon, s.index, s.fano_index, s.b2) == (1, -3, 3, 0)
    assert s.is_standard_sphere
    with pytest.raises(InvalidInput):
        sphere_summary(4)


def test_summarize_standard_sphere_unsupported():
    with pytest.raises(Unsupported):
        summarize_brieskorn((1, 2, 3))


def test_hypersurface_summary():
    assert ROW2.dim == 5 and ROW2.b2 == 1 and ROW2.upsilon == 22
    assert ROW2.is_simply_connected and ROW2.type is SasakiType.NEGATIVE


def test_summary_json_round_trip(tmp_path):
    for s in (POINCARE_SUMMARY, M237, ROW2, sphere_summary(7)):
        assert LinkSummary.from_json(json.loads(json.dumps(s.to_json()))) == s
        path = tmp_path / "s.json"
        path.write_text(json.dumps(s.to_json()))
        assert LinkSummary.load(path) == s


@pytest.mark.parametrize("base, patch", [
    (POINCARE_SUMMARY, {"dim": 4}),
    (POINCARE_SUMMARY, {"upsilon": 0}),
    (M237, {"poincare": True}),
])
def test_summary_validation(base, patch):
    with pytest.raises(InvalidInput):
        LinkSummary.from_json({**base.to_json(), **patch})


def test_join_spec_validation():
    with pytest.raises(InvalidInput):
        JoinSpec(M237, M51113, 2, 4)
    with pytest.raises(InvalidInput):
        JoinSpec(M237, M51113, 0, 1)
    assert JoinSpec(M237, sphere_summary(5), 1, 1).dim == 7


@pytest.mark.parametrize("k, l, smooth", [(1, 1, True), (1, 2, True), (7, 1, True), (2, 1, False), (3, 1, False), (5, 4, False)])
def test_smooth_poincare_s3(k, l, smooth):
    # gcd(30 l, k) = 1
    assert join_smooth(JoinSpec(POINCARE_SUMMARY, sphere_summary(3), k, l)) is smooth


@given(st.integers(1, 60), st.integers(1, 60))
def test_smooth_matches_formula(k, l):
    if gcd(k, l) != 1:
        return
    s = JoinSpec(M237, M51113, k, l)
    assert join_smooth(s) == (gcd(42 * l, 715 * k) == 1)


def test_contact_c1():
    assert contact_c1(-1, -2, 1, 2) == 0
    assert contact_c1(1, 452, 452, 1) == 452 * 452 - 1


@given(st.integers(-500, 500).filter(bool), st.integers(-500, 500).filter(bool))
def test_relative_indices_kill_c1(i1, i2):
    if (i1 > 0) != (i2 > 0):
        with pytest.raises(TypeMismatch):
            relative_indices(i1, i2)
        return
    k, l = relative_indices(i1, i2)
    assert k > 0 and l > 0 and gcd(k, l) == 1
    assert contact_c1(i1, i2, k, l) == 0


def test_relative_indices_zero():
    with pytest.raises(InvalidInput):
        relative_indices(0, 3)


def test_eta_einstein_plan_237():
    plan = eta_einstein_plan(M237, M51113)
    assert (plan.k, plan.l) == (1, 452)
    r = join_report(plan)
    assert r.smooth and r.c1_coeff == 0 and r.eta_einstein and r.lorentzian_se
    assert r.pi1.kind is Pi1Kind.ZL_EXTENSION and r.pi1.l == 452
    assert r.h2_rank == 1 and r.ring is Ring.INTEGRAL_S2xS


def test_eta_einstein_plan_with_series():
    n = summarize_hypersurface(analyze_poly(gomez_series(2, 9).poly))
    plan = eta_einstein_plan(summarize_brieskorn((5, 7, 11)), n)
    assert (plan.k, plan.l) == (218, 1)
    assert join_smooth(plan)


def test_eta_einstein_plan_type_mismatch():
    with pytest.raises(TypeMismatch):
        eta_einstein_plan(POINCARE_SUMMARY, M237)


def test_eta_einstein_plan_not_applicable():
    # shared factor 7 in the products
    assert eta_einstein_plan(M237, summarize_brieskorn((5, 7, 11))) is None


def test_sasaki_einstein_plan():
    plan = sasaki_einstein_plan(sphere_summary(3))
    assert (plan.k, plan.l) == (1, 2)
    r = join_report(plan)
    assert r.smooth and r.c1_coeff == 0 and r.sasaki_einstein
    assert r.pi1.kind is Pi1Kind.ICOSAHEDRAL_OR_BINARY
    assert r.ring is Ring.INTEGRAL_S2xS


def test_sasaki_einstein_plan_rejects():
    # only gcd(30 I_F, upsilon) matters, and a sphere has upsilon = 1
    assert sasaki_einstein_plan(sphere_summary(5)).l == 3
    assert sasaki_einstein_plan(POINCARE_SUMMARY) is None
    assert sasaki_einstein_plan(M237) is None


def test_report_not_smooth_has_no_metrics():
    r = join_report(JoinSpec(POINCARE_SUMMARY, sphere_summary(3), 2, 1))
    assert not r.smooth
    assert not (r.csc_ray or r.eta_einstein or r.lorentzian_se or r.sasaki_einstein)


def test_w2():
    r = join_report(JoinSpec(POINCARE_SUMMARY, sphere_summary(3), 1, 1))
    assert r.c1_coeff == -2 + 1 and r.w2_nonzero


@pytest.mark.parametrize("m, l, kind", [
    (POINCARE_SUMMARY, 1, Pi1Kind.ICOSAHEDRAL),
    (POINCARE_SUMMARY, 2, Pi1Kind.ICOSAHEDRAL_OR_BINARY),
    (M237, 3, Pi1Kind.ZL_EXTENSION),
    (sphere_summary(3), 5, Pi1Kind.TRIVIAL),
])
def test_pi1(m, l, kind):
    d = pi1_descriptor(m, l)
    assert d.kind is kind
    assert d.perfect is (kind is not Pi1Kind.TRIVIAL)


def test_pi1_unsupported():
    with pytest.raises(Unsupported):
        pi1_descriptor(ROW2, 1)


def test_h2_rank():
    assert h2_rank(JoinSpec(M237, ROW2, 1, 1)) == 2
    with pytest.raises(Unsupported):
        h2_rank(JoinSpec(ROW2, M237, 1, 1))
    seven = summarize_hypersurface(analyze_poly("z0^3+z1^3+z2^3+z3^3+z4^2"))
    with pytest.raises(UnknownInvariant):
        h2_rank(JoinSpec(M237, seven, 1, 1))


@pytest.mark.parametrize("r, k, l, ring", [
    (2, 1, 1, Ring.INTEGRAL_S2xS), (1, 3, 2, Ring.INTEGRAL_S2xS), (2, 1, 3, Ring.RATIONAL_S2xS),
])
def test_ring_prediction(r, k, l, ring):
    assert ring_prediction(r, k, l) is ring


def test_ring_prediction_invalid():
    with pytest.raises(InvalidInput):
        ring_prediction(0, 1, 1)


def test_ring_hypersurface_second_factor():
    assert join_report(JoinSpec(M237, ROW2, 1, 1)).ring is Ring.H2_SPLIT_ONLY
