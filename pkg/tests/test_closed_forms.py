from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from horadam_sums.closed_forms import (
    ClosedFormReport,
    SumSpec,
    ap_sum_closed,
    applicable_routes,
    evaluate_route,
    horadam_ledin_explicit,
    ledin_constants_explicit,
    omega_closed,
    p_polys_explicit,
    q_power_sum_closed,
    restricted_ledin_explicit,
    s_closed,
    t_closed,
    uv_closed,
    weighted_ap_closed,
)
from horadam_sums.errors import DegenerateDenominator, GuardViolation
from horadam_sums.ledin import (
    ck_shifted_recursive,
    horadam_ledin_recursive,
    p_polys_recursive,
)
from horadam_sums.polynomials import Polynomial
from horadam_sums.sequences import (
    FIBONACCI,
    JACOBSTHAL,
    LUCAS,
    PELL,
    HoradamParams,
    horadam_term,
    lucas_v_term,
    u_params,
    v_params,
)

GENERIC = HoradamParams(Fraction(3, 2), -5, Fraction(7, 3), Fraction(2, 5))


def _direct_power_sum(x, m, n):
    """Literal sum_{k=0}^{n} k^m x^k with 0^0 = 1; the Hsu-Tan oracle."""
    return sum((Fraction(k) ** m * Fraction(x) ** k for k in range(n + 1)), Fraction(0))


def _brute(spec: SumSpec) -> Fraction:
    """Local loop oracle (kept separate from the package's brute_sum)."""
    total = Fraction(0)
    v_h = lucas_v_term(spec.params, spec.h)
    for k in range(1, spec.n + 1):
        term = k ** spec.m * horadam_term(spec.params, spec.h * k + spec.r)
        if spec.weighted:
            term /= v_h ** k
        total += term
    return total


# --- geometric power sum -----------------------------------------------------

def test_power_sum_examples():
    assert q_power_sum_closed(2, 0, 3) == 15
    assert q_power_sum_closed(2, 1, 2) == 10
    assert q_power_sum_closed(3, 0, 0) == 1  # the k=0 term, 0^0 = 1


def test_power_sum_guards():
    with pytest.raises(GuardViolation):
        q_power_sum_closed(0, 1, 3)
    with pytest.raises(GuardViolation):
        q_power_sum_closed(1, 1, 3)
    with pytest.raises(GuardViolation):
        q_power_sum_closed(Fraction(2, 2), 0, 1)


def test_power_sum_matches_direct_sum():
    for x in (2, Fraction(1, 2), -3, Fraction(5, 7)):
        for m in range(9):
            for n in range(31):
                assert q_power_sum_closed(x, m, n) == _direct_power_sum(x, m, n)


@given(
    x=st.fractions(max_numerator=9, max_denominator=5).filter(lambda v: v not in (0, 1)),
    m=st.integers(0, 6),
    n=st.integers(0, 20),
)
@settings(max_examples=80, deadline=None)
def test_power_sum_property(x, m, n):
    assert q_power_sum_closed(x, m, n) == _direct_power_sum(x, m, n)


# --- Fibonacci / Lucas closed forms -------------------------------------------

def test_s_t_closed_examples():
    assert s_closed(0, 5, 0) == 12
    assert s_closed(1, 4, 0) == 21  # 4 F_6 + F_3 - F_7
    assert t_closed(0, 3, 0) == 8  # -2 + L_5 - L_1


def test_s_t_closed_against_brute():
    for m in range(5):
        for r in (-6, -1, 0, 4):
            for n in range(20):
                assert s_closed(m, n, r) == _brute(SumSpec(FIBONACCI, m, n, r))
                assert t_closed(m, n, r) == _brute(SumSpec(LUCAS, m, n, r))


def test_p_polys_explicit_examples():
    one = Polynomial([1])
    assert p_polys_explicit(0) == (one, one)
    assert p_polys_explicit(1) == (Polynomial([-1, 1]), Polynomial([-2, 1]))
    assert p_polys_explicit(3) == p_polys_recursive(3)


def test_ledin_constants_explicit_examples():
    assert ledin_constants_explicit(0, 0) == (-1, -3)
    assert ledin_constants_explicit(1, 0) == (2, 4)
    c, _ = ledin_constants_explicit(0, 2)
    assert c == -3


def test_ledin_constants_explicit_matches_recursive():
    for m in range(7):
        for r in range(-8, 9):
            assert ledin_constants_explicit(m, r) == ck_shifted_recursive(m, r)


# --- p = 1 closed forms --------------------------------------------------------

def test_omega_examples():
    assert omega_closed(0, 5, FIBONACCI) == 12
    assert omega_closed(1, 3, u_params(-2)) == 12
    assert omega_closed(0, 0, v_params(Fraction(2, 3))) == 0


def test_omega_requires_p_equal_one():
    with pytest.raises(GuardViolation):
        omega_closed(1, 3, PELL)


def test_omega_general_seeds_against_brute():
    params = HoradamParams(Fraction(3, 2), -5, 1, Fraction(2, 3))
    for m in range(5):
        for n in range(15):
            assert omega_closed(m, n, params) == _brute(SumSpec(params, m, n))


def test_uv_examples():
    assert uv_closed(0, 4, -1, "u") == 7
    assert uv_closed(0, 3, -1, "v") == 8
    assert uv_closed(1, 3, -2, "u") == 12


def test_uv_matches_omega_at_seed_parameters():
    for q in (-1, -2, Fraction(2, 3)):
        for m in range(5):
            for n in range(12):
                assert uv_closed(m, n, q, "u") == omega_closed(m, n, u_params(q))
                assert uv_closed(m, n, q, "v") == omega_closed(m, n, v_params(q))


def test_uv_rejects_bad_kind():
    with pytest.raises(ValueError):
        uv_closed(0, 1, -1, "w")


# --- weighted and arithmetic-progression forms ---------------------------------

def test_weighted_examples():
    assert weighted_ap_closed(SumSpec(FIBONACCI, 0, 2, 0, 2, True)) == Fraction(2, 3)
    assert weighted_ap_closed(SumSpec(LUCAS, 0, 0, 0, 3, True)) == 0
    # h=1, p=1 makes V_1 = 1, so the weight disappears and omega applies
    params = HoradamParams(0, 1, 1, -2)
    spec = SumSpec(params, 1, 3, 0, 1, True)
    assert weighted_ap_closed(spec) == omega_closed(1, 3, params)


def test_weighted_guard_vh_zero():
    params = HoradamParams(0, 1, 2, 2)  # V_2 = p^2 - 2q = 0
    with pytest.raises(GuardViolation):
        weighted_ap_closed(SumSpec(params, 0, 3, 0, 2, True))


def test_weighted_against_brute():
    for params in (FIBONACCI, PELL, GENERIC):
        for h in (1, 2, 3):
            for m in range(4):
                for n in range(10):
                    spec = SumSpec(params, m, n, -2, h, True)
                    assert weighted_ap_closed(spec) == _brute(spec)


def test_ap_examples():
    assert ap_sum_closed(SumSpec(FIBONACCI, 0, 3, 0, 2)) == 12  # F_2 + F_4 + F_6
    assert ap_sum_closed(SumSpec(FIBONACCI, 1, 4, 0, 1)) == s_closed(1, 4, 0)
    assert ap_sum_closed(SumSpec(PELL, 0, 0, 3, 2)) == 0


def test_ap_guard_denominator():
    degenerate = HoradamParams(0, 1, 3, 2)  # 1 - V_1 + q = 1 - 3 + 2 = 0
    with pytest.raises(DegenerateDenominator):
        ap_sum_closed(SumSpec(degenerate, 0, 3, 0, 1))
    with pytest.raises(DegenerateDenominator):
        ap_sum_closed(SumSpec(HoradamParams(1, 1, 2, 1), 1, 5, 0, 2))


def test_ap_reduces_to_ledin_route_at_h1():
    for params in (FIBONACCI, LUCAS, PELL, JACOBSTHAL, GENERIC):
        for m in range(4):
            for r in (-3, 0, 2):
                form = horadam_ledin_recursive(m, r, params)
                for n in range(12):
                    assert ap_sum_closed(SumSpec(params, m, n, r, 1)) == form.evaluate(n)


def test_ap_against_brute_h_up_to_3():
    for params in (FIBONACCI, JACOBSTHAL, GENERIC):
        for h in (2, 3):
            for m in range(4):
                for n in range(10):
                    spec = SumSpec(params, m, n, 1, h)
                    assert ap_sum_closed(spec) == _brute(spec)


def test_wrong_weight_flag_rejected():
    with pytest.raises(ValueError):
        ap_sum_closed(SumSpec(FIBONACCI, 0, 1, 0, 1, True))
    with pytest.raises(ValueError):
        weighted_ap_closed(SumSpec(FIBONACCI, 0, 1, 0, 1, False))


# --- explicit Ledin forms -------------------------------------------------------

def test_explicit_form_examples():
    form = horadam_ledin_explicit(0, 0, FIBONACCI)
    assert (form.p1, form.p2, form.constant) == (Polynomial([1]), Polynomial([1]), -1)
    form = horadam_ledin_explicit(1, 0, FIBONACCI)
    assert (form.p1, form.p2, form.constant) == (Polynomial([-1, 1]), Polynomial([-2, 1]), 2)


def test_explicit_equals_recursive():
    for params in (FIBONACCI, LUCAS, PELL, JACOBSTHAL, GENERIC):
        for m in range(6):
            for r in (-4, 0, 3):
                rec = horadam_ledin_recursive(m, r, params)
                exp = horadam_ledin_explicit(m, r, params)
                assert rec.p1 == exp.p1
                assert rec.p2 == exp.p2
                assert rec.constant == exp.constant


def test_restricted_equals_general_at_p1():
    for q in (-1, -2, Fraction(2, 3)):
        for seeds in ((0, 1), (2, 1), (Fraction(3, 2), -5)):
            params = HoradamParams(seeds[0], seeds[1], 1, q)
            for m in range(5):
                for r in (-2, 0, 1):
                    gen = horadam_ledin_explicit(m, r, params)
                    res = restricted_ledin_explicit(m, r, params)
                    assert (gen.p1, gen.p2, gen.constant) == (res.p1, res.p2, res.constant)


def test_restricted_requires_p1():
    with pytest.raises(GuardViolation):
        restricted_ledin_explicit(1, 0, PELL)


def test_explicit_degenerate_raises():
    with pytest.raises(DegenerateDenominator):
        horadam_ledin_explicit(0, 0, HoradamParams(0, 1, 3, 2))


# --- vanishing at n = 0 ---------------------------------------------------------

def test_all_closed_forms_vanish_at_n0():
    assert s_closed(3, 0, 5) == 0
    assert t_closed(2, 0, -3) == 0
    assert omega_closed(4, 0, u_params(-2)) == 0
    assert uv_closed(3, 0, Fraction(2, 3), "v") == 0
    for params in (FIBONACCI, GENERIC):
        for h in (1, 2):
            assert ap_sum_closed(SumSpec(params, 2, 0, 1, h)) == 0
            assert weighted_ap_closed(SumSpec(params, 2, 0, 1, h, True)) == 0


# --- spec plumbing ---------------------------------------------------------------

def test_sum_spec_validation():
    with pytest.raises(ValueError):
        SumSpec(FIBONACCI, -1, 0)
    with pytest.raises(ValueError):
        SumSpec(FIBONACCI, 0, -1)
    with pytest.raises(ValueError):
        SumSpec(FIBONACCI, 0, 0, 0, 0)


def test_applicable_routes():
    assert applicable_routes(SumSpec(FIBONACCI, 1, 4, 0, 2, True)) == ("weighted_ap",)
    fib_routes = applicable_routes(SumSpec(FIBONACCI, 1, 4))
    assert set(fib_routes) == {"ap", "ledin_recursive", "ledin_explicit", "fib_lucas_closed", "omega", "uv"}
    pell_routes = applicable_routes(SumSpec(PELL, 1, 4))
    assert set(pell_routes) == {"ap", "ledin_recursive", "ledin_explicit"}
    # shifted sums lose the r = 0 routes
    shifted = applicable_routes(SumSpec(FIBONACCI, 1, 4, r=2))
    assert "omega" not in shifted and "uv" not in shifted
    assert applicable_routes(SumSpec(FIBONACCI, 1, 4, h=3)) == ("ap",)


def test_evaluate_route_reports_nonzero_guards():
    spec = SumSpec(JACOBSTHAL, 2, 6, 1, 2)
    expected = _brute(spec)
    for route in applicable_routes(spec):
        report = evaluate_route(spec, route)
        assert isinstance(report, ClosedFormReport)
        assert report.value == expected
        assert all(g != 0 for g in report.guard_denominators)


def test_evaluate_route_rejects_inapplicable():
    with pytest.raises(ValueError):
        evaluate_route(SumSpec(PELL, 1, 4), "fib_lucas_closed")
    with pytest.raises(ValueError):
        evaluate_route(SumSpec(FIBONACCI, 1, 4, h=2), "ledin_recursive")


def test_guarded_routes_raise_not_misreport():
    degenerate = SumSpec(HoradamParams(0, 1, 3, 2), 1, 5)
    for route in ("ap", "ledin_recursive", "ledin_explicit"):
        with pytest.raises(DegenerateDenominator):
            evaluate_route(degenerate, route)
