"""Explicit Eulerian-number closed forms for the sum families.

Every operation here is a line-by-line transcript of one displayed formula,
with the same index ranges and the same Kronecker-delta correction terms; no
algebraic simplification is applied before evaluation, so a discrepancy
against the brute-force oracle localizes to a single display.  Negative
sequence subscripts produced by the formulas (U_{j-c-1}, w_{h(j-c)+r}, ...)
are served by the negative-index extension of the recurrence.

Conventions: 0^0 = 1 (Python's ** already does this for integer bases) and
the empty sum is 0, which together make every form vanish at n = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .errors import DegenerateDenominator, GuardViolation
from .ledin import LedinForm, evaluate_ledin_form, horadam_ledin_recursive
from .polynomials import Polynomial
from .rationals import as_fraction
from .sequences import (
    FIBONACCI,
    LUCAS,
    HoradamParams,
    eulerian_row,
    fibonacci,
    horadam_term,
    lucas,
    lucas_u,
    lucas_v_term,
    u_params,
    v_params,
)


def _delta(m: int) -> int:
    """Kronecker delta d_{m,0}."""
    return 1 if m == 0 else 0


def _eulerian_poly(i: int, x: Fraction) -> Fraction:
    """A_i(x) = sum_{j=0}^{i} A(i,j) x^j; A_0(x) = 1."""
    row = eulerian_row(i)
    return sum((row[j] * x ** j for j in range(i + 1)), Fraction(0))


def q_power_sum_closed(x, m: int, n: int) -> Fraction:
    """sum_{k=0}^{n} k^m x^k for rational x outside {0, 1}.

    Equals -n^m x^{n+1}/(1-x) + A_m(x)/(1-x)^{m+1}
           - sum_{s=1}^{m} x^n C(m,s) n^{m-s} A_s(x)/(1-x)^{s+1}.
    """
    x = as_fraction(x)
    if x == 0 or x == 1:
        raise GuardViolation(f"x = {x}: the geometric power sum form needs x not in {{0, 1}}")
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    one_minus_x = 1 - x
    total = -(n ** m) * x ** (n + 1) / one_minus_x
    total += _eulerian_poly(m, x) / one_minus_x ** (m + 1)
    x_n = x ** n
    for s in range(1, m + 1):
        total -= x_n * comb(m, s) * n ** (m - s) * _eulerian_poly(s, x) / one_minus_x ** (s + 1)
    return total


def _fib_lucas_closed(m: int, n: int, r: int, term: Callable[[int], Fraction]) -> Fraction:
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    total = -_delta(m) * term(r)
    total += n ** m * term(n + r + 2)
    row_m = eulerian_row(m)
    total += (-1) ** (m + 1) * sum(
        (row_m[j] * term(j + m + r + 1) for j in range(m + 1)), Fraction(0)
    )
    for s in range(1, m + 1):
        row_s = eulerian_row(s)
        inner = sum(
            (row_s[j] * term(j + n + s + r + 1) for j in range(1, s + 1)), Fraction(0)
        )
        total -= (-1) ** (s + 1) * comb(m, s) * n ** (m - s) * inner
    return total


def s_closed(m: int, n: int, r: int = 0) -> Fraction:
    """sum_{k=1}^{n} k^m F_{k+r} via the Eulerian-number polynomial form."""
    return _fib_lucas_closed(m, n, r, fibonacci)


def t_closed(m: int, n: int, r: int = 0) -> Fraction:
    """sum_{k=1}^{n} k^m L_{k+r} via the Eulerian-number polynomial form."""
    return _fib_lucas_closed(m, n, r, lucas)


@lru_cache(maxsize=None)
def p_polys_explicit(m: int) -> tuple[Polynomial, Polynomial]:
    """P1 and P2 directly from Eulerian-number coefficient sums.

    P1(m,n) = n^m + sum_{s=1}^{m} (-1)^s C(m,s) n^{m-s} sum_{j=1}^{s} A(s,j) F_{j+s},
    P2 likewise with F_{j+s+1}.  Coefficientwise equal to p_polys_recursive.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    coeffs1 = [Fraction(0)] * (m + 1)
    coeffs2 = [Fraction(0)] * (m + 1)
    coeffs1[m] = Fraction(1)
    coeffs2[m] = Fraction(1)
    for s in range(1, m + 1):
        row = eulerian_row(s)
        inner1 = sum((row[j] * fibonacci(j + s) for j in range(1, s + 1)), Fraction(0))
        inner2 = sum((row[j] * fibonacci(j + s + 1) for j in range(1, s + 1)), Fraction(0))
        factor = (-1) ** s * comb(m, s)
        coeffs1[m - s] += factor * inner1
        coeffs2[m - s] += factor * inner2
    return Polynomial(coeffs1), Polynomial(coeffs2)


def ledin_constants_explicit(m: int, r: int = 0) -> tuple[Fraction, Fraction]:
    """C(m,r) and K(m,r) from single Eulerian sums.

    C(m,r) = -d_{m,0} F_r + (-1)^{m+1} sum_{j=0}^{m} A(m,j) F_{j+m+r+1},
    K(m,r) likewise with Lucas numbers.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    row = eulerian_row(m)
    sign = (-1) ** (m + 1)
    c = -_delta(m) * fibonacci(r) + sign * sum(
        (row[j] * fibonacci(j + m + r + 1) for j in range(m + 1)), Fraction(0)
    )
    k = -_delta(m) * lucas(r) + sign * sum(
        (row[j] * lucas(j + m + r + 1) for j in range(m + 1)), Fraction(0)
    )
    return c, k


def omega_closed(m: int, n: int, params: HoradamParams) -> Fraction:
    """sum_{k=1}^{n} k^m w_k for a p = 1 sequence, via the u/v-weighted form.

    Needs the negative-index term w_{-1} = (a - b)/q at j = 0.  Raises
    GuardViolation unless params.p == 1.
    """
    if params.p != 1:
        raise GuardViolation(f"p = {params.p}: this closed form needs p = 1")
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    q = params.q

    def w(j: int) -> Fraction:
        return horadam_term(params, j)

    def u(j: int) -> Fraction:
        return horadam_term(u_params(q), j)

    def v(j: int) -> Fraction:
        return horadam_term(v_params(q), j)

    total = -_delta(m) * params.a
    total -= n ** m * w(n + 2) / q
    row_m = eulerian_row(m)
    head = sum((row_m[j] * w(j) for j in range(m + 1)), Fraction(0))
    head_diff = sum(
        (row_m[j] * (w(j + 1) - q * w(j - 1)) for j in range(m + 1)), Fraction(0)
    )
    q_m1 = q ** (m + 1)
    total += v(m + 1) / (2 * q_m1) * head
    total += u(m + 1) / (2 * q_m1) * head_diff
    for s in range(1, m + 1):
        row_s = eulerian_row(s)
        inner = sum((row_s[j] * w(j) for j in range(1, s + 1)), Fraction(0))
        inner_diff = sum(
            (row_s[j] * (w(j + 1) - q * w(j - 1)) for j in range(1, s + 1)), Fraction(0)
        )
        factor = n ** (m - s) * comb(m, s) / (2 * q ** (s + 1))
        total -= factor * v(n + s + 1) * inner
        total -= factor * u(n + s + 1) * inner_diff
    return total


def uv_closed(m: int, n: int, q, kind: str) -> Fraction:
    """sum_{k=1}^{n} k^m u_k or k^m v_k for the p = 1 Lucas sequences.

    -d_{m,0} x_0 - n^m x_{n+2}/q + q^{-(m+1)} sum_j A(m,j) x_{j+m+1}
    - sum_s q^{-(s+1)} C(m,s) n^{m-s} sum_{j>=1} A(s,j) x_{j+n+s+1}.
    """
    if kind == "u":
        params = u_params(q)
    elif kind == "v":
        params = v_params(q)
    else:
        raise ValueError(f"kind must be 'u' or 'v', got {kind!r}")
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    q = params.q

    def x(j: int) -> Fraction:
        return horadam_term(params, j)

    total = -_delta(m) * x(0)
    total -= n ** m * x(n + 2) / q
    row_m = eulerian_row(m)
    total += sum((row_m[j] * x(j + m + 1) for j in range(m + 1)), Fraction(0)) / q ** (m + 1)
    for s in range(1, m + 1):
        row_s = eulerian_row(s)
        inner = sum((row_s[j] * x(j + n + s + 1) for j in range(1, s + 1)), Fraction(0))
        total -= comb(m, s) * n ** (m - s) * inner / q ** (s + 1)
    return total


@dataclass(frozen=True)
class SumSpec:
    """One sum instance: sum_{k=1}^{n} k^m w_{hk+r}, times V_h^{-k} if weighted."""

    params: HoradamParams
    m: int
    n: int
    r: int = 0
    h: int = 1
    weighted: bool = False

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        if self.h < 1:
            raise ValueError("h must be >= 1")


def weighted_ap_closed(spec: SumSpec) -> Fraction:
    """sum_{k=1}^{n} V_h^{-k} k^m w_{hk+r}, in closed form.

    Requires V_h != 0 (GuardViolation otherwise); q != 0 holds by construction.
    """
    if not spec.weighted:
        raise ValueError("weighted_ap_closed needs a weighted SumSpec")
    params, m, n, r, h = spec.params, spec.m, spec.n, spec.r, spec.h
    v_h = lucas_v_term(params, h)
    if v_h == 0:
        raise GuardViolation(f"V_{h} = 0: the weighted sum is undefined")
    q_h = params.q ** h

    def w(j: int) -> Fraction:
        return horadam_term(params, j)

    total = -_delta(m) * w(r)
    total -= n ** m * w(h * (n + 2) + r) / (q_h * v_h ** n)
    row_m = eulerian_row(m)
    total += (v_h / q_h) ** (m + 1) * sum(
        (row_m[j] * w(h * (j + m + 1) + r) / v_h ** j for j in range(m + 1)), Fraction(0)
    )
    for s in range(1, m + 1):
        row_s = eulerian_row(s)
        inner = sum(
            (
                row_s[j] * w(h * (j + n + s + 1) + r) / v_h ** (j + n - s - 1)
                for j in range(1, s + 1)
            ),
            Fraction(0),
        )
        total -= comb(m, s) * n ** (m - s) / q_h ** (s + 1) * inner
    return total


def ap_sum_closed(spec: SumSpec) -> Fraction:
    """sum_{k=1}^{n} k^m w_{hk+r} for indices in arithmetic progression.

    The denominator 1 - V_h + q^h must not vanish (DegenerateDenominator
    otherwise; at h = 1 this is the q - p + 1 = 0 exclusion again).
    """
    if spec.weighted:
        raise ValueError("ap_sum_closed needs an unweighted SumSpec")
    params, m, n, r, h = spec.params, spec.m, spec.n, spec.r, spec.h
    q_h = params.q ** h
    denom = 1 - lucas_v_term(params, h) + q_h
    if denom == 0:
        raise DegenerateDenominator(
            f"1 - V_{h} + q^{h} = 0: arithmetic-progression form undefined"
        )

    def w(j: int) -> Fraction:
        return horadam_term(params, j)

    total = -_delta(m) * w(r)
    total -= n ** m * (w(h * (n + 1) + r) - q_h * w(h * n + r)) / denom
    row_m = eulerian_row(m)
    head = Fraction(0)
    for c in range(m + 2):
        inner = sum((row_m[j] * w(h * (j - c) + r) for j in range(m + 1)), Fraction(0))
        head += (-1) ** c * comb(m + 1, c) * q_h ** c * inner
    total += head / denom ** (m + 1)
    for s in range(1, m + 1):
        row_s = eulerian_row(s)
        tail = Fraction(0)
        for c in range(s + 2):
            inner = sum(
                (row_s[j] * w(h * (j - c + n) + r) for j in range(s + 1)), Fraction(0)
            )
            tail += (-1) ** c * comb(s + 1, c) * q_h ** c * inner
        total -= comb(m, s) * n ** (m - s) / denom ** (s + 1) * tail
    return total


@lru_cache(maxsize=None)
def horadam_ledin_explicit(m: int, r: int, params: HoradamParams) -> LedinForm:
    """Ledin form with polynomials and constant given by explicit Eulerian sums.

    P1(m,n) = n^m q/(1-p+q)
              + q sum_s C(m,s) n^{m-s} (1-p+q)^{-(s+1)}
                  sum_c (-1)^c C(s+1,c) q^c sum_j A(s,j) U_{j-c-1},
    P2 likewise with U_{j-c} and leading term -n^m/(1-p+q); the constant is
    C(m,r) = -d_{m,0} w_r + (1-p+q)^{-(m+1)}
                  sum_c (-1)^c C(m+1,c) q^c sum_j A(m,j) w_{j-c+r}.

    Equal, coefficientwise and in the constant, to horadam_ledin_recursive.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    p, q = params.p, params.q
    denom = 1 - p + q
    if denom == 0:
        raise DegenerateDenominator("q - p + 1 = 0: excluded by Horadam definition")
    u_seq = lucas_u(p, q)

    def u(j: int) -> Fraction:
        return horadam_term(u_seq, j)

    coeffs1 = [Fraction(0)] * (m + 1)
    coeffs2 = [Fraction(0)] * (m + 1)
    coeffs1[m] = q / denom
    coeffs2[m] = -1 / denom
    for s in range(1, m + 1):
        row = eulerian_row(s)
        acc1 = Fraction(0)
        acc2 = Fraction(0)
        for c in range(s + 2):
            inner1 = sum((row[j] * u(j - c - 1) for j in range(s + 1)), Fraction(0))
            inner2 = sum((row[j] * u(j - c) for j in range(s + 1)), Fraction(0))
            sign_term = (-1) ** c * comb(s + 1, c) * q ** c
            acc1 += sign_term * inner1
            acc2 += sign_term * inner2
        factor = comb(m, s) / denom ** (s + 1)
        coeffs1[m - s] += q * factor * acc1
        coeffs2[m - s] -= factor * acc2

    row_m = eulerian_row(m)
    const = Fraction(0)
    for c in range(m + 2):
        inner = sum(
            (row_m[j] * horadam_term(params, j - c + r) for j in range(m + 1)),
            Fraction(0),
        )
        const += (-1) ** c * comb(m + 1, c) * q ** c * inner
    const = -_delta(m) * horadam_term(params, r) + const / denom ** (m + 1)
    return LedinForm(Polynomial(coeffs1), Polynomial(coeffs2), const, r, params)


@lru_cache(maxsize=None)
def restricted_ledin_explicit(m: int, r: int, params: HoradamParams) -> LedinForm:
    """Ledin form for p = 1 sequences, with 1/q^{s+1} denominators.

    P1(m,n) = n^m + q sum_s C(m,s) n^{m-s} q^{-(s+1)} sum_{j>=1} A(s,j) u_{j+s},
    P2(m,n) = -n^m/q - sum_s C(m,s) n^{m-s} q^{-(s+1)} sum_{j>=1} A(s,j) u_{j+s+1},
    C(m,r) = -d_{m,0} w_r + q^{-(m+1)} sum_j A(m,j) w_{j+m+1+r}.

    Coincides with horadam_ledin_explicit at p = 1; GuardViolation otherwise.
    """
    if params.p != 1:
        raise GuardViolation(f"p = {params.p}: the restricted form needs p = 1")
    if m < 0:
        raise ValueError("m must be non-negative")
    q = params.q
    u_seq = u_params(q)

    def u(j: int) -> Fraction:
        return horadam_term(u_seq, j)

    coeffs1 = [Fraction(0)] * (m + 1)
    coeffs2 = [Fraction(0)] * (m + 1)
    coeffs1[m] = Fraction(1)
    coeffs2[m] = Fraction(-1) / q
    for s in range(1, m + 1):
        row = eulerian_row(s)
        inner1 = sum((row[j] * u(j + s) for j in range(1, s + 1)), Fraction(0))
        inner2 = sum((row[j] * u(j + s + 1) for j in range(1, s + 1)), Fraction(0))
        factor = comb(m, s) / q ** (s + 1)
        coeffs1[m - s] += q * factor * inner1
        coeffs2[m - s] -= factor * inner2

    row_m = eulerian_row(m)
    const = sum(
        (row_m[j] * horadam_term(params, j + m + 1 + r) for j in range(m + 1)),
        Fraction(0),
    ) / q ** (m + 1)
    const -= _delta(m) * horadam_term(params, r)
    return LedinForm(Polynomial(coeffs1), Polynomial(coeffs2), const, r, params)


ROUTE_NAMES = (
    "ledin_recursive",
    "ledin_explicit",
    "fib_lucas_closed",
    "omega",
    "uv",
    "weighted_ap",
    "ap",
)


@dataclass(frozen=True)
class ClosedFormReport:
    """Value of one route together with the denominators it checked nonzero."""

    value: Fraction
    route: str
    guard_denominators: tuple[Fraction, ...]


def applicable_routes(spec: SumSpec) -> tuple[str, ...]:
    """Routes whose sum family matches the spec (guards not yet checked)."""
    if spec.weighted:
        return ("weighted_ap",)
    routes = ["ap"]
    if spec.h == 1:
        routes.extend(["ledin_recursive", "ledin_explicit"])
        if spec.params in (FIBONACCI, LUCAS):
            routes.append("fib_lucas_closed")
        if spec.params.p == 1 and spec.r == 0:
            routes.append("omega")
            if (spec.params.a, spec.params.b) in ((0, 1), (2, 1)):
                routes.append("uv")
    return tuple(routes)


def evaluate_route(spec: SumSpec, route: str) -> ClosedFormReport:
    """Evaluate one route for the spec; guard errors propagate uncaught."""
    if route not in applicable_routes(spec):
        raise ValueError(f"route {route!r} is not applicable to {spec}")
    params = spec.params
    if route == "ledin_recursive":
        form = horadam_ledin_recursive(spec.m, spec.r, params)
        value = evaluate_ledin_form(form, spec.n)
        guards = (params.q - params.p + 1,)
    elif route == "ledin_explicit":
        form = horadam_ledin_explicit(spec.m, spec.r, params)
        value = evaluate_ledin_form(form, spec.n)
        guards = (1 - params.p + params.q,)
    elif route == "fib_lucas_closed":
        closed = s_closed if params == FIBONACCI else t_closed
        value = closed(spec.m, spec.n, spec.r)
        guards = ()
    elif route == "omega":
        value = omega_closed(spec.m, spec.n, params)
        guards = (params.q,)
    elif route == "uv":
        kind = "u" if params.a == 0 else "v"
        value = uv_closed(spec.m, spec.n, params.q, kind)
        guards = (params.q,)
    elif route == "weighted_ap":
        value = weighted_ap_closed(spec)
        guards = (lucas_v_term(params, spec.h), params.q)
    elif route == "ap":
        value = ap_sum_closed(spec)
        guards = (1 - lucas_v_term(params, spec.h) + params.q ** spec.h,)
    else:
        raise ValueError(f"unknown route {route!r}")
    return ClosedFormReport(value, route, guards)
