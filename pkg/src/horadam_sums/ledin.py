"""Recursive construction of Ledin forms.

The power sum over the first n terms decomposes as

    sum_{k=1}^{n} k^m w_{k+r} = P1(m,n)*w_{n+r} + P2(m,n)*w_{n+r+1} + C(m,r),

where P1 and P2 are degree-m polynomials in n and C(m,r) is a constant.  This
module builds all three by recursion in m over polynomial arithmetic: each
recursion step consumes every lower-m result, so results are cached in
append-only per-parameter lists.

The empty-sum convention makes the recursions self-starting: P1(0,n) = 1,
P2(0,n) = 1, C(0) = -1, K(0) = -3 fall out of the m = 0 instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DegenerateDenominator
from .polynomials import Polynomial
from .sequences import HoradamParams, fibonacci, horadam_term, lucas


def _check_nonneg(m: int) -> None:
    if m < 0:
        raise ValueError("m must be non-negative")


# Fibonacci/Lucas polynomials P1, P2 indexed by m.
_P1: list[Polynomial] = []
_P2: list[Polynomial] = []


def p_polys_recursive(m: int) -> tuple[Polynomial, Polynomial]:
    """P1(m, .) and P2(m, .) from the recursion

    P1(m,n) = (n+2)^m - sum_{j<m} C(m,j) * (2^{m-j}+1) * P1(j,n)

    and likewise P2 with (n+1)^m.  Both are monic of degree m.
    """
    _check_nonneg(m)
    while len(_P1) <= m:
        k = len(_P1)
        p1 = Polynomial.shifted_power(2, k)
        p2 = Polynomial.shifted_power(1, k)
        for j in range(k):
            c = comb(k, j) * (2 ** (k - j) + 1)
            p1 = p1 - c * _P1[j]
            p2 = p2 - c * _P2[j]
        _P1.append(p1)
        _P2.append(p2)
    return _P1[m], _P2[m]


_C: list[Fraction] = []
_K: list[Fraction] = []


def ck_constants_recursive(m: int) -> tuple[Fraction, Fraction]:
    """Constants C(m) and K(m) of the Fibonacci and Lucas sums.

    C(m) = -1 - sum_{j<m} C(m,j)*(2^{m-j}+1)*C(j)
    K(m) = -(2^{m+1}+1) - sum_{j<m} C(m,j)*(2^{m-j}+1)*K(j)
    """
    _check_nonneg(m)
    while len(_C) <= m:
        k = len(_C)
        c_k = Fraction(-1)
        k_k = Fraction(-(2 ** (k + 1) + 1))
        for j in range(k):
            w = comb(k, j) * (2 ** (k - j) + 1)
            c_k -= w * _C[j]
            k_k -= w * _K[j]
        _C.append(c_k)
        _K.append(k_k)
    return _C[m], _K[m]


_CK_SHIFTED: dict[int, tuple[list[Fraction], list[Fraction]]] = {}


def ck_shifted_recursive(m: int, r: int) -> tuple[Fraction, Fraction]:
    """Shifted constants C(m, r) and K(m, r); reduce to C(m), K(m) at r = 0.

    C(m,r) = -2^m F_r - F_{r+1} - sum_{j<m} C(m,j)*(2^{m-j}+1)*C(j,r)
    K(m,r) = -2^m L_r - L_{r+1} - sum_{j<m} C(m,j)*(2^{m-j}+1)*K(j,r)
    """
    _check_nonneg(m)
    lists = _CK_SHIFTED.get(r)
    if lists is None:
        lists = _CK_SHIFTED.setdefault(r, ([], []))
    c_list, k_list = lists
    f_r, f_r1 = fibonacci(r), fibonacci(r + 1)
    l_r, l_r1 = lucas(r), lucas(r + 1)
    while len(c_list) <= m:
        k = len(c_list)
        two_k = 2 ** k
        c_k = -two_k * f_r - f_r1
        k_k = -two_k * l_r - l_r1
        for j in range(k):
            w = comb(k, j) * (2 ** (k - j) + 1)
            c_k -= w * c_list[j]
            k_k -= w * k_list[j]
        c_list.append(c_k)
        k_list.append(k_k)
    return c_list[m], k_list[m]


def _degenerate_check(params: HoradamParams) -> Fraction:
    denom = params.q - params.p + 1
    if denom == 0:
        raise DegenerateDenominator(
            "q - p + 1 = 0: excluded by Horadam definition"
        )
    return denom


_HORADAM_POLYS: dict[tuple[Fraction, Fraction], tuple[list[Polynomial], list[Polynomial]]] = {}


def horadam_p_polys_recursive(m: int, params: HoradamParams) -> tuple[Polynomial, Polynomial]:
    """Horadam polynomials from the recursion

    (q-p+1)*P1(m,n) = (n+2)^m * q - sum_{j<m} C(m,j)*(2^{m-j} q - p)*P1(j,n)
    (q-p+1)*P2(m,n) = -(n+1)^m   - sum_{j<m} C(m,j)*(2^{m-j} q - p)*P2(j,n)

    They depend on (p, q) only; at (1, -1) they reproduce p_polys_recursive.
    """
    _check_nonneg(m)
    denom = _degenerate_check(params)
    p, q = params.p, params.q
    lists = _HORADAM_POLYS.get((p, q))
    if lists is None:
        lists = _HORADAM_POLYS.setdefault((p, q), ([], []))
    p1_list, p2_list = lists
    while len(p1_list) <= m:
        k = len(p1_list)
        rhs1 = q * Polynomial.shifted_power(2, k)
        rhs2 = -Polynomial.shifted_power(1, k)
        for j in range(k):
            c = comb(k, j) * (2 ** (k - j) * q - p)
            rhs1 = rhs1 - c * p1_list[j]
            rhs2 = rhs2 - c * p2_list[j]
        p1_list.append((1 / denom) * rhs1)
        p2_list.append((1 / denom) * rhs2)
    return p1_list[m], p2_list[m]


_HORADAM_CONSTANTS: dict[tuple[HoradamParams, int], list[Fraction]] = {}


def horadam_constant_recursive(m: int, r: int, params: HoradamParams) -> Fraction:
    """Shifted Horadam constant from

    (q-p+1)*C(m,r) = -2^m q w_r + w_{r+1} - sum_{j<m} C(m,j)*(2^{m-j} q - p)*C(j,r).
    """
    _check_nonneg(m)
    denom = _degenerate_check(params)
    p, q = params.p, params.q
    consts = _HORADAM_CONSTANTS.get((params, r))
    if consts is None:
        consts = _HORADAM_CONSTANTS.setdefault((params, r), [])
    w_r = horadam_term(params, r)
    w_r1 = horadam_term(params, r + 1)
    while len(consts) <= m:
        k = len(consts)
        rhs = -(2 ** k) * q * w_r + w_r1
        for j in range(k):
            rhs -= comb(k, j) * (2 ** (k - j) * q - p) * consts[j]
        consts.append(rhs / denom)
    return consts[m]


@dataclass(frozen=True)
class LedinForm:
    """The decomposition sum = p1(n)*w_{n+r} + p2(n)*w_{n+r+1} + constant."""

    p1: Polynomial
    p2: Polynomial
    constant: Fraction
    shift: int
    params: HoradamParams

    def evaluate(self, n: int) -> Fraction:
        w_n = horadam_term(self.params, n + self.shift)
        w_n1 = horadam_term(self.params, n + self.shift + 1)
        return self.p1.evaluate(n) * w_n + self.p2.evaluate(n) * w_n1 + self.constant


def horadam_ledin_recursive(m: int, r: int, params: HoradamParams) -> LedinForm:
    """Full Ledin form of sum_{k=1}^{n} k^m w_{k+r}, built recursively.

    Raises DegenerateDenominator when q - p + 1 = 0, the excluded parameter
    line of the Horadam definition.
    """
    p1, p2 = horadam_p_polys_recursive(m, params)
    constant = horadam_constant_recursive(m, r, params)
    return LedinForm(p1, p2, constant, r, params)


def evaluate_ledin_form(form: LedinForm, n: int) -> Fraction:
    """p1(n)*w_{n+r} + p2(n)*w_{n+r+1} + constant; 0 at n = 0 (empty sum)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return form.evaluate(n)
