"""Eulerian numbers and Horadam-family sequences over exact rationals.

A Horadam sequence w_j(a, b; p, q) satisfies

    w_0 = a,  w_1 = b,  w_j = p*w_{j-1} - q*w_{j-2}   (j >= 2),

with p != 0 and q != 0, and extends to negative subscripts through

    w_{-n} = (p*w_{-n+1} - w_{-n+2}) / q.

Fibonacci, Lucas, the Lucas sequences U(p,q) and V(p,q), and the p = 1
specializations u(q), v(q) are all parameter choices of the same recurrence.

Caches grow append-only and are never mutated in place, so concurrent readers
always observe consistent values; the worst case under races is a duplicated
computation of the same immutable term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .rationals import as_fraction


def eulerian(i: int, j: int) -> int:
    """Eulerian number A(i, j) via the alternating binomial sum.

    A(i, j) = sum_{t=0}^{j} (-1)^t * C(i+1, t) * (j-t)^i, with 0^0 = 1.
    Zero whenever j > i, and for j = 0 with i >= 1.
    """
    if i < 0 or j < 0:
        raise ValueError("Eulerian indices must be non-negative")
    return sum((-1) ** t * comb(i + 1, t) * (j - t) ** i for t in range(j + 1))


_EULERIAN_ROWS: dict[int, tuple[int, ...]] = {}


def eulerian_row(i: int) -> tuple[int, ...]:
    """Row (A(i,0), ..., A(i,i)) of the Eulerian triangle, memoized."""
    row = _EULERIAN_ROWS.get(i)
    if row is None:
        row = tuple(eulerian(i, j) for j in range(i + 1))
        _EULERIAN_ROWS[i] = row
    return row


@dataclass(frozen=True)
class HoradamParams:
    """Parameters (a, b, p, q) of a Horadam sequence; p and q must be nonzero."""

    a: Fraction
    b: Fraction
    p: Fraction
    q: Fraction

    def __post_init__(self):
        for name in ("a", "b", "p", "q"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.p == 0:
            raise ValueError("p must be nonzero")
        if self.q == 0:
            raise ValueError("q must be nonzero")


FIBONACCI = HoradamParams(0, 1, 1, -1)
LUCAS = HoradamParams(2, 1, 1, -1)
PELL = HoradamParams(0, 1, 2, -1)
JACOBSTHAL = HoradamParams(0, 1, 1, -2)


def lucas_u(p, q) -> HoradamParams:
    """Lucas sequence of the first kind: U_0 = 0, U_1 = 1."""
    return HoradamParams(0, 1, p, q)


def lucas_v(p, q) -> HoradamParams:
    """Lucas sequence of the second kind: V_0 = 2, V_1 = p."""
    p = as_fraction(p)
    return HoradamParams(2, p, p, q)


def u_params(q) -> HoradamParams:
    """The p = 1 first-kind sequence u(q): 0, 1, 1, 1-q, ..."""
    return HoradamParams(0, 1, 1, q)


def v_params(q) -> HoradamParams:
    """The p = 1 second-kind sequence v(q): 2, 1, 1-2q, ..."""
    return HoradamParams(2, 1, 1, q)


def named_sequence_params(name: str, p=None, q=None) -> HoradamParams:
    """Look up a named parameter set.

    'fibonacci' and 'lucas' take no extra arguments; 'lucas_u'/'lucas_v' need
    p and q; 'u'/'v' need q only; 'pell' is U(2, -1).
    """
    key = name.lower()
    if key == "fibonacci":
        return FIBONACCI
    if key == "lucas":
        return LUCAS
    if key == "pell":
        return PELL
    if key == "lucas_u":
        return lucas_u(p, q)
    if key == "lucas_v":
        return lucas_v(p, q)
    if key in ("u", "u_small"):
        return u_params(q)
    if key in ("v", "v_small"):
        return v_params(q)
    raise ValueError(f"unknown sequence name: {name!r}")


class SequenceCache:
    """Memoized terms w_j of one Horadam sequence, for any integer j.

    Terms are extended contiguously in both directions so the recurrence only
    ever reads already-cached neighbours.
    """

    def __init__(self, params: HoradamParams):
        self.params = params
        self._terms: dict[int, Fraction] = {0: params.a, 1: params.b}
        self._lo = 0
        self._hi = 1

    def term(self, j: int) -> Fraction:
        terms = self._terms
        if self._lo <= j <= self._hi:
            return terms[j]
        p, q = self.params.p, self.params.q
        while self._hi < j:
            nxt = self._hi + 1
            terms[nxt] = p * terms[nxt - 1] - q * terms[nxt - 2]
            self._hi = nxt
        while self._lo > j:
            prv = self._lo - 1
            terms[prv] = (p * terms[prv + 1] - terms[prv + 2]) / q
            self._lo = prv
        return terms[j]


_CACHES: dict[HoradamParams, SequenceCache] = {}


def sequence_cache(params: HoradamParams) -> SequenceCache:
    cache = _CACHES.get(params)
    if cache is None:
        cache = _CACHES[params] = SequenceCache(params)
    return cache


def horadam_term(params: HoradamParams, j: int) -> Fraction:
    """Term w_j of the sequence given by params, memoized per parameter set."""
    return sequence_cache(params).term(j)


def fibonacci(j: int) -> Fraction:
    """F_j, for any integer j (F_{-n} = (-1)^{n-1} F_n)."""
    return horadam_term(FIBONACCI, j)


def lucas(j: int) -> Fraction:
    """L_j, for any integer j (L_{-n} = (-1)^n L_n)."""
    return horadam_term(LUCAS, j)


def lucas_u_term(params: HoradamParams, j: int) -> Fraction:
    """U_j(p, q) for the (p, q) of params."""
    return horadam_term(lucas_u(params.p, params.q), j)


def lucas_v_term(params: HoradamParams, j: int) -> Fraction:
    """V_j(p, q) for the (p, q) of params; V_h is the weight base."""
    return horadam_term(lucas_v(params.p, params.q), j)
