"""Brute-force oracle and grid verification harness.

`brute_sum` is a literal accumulation loop over k = 1..n.  It deliberately
shares nothing with the Ledin or closed-form modules except sequence-term
lookup, so that agreement between routes is evidence and not tautology.
All comparisons are exact: any mismatch is a bug or a formula erratum,
never rounding.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction

from .closed_forms import SumSpec, applicable_routes, evaluate_route
from .errors import GuardViolation
from .rationals import format_rational, parse_rational
from .sequences import (
    FIBONACCI,
    JACOBSTHAL,
    LUCAS,
    PELL,
    HoradamParams,
    eulerian_row,
    horadam_term,
    lucas_v_term,
)

GENERIC_RATIONAL = HoradamParams(Fraction(3, 2), -5, Fraction(7, 3), Fraction(2, 5))
REPEATED_ROOT = HoradamParams(1, 1, 2, 1)  # p^2 = 4q, the equal-roots probe

DEFAULT_GRID_PARAMS = (
    FIBONACCI,
    LUCAS,
    PELL,
    JACOBSTHAL,
    GENERIC_RATIONAL,
    REPEATED_ROOT,
)


def brute_sum(spec: SumSpec) -> Fraction:
    """sum_{k=1}^{n} k^m w_{hk+r}, times V_h^{-k} when weighted; 0 at n = 0."""
    params = spec.params
    if spec.weighted:
        v_h = lucas_v_term(params, spec.h)
        if v_h == 0:
            raise GuardViolation(f"V_{spec.h} = 0: the weighted sum is undefined")
    total = Fraction(0)
    weight = Fraction(1)
    for k in range(1, spec.n + 1):
        term = k ** spec.m * horadam_term(params, spec.h * k + spec.r)
        if spec.weighted:
            weight /= v_h
            term *= weight
        total += term
    return total


def _additive_eulerian_triangle(i_max: int) -> list[tuple[int, ...]]:
    """Triangle rows built only from the additive recurrence
    A(i,j) = j*A(i-1,j) + (i-j+1)*A(i-1,j-1), seeded with A(0,0) = 1."""
    rows: list[tuple[int, ...]] = [(1,)]
    for i in range(1, i_max + 1):
        prev = rows[-1]
        row = [0] * (i + 1)
        for j in range(1, i + 1):
            above = prev[j] if j < len(prev) else 0
            row[j] = j * above + (i - j + 1) * prev[j - 1]
        rows.append(tuple(row))
    return rows


def eulerian_recurrence_oracle(i_max: int) -> bool:
    """True iff the binomial-sum triangle matches the additive-recurrence one."""
    additive = _additive_eulerian_triangle(i_max)
    return all(eulerian_row(i) == additive[i] for i in range(i_max + 1))


def _params_to_dict(params: HoradamParams) -> dict:
    return {k: format_rational(getattr(params, k)) for k in ("a", "b", "p", "q")}


def _params_from_dict(data: dict) -> HoradamParams:
    return HoradamParams(*(parse_rational(data[k]) for k in ("a", "b", "p", "q")))


@dataclass(frozen=True)
class Mismatch:
    """A route that disagreed with the brute-force oracle on one spec."""

    spec: SumSpec
    route: str
    expected: Fraction
    got: Fraction

    def to_dict(self) -> dict:
        return {
            "params": _params_to_dict(self.spec.params),
            "m": self.spec.m,
            "n": self.spec.n,
            "r": self.spec.r,
            "h": self.spec.h,
            "weighted": self.spec.weighted,
            "route": self.route,
            "expected": format_rational(self.expected),
            "got": format_rational(self.got),
        }

    @classmethod
    def from_dict(cls, data: dict) -> Mismatch:
        spec = SumSpec(
            params=_params_from_dict(data["params"]),
            m=data["m"],
            n=data["n"],
            r=data["r"],
            h=data["h"],
            weighted=data["weighted"],
        )
        return cls(spec, data["route"], parse_rational(data["expected"]), parse_rational(data["got"]))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a grid run; PASS exactly when there are no mismatches."""

    grid_description: str
    cases_run: int
    guard_skips: int
    mismatches: tuple[Mismatch, ...]
    wall_time: float

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "grid": self.grid_description,
            "cases_run": self.cases_run,
            "guard_skips": self.guard_skips,
            "pass": self.passed,
            "wall_time": self.wall_time,
            "mismatches": [m.to_dict() for m in self.mismatches],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(
            grid_description=data["grid"],
            cases_run=data["cases_run"],
            guard_skips=data["guard_skips"],
            mismatches=tuple(Mismatch.from_dict(m) for m in data["mismatches"]),
            wall_time=data["wall_time"],
        )

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))


def verify_grid(
    m_max: int = 6,
    n_max: int = 40,
    r_min: int = -8,
    r_max: int = 8,
    h_max: int = 3,
    params_list=DEFAULT_GRID_PARAMS,
    weighted=None,
) -> VerificationReport:
    """Compare every applicable route against brute_sum over the given grid.

    `weighted=None` runs both the plain and the V_h^{-k}-weighted families.
    cases_run counts (spec, route) comparisons executed; evaluations refused
    by a guard are counted in guard_skips, never as failures.  Iteration
    order is fixed (params, h, weighted, m, r, n), so reports are
    deterministic.
    """
    weighted_options = (False, True) if weighted is None else (bool(weighted),)
    start = time.perf_counter()
    cases_run = 0
    guard_skips = 0
    mismatches: list[Mismatch] = []
    for params in params_list:
        for h in range(1, h_max + 1):
            for wflag in weighted_options:
                for m in range(m_max + 1):
                    for r in range(r_min, r_max + 1):
                        for n in range(n_max + 1):
                            spec = SumSpec(params, m, n, r, h, wflag)
                            try:
                                expected = brute_sum(spec)
                            except GuardViolation:
                                guard_skips += 1
                                continue
                            for route in applicable_routes(spec):
                                try:
                                    report = evaluate_route(spec, route)
                                except GuardViolation:
                                    guard_skips += 1
                                    continue
                                cases_run += 1
                                if report.value != expected:
                                    mismatches.append(
                                        Mismatch(spec, route, expected, report.value)
                                    )
    description = (
        f"m<={m_max}, n<={n_max}, r in [{r_min},{r_max}], h<={h_max}, "
        f"{len(params_list)} parameter sets, "
        f"weighted={'both' if weighted is None else weighted_options[0]}"
    )
    return VerificationReport(
        grid_description=description,
        cases_run=cases_run,
        guard_skips=guard_skips,
        mismatches=tuple(mismatches),
        wall_time=time.perf_counter() - start,
    )
