"""Necessary conditions on (v, g, k, λ)_q and the admissible-parameter table."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .geometry import gaussian_binomial as gb

# Desarguesian-only λ_max values found by exhaustive enumeration (q = 2).
ENUMERATED_LAMBDA_MAX = {(2, 8, 4, 4): 14, (2, 9, 3, 4): 1680}

# Cited bounds on constant-dimension codes, relevant when λ = 1; not recomputed.
CODE_BOUNDS = {"A_2(6,4;3)": 77, "A_2(8,6;4)": 257}


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def uncovered_lines(q: int, v: int, g: int) -> int:
    """Lines of GF(q)^v not inside an element of a (g-1)-spread."""
    return gb(v, 2, q) - gb(g, 2, q) * gb(v, 1, q) // gb(g, 1, q)


def group_count(q: int, v: int, g: int) -> int:
    return gb(v, 1, q) // gb(g, 1, q)


def block_count(q: int, v: int, g: int, k: int, lam: int) -> Fraction:
    """Number of blocks forced by λ (may be fractional for bad parameters)."""
    return Fraction(lam * uncovered_lines(q, v, g), gb(k, 2, q))


def replication(q: int, v: int, g: int, k: int, lam: int) -> Fraction:
    """Blocks through a fixed point."""
    return Fraction(lam * (gb(v - 1, 1, q) - gb(g - 1, 1, q)), gb(k - 1, 1, q))


@dataclass
class ParamReport:
    q: int
    v: int
    g: int
    k: int
    lam: int | None = None
    admissible: bool = False
    lambda_delta: int | None = None
    lambda_max: int | None = None
    desarguesian_only: bool = False
    group_count: int | None = None
    failed_conditions: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def block_count_at(self, lam: int) -> Fraction:
        return block_count(self.q, self.v, self.g, self.k, lam)

    def replication_at(self, lam: int) -> Fraction:
        return replication(self.q, self.v, self.g, self.k, lam)

    @property
    def block_count(self) -> int | None:
        """#ℬ at λ_Δ."""
        if self.lambda_delta is None:
            return None
        return int(self.block_count_at(self.lambda_delta))

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "v": self.v,
            "g": self.g,
            "k": self.k,
            "lambda": self.lam,
            "admissible": self.admissible,
            "lambda_delta": self.lambda_delta,
            "lambda_max": self.lambda_max,
            "lambda_max_desarguesian_only": self.desarguesian_only,
            "blocks": self.block_count,
            "groups": self.group_count,
            "failed_conditions": list(self.failed_conditions),
            "notes": list(self.notes),
        }


def _structural_failures(q: int, v: int, g: int, k: int) -> list[str]:
    failed = []
    if v % g:
        failed.append(f"g does not divide v: {g} ∤ {v}")
    if k > v - g:
        failed.append(f"k <= v - g violated: {k} > {v - g}")
    return failed


def _lambda_failures(q: int, v: int, g: int, k: int, lam: int) -> list[str]:
    failed = []
    b = block_count(q, v, g, k, lam)
    if b.denominator != 1:
        failed.append(f"block count {b} is not an integer")
    r = replication(q, v, g, k, lam)
    if r.denominator != 1:
        failed.append(f"replication number {r} is not an integer")
    if 2 <= g <= k and lam % q ** (k - g):
        failed.append(f"inadmissible: q^(k-g) = {q ** (k - g)} does not divide λ = {lam}")
    return failed


def lambda_delta(q: int, v: int, g: int, k: int) -> int | None:
    """Smallest λ >= 1 meeting every necessary condition."""
    if _structural_failures(q, v, g, k) or k < 2:
        return None
    b = Fraction(uncovered_lines(q, v, g), gb(k, 2, q))
    r = Fraction(gb(v - 1, 1, q) - gb(g - 1, 1, q), gb(k - 1, 1, q))
    lam = _lcm(b.denominator, r.denominator)
    if 2 <= g <= k:
        lam = _lcm(lam, q ** (k - g))
    return lam


def lambda_max_k3(v: int, g: int, q: int) -> int:
    """Lines through an uncovered line in the complete GDD with k = 3 (any spread)."""
    return gb(v - 2, 1, q) - gb(2, 1, q) * gb(g - 1, 1, q)


def lambda_max_g2k4(v: int, q: int) -> int:
    """λ_max for g = 2, k = 4; valid for the Desarguesian line spread only."""
    return (
        gb(v - 2, 2, q)
        - 1
        - q * gb(2, 1, q) * gb(v - 4, 1, q)
        - gb(v, 1, q) // gb(2, 1, q)
        + gb(4, 1, q) // gb(2, 1, q)
    )


def known_lambda_max(q: int, v: int, g: int, k: int) -> tuple[int | None, bool]:
    """(λ_max, desarguesian_only) from closed forms or stored enumerations."""
    if k == 3:
        return lambda_max_k3(v, g, q), False
    if g == 2 and k == 4:
        return lambda_max_g2k4(v, q), True
    if (q, v, g, k) in ENUMERATED_LAMBDA_MAX:
        return ENUMERATED_LAMBDA_MAX[(q, v, g, k)], True
    return None, False


def check_conditions(q: int, v: int, g: int, k: int, lam: int | None = None) -> ParamReport:
    """Evaluate the necessary conditions; with ``lam=None`` only λ_Δ is reported."""
    rep = ParamReport(q, v, g, k, lam)
    failed = _structural_failures(q, v, g, k)
    if v % g == 0:
        rep.group_count = group_count(q, v, g)
    if not failed:
        rep.lambda_delta = lambda_delta(q, v, g, k)
        rep.lambda_max, rep.desarguesian_only = known_lambda_max(q, v, g, k)
        if lam is not None:
            if lam < 1:
                failed.append("λ must be positive")
            else:
                failed.extend(_lambda_failures(q, v, g, k, lam))
        if 2 * k > v:
            rep.notes.append("k > v/2: impossible for Desarguesian spreads")
    rep.failed_conditions = failed
    rep.admissible = not failed
    if lam == 1 and rep.admissible:
        rep.notes.append("λ = 1: blocks form a constant-dimension code, so #ℬ <= A_q(v, 2(k-1); k)")
    return rep


def table_k_range(v: int, g: int, desarguesian: bool = True) -> range:
    top = v - g
    if desarguesian:
        top = min(top, v // 2)
    return range(3, top + 1)


def admissible_table(q: int, v_max: int, desarguesian: bool = True) -> list[ParamReport]:
    """All (v, g, k) with 2 <= g < v, g | v and 3 <= k <= min(v - g, v/2), with λ_Δ."""
    rows = []
    for v in range(2, v_max + 1):
        for g in range(2, v):
            if v % g:
                continue
            for k in table_k_range(v, g, desarguesian):
                rows.append(check_conditions(q, v, g, k))
    return rows
