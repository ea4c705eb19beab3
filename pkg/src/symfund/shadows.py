"""Ranks of Schur functors and Chern shadows Sh_m = rk_m o D_s.

Ranks are polynomials in the rank r of the underlying bundle and are kept
as exact sympy polynomials over QQ, so identities between shadows are
checked as polynomial identities.  Pass an integer ``r`` to evaluate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Union

import sympy

from .partition import Multiplicity, Partition, cells, hook_lengths, trim_multiplicity
from .splethysm import SLabeledVector, d_s
from .symfun import PowerVector, SchurVector, power_to_schur, schur_to_power

R = sympy.Symbol("r")

RankPolynomial = sympy.Poly
RankValue = Union[sympy.Poly, Fraction]


def _poly(expr) -> sympy.Poly:
    return sympy.Poly(expr, R, domain=sympy.QQ)


def _finish(poly: sympy.Poly, r) -> RankValue:
    if r is None or r is R:
        return poly
    value = sympy.Rational(poly.eval(r))
    return Fraction(int(value.p), int(value.q))


@cache
def _schur_rank_poly(alpha: Partition) -> sympy.Poly:
    hooks = hook_lengths(alpha)
    num = _poly(1)
    den = 1
    for c in cells(alpha):
        num = num * _poly(R + c.col - c.row)
        den *= hooks[c]
    return num.quo_ground(den)


def schur_rank(alpha: Partition, r=None) -> RankValue:
    """Rank of S^alpha E for E of rank r (hook-content formula)."""
    return _finish(_schur_rank_poly(tuple(alpha)), r)


def rank(U: SchurVector | PowerVector, r=None) -> RankValue:
    """rk(U); p_lambda has rank r^(number of parts)."""
    if isinstance(U, PowerVector):
        poly = _poly(0)
        for lam, c in U.items():
            poly += _poly(sympy.Rational(c.numerator, c.denominator) * R ** sum(lam))
        return _finish(poly, r)
    poly = _poly(0)
    for alpha, c in U.items():
        poly += _schur_rank_poly(alpha) * sympy.Rational(c.numerator, c.denominator)
    return _finish(poly, r)


def rk_m(F: SLabeledVector, m: int, r=None) -> RankValue:
    """sum_k rk(F_k) k^m."""
    poly = _poly(0)
    for (alpha, k), c in F.items():
        poly += _schur_rank_poly(alpha) * (sympy.Rational(c.numerator, c.denominator) * k**m)
    return _finish(poly, r)


def shadow(U: SchurVector | PowerVector, m: int, r=None) -> RankValue:
    """Sh_m(U) = rk_m(D_s(U)) for an arbitrary virtual bundle U."""
    if isinstance(U, PowerVector):
        U = power_to_schur(U)
    return rk_m(d_s(U), m, r)


def chern_shadow(alpha: Partition, m: int, r=None) -> RankValue:
    return shadow(SchurVector({tuple(alpha): 1}), m, r)


def shadow_power_monomial(lam: Multiplicity, m: int, r=None) -> RankValue:
    """Closed form r^(l(lambda) - 1) * sum_n lambda_n n^(m+1)."""
    lam = trim_multiplicity(lam)
    if not lam:
        return _finish(_poly(0), r)
    parts = sum(lam)
    total = sum(mult * n ** (m + 1) for n, mult in enumerate(lam, start=1))
    return _finish(_poly(total * R ** (parts - 1)), r)


def _shadow_by_lemma(lam: Multiplicity, m: int) -> tuple[sympy.Poly, sympy.Poly]:
    """(rk, Sh_m) of P_lambda built from generators with log-multiplicativity."""
    rk, sh = _poly(1), _poly(0)
    for n, mult in enumerate(lam, start=1):
        for _ in range(mult):
            # Sh(U P_n) = rk(U) Sh(P_n) + Sh(U) rk(P_n), rk(P_n) = r, Sh(P_n) = n^(m+1)
            rk, sh = rk * _poly(R), rk * n ** (m + 1) + sh * _poly(R)
    return rk, sh


def shadow_via_power(U: SchurVector | PowerVector, m: int, r=None) -> RankValue:
    """Sh_m(U) by expanding U in power sums and using additivity + log-multiplicativity."""
    if isinstance(U, SchurVector):
        U = schur_to_power(U)
    poly = _poly(0)
    for lam, c in U.items():
        poly += _shadow_by_lemma(lam, m)[1] * sympy.Rational(c.numerator, c.denominator)
    return _finish(poly, r)


@dataclass
class ChernReport:
    alpha: Partition
    k: int
    rows: list[tuple[int, Fraction, Fraction]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a == b for _, a, b in self.rows)

    @property
    def discrepancies(self) -> list[tuple[int, Fraction, Fraction]]:
        return [row for row in self.rows if row[1] != row[2]]


def verify_chern_identity(alpha: Partition, k: int, r_values: list[int]) -> ChernReport:
    """Compare Sh_{k-1}(S^alpha E) computed directly and through power sums."""
    if k not in (1, 2, 3):
        raise ValueError("the identity is only claimed for k = 1, 2, 3")
    alpha = tuple(alpha)
    report = ChernReport(alpha, k)
    for r in r_values:
        direct = chern_shadow(alpha, k - 1, r)
        via = shadow_via_power(SchurVector({alpha: 1}), k - 1, r)
        report.rows.append((r, direct, via))
    return report
