"""Label-refined derivation D_s, the star product, and recursive plethysm.

Elements of Lambda[1^s, 2^s, ...] are sums f_k * k^s and are stored as
``SLabeledVector`` keyed by (partition, k).  The chain rule

    D_s(f[g]) = (D_s(f)[g]) * D_s(g)

only needs plethysms of lower degree on its right-hand side, so Schur
coefficients of s_alpha[s_beta] can be read off with the generalised Hall
product and the quasi-isometry of D_s.
"""
from __future__ import annotations

import threading
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import cache
from typing import Mapping

from .derivation import _collapse
from .partition import Partition, partitions_of, transpose, trim_multiplicity
from .symfun import (
    PowerVector,
    SchurVector,
    _SparseVector,
    format_coefficient,
    power_to_schur,
    schur_to_power,
)


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold came out wrong (e.g. a fractional c^gamma)."""


class SupportError(ValueError):
    """D_s(f) is not supported on the requested number of columns or rows."""


class SLabeledVector(_SparseVector):
    """Sum of c * s_alpha * k^s, keyed by (partition, label k >= 1)."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        alpha, k = key
        alpha = SchurVector._check_key(alpha)
        if int(k) < 1:
            raise ValueError(f"labels must be positive, got {k}")
        return alpha, int(k)

    def _key_size(self, key) -> int:
        return sum(key[0]) + key[1]

    @classmethod
    def from_components(cls, parts: Mapping[int, SchurVector]) -> "SLabeledVector":
        return cls(
            ((alpha, k), c) for k, f in parts.items() for alpha, c in f.items()
        )

    def labels(self) -> list[int]:
        return sorted({k for _, k in self.keys()})

    def component(self, k: int) -> SchurVector:
        return SchurVector._trusted({a: c for (a, l), c in self.items() if l == k})

    def components(self) -> dict[int, SchurVector]:
        acc: dict[int, dict] = defaultdict(dict)
        for (a, k), c in self.items():
            acc[k][a] = c
        return {k: SchurVector._trusted(acc[k]) for k in sorted(acc)}

    def sorted_items(self):
        return sorted(
            self.items(), key=lambda kc: (kc[0][1], -sum(kc[0][0]), tuple(-x for x in kc[0][0]))
        )

    def to_text(self) -> str:
        out = []
        for (alpha, k), c in self.sorted_items():
            symbol = (f"s[{','.join(map(str, alpha))}]*" if alpha else "") + f"{k}^s"
            mag = abs(c)
            body = symbol if mag == 1 else f"{format_coefficient(mag)}*{symbol}"
            if not out:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out) if out else "0"


def d_s(f: SchurVector) -> SLabeledVector:
    """D_s(s_alpha) = sum over cells of (-1)^leg s_{alpha collapsed} * hook^s."""
    acc: dict = defaultdict(Fraction)
    for alpha, c in f.items():
        for h, beta, sign in _collapse(alpha):
            acc[beta, h] += sign * c
    return SLabeledVector._trusted(acc)


def hall_s(F: SLabeledVector, G: SLabeledVector) -> Fraction:
    if len(G) < len(F):
        F, G = G, F
    return sum((c * G[key] for key, c in F.items()), Fraction(0))


def _dilate(g: PowerVector, n: int) -> PowerVector:
    out = {}
    for lam, c in g.items():
        mu = [0] * (n * len(lam))
        for k, m in enumerate(lam, start=1):
            mu[n * k - 1] = m
        out[tuple(mu)] = c
    return PowerVector._trusted(out)


def plethysm_power(n: int, g):
    """p_n[g]: replace every p_k by p_{nk}."""
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(g, PowerVector):
        return _dilate(g, n)
    return power_to_schur(_dilate(schur_to_power(g), n))


def star(F: SLabeledVector, G: SLabeledVector) -> SLabeledVector:
    """(f n^s) * (g k^s) = f p_n[g] (nk)^s, extended bilinearly."""
    power_parts: dict[int, PowerVector] = defaultdict(PowerVector.zero)
    G_power = {k: schur_to_power(g) for k, g in G.components().items()}
    for n, f in F.components().items():
        f_power = schur_to_power(f)
        for k, g_power in G_power.items():
            power_parts[n * k] = power_parts[n * k] + f_power * _dilate(g_power, n)
    return SLabeledVector.from_components(
        {label: power_to_schur(v) for label, v in power_parts.items()}
    )


def _single_schur(g: SchurVector) -> Partition | None:
    if len(g) == 1:
        (beta, c), = g.items()
        if c == 1:
            return beta
    return None


def _plethysm_schur_vector(f: SchurVector, g: SchurVector, prune: bool = True) -> SchurVector:
    beta = _single_schur(g)
    if beta is None:
        return plethysm_general(f, g)
    acc: dict = defaultdict(Fraction)
    for delta, c in f.items():
        for gamma, m in plethysm(delta, beta, prune=prune).items():
            acc[gamma] += c * m
    return SchurVector._trusted(acc)


def plethysm_left(F: SLabeledVector, g: SchurVector, prune: bool = True) -> SLabeledVector:
    """F[g] = sum_k F_k[g] * k^s."""
    return SLabeledVector.from_components(
        {k: _plethysm_schur_vector(f, g, prune) for k, f in F.components().items()}
    )


def chain_rule(f: SchurVector, g: SchurVector, prune: bool = True) -> SLabeledVector:
    """(D_s(f)[g]) * D_s(g), which equals D_s(f[g])."""
    return star(plethysm_left(d_s(f), g, prune), d_s(g))


def support_bound(alpha: Partition, beta: Partition) -> tuple[int, int]:
    """(max first part, max length) of any gamma in s_alpha[s_beta]."""
    n = sum(alpha)
    return (beta[0] if beta else 0) * n, len(beta) * n


class PlethysmCache:
    """Memo of s_alpha[s_beta] keyed by (alpha, beta, pruned).

    Lookups are lock-free dict reads; inserts are serialised.  Pruned and
    unpruned results never share entries.
    """

    def __init__(self):
        self._data: dict[tuple[Partition, Partition, bool], SchurVector] = {}
        self._lock = threading.Lock()

    def get(self, alpha: Partition, beta: Partition, prune: bool) -> SchurVector | None:
        return self._data.get((alpha, beta, prune))

    def put(self, alpha: Partition, beta: Partition, prune: bool, value: SchurVector) -> SchurVector:
        with self._lock:
            return self._data.setdefault((alpha, beta, prune), value)

    def items(self):
        return list(self._data.items())

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def __len__(self) -> int:
        return len(self._data)


CACHE = PlethysmCache()


def _fourier(L: SLabeledVector, gamma: Partition, d: int) -> Fraction:
    return hall_s(L, d_s(SchurVector._trusted({gamma: Fraction(1)}))) / d


def plethysm(alpha: Partition, beta: Partition, prune: bool = True, threads: int = 1) -> SchurVector:
    """s_alpha[s_beta] in the Schur basis via the chain rule.

    With ``prune`` the candidate gammas are limited by ``support_bound``;
    without it every partition of |alpha||beta| is tested.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    hit = CACHE.get(alpha, beta, prune)
    if hit is not None:
        return hit
    if not alpha:
        result = SchurVector.one()
    elif not beta:
        # s_alpha[1] = s_alpha(1, 0, 0, ...)
        result = SchurVector.one() if len(alpha) == 1 else SchurVector.zero()
    elif sum(alpha) == 1:
        result = SchurVector({beta: 1})
    else:
        d = sum(alpha) * sum(beta)
        L = chain_rule(SchurVector({alpha: 1}), SchurVector({beta: 1}), prune)
        if prune:
            cols, rows = support_bound(alpha, beta)
            candidates = list(partitions_of(d, cols, rows))
        else:
            candidates = list(partitions_of(d))
        if threads > 1:
            with ThreadPoolExecutor(threads) as pool:
                coeffs = list(pool.map(lambda g: _fourier(L, g, d), candidates))
        else:
            coeffs = [_fourier(L, g, d) for g in candidates]
        out = {}
        for gamma, c in zip(candidates, coeffs):
            if c.denominator != 1:
                raise ConsistencyError(
                    f"non-integral coefficient {c} of s{gamma} in s{alpha}[s{beta}]"
                )
            if c:
                out[gamma] = c
        result = SchurVector._trusted(out)
    return CACHE.put(alpha, beta, prune, result)


@cache
def _power_plethysm_monomial(lam: tuple[int, ...], g: PowerVector) -> PowerVector:
    if not lam:
        return PowerVector.one()
    n = len(lam)
    rest = list(lam)
    rest[n - 1] -= 1
    return _power_plethysm_monomial(trim_multiplicity(rest), g) * _dilate(g, n)


def plethysm_general(f: SchurVector, g: SchurVector) -> SchurVector:
    """f[g] through the power basis: p_lambda[g] = prod_n p_n[g]^lambda_n."""
    g_power = schur_to_power(g)
    acc = PowerVector.zero()
    for lam, c in schur_to_power(f).items():
        acc = acc + _power_plethysm_monomial(lam, g_power).scale(c)
    return power_to_schur(acc)


def transpose_vector(f: SchurVector) -> SchurVector:
    """The involution w: s_alpha -> s_{alpha*}."""
    return SchurVector._trusted({transpose(a): c for a, c in f.items()})


def _violations(F: SLabeledVector, t: int, mode: str) -> list[tuple[Partition, int]]:
    if mode == "columns":
        return [(a, k) for (a, k) in F.keys() if a and a[0] > t]
    if mode == "rows":
        return [(a, k) for (a, k) in F.keys() if len(a) > t]
    raise ValueError(f"mode must be 'columns' or 'rows', not {mode!r}")


def is_supported(f: SchurVector | SLabeledVector, t: int, mode: str = "columns") -> bool:
    if isinstance(f, SchurVector):
        f = SLabeledVector._trusted({(a, 1): c for a, c in f.items()})
    return not _violations(f, t, mode)


def decompose_support(
    f: SchurVector, t: int, mode: str = "columns"
) -> tuple[SchurVector, Fraction]:
    """Split f = g + m p_d with g supported on t columns (or rows).

    Requires D_s(f) to be supported on t <= d - 1 columns (rows).
    """
    d = f.homogeneous_degree() if f else 0
    if d < 1:
        raise ValueError("f must be a nonzero homogeneous element of positive degree")
    if not 0 <= t <= d - 1:
        raise ValueError(f"t must lie in [0, {d - 1}], got {t}")
    bad = _violations(d_s(f), t, mode)
    if bad:
        alpha, k = min(bad)
        raise SupportError(
            f"D_s(f) is not supported on {t} {mode}: s{list(alpha)} appears with label {k}^s"
        )
    if mode == "columns":
        m = f[(d,)]
    else:
        # w(p_d) = (-1)^(d-1) p_d
        m = f[(1,) * d] * (-1) ** (d - 1)
    p_d = PowerVector({(0,) * (d - 1) + (1,): 1})
    g = f - power_to_schur(p_d).scale(m)
    if _violations(SLabeledVector._trusted({(a, 1): c for a, c in g.items()}), t, mode):
        raise ConsistencyError(f"remainder {g.to_text()} is not supported on {t} {mode}")
    return g, m
