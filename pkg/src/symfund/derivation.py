"""The derivation D = sum_n n d/dp_n and the operators built from it.

On Schur functions D_n removes border strips of size n (signed hook
collapse); on power sums it is the scaled partial derivative.  D is a
quasi-isometry on each graded piece, <D f, D g> = d <f, g>, which turns
it into a recursion for Littlewood-Richardson coefficients.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import cache
from typing import TypeVar

from .partition import Partition, hook_lengths, partitions_of, remove_hook, trim_multiplicity
from .symfun import PowerVector, SchurVector, hall_schur, mult_pn, product

F = TypeVar("F", SchurVector, PowerVector)


@cache
def _collapse(alpha: Partition) -> tuple[tuple[int, Partition, int], ...]:
    """(hook length, collapsed partition, sign) for every cell of alpha."""
    return tuple(
        (h, *remove_hook(alpha, c)) for c, h in hook_lengths(alpha).items()
    )


def _power_dn(lam, n: int):
    if n > len(lam) or lam[n - 1] == 0:
        return None
    rest = list(lam)
    rest[n - 1] -= 1
    return trim_multiplicity(rest), n * lam[n - 1]


def d_n(f: F, n: int) -> F:
    """D_n(f) = n * d f / d p_n."""
    if n < 1:
        raise ValueError("n must be positive")
    acc: dict = defaultdict(Fraction)
    if isinstance(f, PowerVector):
        for lam, c in f.items():
            hit = _power_dn(lam, n)
            if hit is not None:
                acc[hit[0]] += c * hit[1]
        return PowerVector._trusted(acc)
    for alpha, c in f.items():
        for h, beta, sign in _collapse(alpha):
            if h == n:
                acc[beta] += sign * c
    return SchurVector._trusted(acc)


def derive(f: F) -> F:
    """D(f) = sum over n of D_n(f)."""
    acc: dict = defaultdict(Fraction)
    if isinstance(f, PowerVector):
        for lam, c in f.items():
            for n in range(1, len(lam) + 1):
                hit = _power_dn(lam, n)
                if hit is not None:
                    acc[hit[0]] += c * hit[1]
        return PowerVector._trusted(acc)
    for alpha, c in f.items():
        for _, beta, sign in _collapse(alpha):
            acc[beta] += sign * c
    return SchurVector._trusted(acc)


def adjoint_check(f: SchurVector, g: SchurVector, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of <D_n f, g> = <f, p_n g>."""
    return hall_schur(d_n(f, n), g), hall_schur(f, mult_pn(g, n))


def reconstruct(f: SchurVector, d: int) -> SchurVector:
    """Recover f in degree d from its pieces D_n(f): f = (1/d) sum_n p_n D_n(f)."""
    if d < 1:
        raise ValueError("degree must be positive")
    if f and f.degrees() != {d}:
        raise ValueError(f"f is not homogeneous of degree {d}: {sorted(f.degrees())}")
    total = SchurVector.zero()
    for n in range(1, d + 1):
        total = total + mult_pn(d_n(f, n), n)
    return total / d


@cache
def _lr_pair(alpha: Partition, beta: Partition) -> SchurVector:
    # keyed on the ordered pair; callers sort so each unordered pair is stored once
    if not alpha:
        return SchurVector({beta: 1})
    if not beta:
        return SchurVector({alpha: 1})
    d = sum(alpha) + sum(beta)
    lhs = _times_schur(derive(SchurVector({alpha: 1})), beta) + _times_schur(
        derive(SchurVector({beta: 1})), alpha
    )
    out = {}
    for gamma in partitions_of(d):
        m = hall_schur(lhs, derive(SchurVector({gamma: 1}))) / d
        if m.denominator != 1:
            raise ArithmeticError(f"non-integral LR coefficient {m} for {alpha}*{beta} at {gamma}")
        out[gamma] = m
    return SchurVector._trusted(out)


def _times_schur(f: SchurVector, beta: Partition) -> SchurVector:
    acc: dict = defaultdict(Fraction)
    for delta, c in f.items():
        for gamma, m in lr_product_recursive(delta, beta).items():
            acc[gamma] += c * m
    return SchurVector._trusted(acc)


def lr_product_recursive(alpha: Partition, beta: Partition) -> SchurVector:
    """s_alpha * s_beta by the Fourier recursion on D; degrees strictly drop."""
    alpha, beta = tuple(alpha), tuple(beta)
    return _lr_pair(*sorted((alpha, beta)))


def leibniz_gap(f: SchurVector, g: SchurVector) -> SchurVector:
    """D(fg) - D(f)g - fD(g); zero because D is a derivation."""
    return derive(product(f, g)) - product(derive(f), g) - product(f, derive(g))


@cache
def antiderivative(alpha: Partition) -> SchurVector:
    """Some h with D(h) = s_alpha.

    Starts from s_{alpha^(1)} with alpha^(1) = (alpha_1 + 1, alpha_2, ...);
    D(s_{alpha^(1)}) contains s_alpha once and otherwise only terms of smaller
    size or of the same size with a longer first row, which are handled
    recursively.
    """
    alpha = tuple(alpha)
    if not alpha:
        return SchurVector({(1,): 1})
    bumped = (alpha[0] + 1,) + alpha[1:]
    h = SchurVector({bumped: 1})
    rest = derive(h) - SchurVector({alpha: 1})
    for beta, c in rest.items():
        h = h - antiderivative(beta).scale(c)
    return h
