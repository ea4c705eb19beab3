"""Brute-force reference computations with symmetric polynomials in finitely many variables.

Nothing here calls the hook, border-strip or power-basis machinery of the
main modules; only the vector containers are shared.  A symmetric
polynomial in ``nvars`` variables is stored by its coefficients on sorted
exponent vectors (one representative per orbit of the symmetric group), so
degree-12 computations stay small.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import factorial, prod
from typing import Iterator, Mapping

from .symfun import PowerVector, SchurVector

Exponent = tuple[int, ...]


def _partitions(d: int, max_len: int, cap: int | None = None) -> Iterator[Exponent]:
    cap = d if cap is None else cap
    if d == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(d, cap), 0, -1):
        for rest in _partitions(d - first, max_len - 1, first):
            yield (first,) + rest


def _canon(exps) -> Exponent:
    return tuple(sorted((e for e in exps if e), reverse=True))


def _bounded_placements(values: Counter, bound: Exponent) -> Iterator[Exponent]:
    """Distinct arrangements of the multiset ``values`` under ``bound`` componentwise."""
    if not bound:
        yield ()
        return
    head, tail = bound[0], bound[1:]
    for v in sorted(values):
        if values[v] == 0 or v > head:
            continue
        values[v] -= 1
        for rest in _bounded_placements(values, tail):
            yield (v,) + rest
        values[v] += 1


class MonomialPoly:
    """Symmetric polynomial in nvars variables, stored on orbit representatives."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        acc: dict = defaultdict(Fraction)
        for e, c in (terms or {}).items():
            e = _canon(e)
            if len(e) > nvars:
                raise ValueError(f"exponent {e} needs more than {nvars} variables")
            acc[e] += Fraction(c)
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def from_monomials(cls, nvars: int, monomials: Mapping[Exponent, Fraction]) -> "MonomialPoly":
        """Build from a full monomial expansion; raises if it is not symmetric."""
        full = {tuple(e): Fraction(c) for e, c in monomials.items() if c}
        for e in full:
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
        reps = {}
        for e, c in full.items():
            key = _canon(e)
            if reps.setdefault(key, c) != c:
                raise ValueError(f"not symmetric: coefficients differ on the orbit of {key}")
        poly = cls(nvars, reps)
        if sum(orbit_size(e, nvars) for e in poly.terms) != len(full):
            raise ValueError("not symmetric: some orbit is only partly present")
        return poly

    def expand(self) -> dict[Exponent, Fraction]:
        out = {}
        for e, c in self.terms.items():
            padded = e + (0,) * (self.nvars - len(e))
            for perm in set(permutations(padded)):
                out[perm] = c
        return out

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def evaluate_ones(self) -> Fraction:
        return sum((c * orbit_size(e, self.nvars) for e, c in self.terms.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._same(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return MonomialPoly(self.nvars, acc)

    def __sub__(self, other: "MonomialPoly") -> "MonomialPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "MonomialPoly":
        c = Fraction(c)
        return MonomialPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def scale_exponents(self, n: int) -> "MonomialPoly":
        """g(x_1^n, ..., x_N^n), which is p_n[g]."""
        return MonomialPoly(self.nvars, {tuple(n * x for x in e): c for e, c in self.terms.items()})

    def _same(self, other: "MonomialPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different numbers of variables")

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._same(other)
        if not self.terms or not other.terms:
            return MonomialPoly(self.nvars)
        big, small = (self, other) if len(self.terms) >= len(other.terms) else (other, self)
        targets = {sum(a) + sum(b) for a in big.terms for b in small.terms}
        out = {}
        for total in targets:
            for nu in _partitions(total, self.nvars):
                coeff = Fraction(0)
                for mu, c in small.terms.items():
                    if sum(mu) > total or len(mu) > len(nu):
                        continue
                    values = Counter(mu + (0,) * (len(nu) - len(mu)))
                    for b in _bounded_placements(values, nu):
                        rest = _canon(n - x for n, x in zip(nu, b))
                        other_c = big.terms.get(rest)
                        if other_c:
                            coeff += c * other_c
                if coeff:
                    out[nu] = coeff
        return MonomialPoly(self.nvars, out)

    def __repr__(self) -> str:
        return f"MonomialPoly({self.nvars}, {self.terms})"


def orbit_size(e: Exponent, nvars: int) -> int:
    """Number of distinct monomials x^w with sorted(w) = e in nvars variables."""
    e = _canon(e)
    if len(e) > nvars:
        return 0
    counts = Counter(e)
    counts[0] = nvars - len(e)
    return factorial(nvars) // prod(factorial(m) for m in counts.values())


@cache
def kostka(shape: Exponent, content: Exponent) -> int:
    """Number of semistandard tableaux of the shape with the given content."""
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1
    *head, last = content
    total = 0
    for inner in _remove_horizontal_strips(shape, last):
        total += kostka(inner, tuple(head))
    return total


def _remove_horizontal_strips(shape: Exponent, k: int) -> Iterator[Exponent]:
    def rec(i: int, left: int) -> Iterator[list[int]]:
        if i == len(shape):
            if left == 0:
                yield []
            return
        below = shape[i + 1] if i + 1 < len(shape) else 0
        for row in range(shape[i], below - 1, -1):
            taken = shape[i] - row
            if taken > left:
                break
            for rest in rec(i + 1, left - taken):
                yield [row] + rest

    for rows in rec(0, k):
        yield _canon(rows)


def semistandard_tableaux(shape: Exponent, max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All semistandard tableaux of the shape with entries in 1..max_entry."""
    shape = tuple(shape)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield tuple(tuple(filling[i, j] for j in range(row)) for i, row in enumerate(shape))
            return
        i, j = cells[idx]
        low = 1
        if j > 0:
            low = max(low, filling[i, j - 1])
        if i > 0:
            low = max(low, filling[i - 1, j] + 1)
        for v in range(low, max_entry + 1):
            filling[i, j] = v
            yield from rec(idx + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_poly(alpha: Exponent, nvars: int) -> MonomialPoly:
    """s_alpha(x_1, ..., x_nvars): the coefficient of x^mu counts tableaux of content mu."""
    alpha = tuple(alpha)
    if len(alpha) > nvars:
        return MonomialPoly(nvars)
    return MonomialPoly(
        nvars, {mu: kostka(alpha, mu) for mu in _partitions(sum(alpha), nvars)}
    )


def schur_vector_poly(f: SchurVector, nvars: int) -> MonomialPoly:
    out = MonomialPoly(nvars)
    for alpha, c in f.items():
        out = out + schur_poly(alpha, nvars).scale(c)
    return out


def power_poly(n: int, nvars: int) -> MonomialPoly:
    if n < 1:
        raise ValueError("n must be positive")
    return MonomialPoly(nvars, {(n,): 1})


def _need(nvars: int, degree: int) -> None:
    if nvars < degree:
        raise ValueError(f"{nvars} variables cannot faithfully represent degree {degree}")


def product_oracle(f: SchurVector, g: SchurVector, nvars: int | None = None) -> MonomialPoly:
    degree = max(f.degrees() or {0}) + max(g.degrees() or {0})
    nvars = max(degree, 1) if nvars is None else nvars
    _need(nvars, degree)
    return schur_vector_poly(f, nvars) * schur_vector_poly(g, nvars)


@cache
def _power_monomial_poly(lam: tuple[int, ...], nvars: int) -> MonomialPoly:
    if not lam:
        return MonomialPoly(nvars, {(): 1})
    n = len(lam)
    rest = list(lam)
    rest[-1] -= 1
    while rest and rest[-1] == 0:
        rest.pop()
    return _power_monomial_poly(tuple(rest), nvars) * power_poly(n, nvars)


@cache
def _plethysm_monomial(lam: tuple[int, ...], g_key: frozenset, nvars: int) -> MonomialPoly:
    if not lam:
        return MonomialPoly(nvars, {(): 1})
    n = len(lam)
    rest = list(lam)
    rest[-1] -= 1
    while rest and rest[-1] == 0:
        rest.pop()
    g = MonomialPoly(nvars, dict(g_key))
    return _plethysm_monomial(tuple(rest), g_key, nvars) * g.scale_exponents(n)


def plethysm_oracle(f_power: PowerVector, g: SchurVector, nvars: int | None = None) -> MonomialPoly:
    """f[g] with f given in power sums: p_n[g] scales every exponent of g by n."""
    g_deg = max(g.degrees() or {0})
    degree = max((g_deg * sum(k * m for k, m in enumerate(lam, 1)) for lam in f_power.keys()), default=0)
    nvars = max(degree, 1) if nvars is None else nvars
    _need(nvars, degree)
    g_key = frozenset(schur_vector_poly(g, nvars).terms.items())
    out = MonomialPoly(nvars)
    for lam, c in f_power.items():
        out = out + _plethysm_monomial(tuple(lam), g_key, nvars).scale(c)
    return out


def monomial_to_schur(P: MonomialPoly, d: int) -> SchurVector:
    """Schur expansion of a homogeneous symmetric polynomial of degree d (nvars >= d)."""
    _need(P.nvars, d)
    if P.terms and P.degrees() != {d}:
        raise ValueError(f"polynomial is not homogeneous of degree {d}")
    residue = dict(P.terms)
    out = {}
    for _ in range(sum(1 for _ in _partitions(d, d)) + 1):
        if not residue:
            return SchurVector(out)
        lead = max(residue)  # lexicographic order refines dominance
        c = residue[lead]
        out[lead] = c
        for mu, k in schur_poly(lead, P.nvars).terms.items():
            v = residue.get(mu, 0) - c * k
            if v:
                residue[mu] = v
            else:
                residue.pop(mu, None)
    raise ArithmeticError(f"triangular solve did not terminate; residue {residue}")


def _z(lam: tuple[int, ...]) -> int:
    return prod(k**m * factorial(m) for k, m in enumerate(lam, start=1))


def _to_mult(mu: Exponent) -> tuple[int, ...]:
    if not mu:
        return ()
    out = [0] * mu[0]
    for part in mu:
        out[part - 1] += 1
    return tuple(out)


@cache
def character_columns(d: int) -> dict[tuple[int, ...], SchurVector]:
    """p_lambda in the Schur basis, by expanding p_lambda in d variables."""
    return {
        _to_mult(mu): monomial_to_schur(_power_monomial_poly(_to_mult(mu), max(d, 1)), d)
        for mu in _partitions(d, d)
    }


def power_expansion(alpha: Exponent) -> PowerVector:
    """s_alpha in power sums, from brute-force characters: sum chi(lambda)/z_lambda p_lambda."""
    alpha = tuple(alpha)
    columns = character_columns(sum(alpha))
    return PowerVector({lam: Fraction(col[alpha]) / _z(lam) for lam, col in columns.items()})


def schur_product_oracle(alpha: Exponent, beta: Exponent, nvars: int | None = None) -> SchurVector:
    d = sum(alpha) + sum(beta)
    P = product_oracle(SchurVector({tuple(alpha): 1}), SchurVector({tuple(beta): 1}), nvars)
    return monomial_to_schur(P, d)


def schur_plethysm_oracle(alpha: Exponent, beta: Exponent, nvars: int | None = None) -> SchurVector:
    d = sum(alpha) * sum(beta)
    P = plethysm_oracle(power_expansion(alpha), SchurVector({tuple(beta): 1}), nvars)
    return monomial_to_schur(P, d)
