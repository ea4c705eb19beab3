"""Elements of the ring of symmetric functions in the Schur and power-sum bases."""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, TypeVar, Union

from .partition import (
    Multiplicity,
    Partition,
    add_border_strips,
    from_multiplicity,
    is_partition,
    partitions_of,
    to_multiplicity,
    trim_multiplicity,
    weighted_size,
)

Number = Union[int, Fraction]
V = TypeVar("V", bound="_SparseVector")


class _SparseVector:
    """Immutable finite linear combination with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = defaultdict(Fraction)
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                key = self._check_key(key)
                acc[key] += Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _check_key(cls, key):
        return tuple(key)

    @classmethod
    def _trusted(cls: type[V], terms: dict) -> V:
        obj = cls.__new__(cls)
        obj._terms = {k: c for k, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls: type[V]) -> V:
        return cls._trusted({})

    @classmethod
    def one(cls: type[V]) -> V:
        return cls._trusted({(): Fraction(1)})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    coefficient = __getitem__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = type(self)._trusted({(): Fraction(other)})
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self)._trusted({(): Fraction(other)})
        if type(other) is not type(self):
            return NotImplemented
        return other

    def __add__(self: V, other) -> V:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)._trusted(acc)

    __radd__ = __add__

    def __neg__(self: V) -> V:
        return type(self)._trusted({k: -c for k, c in self._terms.items()})

    def __sub__(self: V, other) -> V:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self: V, other) -> V:
        return (-self) + other

    def scale(self: V, c: Number) -> V:
        c = Fraction(c)
        return type(self)._trusted({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self: V, c: Number) -> V:
        return self.scale(Fraction(1) / Fraction(c))

    def _key_size(self, key) -> int:
        raise NotImplementedError

    def degrees(self) -> set[int]:
        return {self._key_size(k) for k in self._terms}

    def degree_component(self: V, d: int) -> V:
        return type(self)._trusted(
            {k: c for k, c in self._terms.items() if self._key_size(k) == d}
        )

    def homogeneous_degree(self) -> int:
        """The common degree of all terms; raises if the vector is not homogeneous."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"expected a homogeneous element, got degrees {sorted(degs)}")
        return degs.pop()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()})"

    def to_text(self) -> str:
        raise NotImplementedError


class SchurVector(_SparseVector):
    """Sum of c_alpha * s_alpha, keyed by partitions."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        key = tuple(key)
        if not is_partition(key):
            raise ValueError(f"not a partition: {key}")
        return key

    def _key_size(self, key) -> int:
        return sum(key)

    def __mul__(self, other):
        if isinstance(other, SchurVector):
            return product(self, other)
        return super().__mul__(other)

    def sorted_items(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self._terms.items(), key=lambda kc: (-sum(kc[0]), _neg(kc[0])))

    def to_text(self) -> str:
        return render_terms(
            (("s[" + ",".join(map(str, a)) + "]" if a else "", c) for a, c in self.sorted_items())
        )


class PowerVector(_SparseVector):
    """Sum of c_lambda * p_lambda, keyed by multiplicity vectors lambda."""

    __slots__ = ()

    @classmethod
    def _check_key(cls, key):
        key = tuple(key)
        if any(m < 0 for m in key):
            raise ValueError(f"negative multiplicity in {key}")
        return trim_multiplicity(key)

    def _key_size(self, key) -> int:
        return weighted_size(key)

    def __mul__(self, other):
        if isinstance(other, PowerVector):
            acc: dict = defaultdict(Fraction)
            for lam, a in self._terms.items():
                for mu, b in other._terms.items():
                    acc[_add_mult(lam, mu)] += a * b
            return PowerVector._trusted(acc)
        return super().__mul__(other)

    def __pow__(self, k: int) -> "PowerVector":
        out = PowerVector.one()
        for _ in range(k):
            out = out * self
        return out

    def sorted_items(self) -> list[tuple[Multiplicity, Fraction]]:
        return sorted(
            self._terms.items(),
            key=lambda kc: (-weighted_size(kc[0]), _neg(from_multiplicity(kc[0]))),
        )

    def to_text(self) -> str:
        return render_terms(
            (
                ("p[" + ",".join(map(str, from_multiplicity(lam))) + "]" if lam else "", c)
                for lam, c in self.sorted_items()
            )
        )


def _neg(t: tuple) -> tuple:
    return tuple(-x for x in t) + (1,)


def _add_mult(lam: Multiplicity, mu: Multiplicity) -> Multiplicity:
    if len(lam) < len(mu):
        lam, mu = mu, lam
    return tuple(a + (mu[i] if i < len(mu) else 0) for i, a in enumerate(lam))


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_terms(terms: Iterable[tuple[str, Fraction]]) -> str:
    """Join (basis-symbol, coefficient) pairs as ``2*s[3,1] - s[2,2]``."""
    out = []
    for symbol, c in terms:
        mag = abs(c)
        if not symbol:
            body = format_coefficient(mag)
        elif mag == 1:
            body = symbol
        else:
            body = f"{format_coefficient(mag)}*{symbol}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out) if out else "0"


def schur(*parts: int) -> SchurVector:
    """The Schur function s_parts; ``schur()`` is 1."""
    return SchurVector({tuple(parts): 1})


def power(*parts: int) -> PowerVector:
    """The power-sum monomial p_parts (parts form, e.g. ``power(2, 1)`` = p_2 p_1)."""
    return PowerVector({to_multiplicity(tuple(sorted(parts, reverse=True))): 1})


def add(f: V, g: V) -> V:
    return f + g


def scale(f: V, c: Number) -> V:
    return f.scale(c)


def degree_component(f: V, d: int) -> V:
    return f.degree_component(d)


def z_lambda(lam: Multiplicity) -> int:
    return prod(k**m * factorial(m) for k, m in enumerate(lam, start=1))


def hall_power(f: PowerVector, g: PowerVector) -> Fraction:
    return sum(
        (c * g[lam] * z_lambda(lam) for lam, c in f.items() if lam in g.keys()),
        Fraction(0),
    )


def hall_schur(f: SchurVector, g: SchurVector) -> Fraction:
    if len(g) < len(f):
        f, g = g, f
    return sum((c * g[a] for a, c in f.items()), Fraction(0))


def mult_pn(f: SchurVector, n: int) -> SchurVector:
    """p_n * f by the Murnaghan-Nakayama rule."""
    if n < 1:
        raise ValueError("n must be positive")
    acc: dict = defaultdict(Fraction)
    for alpha, c in f.items():
        for gamma, sign in add_border_strips(alpha, n):
            acc[gamma] += sign * c
    return SchurVector._trusted(acc)


@cache
def _power_monomial_in_schur(lam: Multiplicity) -> SchurVector:
    if not lam:
        return SchurVector.one()
    n = len(lam)
    rest = list(lam)
    rest[n - 1] -= 1
    return mult_pn(_power_monomial_in_schur(trim_multiplicity(rest)), n)


def power_to_schur(g: PowerVector) -> SchurVector:
    acc: dict = defaultdict(Fraction)
    for lam, c in g.items():
        for alpha, a in _power_monomial_in_schur(lam).items():
            acc[alpha] += c * a
    return SchurVector._trusted(acc)


@cache
def _schur_in_power_table(d: int) -> dict[Partition, PowerVector]:
    # Coefficient of p_lambda in s_alpha is <p_lambda, s_alpha> / z_lambda.
    rows: dict[Partition, dict] = {alpha: {} for alpha in partitions_of(d)}
    for mu in partitions_of(d):
        lam = to_multiplicity(mu)
        z = z_lambda(lam)
        for alpha, chi in _power_monomial_in_schur(lam).items():
            rows[alpha][lam] = chi / z
    return {alpha: PowerVector._trusted(terms) for alpha, terms in rows.items()}


def schur_to_power(f: SchurVector) -> PowerVector:
    acc: dict = defaultdict(Fraction)
    for alpha, c in f.items():
        for lam, a in _schur_in_power_table(sum(alpha))[alpha].items():
            acc[lam] += c * a
    return PowerVector._trusted(acc)


def character(alpha: Partition, lam: Multiplicity) -> int:
    """chi^alpha at the class lambda, as the constant term of D^lambda(s_alpha)."""
    from .derivation import d_n

    lam = trim_multiplicity(lam)
    if sum(alpha) != weighted_size(lam):
        raise ValueError(f"size mismatch: |{alpha}| != |{lam}|")
    f = SchurVector({tuple(alpha): 1})
    for n, m in enumerate(lam, start=1):
        for _ in range(m):
            f = d_n(f, n)
    value = f[()]
    assert value.denominator == 1
    return int(value)


@cache
def character_table(d: int) -> dict[tuple[Partition, Multiplicity], int]:
    """Full character table of S_d via the Murnaghan-Nakayama images of p_lambda."""
    table = {}
    for mu in partitions_of(d):
        lam = to_multiplicity(mu)
        images = _power_monomial_in_schur(lam)
        for alpha in partitions_of(d):
            table[alpha, lam] = int(images[alpha])
    return table


def product(f: SchurVector, g: SchurVector) -> SchurVector:
    """Ring product, computed through the power-sum basis."""
    return power_to_schur(schur_to_power(f) * schur_to_power(g))
