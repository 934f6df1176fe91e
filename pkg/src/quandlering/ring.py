"""Quandle rings k[X] over exact coefficient domains.

Elements are sparse maps basis index -> coefficient.  Coefficients live in
one of three domains: the integers ``ZZ``, the rationals ``QQ`` (Python
``Fraction``), or a prime field ``GF(p)``.  Nothing here uses floating
point.

The augmentation ideal is handled in E-coordinates: ``E_i = e_i - e_0``
for i = 1..n-1, so a vector ``v`` of length n-1 stands for
``sum_i v[i-1] e_i - (sum v) e_0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Mapping, Sequence

from quandlering.errors import (
    DomainMismatch,
    IndexRange,
    InvalidParam,
    NotAugmentationZero,
)
from quandlering.quandle import Quandle


@dataclass(frozen=True)
class Domain:
    name: str
    p: int = 0

    def __call__(self, x):
        if self.name == "ZZ":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise DomainMismatch(f"{x} is not an integer")
                return int(x.numerator)
            if isinstance(x, bool) or not isinstance(x, (int, Rational)):
                raise DomainMismatch(f"cannot coerce {x!r} into ZZ")
            if isinstance(x, Rational) and not isinstance(x, int):
                if x.denominator != 1:
                    raise DomainMismatch(f"{x} is not an integer")
                return int(x.numerator)
            return int(x)
        if self.name == "QQ":
            return Fraction(x)
        # prime field
        x = Fraction(x)
        den = x.denominator % self.p
        if den == 0:
            raise DomainMismatch(f"{x} has denominator divisible by {self.p}")
        return x.numerator * pow(den, -1, self.p) % self.p

    def __str__(self) -> str:
        return f"GF({self.p})" if self.name == "GF" else self.name


ZZ = Domain("ZZ")
QQ = Domain("QQ")


def GF(p: int) -> Domain:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise InvalidParam(f"{p} is not prime")
    return Domain("GF", p)


class RingElement:
    """An element of k[Q]; treat as immutable."""

    __slots__ = ("quandle", "coeffs", "domain")

    def __init__(self, quandle: Quandle, coeffs: Mapping[int, object] = (), domain: Domain = ZZ):
        clean = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for x, c in items:
            if not 0 <= x < quandle.n:
                raise IndexRange(f"basis index {x} out of range for order {quandle.n}")
            c = domain(c)
            if c:
                clean[x] = clean.get(x, 0) + c
        if domain.name == "GF":
            clean = {x: c % domain.p for x, c in clean.items()}
        self.quandle = quandle
        self.coeffs = {x: c for x, c in sorted(clean.items()) if c}
        self.domain = domain

    # construction helpers

    @classmethod
    def basis(cls, q: Quandle, x: int, domain: Domain = ZZ) -> RingElement:
        return cls(q, {x: 1}, domain)

    @classmethod
    def from_vector(cls, q: Quandle, vec: Sequence, domain: Domain = ZZ) -> RingElement:
        if len(vec) != q.n:
            raise InvalidParam(f"expected {q.n} coefficients, got {len(vec)}")
        return cls(q, dict(enumerate(vec)), domain)

    def to_vector(self) -> tuple:
        return tuple(self.coeffs.get(x, 0) for x in range(self.quandle.n))

    def over(self, domain: Domain) -> RingElement:
        return RingElement(self.quandle, self.coeffs, domain)

    # arithmetic

    def _same(self, other: RingElement) -> None:
        if self.quandle != other.quandle:
            raise DomainMismatch("elements of different quandle rings")
        if self.domain != other.domain:
            raise DomainMismatch(f"domains differ: {self.domain} vs {other.domain}")

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        self._same(other)
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out.get(x, 0) + c
        return RingElement(self.quandle, out, self.domain)

    def __neg__(self):
        return RingElement(self.quandle, {x: -c for x, c in self.coeffs.items()}, self.domain)

    def __sub__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return multiply(self, other)
        c = self.domain(other)
        return RingElement(self.quandle, {x: c * a for x, a in self.coeffs.items()}, self.domain)

    def __rmul__(self, other):
        c = self.domain(other)
        return RingElement(self.quandle, {x: c * a for x, a in self.coeffs.items()}, self.domain)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return (
            self.quandle == other.quandle
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.quandle, self.domain, tuple(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"RingElement({format_element(self)}, {self.domain})"


def format_element(u: RingElement, symbol: str = "e", one_based: bool = False) -> str:
    if not u.coeffs:
        return "0"
    parts = []
    for x, c in u.coeffs.items():
        idx = x + 1 if one_based else x
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = f"{symbol}{idx}" if mag == 1 else f"{mag}*{symbol}{idx}"
        parts.append((sign, term))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        s += f" {sign} {term}"
    return s


def multiply(u: RingElement, v: RingElement) -> RingElement:
    """Bilinear product through the operation table: e_x e_y = e_{x*y}."""
    u._same(v)
    t = u.quandle.table
    out: dict[int, object] = {}
    for x, a in u.coeffs.items():
        row = t[x]
        for y, b in v.coeffs.items():
            z = row[y]
            out[z] = out.get(z, 0) + a * b
    return RingElement(u.quandle, out, u.domain)


def square(u: RingElement) -> RingElement:
    return multiply(u, u)


def augment(u: RingElement):
    total = sum(u.coeffs.values(), u.domain(0))
    return u.domain(total)


def commutator(u: RingElement, v: RingElement) -> RingElement:
    return multiply(u, v) - multiply(v, u)


def is_idempotent(u: RingElement) -> bool:
    return multiply(u, u) == u


def is_central(u: RingElement) -> bool:
    q = u.quandle
    for y in range(q.n):
        e = RingElement.basis(q, y, u.domain)
        if multiply(u, e) != multiply(e, u):
            return False
    return True


def all_ones(q: Quandle, domain: Domain = ZZ) -> RingElement:
    """w = sum of all basis elements."""
    return RingElement(q, {x: 1 for x in range(q.n)}, domain)


# augmentation ideal in E-coordinates


def to_delta(u: RingElement) -> tuple:
    if augment(u) != 0:
        raise NotAugmentationZero(f"augmentation of {format_element(u)} is nonzero")
    return tuple(u.coeffs.get(i, 0) for i in range(1, u.quandle.n))


def from_delta(q: Quandle, v: Sequence, domain: Domain = ZZ) -> RingElement:
    if len(v) != q.n - 1:
        raise InvalidParam(f"delta vector must have length {q.n - 1}")
    coeffs = {i + 1: c for i, c in enumerate(v)}
    coeffs[0] = -sum(v)
    return RingElement(q, coeffs, domain)


def _e_index_vector(d: int, idx: int) -> list[int]:
    vec = [0] * d
    if idx:
        vec[idx - 1] = 1
    return vec


@lru_cache(maxsize=64)
def e_structure(q: Quandle) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """``S[i][j]`` = E-coordinates of E_{i+1} E_{j+1}."""
    n, t = q.n, q.table
    d = n - 1
    out = []
    for i in range(1, n):
        row = []
        for j in range(1, n):
            # (e_i - e_0)(e_j - e_0) = e_{i*j} - e_{i*0} - e_{0*j} + e_0
            vec = [0] * d
            for idx, sgn in ((t[i][j], 1), (t[i][0], -1), (t[0][j], -1), (0, 1)):
                if idx:
                    vec[idx - 1] += sgn
            row.append(tuple(vec))
        out.append(tuple(row))
    return tuple(out)


@lru_cache(maxsize=64)
def anchor_action(q: Quandle) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """E-coordinates of e_0 E_j and of E_j e_0, for j = 1..n-1."""
    n, t = q.n, q.table
    d = n - 1
    left = tuple(tuple(_e_index_vector(d, t[0][j])) for j in range(1, n))
    right = tuple(tuple(_e_index_vector(d, t[j][0])) for j in range(1, n))
    return left, right


def delta_multiply(q: Quandle, a: Sequence, b: Sequence) -> list:
    """Product of two augmentation-ideal elements given in E-coordinates."""
    s = e_structure(q)
    d = q.n - 1
    out = [0] * d
    for i, ai in enumerate(a):
        if not ai:
            continue
        si = s[i]
        for j, bj in enumerate(b):
            if not bj:
                continue
            c = ai * bj
            for k, v in enumerate(si[j]):
                if v:
                    out[k] += c * v
    return out


def dihedral_E_product(n: int, i: int, j: int) -> tuple[int, ...]:
    """E_i E_j = E_{2j-i} - E_{n-i} - E_{2j} in R_n, indices mod n, E_0 = 0."""
    if n < 2 or not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise IndexRange(f"need 1 <= i, j <= {n - 1}")
    vec = [0] * (n - 1)
    for idx, sgn in (((2 * j - i) % n, 1), ((n - i) % n, -1), ((2 * j) % n, -1)):
        if idx:
            vec[idx - 1] += sgn
    return tuple(vec)


# ring maps induced by quandle homomorphisms


class RingMap:
    """Linear extension of a quandle homomorphism f: Q -> P to Z[Q] -> Z[P]."""

    def __init__(self, source: Quandle, target: Quandle, f: Sequence[int]):
        from quandlering.morphisms import is_homomorphism

        f = tuple(int(v) for v in f)
        if len(f) != source.n or not is_homomorphism(source, target, f):
            raise InvalidParam("map is not a quandle homomorphism")
        self.source = source
        self.target = target
        self.f = f

    def __call__(self, u: RingElement) -> RingElement:
        if u.quandle != self.source:
            raise DomainMismatch("element is not in the source ring")
        out: dict[int, object] = {}
        for x, c in u.coeffs.items():
            out[self.f[x]] = out.get(self.f[x], 0) + c
        return RingElement(self.target, out, u.domain)

    def matrix_rows(self) -> list[list[int]]:
        """Row x is the image of e_x in target coordinates."""
        return [[int(self.f[x] == y) for y in range(self.target.n)] for x in range(self.source.n)]

    def kernel(self):
        from quandlering.zlattice import kernel

        return kernel(self.matrix_rows(), self.target.n)


def extend_hom(source: Quandle, target: Quandle, f: Sequence[int]) -> RingMap:
    return RingMap(source, target, f)


def linear_map(q: Quandle, matrix: Sequence[Sequence[int]], u: RingElement) -> RingElement:
    """Apply the integer matrix whose column x holds the image of e_x."""
    out: dict[int, object] = {}
    for x, c in u.coeffs.items():
        for y in range(q.n):
            m = matrix[y][x]
            if m:
                out[y] = out.get(y, 0) + c * m
    return RingElement(q, out, u.domain)
