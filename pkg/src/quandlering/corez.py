"""The integral quandle ring of Core(Z), where e_i e_j = e_{2j-i}, and the
dyadic rationals under the midpoint operation.

Exponents are Python integers, so products never truncate or overflow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from quandlering import config
from quandlering.errors import DepthLimit, InvalidParam, NotDivisibleBy3, SizeLimit, ZeroElement
from quandlering.zlattice import contains, hnf


class CoreZElement:
    """Finitely supported sum of e_i, i in Z; treat as immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[int, int] = {}
        for i, c in items:
            clean[int(i)] = clean.get(int(i), 0) + int(c)
        self.coeffs = {i: c for i, c in sorted(clean.items()) if c}

    @classmethod
    def basis(cls, i: int) -> CoreZElement:
        return cls({i: 1})

    def support(self) -> list[int]:
        return list(self.coeffs)

    def __add__(self, other: CoreZElement) -> CoreZElement:
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return CoreZElement(out)

    def __neg__(self) -> CoreZElement:
        return CoreZElement({i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: CoreZElement) -> CoreZElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CoreZElement):
            return cz_multiply(self, other)
        return CoreZElement({i: c * int(other) for i, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, CoreZElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "CoreZElement(0)"
        terms = " + ".join(f"{c}*e[{i}]" for i, c in self.coeffs.items())
        return f"CoreZElement({terms})"


def cz_multiply(u: CoreZElement, v: CoreZElement) -> CoreZElement:
    out: dict[int, int] = {}
    for i, a in u.coeffs.items():
        for j, b in v.coeffs.items():
            k = 2 * j - i
            out[k] = out.get(k, 0) + a * b
    return CoreZElement(out)


def cz_commutator(u: CoreZElement, v: CoreZElement) -> CoreZElement:
    return cz_multiply(u, v) - cz_multiply(v, u)


def cz_extrema(u: CoreZElement) -> tuple[tuple[int, int], tuple[int, int]]:
    """((m, alpha_m), (M, alpha_M)) for the extreme support indices."""
    if not u:
        raise ZeroElement("extrema of the zero element")
    m = min(u.coeffs)
    big = max(u.coeffs)
    return (m, u.coeffs[m]), (big, u.coeffs[big])


def cz_is_idempotent(u: CoreZElement) -> tuple[bool, dict]:
    """Decide u^2 = u and explain the answer.

    Support of size >= 2 fails through the extremal chain
    min(u^2) < min(u) < max(u) < max(u^2); a single term a e_i fails
    exactly when a^2 != a.
    """
    if not u:
        return True, {"reason": "zero"}
    (m, am), (big, aM) = cz_extrema(u)
    sq = cz_multiply(u, u)
    if m == big:
        ok = am * am == am
        return ok, {"reason": "single-support", "index": m, "coefficient": am, "square": am * am}
    (m2, am2), (big2, aM2) = cz_extrema(sq)
    chain = m2 < m < big < big2
    cert = {
        "reason": "extremal-chain",
        "min_u": [m, am],
        "max_u": [big, aM],
        "min_u2": [m2, am2],
        "max_u2": [big2, aM2],
        "chain_holds": chain,
        "predicted_min_u2": [2 * m - big, am * aM],
        "predicted_max_u2": [2 * big - m, am * aM],
    }
    return sq == u, cert


def cz_commutator_identity(a: int) -> bool:
    """[e_{a/3}, e_{2a/3}] == e_a - e_0."""
    if a % 3:
        raise NotDivisibleBy3(f"{a} is not divisible by 3")
    lhs = cz_commutator(CoreZElement.basis(a // 3), CoreZElement.basis(2 * a // 3))
    return lhs == CoreZElement.basis(a) - CoreZElement.basis(0)


def cz_order_probe(window: int) -> dict:
    """On e_i < e_j iff i < j, left multiplication by e_k keeps the order
    and right multiplication reverses it, for i < j and k in the window."""
    if window < 1:
        raise InvalidParam("window must be at least 1")
    rng = range(-window, window + 1)
    checks = fails = 0
    for i in rng:
        for j in rng:
            if i >= j:
                continue
            for k in rng:
                # e_i * e_k = e_{2k-i}; e_k * e_i = e_{2i-k}
                checks += 2
                if not 2 * i - k < 2 * j - k:
                    fails += 1
                if not 2 * k - i > 2 * k - j:
                    fails += 1
    return {"window": window, "checks": checks, "failures": fails, "passed": fails == 0}


def random_element(rng: random.Random, support=(2, 6), exponents=(-20, 20), coeff=9) -> CoreZElement:
    size = rng.randint(*support)
    idx = rng.sample(range(exponents[0], exponents[1] + 1), size)
    return CoreZElement({i: rng.choice([c for c in range(-coeff, coeff + 1) if c]) for i in idx})


def extremal_sweep(samples: int = 1000, seed: int = config.DEFAULT_SEED) -> dict:
    """Random elements with support >= 2: none is idempotent and the
    extremal chain with predicted coefficients holds for all of them."""
    rng = random.Random(seed)
    bad = []
    for s in range(samples):
        u = random_element(rng)
        idem, cert = cz_is_idempotent(u)
        ok = (
            not idem
            and cert["chain_holds"]
            and cert["min_u2"] == cert["predicted_min_u2"]
            and cert["max_u2"] == cert["predicted_max_u2"]
        )
        if not ok:
            bad.append(s)
    return {"samples": samples, "seed": seed, "failures": bad, "passed": not bad}


def delta_squared_window_probe(radius: int) -> dict:
    """Is E_1 in the span of E_i E_j with |i|, |j| <= radius?

    A hit would place E_1 in the square of the augmentation ideal; a miss
    says nothing beyond the window.
    """
    if radius < 1:
        raise InvalidParam("radius must be at least 1")
    lo, hi = -3 * radius, 3 * radius
    idx = [k for k in range(lo, hi + 1) if k]
    pos = {k: p for p, k in enumerate(idx)}
    e = lambda i: CoreZElement.basis(i) - CoreZElement.basis(0)  # noqa: E731
    gens = []
    for i in range(-radius, radius + 1):
        for j in range(-radius, radius + 1):
            prod = cz_multiply(e(i), e(j))
            v = [0] * len(idx)
            for k, c in prod.coeffs.items():
                if k:
                    v[pos[k]] = c
            gens.append(v)
    lat = hnf(gens, len(idx))
    target = [0] * len(idx)
    target[pos[1]] = 1
    found = contains(lat, target)
    return {
        "radius": radius,
        "generators": len(gens),
        "rank": lat.rank,
        "found": found,
        "status": "evidence-only",
        "statement": (
            "E_1 is a Z-combination of the windowed products"
            if found
            else "E_1 is not a Z-combination of the windowed products (no verdict beyond the window)"
        ),
    }


# dyadic rationals


@dataclass(frozen=True)
class DyadicRational:
    """numerator / 2**exponent in lowest terms."""

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise InvalidParam("exponent must be nonnegative")
        if self.exponent and self.numerator % 2 == 0:
            raise InvalidParam("not in lowest terms; use DyadicRational.of")

    @classmethod
    def of(cls, value) -> DyadicRational:
        f = Fraction(value)
        den = f.denominator
        k = den.bit_length() - 1
        if den != 1 << k:
            raise InvalidParam(f"{value} is not dyadic")
        return cls(f.numerator, k)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def star(self, other: DyadicRational) -> DyadicRational:
        """a * b = (a + b) / 2."""
        return DyadicRational.of((self.to_fraction() + other.to_fraction()) / 2)

    def bar(self, other: DyadicRational) -> DyadicRational:
        """Inverse operation a * b = 2a - b, undoing right multiplication by b."""
        return DyadicRational.of(2 * self.to_fraction() - other.to_fraction())

    def __str__(self):
        return str(self.to_fraction())


def dyadic_probe(depth: int) -> dict:
    """Close {0, 1} under both operations, one round per depth level."""
    if depth < 0:
        raise InvalidParam("depth must be nonnegative")
    if depth > config.DYADIC_MAX_DEPTH:
        raise DepthLimit(f"depth {depth} exceeds {config.DYADIC_MAX_DEPTH}")
    cap = config.size_cap(config.CLOSURE_CAP)
    current = {DyadicRational(0), DyadicRational(1)}
    sizes = [len(current)]
    commutative = True
    for _ in range(depth):
        elems = sorted(current, key=DyadicRational.to_fraction)
        if len(elems) ** 2 > cap:
            raise SizeLimit(f"closure step would form {len(elems) ** 2} products")
        new = set(current)
        for a in elems:
            for b in elems:
                ab = a.star(b)
                if ab != b.star(a):
                    commutative = False
                new.add(ab)
                new.add(a.bar(b))
        current = new
        sizes.append(len(current))
    return {
        "depth": depth,
        "sizes": sizes,
        "commutative": commutative,
        "all_dyadic": all(isinstance(x, DyadicRational) for x in current),
        "status": "evidence-only",
    }
