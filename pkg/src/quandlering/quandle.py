"""Finite quandles as operation tables.

``table[x][y]`` is ``x * y``; column ``y`` is the right multiplication
``R_y`` and row ``a`` the left multiplication ``L_a``.  Elements are
0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Callable, Optional, Sequence

from quandlering.errors import AxiomViolation, CocycleViolation, InvalidParam
from quandlering.groups import FiniteGroup, check_automorphism, cyclic_group

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Quandle:
    n: int
    table: Table
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "table", tuple(tuple(int(v) for v in row) for row in self.table)
        )
        check_axioms(self.n, self.table)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        name = self.label or "Quandle"
        return f"<{name} of order {self.n}>"

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def column(self, y: int) -> tuple[int, ...]:
        """R_y as a permutation: x -> x*y."""
        return tuple(self.table[x][y] for x in range(self.n))

    def row(self, a: int) -> tuple[int, ...]:
        """L_a as a map: x -> a*x."""
        return self.table[a]

    def right_divide(self, x: int, y: int) -> int:
        """The unique z with z * y = x."""
        return self.column(y).index(x)

    def with_label(self, label: str) -> Quandle:
        return Quandle(self.n, self.table, label)


def check_axioms(n: int, table: Sequence[Sequence[int]]) -> None:
    """Raise ``AxiomViolation`` for the first failing axiom, in order 1, 2, 3."""
    if n < 1 or len(table) != n or any(len(row) != n for row in table):
        raise InvalidParam("table must be n x n with n >= 1")
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise InvalidParam(f"table entry {v} out of range [0, {n})")
    for x in range(n):
        if table[x][x] != x:
            raise AxiomViolation(1, (x,), f"axiom 1: {x}*{x} = {table[x][x]}")
    for y in range(n):
        seen: dict[int, int] = {}
        for x in range(n):
            v = table[x][y]
            if v in seen:
                raise AxiomViolation(
                    2,
                    (y, seen[v], x),
                    f"axiom 2: column {y} not a permutation "
                    f"({seen[v]}*{y} = {x}*{y} = {v})",
                )
            seen[v] = x
    for x, y, z in iproduct(range(n), repeat=3):
        if table[table[x][y]][z] != table[table[x][z]][table[y][z]]:
            raise AxiomViolation(
                3, (x, y, z), f"axiom 3: (x*y)*z != (x*z)*(y*z) at {(x, y, z)}"
            )


def from_table(n: int, table: Sequence[Sequence[int]], label: str = "") -> Quandle:
    if len(table) != n:
        raise InvalidParam(f"expected {n} rows, got {len(table)}")
    return Quandle(n, tuple(tuple(row) for row in table), label)


def from_columns(columns: Sequence[Sequence[int]], label: str = "") -> Quandle:
    """Build from right multiplications, ``columns[y][x] = x*y``."""
    n = len(columns)
    return from_table(n, [[columns[y][x] for y in range(n)] for x in range(n)], label)


def parse_table_text(text: str, label: str = "") -> Quandle:
    """Read the plain table format: ``#`` comments, ``n``, then n rows."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise InvalidParam("empty quandle table file")
    try:
        n = int(lines[0])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise InvalidParam(f"malformed quandle table: {exc}") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InvalidParam(f"expected {n} rows of {n} integers")
    return from_table(n, rows, label)


def format_table_text(q: Quandle) -> str:
    out = []
    if q.label:
        out.append(f"# {q.label}")
    out.append(str(q.n))
    out.extend(" ".join(str(v) for v in row) for row in q.table)
    return "\n".join(out) + "\n"


# constructions


def trivial(m: int) -> Quandle:
    if m < 1:
        raise InvalidParam("trivial quandle needs m >= 1")
    return Quandle(m, tuple(tuple(x for _ in range(m)) for x in range(m)), f"T{m}")


def dihedral(n: int) -> Quandle:
    if n < 1:
        raise InvalidParam("dihedral quandle needs n >= 1")
    t = tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n))
    return Quandle(n, t, f"R{n}")


def commutative(order: int) -> Quandle:
    """C_{2n+1}: x*y = (n+1)(x+y) mod 2n+1."""
    if order < 1 or order % 2 == 0:
        raise InvalidParam(f"commutative quandle needs odd order, got {order}")
    c = (order + 1) // 2
    t = tuple(tuple(c * (x + y) % order for y in range(order)) for x in range(order))
    return Quandle(order, t, f"C{order}")


def core(g: FiniteGroup) -> Quandle:
    """Core(G): x*y = y x^{-1} y."""
    c, inv = g.cayley, g.inverse
    t = tuple(tuple(c[c[y][inv[x]]][y] for y in range(g.n)) for x in range(g.n))
    return Quandle(g.n, t, f"Core({g.label})" if g.label else "Core")


def conj(g: FiniteGroup) -> Quandle:
    """Conj(G): x*y = y x y^{-1}."""
    c, inv = g.cayley, g.inverse
    t = tuple(tuple(c[c[y][x]][inv[y]] for y in range(g.n)) for x in range(g.n))
    return Quandle(g.n, t, f"Conj({g.label})" if g.label else "Conj")


def alexander(g: FiniteGroup, f: Sequence[int]) -> Quandle:
    """Generalized Alexander quandle: x*y = f(x y^{-1}) y."""
    f = check_automorphism(g, f)
    c, inv = g.cayley, g.inverse
    t = tuple(tuple(c[f[c[x][inv[y]]]][y] for y in range(g.n)) for x in range(g.n))
    return Quandle(g.n, t, f"Alex({g.label})" if g.label else "Alex")


def alexander_cyclic(n: int, u: int) -> Quandle:
    """Alexander quandle on Z_n with x*y = u x + (1-u) y, u a unit."""
    from math import gcd

    if gcd(u, n) != 1:
        raise InvalidParam(f"{u} is not a unit mod {n}")
    q = alexander(cyclic_group(n), [(u * a) % n for a in range(n)])
    return q.with_label(f"Alex(Z{n},{u % n})")


def extension(
    x: Quandle,
    a: FiniteGroup,
    psi: Callable[[int, int], int] | Sequence[Sequence[int]],
) -> Quandle:
    """Abelian extension X x A with (x, s)*(y, t) = (x*y, s + psi(x, y)).

    Pair (x, s) is stored at index ``x * |A| + s``.
    """
    if not a.is_abelian():
        raise InvalidParam("extension coefficient group must be abelian")
    cocycle = psi if callable(psi) else (lambda i, j: psi[i][j])
    n, tb, add = x.n, x.table, a.cayley
    ps = [[int(cocycle(i, j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        if ps[i][i] != a.identity:
            raise CocycleViolation(f"psi({i},{i}) is not zero")
    for i, j, k in iproduct(range(n), repeat=3):
        lhs = add[ps[i][j]][ps[tb[i][j]][k]]
        rhs = add[ps[i][k]][ps[tb[i][k]][tb[j][k]]]
        if lhs != rhs:
            raise CocycleViolation(f"2-cocycle condition fails at {(i, j, k)}")
    m = a.n
    size = n * m
    t = tuple(
        tuple(
            tb[p // m][q // m] * m + add[p % m][ps[p // m][q // m]]
            for q in range(size)
        )
        for p in range(size)
    )
    return Quandle(size, t, f"{x.label}x{a.label}" if x.label else "")


def product(x: Quandle, y: Quandle) -> Quandle:
    """Direct product with (a, b) at index a * |Y| + b."""
    m = y.n
    size = x.n * m
    t = tuple(
        tuple(x.table[p // m][q // m] * m + y.table[p % m][q % m] for q in range(size))
        for p in range(size)
    )
    label = f"({x.label},{y.label})" if x.label and y.label else ""
    return Quandle(size, t, label)


# 1-based cycle notation of the right multiplications of the involutory
# connected quandle of order 6.
X6_CYCLES = (
    ((3, 5), (4, 6)),
    ((3, 6), (4, 5)),
    ((1, 5), (2, 6)),
    ((1, 6), (2, 5)),
    ((1, 3), (2, 4)),
    ((1, 4), (2, 3)),
)


def perm_from_cycles(n: int, cycles, one_based: bool = True) -> tuple[int, ...]:
    p = list(range(n))
    shift = 1 if one_based else 0
    for cyc in cycles:
        for k, a in enumerate(cyc):
            p[a - shift] = cyc[(k + 1) % len(cyc)] - shift
    return tuple(p)


def x6() -> Quandle:
    """The order-6 quandle whose trivial subquandles are {0,1}, {2,3}, {4,5}."""
    cols = [perm_from_cycles(6, cyc) for cyc in X6_CYCLES]
    return from_columns(cols, "X6")


_KINDS = {
    "trivial": trivial,
    "dihedral": dihedral,
    "commutative": commutative,
    "core": core,
    "conj": conj,
    "alexander": alexander,
    "extension": extension,
    "product": product,
    "x6": x6,
}


def construct(kind: str, *params, **kwargs) -> Quandle:
    """Dispatch to one of the named constructions above."""
    try:
        builder = _KINDS[kind]
    except KeyError:
        raise InvalidParam(
            f"unknown quandle kind {kind!r}; expected one of {sorted(_KINDS)}"
        ) from None
    return builder(*params, **kwargs)


# structure


@dataclass(frozen=True)
class PropertyReport:
    latin: bool
    semi_latin: bool
    commutative: bool
    connected: bool
    faithful: bool
    involutory: bool
    almost_latin_degree: Optional[int]
    inn_order: int

    def as_dict(self) -> dict:
        return {
            "latin": self.latin,
            "semi_latin": self.semi_latin,
            "commutative": self.commutative,
            "connected": self.connected,
            "faithful": self.faithful,
            "involutory": self.involutory,
            "almost_latin_degree": self.almost_latin_degree,
            "inn_order": self.inn_order,
        }


def stabilizer(q: Quandle, a: int) -> list[int]:
    """Stab(a) = {x : a*x = a}."""
    return [x for x in range(q.n) if q.table[a][x] == a]


def almost_latin_degree(q: Quandle) -> Optional[int]:
    sizes = {len(stabilizer(q, a)) for a in range(q.n)}
    if len(sizes) != 1:
        return None
    m = sizes.pop()
    for a in range(q.n):
        stab = set(stabilizer(q, a))
        row = q.table[a]
        for b in range(q.n):
            if b not in stab and row.count(b) != 1:
                return None
    return m


def inner_group(q: Quandle) -> tuple[int, list[tuple[int, ...]]]:
    """Order of Inn(Q) by closure of the columns, and the columns themselves."""
    gens = [q.column(y) for y in range(q.n)]
    distinct = sorted(set(gens))
    ident = tuple(range(q.n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in distinct:
                h = tuple(s[i] for i in g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen), gens


def orbit(q: Quandle, x: int) -> set[int]:
    cols = [q.column(y) for y in range(q.n)]
    seen = {x}
    stack = [x]
    while stack:
        a = stack.pop()
        for c in cols:
            if c[a] not in seen:
                seen.add(c[a])
                stack.append(c[a])
    return seen


def properties(q: Quandle) -> PropertyReport:
    n, t = q.n, q.table
    injective_rows = all(len(set(t[a])) == n for a in range(n))
    commutative_ = all(t[x][y] == t[y][x] for x in range(n) for y in range(x))
    cols = [q.column(y) for y in range(n)]
    inn_order, _ = inner_group(q)
    return PropertyReport(
        # finite: an injective L_a is bijective, so both flags coincide
        latin=injective_rows,
        semi_latin=injective_rows,
        commutative=commutative_,
        connected=len(orbit(q, 0)) == n,
        faithful=len(set(cols)) == n,
        involutory=all(c[c[x]] == x for c in cols for x in range(n)),
        almost_latin_degree=almost_latin_degree(q),
        inn_order=inn_order,
    )
