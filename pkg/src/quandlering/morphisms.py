"""Backtracking searches: automorphisms, homomorphisms, and raw enumeration
of all quandle tables of a small order."""

from __future__ import annotations

from itertools import permutations

from quandlering import config
from quandlering.errors import SizeLimit
from quandlering.quandle import Quandle, check_axioms


def _extend(src: Quandle, dst: Quandle, assign: dict, injective: bool):
    """Close a partial map under f(x*y) = f(x)*f(y); None on conflict."""
    st, dt = src.table, dst.table
    used = set(assign.values()) if injective else None
    changed = True
    while changed:
        changed = False
        keys = list(assign)
        for x in keys:
            fx = assign[x]
            for y in keys:
                z = st[x][y]
                want = dt[fx][assign[y]]
                have = assign.get(z)
                if have is None:
                    if injective and want in used:
                        return None
                    assign[z] = want
                    if injective:
                        used.add(want)
                    changed = True
                elif have != want:
                    return None
        # new keys may create new pairs; loop until stable
    return assign


def _search(src: Quandle, dst: Quandle, injective: bool) -> list[tuple[int, ...]]:
    out = []

    def rec(assign):
        if len(assign) == src.n:
            out.append(tuple(assign[x] for x in range(src.n)))
            return
        x = min(i for i in range(src.n) if i not in assign)
        used = set(assign.values())
        for v in range(dst.n):
            if injective and v in used:
                continue
            trial = dict(assign)
            trial[x] = v
            closed = _extend(src, dst, trial, injective)
            if closed is not None:
                rec(closed)

    rec({})
    out.sort()
    return out


def automorphisms(q: Quandle, max_n: int | None = None) -> list[tuple[int, ...]]:
    """All permutations s with s(x*y) = s(x)*s(y), sorted lexicographically."""
    cap = max_n if max_n is not None else config.size_cap(config.AUTOMORPHISM_MAX_N)
    if q.n > cap:
        raise SizeLimit(f"automorphism search limited to n <= {cap}, got {q.n}")
    return _search(q, q, injective=True)


def homomorphisms(q: Quandle, p: Quandle, cap: int | None = None) -> list[tuple[int, ...]]:
    """All maps f: Q -> P with f(x*y) = f(x)*f(y), sorted lexicographically."""
    cap = cap if cap is not None else config.size_cap(config.HOMOMORPHISM_CAP)
    if p.n ** q.n > cap:
        raise SizeLimit(f"|P|^|Q| = {p.n}^{q.n} exceeds cap {cap}")
    return _search(q, p, injective=False)


def is_homomorphism(q: Quandle, p: Quandle, f) -> bool:
    return all(
        f[q.table[x][y]] == p.table[f[x]][f[y]] for x in range(q.n) for y in range(q.n)
    )


def are_isomorphic(q: Quandle, p: Quandle) -> bool:
    if q.n != p.n:
        return False
    n = q.n

    def rec(assign):
        if len(assign) == n:
            return True
        x = min(i for i in range(n) if i not in assign)
        used = set(assign.values())
        for v in range(n):
            if v in used:
                continue
            trial = dict(assign)
            trial[x] = v
            closed = _extend(q, p, trial, True)
            if closed is not None and rec(closed):
                return True
        return False

    return rec({})


def compose(f, g) -> tuple[int, ...]:
    """(f o g)(x) = f(g(x))."""
    return tuple(f[g[x]] for x in range(len(g)))


def invert(f) -> tuple[int, ...]:
    inv = [0] * len(f)
    for x, fx in enumerate(f):
        inv[fx] = x
    return tuple(inv)


def enumerate_quandles(n: int, max_n: int | None = None) -> list[tuple[tuple[int, ...], ...]]:
    """Every quandle table on {0..n-1}, not reduced up to isomorphism.

    Columns are chosen one at a time among permutations fixing their own
    index; a partial assignment is abandoned as soon as some triple of
    chosen columns violates R_z R_y = R_{y*z} R_z.
    """
    cap = max_n if max_n is not None else config.ENUMERATE_MAX_N
    if n > cap:
        raise SizeLimit(f"quandle enumeration limited to n <= {cap}, got {n}")
    if n < 1:
        return []
    candidates = [
        [p for p in permutations(range(n)) if p[y] == y] for y in range(n)
    ]
    cols: list[tuple[int, ...]] = []
    found = []

    def consistent(k: int) -> bool:
        # distributivity: R_z(R_y(x)) == R_{R_z(y)}(R_z(x)) for all x
        for z in range(k + 1):
            cz = cols[z]
            for y in range(k + 1):
                w = cz[y]
                if w > k or k not in (y, z, w):
                    continue
                cy, cw = cols[y], cols[w]
                for x in range(n):
                    if cz[cy[x]] != cw[cz[x]]:
                        return False
        return True

    def rec(k: int):
        if k == n:
            table = tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))
            found.append(table)
            return
        for p in candidates[k]:
            cols.append(p)
            if consistent(k):
                rec(k + 1)
            cols.pop()

    rec(0)
    for table in found:
        check_axioms(n, table)
    found.sort()
    return found
