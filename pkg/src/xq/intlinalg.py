"""Exact linear algebra over the integers.

Everything works on plain Python ints (arbitrary precision) and lists/tuples
of them; no floating point, no modular shortcuts.  The workhorse is the
row-style Hermite form: it decides lattice membership, solves u * A = b over
Z together with the kernel lattice, and reduces vectors to canonical coset
representatives.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g == x*a + y*b."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def vec_add(u: Sequence[int], v: Sequence[int]) -> list[int]:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Sequence[int], v: Sequence[int]) -> list[int]:
    return [a - b for a, b in zip(u, v)]


def vec_neg(u: Sequence[int]) -> list[int]:
    return [-a for a in u]


def vec_scale(k: int, u: Sequence[int]) -> list[int]:
    return [k * a for a in u]


def vec_is_zero(u: Iterable[int]) -> bool:
    return all(a == 0 for a in u)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]) if b else 0)]
            for i in range(len(a))]


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class Lattice:
    """Integer row lattice in Z^n kept in row echelon form with positive pivots.

    `reduce` floor-reduces a vector at each pivot column, which yields the
    canonical representative of the coset vec + L (pivot columns and pivot
    values are basis-independent invariants of L, and a lattice vector
    vanishing on all pivot columns is zero, so the representative is unique).
    """

    def __init__(self, n: int, rows: Iterable[Sequence[int]] = ()):
        self.n = n
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        for row in rows:
            self.add(row)

    def add(self, row: Sequence[int]) -> None:
        if len(row) != self.n:
            raise ValueError(f"expected vector of length {self.n}, got {len(row)}")
        vec = list(row)
        while True:
            j = next((k for k, a in enumerate(vec) if a != 0), None)
            if j is None:
                return
            pos = bisect_left(self.pivots, j)
            if pos == len(self.pivots) or self.pivots[pos] != j:
                if vec[j] < 0:
                    vec = vec_neg(vec)
                self.rows.insert(pos, vec)
                self.pivots.insert(pos, j)
                return
            head = self.rows[pos]
            a, b = head[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [x - q * y for x, y in zip(vec, head)]
            else:
                g, s, t = xgcd(a, b)
                self.rows[pos] = [s * x + t * y for x, y in zip(head, vec)]
                vec = [(a // g) * y - (b // g) * x for x, y in zip(head, vec)]

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.n:
            raise ValueError(f"expected vector of length {self.n}, got {len(vec)}")
        out = list(vec)
        for pos, j in enumerate(self.pivots):
            q = out[j] // self.rows[pos][j]
            if q:
                out = [x - q * y for x, y in zip(out, self.rows[pos])]
        return tuple(out)

    def __contains__(self, vec: Sequence[int]) -> bool:
        return vec_is_zero(self.reduce(vec))

    def basis(self) -> list[tuple[int, ...]]:
        return [tuple(r) for r in self.rows]

    @property
    def rank(self) -> int:
        return len(self.rows)


def hnf_with_transform(rows: Sequence[Sequence[int]], n: int) -> tuple[list[list[int]], list[list[int]]]:
    """Row echelon form with transform: returns (H, U) with U * rows == H.

    U is unimodular, H has positive pivots with reduced entries above them,
    and zero rows of H sit at the bottom (their U rows span the left kernel).
    """
    m = len(rows)
    aug = [list(rows[i]) + [1 if k == i else 0 for k in range(m)] for i in range(m)]
    r = 0
    for j in range(n):
        piv = next((i for i in range(r, m) if aug[i][j] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(r + 1, m):
            if aug[i][j]:
                g, x, y = xgcd(aug[r][j], aug[i][j])
                ar, ai = aug[r][j] // g, aug[i][j] // g
                aug[r], aug[i] = (
                    [x * u + y * v for u, v in zip(aug[r], aug[i])],
                    [ar * v - ai * u for u, v in zip(aug[r], aug[i])],
                )
        if aug[r][j] < 0:
            aug[r] = vec_neg(aug[r])
        for i in range(r):
            q = aug[i][j] // aug[r][j]
            if q:
                aug[i] = [u - q * v for u, v in zip(aug[i], aug[r])]
        r += 1
    return [row[:n] for row in aug], [row[n:] for row in aug]


def solve_left(rows: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """Find u with sum_i u[i] * rows[i] == target, or None if unsolvable."""
    n = len(target)
    if not rows:
        return [] if vec_is_zero(target) else None
    h, u_rows = hnf_with_transform(rows, n)
    t = list(target)
    coeff = [0] * len(rows)
    for k, hrow in enumerate(h):
        p = next((j for j in range(n) if hrow[j] != 0), None)
        if p is None:
            break
        q = t[p] // hrow[p]
        if q:
            t = [a - q * b for a, b in zip(t, hrow)]
            coeff[k] = q
    if not vec_is_zero(t):
        return None
    out = [0] * len(rows)
    for k, c in enumerate(coeff):
        if c:
            out = [a + c * b for a, b in zip(out, u_rows[k])]
    return out


def left_kernel(rows: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Basis of the lattice {u : sum_i u[i] * rows[i] == 0}."""
    if not rows:
        return []
    h, u_rows = hnf_with_transform(rows, n)
    return [tuple(u_rows[k]) for k in range(len(h)) if vec_is_zero(h[k])]


def reduce_with_order(vec: Sequence[int], rows: Iterable[Sequence[int]],
                      order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Canonical representative of vec modulo the row lattice, reducing
    coordinates in the given priority order (earlier entries reduced first)."""
    n = len(vec)
    if order is None:
        order = list(range(n))
    pvec = [vec[c] for c in order]
    prows = [[r[c] for c in order] for r in rows]
    red = Lattice(n, prows).reduce(pvec)
    out = [0] * n
    for pos, c in enumerate(order):
        out[c] = red[pos]
    return tuple(out)


class ZSystem:
    """Affine constraint system over integer variables.

    Each equation block lives in Z^dim and reads
        sum_v u_v * coeff_v == rhs   (mod the lattice spanned by mod_rows).
    Mod lattices are folded in as slack variables; one Hermite reduction then
    yields a particular solution and the kernel lattice projected onto the
    real variables.
    """

    def __init__(self) -> None:
        self.nvars = 0
        self._eqs: list[tuple[int, list[tuple[int, list[int]]], list[int], list[list[int]]]] = []

    def new_vars(self, k: int) -> list[int]:
        out = list(range(self.nvars, self.nvars + k))
        self.nvars += k
        return out

    def add(self, dim: int, terms: Iterable[tuple[int, Sequence[int]]],
            rhs: Sequence[int], mod_rows: Iterable[Sequence[int]] = ()) -> None:
        terms = [(v, list(c)) for v, c in terms]
        mod_rows = [list(r) for r in mod_rows]
        for _, c in terms:
            if len(c) != dim:
                raise ValueError("coefficient dimension mismatch")
        if len(rhs) != dim:
            raise ValueError("rhs dimension mismatch")
        self._eqs.append((dim, terms, list(rhs), mod_rows))

    def solve(self) -> tuple[list[int], list[tuple[int, ...]]] | None:
        """Return (particular solution, kernel basis) on the real variables."""
        total = sum(dim for dim, _, _, _ in self._eqs)
        nslack = sum(len(mod) for _, _, _, mod in self._eqs)
        nrows = self.nvars + nslack
        a = [[0] * total for _ in range(nrows)]
        b: list[int] = []
        col = 0
        srow = self.nvars
        for dim, terms, rhs, mod in self._eqs:
            for var, coeff in terms:
                row = a[var]
                for j, x in enumerate(coeff):
                    row[col + j] += x
            for mrow in mod:
                for j, x in enumerate(mrow):
                    a[srow][col + j] = x
                srow += 1
            b.extend(rhs)
            col += dim
        u = solve_left(a, b)
        if u is None:
            return None
        kernel = left_kernel(a, total)
        u0 = u[: self.nvars]
        proj = Lattice(self.nvars, [k[: self.nvars] for k in kernel])
        return u0, proj.basis()
