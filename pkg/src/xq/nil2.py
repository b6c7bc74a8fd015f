"""Free nil(2) groups: canonical normal forms and exact arithmetic.

Convention: commutators are (x, y) = -x - y + x + y, groups are written
additively, and every element of the free nil(2) group on g_0..g_{n-1} has a
unique normal form

    a_0 g_0 + ... + a_{n-1} g_{n-1} + sum_{i<j} c_ij (g_i, g_j)

with the basic commutators (g_i, g_j), i < j, central.  Multiplication
collects the second base block past the first; each crossing of a g_j letter
(j > i) over a g_i letter emits (g_j, g_i) = -(g_i, g_j), giving the frozen
collection correction

    (a, c) * (a', c') = (a + a', c + c' + delta(a, a')),
    delta(a, a')[i, j] = -a[j] * a'[i]            for i < j.

The formula was derived against the independent letter-rewriting oracle in
tests/oracle.py and is validated there on random words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .words import Letter


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """Index pairs (i, j), i < j, in lexicographic order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(pair_list(n))}


@dataclass(frozen=True)
class Nil2Element:
    """Normal form: base exponents plus basic commutator exponents."""

    base: tuple[int, ...]
    comm: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.base)

    def is_central(self) -> bool:
        return all(a == 0 for a in self.base)


def identity(n: int) -> Nil2Element:
    return Nil2Element((0,) * n, (0,) * len(pair_list(n)))


def generator(n: int, i: int) -> Nil2Element:
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    return Nil2Element(tuple(1 if k == i else 0 for k in range(n)),
                       (0,) * len(pair_list(n)))


def basic_commutator(n: int, i: int, j: int) -> Nil2Element:
    """(g_i, g_j); for i > j the inverse of (g_j, g_i), for i == j zero."""
    if i == j:
        return identity(n)
    sign = 1 if i < j else -1
    key = (i, j) if i < j else (j, i)
    k = pair_index(n)[key]
    return Nil2Element((0,) * n,
                       tuple(sign if m == k else 0 for m in range(len(pair_list(n)))))


def _delta(a: Sequence[int], b: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(-a[j] * b[i] for i, j in pair_list(n))


def mul(x: Nil2Element, y: Nil2Element) -> Nil2Element:
    n = x.n
    if y.n != n:
        raise ValueError("rank mismatch")
    return Nil2Element(
        tuple(p + q for p, q in zip(x.base, y.base)),
        tuple(c + d + e for c, d, e in zip(x.comm, y.comm, _delta(x.base, y.base, n))),
    )


def inv(x: Nil2Element) -> Nil2Element:
    # solve x * y = 0: base negates, and delta(a, -a)[i,j] = a[i]*a[j]
    n = x.n
    return Nil2Element(
        tuple(-a for a in x.base),
        tuple(-c - x.base[i] * x.base[j] for c, (i, j) in zip(x.comm, pair_list(n))),
    )


def commutator(x: Nil2Element, y: Nil2Element) -> Nil2Element:
    return mul(mul(inv(x), inv(y)), mul(x, y))


def normalize_word(letters: Iterable[Letter], n: int) -> Nil2Element:
    """Normal form of a word in the generators (letters (i, +-1))."""
    acc = identity(n)
    for i, s in letters:
        if not 0 <= i < n:
            raise ValueError(f"generator index {i} out of range for rank {n}")
        g = generator(n, i)
        acc = mul(acc, g if s > 0 else inv(g))
    return acc


def to_word(x: Nil2Element) -> tuple[Letter, ...]:
    """Canonical word spelling the normal form; normalize_word inverts it."""
    out: list[Letter] = []
    for i, a in enumerate(x.base):
        sign = 1 if a > 0 else -1
        out.extend((i, sign) for _ in range(abs(a)))
    for c, (i, j) in zip(x.comm, pair_list(x.n)):
        if c > 0:
            out.extend([(i, -1), (j, -1), (i, 1), (j, 1)] * c)
        elif c < 0:
            out.extend([(j, -1), (i, -1), (j, 1), (i, 1)] * (-c))
    return tuple(out)
