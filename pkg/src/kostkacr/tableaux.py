"""Semistandard tableaux on straight, skew and r-tuple shapes.

Reading words take each row right to left, starting with the top row.
With that convention a tableau is counted by a
Littlewood-Richardson number exactly when its word is a lattice permutation,
and the charge of a single-row tableau (1, 2) is 1.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .exactalg import Poly, RatFunc
from .partitions import as_multipartition, as_partition, b_stat, concentrated, size


@dataclass(frozen=True)
class SkewShape:
    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        outer = as_partition(self.outer)
        inner = as_partition(self.inner)
        if len(inner) > len(outer) or any(a > b for a, b in zip(inner, outer)):
            raise ValueError(f"inner shape {inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def inner_at(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    @property
    def row_lengths(self) -> tuple:
        return tuple(o - self.inner_at(i) for i, o in enumerate(self.outer))

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self):
        for i, o in enumerate(self.outer):
            for j in range(self.inner_at(i), o):
                yield i, j

    def is_straight(self) -> bool:
        return not self.inner


@dataclass(frozen=True)
class SkewTableau:
    """Rows of entries; row i fills columns inner_i .. outer_i - 1."""

    shape: SkewShape
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if tuple(len(r) for r in rows) != self.shape.row_lengths:
            raise ValueError(f"rows {rows} do not fill the shape {self.shape}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def straight(cls, rows) -> SkewTableau:
        rows = tuple(tuple(r) for r in rows if len(r))
        return cls(SkewShape(tuple(len(r) for r in rows)), rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j - self.shape.inner_at(i)]

    def cells(self) -> dict:
        return {(i, j): self.entry(i, j) for i, j in self.shape.cells()}

    def weight(self) -> tuple:
        counts = Counter(x for row in self.rows for x in row)
        top = max(counts, default=0)
        return tuple(counts.get(k, 0) for k in range(1, top + 1))

    def is_semistandard(self) -> bool:
        cells = self.cells()
        for (i, j), v in cells.items():
            if v < 1:
                return False
            right = cells.get((i, j + 1))
            if right is not None and right < v:
                return False
            below = cells.get((i + 1, j))
            if below is not None and below <= v:
                return False
        return True

    def to_json(self) -> dict:
        return {"shape": list(self.shape.outer), "inner": list(self.shape.inner),
                "rows": [list(r) for r in self.rows]}

    def render(self) -> str:
        """Aligned monospace grid; skew cells are shown as dots."""
        cells = self.cells()
        width = max((len(str(v)) for v in cells.values()), default=1)
        lines = []
        for i, o in enumerate(self.shape.outer):
            parts = []
            for j in range(o):
                v = cells.get((i, j))
                parts.append("." * width if v is None else str(v).rjust(width))
            lines.append(" ".join(parts))
        return "\n".join(lines)


@dataclass(frozen=True)
class MultiTableau:
    components: tuple  # r straight SkewTableau

    @property
    def shape(self) -> tuple:
        return tuple(c.shape.outer for c in self.components)

    def to_json(self) -> list:
        return [c.to_json() for c in self.components]


# ------------------------------------------------------------ shapes


def skew_star(left: SkewShape, right: SkewShape) -> SkewShape:
    """left * right: left moved right by the first row of right, right below it."""
    a = right.outer[0] if right.outer else 0
    k1, k2 = len(left.outer), len(right.outer)
    outer = tuple(p + a for p in left.outer) + right.outer
    inner = tuple(left.inner_at(i) + a for i in range(k1)) + tuple(right.inner_at(i) for i in range(k2))
    return SkewShape(outer, inner)


def star_shape(lam) -> SkewShape:
    """lam^(1) * lam^(2) * ... * lam^(r), grouped from the left."""
    lam = as_multipartition(lam)
    shape = SkewShape(lam[0])
    for comp in lam[1:]:
        shape = skew_star(shape, SkewShape(comp))
    return shape


def multi_to_skew(t: MultiTableau) -> SkewTableau:
    rows: list = []
    for comp in t.components:
        rows.extend(comp.rows)
    return SkewTableau(star_shape(t.shape), tuple(rows))


def skew_to_multi(t: SkewTableau, lam) -> MultiTableau:
    lam = as_multipartition(lam)
    comps, pos = [], 0
    for comp in lam:
        comps.append(SkewTableau(SkewShape(comp), t.rows[pos:pos + len(comp)]))
        pos += len(comp)
    return MultiTableau(tuple(comps))


# ------------------------------------------------------------ enumeration


def _horizontal_strips(current: tuple, outer: tuple, k: int):
    """Partitions nu with current <= nu <= outer and nu/current a horizontal strip of size k."""
    m = len(outer)
    cur = current + (0,) * (m - len(current))

    def rec(i, left, acc):
        if i == m:
            if left == 0:
                yield tuple(acc)
            return
        # row i may grow up to the old length of row i-1 (strip condition) and outer_i
        cap = outer[i] if i == 0 else min(outer[i], cur[i - 1])
        for add in range(min(left, cap - cur[i]), -1, -1):
            yield from rec(i + 1, left - add, acc + [cur[i] + add])

    yield from rec(0, k, [])


def _fillings(shape: SkewShape, weight: tuple):
    m = len(shape.outer)
    start = tuple(shape.inner_at(i) for i in range(m))
    chains = [[start]]
    for letter_count in weight:
        nxt = []
        for chain in chains:
            for nu in _horizontal_strips(chain[-1], shape.outer, letter_count):
                nxt.append(chain + [nu])
        chains = nxt
    for chain in chains:
        if chain[-1] != shape.outer + (0,) * (m - len(shape.outer)):
            continue
        rows = [[] for _ in range(m)]
        for letter, (a, b) in enumerate(zip(chain, chain[1:]), start=1):
            for i in range(m):
                rows[i].extend([letter] * (b[i] - a[i]))
        yield SkewTableau(shape, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def _enumerate_skew(shape: SkewShape, weight: tuple) -> tuple:
    if shape.size != sum(weight) or any(w < 0 for w in weight):
        return ()
    return tuple(sorted(_fillings(shape, weight), key=lambda t: t.rows))


def enumerate_sst(shape, weight) -> tuple:
    """All semistandard tableaux of the given shape and weight, sorted by rows.

    ``shape`` is a SkewShape, a partition, or an r-partition (given as a
    tuple of tuples); r-partitions return MultiTableau objects.
    """
    weight = tuple(int(w) for w in weight)
    if isinstance(shape, SkewShape):
        return _enumerate_skew(shape, weight)
    shape = tuple(shape)
    if shape and all(isinstance(c, (tuple, list)) for c in shape):
        lam = as_multipartition(shape)
        return tuple(skew_to_multi(t, lam) for t in _enumerate_skew(star_shape(lam), weight))
    return _enumerate_skew(SkewShape(as_partition(shape)), weight)


# ------------------------------------------------------------ words and charge


def word(t) -> tuple:
    """Reading word: each row right to left, top row first."""
    if isinstance(t, MultiTableau):
        t = multi_to_skew(t)
    return tuple(x for row in t.rows for x in reversed(row))


def is_lattice(w) -> bool:
    counts: Counter = Counter()
    for x in w:
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def _standard_charge(positions: list) -> int:
    """Charge of a standard word given the position of each letter 1..k."""
    index = total = 0
    for a, b in zip(positions, positions[1:]):
        if b < a:
            index += 1
        total += index
    return total


def charge(w) -> int:
    """Lascoux-Schutzenberger charge of a word of partition weight."""
    w = list(w)
    counts = Counter(w)
    top = max(counts, default=0)
    weight = [counts.get(k, 0) for k in range(1, top + 1)]
    if any(x < 1 for x in w) or any(a < b for a, b in zip(weight, weight[1:])):
        raise ValueError(f"charge needs a word of partition weight, got weight {weight}")
    alive = list(range(len(w)))
    total = 0
    while alive:
        letters = [w[p] for p in alive]
        k = max(letters)
        picked = []
        # scan rightwards from the left end, cyclically, for 1, 2, ..., k
        cursor = -1
        for letter in range(1, k + 1):
            for step in range(1, len(alive) + 1):
                j = (cursor + step) % len(alive)
                if letters[j] == letter:
                    picked.append(j)
                    cursor = j
                    break
        total += _standard_charge([alive[j] for j in picked])
        chosen = set(picked)
        alive = [p for j, p in enumerate(alive) if j not in chosen]
    return total


# ------------------------------------------------------------ jeu de taquin


def _inner_corners(inner: list) -> list:
    return [(i, inner[i] - 1) for i in range(len(inner))
            if inner[i] > 0 and (i + 1 == len(inner) or inner[i + 1] < inner[i])]


def rectify(t: SkewTableau, rng: random.Random | None = None) -> SkewTableau:
    """Jeu-de-taquin rectification.

    Inner corners are taken bottom-most first, or in random order when an
    ``rng`` is supplied; the result does not depend on that choice.
    """
    cells = t.cells()
    inner = [t.shape.inner_at(i) for i in range(len(t.shape.outer))]
    while any(inner):
        corners = _inner_corners(inner)
        i, j = rng.choice(corners) if rng is not None else corners[-1]
        inner[i] -= 1
        while True:
            right = cells.get((i, j + 1))
            below = cells.get((i + 1, j))
            if right is None and below is None:
                break
            if right is None or (below is not None and below <= right):
                cells[(i, j)] = below
                del cells[(i + 1, j)]
                i += 1
            else:
                cells[(i, j)] = right
                del cells[(i, j + 1)]
                j += 1
    n_rows = max((i for i, _ in cells), default=-1) + 1
    rows = [[] for _ in range(n_rows)]
    for (i, j) in sorted(cells):
        rows[i].append(cells[(i, j)])
    return SkewTableau.straight(rows)


def theta(t: MultiTableau | SkewTableau):
    """(nu, S, lattice flag): the rectified shape, tableau, and lattice test."""
    skew = multi_to_skew(t) if isinstance(t, MultiTableau) else t
    s = rectify(skew)
    return s.shape.outer, s, is_lattice(word(skew))


def tableau_charge(t) -> int:
    """c(T) = c(S) where S is the rectification of T."""
    _, s, _ = theta(t)
    return charge(word(s))


def sst0_count(lam, nu) -> int:
    """Number of tableaux of shape lam and weight nu with a lattice word."""
    lam = as_multipartition(lam)
    nu = as_partition(nu)
    if size(lam) != sum(nu):
        raise ValueError(f"sizes differ: {size(lam)} vs {sum(nu)}")
    return sum(1 for t in enumerate_sst(lam, nu) if is_lattice(word(t)))


def ls_kostka_via_charge(lam, mu) -> Poly:
    """Sum of t^charge over semistandard tableaux of shape lam and weight mu."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: {lam} vs {mu}")
    counts = Counter(charge(word(s)) for s in enumerate_sst(lam, mu))
    return Poly.from_coeffs(1, dict(counts))


def charge_generating(lam, xi, r: int | None = None) -> Poly:
    """Sum over T in SST(lam, xi) of t^(r c(T))."""
    lam = as_multipartition(lam)
    r = len(lam) if r is None else r
    counts = Counter(r * tableau_charge(t) for t in enumerate_sst(lam, xi))
    return Poly.from_coeffs(1, dict(counts))


def thm314_rhs(lam, xi, r: int | None = None) -> RatFunc:
    """t^(b(mu) - b(lam)) sum_T t^(r c(T)) with mu = (-, ..., -, xi)."""
    lam = as_multipartition(lam)
    xi = as_partition(xi)
    r = len(lam) if r is None else r
    mu = concentrated(xi, r)
    shift = b_stat(mu) - b_stat(lam)
    return RatFunc.from_poly(charge_generating(lam, xi, r)) * RatFunc.t_power(1, shift)
