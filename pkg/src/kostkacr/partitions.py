"""Partitions, r-partitions and the orders used to index every table.

Partitions are plain tuples of positive ints in weakly decreasing order;
an r-partition (multipartition) is a tuple of r such tuples.  Both are
hashable and cheap to compare, which is all the rest of the package needs.
"""
from __future__ import annotations

import json
from functools import lru_cache
from itertools import accumulate

Partition = tuple
MultiPartition = tuple

ORDERS = ("lex-c", "lex-c-reversed")


def as_partition(parts) -> Partition:
    """Validate and normalize a partition (trailing zeros are dropped)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def as_multipartition(components) -> MultiPartition:
    comps = tuple(as_partition(c) for c in components)
    if not comps:
        raise ValueError("a multipartition needs at least one component")
    return comps


def parse_partition(text: str) -> Partition:
    """Parse "[3,1]" (JSON) into a partition."""
    return as_partition(json.loads(text))


def parse_multipartition(text: str) -> MultiPartition:
    """Parse "[[2,1],[],[1]]" (JSON) into a multipartition."""
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise ValueError(f"expected a list of lists, got {text!r}")
    return as_multipartition(data)


def format_partition(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")" if lam else "-"


def format_multipartition(lam: MultiPartition) -> str:
    return "(" + "; ".join(format_partition(p) for p in lam) + ")"


def size(lam) -> int:
    if lam and isinstance(lam[0], tuple):
        return sum(sum(p) for p in lam)
    return sum(lam)


def size_vector(lam: MultiPartition) -> tuple[int, ...]:
    return tuple(sum(p) for p in lam)


def dominance_le(mu, lam) -> bool:
    """True iff mu <= lam in dominance order (partitions or compositions).

    Shorter sequences are padded with zeros; sizes must agree.
    """
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes: {mu} vs {lam}")
    m = max(len(mu), len(lam))
    a = list(lam) + [0] * (m - len(lam))
    b = list(mu) + [0] * (m - len(mu))
    return all(x >= y for x, y in zip(accumulate(a), accumulate(b)))


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def transpose_multi(lam: MultiPartition) -> MultiPartition:
    return tuple(transpose(p) for p in lam)


def n_stat(lam) -> int:
    """n(lam) = sum (i-1) lam_i; summed over components for multipartitions."""
    if lam and isinstance(lam[0], tuple):
        return sum(n_stat(p) for p in lam)
    return sum(i * p for i, p in enumerate(lam))


def b_stat(lam: MultiPartition) -> int:
    return sum(i * sum(p) for i, p in enumerate(lam))


def a_stat(lam: MultiPartition) -> int:
    return len(lam) * n_stat(lam) + b_stat(lam)


def composition_c(lam: MultiPartition, m: int | None = None) -> tuple[int, ...]:
    """Interleave the components row by row, zero padded to m rows each."""
    longest = max((len(p) for p in lam), default=0)
    if m is None:
        m = longest
    if m < longest:
        raise ValueError(f"m={m} is smaller than the longest component ({longest})")
    out = []
    for i in range(m):
        for p in lam:
            out.append(p[i] if i < len(p) else 0)
    return tuple(out)


def _check_pair(mu: MultiPartition, lam: MultiPartition):
    if len(mu) != len(lam):
        raise ValueError(f"levels differ: {len(mu)} vs {len(lam)}")
    if size(mu) != size(lam):
        raise ValueError(f"sizes differ: {size(mu)} vs {size(lam)}")


def _common_m(*lams) -> int:
    return max((len(p) for lam in lams for p in lam), default=0)


def multi_partial_le(mu: MultiPartition, lam: MultiPartition) -> bool:
    """mu <= lam in the order induced by dominance of interleaved compositions."""
    _check_pair(mu, lam)
    m = _common_m(mu, lam)
    return dominance_le(composition_c(mu, m), composition_c(lam, m))


def multi_comp_le(mu: MultiPartition, lam: MultiPartition) -> bool:
    """mu is componentwise dominated by lam (implies equal size vectors)."""
    _check_pair(mu, lam)
    if size_vector(mu) != size_vector(lam):
        return False
    return all(dominance_le(a, b) for a, b in zip(mu, lam))


def _sort_key(lam: MultiPartition, m: int, order: str):
    c = composition_c(lam, m)
    if order == "lex-c":
        return c
    if order == "lex-c-reversed":
        # compare prefix sums from the last position backwards
        return tuple(reversed(tuple(accumulate(c))))
    raise ValueError(f"unknown total order {order!r}; expected one of {ORDERS}")


def total_order_cmp(lam: MultiPartition, mu: MultiPartition, order: str = "lex-c") -> int:
    """Return 1, 0 or -1 as lam is greater than, equal to or less than mu."""
    _check_pair(mu, lam)
    m = _common_m(lam, mu)
    a, b = _sort_key(lam, m, order), _sort_key(mu, m, order)
    return (a > b) - (a < b)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def _all_multipartitions(n: int, r: int):
    if r == 1:
        for p in partitions_of(n):
            yield (p,)
        return
    for m in range(n, -1, -1):
        for p in partitions_of(m):
            for rest in _all_multipartitions(n - m, r - 1):
                yield (p,) + rest


@lru_cache(maxsize=None)
def enumerate_multipartitions(n: int, r: int, order: str = "lex-c") -> tuple[MultiPartition, ...]:
    """All r-partitions of n, sorted descending in the chosen total order."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    items = list(_all_multipartitions(n, r))
    m = _common_m(*items)
    return tuple(sorted(items, key=lambda lam: _sort_key(lam, m, order), reverse=True))


def concentrated(xi: Partition, r: int) -> MultiPartition:
    """The r-partition (-, ..., -, xi)."""
    return ((),) * (r - 1) + (tuple(xi),)


def is_ic_shape(mu: MultiPartition) -> bool:
    """Only the last two components may be nonempty."""
    return all(not p for p in mu[:-2])
