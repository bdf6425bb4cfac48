"""Hall-Littlewood product coefficients, Hall polynomials and flag counts.

``f_coeff`` and ``hall_g`` come from symmetric-function algebra; ``flag_count``
counts x-stable flags over a small prime field by brute force and never
touches that algebra, so the two can check each other.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .exactalg import Poly, RatFunc
from .multisym import ic_minus_candidate, kostka_multi
from .partitions import (
    a_stat,
    as_multipartition,
    as_partition,
    concentrated,
    enumerate_multipartitions,
    is_ic_shape,
    multi_comp_le,
    n_stat,
    partitions_of,
    size,
    transpose,
)
from .symfunc import SymExpansion, classical_hl, classical_kostka, classical_kostka_modified, schur_product

MAX_FLAG_SIZE = 3
FLAG_FIELDS = (2, 3)


class OracleScaleError(ValueError):
    """The brute-force oracle was asked for an instance beyond its scale."""


class NonPolynomialError(ArithmeticError):
    pass


def _factors(factors) -> tuple:
    return tuple(as_partition(f) for f in factors)


@lru_cache(maxsize=None)
def _hl_product(factors: tuple) -> SymExpansion:
    """P_{f1} ... P_{fk} in Schur coordinates (level one)."""
    n = sum(size(f) for f in factors)
    acc = SymExpansion(1, 0, {(): RatFunc.constant(1, 1)})
    for fac in factors:
        if fac:
            acc = schur_product(acc, classical_hl(fac))
    return SymExpansion(1, n, acc.terms)


@lru_cache(maxsize=None)
def _f_all(factors: tuple) -> dict:
    prod_s = _hl_product(factors)
    n = prod_s.degree
    out = {}
    for xi in partitions_of(n):
        acc = RatFunc.constant(1, 0)
        for eta, c in prod_s:
            k = classical_kostka(eta, xi)
            if k:
                acc = acc + c * RatFunc.from_poly(k)
        out[xi] = acc
    return out


def f_coeff(factors, xi) -> Poly:
    """Coefficient of P_xi in the product of P_f over the factors."""
    factors = _factors(factors)
    xi = as_partition(xi)
    if sum(size(f) for f in factors) != sum(xi):
        raise ValueError("factor sizes must add up to |xi|")
    value = _f_all(factors)[xi]
    poly = value.poly()
    if poly is None:
        raise NonPolynomialError(f"f coefficient {value} is not a polynomial")
    return poly


def hall_g(factors, xi) -> Poly:
    """t^(n(xi) - sum n(f)) f(1/t)."""
    factors = _factors(factors)
    xi = as_partition(xi)
    f = RatFunc.from_poly(f_coeff(factors, xi))
    shift = n_stat(xi) - sum(n_stat(p) for p in factors)
    value = f.substitute(-1) * RatFunc.t_power(1, shift) if f else f
    poly = value.poly()
    if poly is None:
        raise NonPolynomialError(f"non-polynomial Hall function {value}")
    return poly


# ------------------------------------------------------------ finite fields


def _rref(rows: list, p: int) -> tuple:
    """Row-reduced echelon basis of the span of rows over F_p."""
    rows = [list(r) for r in rows]
    out = []
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        piv = next((r for r in rows if r[col] % p), None)
        if piv is None:
            col += 1
            continue
        rows.remove(piv)
        inv = pow(piv[col], -1, p)
        piv = [x * inv % p for x in piv]
        rows = [[(a - r[col] * b) % p for a, b in zip(r, piv)] for r in rows]
        out = [[(a - r[col] * b) % p for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        col += 1
    out = [tuple(r) for r in out if any(r)]
    return tuple(sorted(out, key=lambda r: next(i for i, x in enumerate(r) if x)))


def _subspaces(dim: int, p: int) -> dict:
    """Every subspace of F_p^dim, keyed by dimension, as RREF bases."""
    vectors = [v for v in product(range(p), repeat=dim) if any(v)]
    seen = {(): None}
    frontier = [()]
    while frontier:
        nxt = []
        for basis in frontier:
            for v in vectors:
                span = _rref(list(basis) + [v], p)
                if span not in seen:
                    seen[span] = None
                    nxt.append(span)
        frontier = nxt
    by_dim: dict = {}
    for basis in seen:
        by_dim.setdefault(len(basis), []).append(basis)
    return by_dim


def _nilpotent(xi: tuple) -> list:
    """Matrix of N = x - 1 for x unipotent of Jordan type xi (N e_i = e_{i-1} in each block)."""
    n = sum(xi)
    mat = [[0] * n for _ in range(n)]
    start = 0
    for block in xi:
        for k in range(1, block):
            mat[start + k - 1][start + k] = 1
        start += block
    return mat


def _apply(mat, v, p):
    return tuple(sum(mat[i][j] * v[j] for j in range(len(v))) % p for i in range(len(mat)))


def _dim(rows, p) -> int:
    return len(_rref(rows, p)) if rows else 0


def _quotient_type(big: tuple, small: tuple, mat, p: int) -> tuple:
    """Jordan type of N acting on big / small."""
    base = _dim(list(small), p)
    ranks = []
    current = list(big)
    while True:
        ranks.append(_dim(current + list(small), p) - base)
        if ranks[-1] == 0:
            break
        current = [_apply(mat, v, p) for v in current]
    # ranks[k-1] - ranks[k] counts the blocks of size >= k
    return transpose(tuple(ranks[k - 1] - ranks[k] for k in range(1, len(ranks))))


def flag_count(q: int, xi, quotient_types) -> int:
    """Count N-stable flags 0 = W_0 < ... < W_r = F_q^n with W_i / W_{i-1} of type quotient_types[i]."""
    xi = as_partition(xi)
    types = _factors(quotient_types)
    n = sum(xi)
    if n > MAX_FLAG_SIZE or q not in FLAG_FIELDS:
        raise OracleScaleError(f"oracle scale exceeded: need |xi| <= {MAX_FLAG_SIZE} and q in {FLAG_FIELDS}")
    if sum(size(t) for t in types) != n:
        raise ValueError("quotient sizes must add up to |xi|")
    mat = _nilpotent(xi)
    spaces = _subspaces(n, q)
    stable = {d: [w for w in ws if _rref(list(w) + [_apply(mat, v, q) for v in w], q) == w]
              for d, ws in spaces.items()}

    def contains(big, small):
        return _rref(list(big) + list(small), q) == big

    def rec(i: int, below: tuple, dim: int) -> int:
        if i == len(types):
            return 1 if dim == n else 0
        target = dim + size(types[i])
        total = 0
        for w in stable.get(target, []):
            if contains(w, below) and _quotient_type(w, below, mat, q) == types[i]:
                total += rec(i + 1, w, target)
        return total

    return rec(0, (), 0)


# ------------------------------------------------------------ h and g families


@lru_cache(maxsize=None)
def _classical_hl_at_power(mu: tuple, r: int) -> dict:
    """P_mu(y; t^r) in Schur coordinates."""
    if not mu:
        return {(): RatFunc.constant(1, 1)}
    return {lam: c.substitute(r) for lam, c in classical_hl(mu).terms.items()}


@lru_cache(maxsize=None)
def h_matrix(n: int, r: int) -> dict:
    """h[(nu, mu)]: coefficient of P^-_mu in R_nu = prod_i P_{nu^(i)}(x^(i); t^r)."""
    k_minus = kostka_multi(n, r, "-")
    labels = k_minus.labels
    out = {}
    for nu in labels:
        # R_nu in multi-Schur coordinates
        terms = {(): RatFunc.constant(1, 1)}
        for comp in nu:
            nxt = {}
            for key, c in terms.items():
                for lam, d in _classical_hl_at_power(comp, r).items():
                    nxt[key + (lam,)] = c * d
            terms = nxt
        for mu in labels:
            acc = RatFunc.constant(1, 0)
            for kappa, c in terms.items():
                k = k_minus.value(kappa, mu)
                if k:
                    acc = acc + c * k
            out[(nu, mu)] = acc
    return out


def h_coeff(nu, mu) -> RatFunc:
    nu, mu = as_multipartition(nu), as_multipartition(mu)
    if len(nu) != len(mu) or size(nu) != size(mu):
        raise ValueError("h needs r-partitions of the same size and level")
    return h_matrix(size(nu), len(nu))[(nu, mu)]


@lru_cache(maxsize=None)
def _cor37_column(mu: tuple) -> dict:
    n, r = size(mu), len(mu)
    labels = enumerate_multipartitions(n, r)[::-1]
    g: dict = {}
    for lam in labels:  # ascending, so every nu below lam is already solved
        ic = ic_minus_candidate(lam, mu)
        if ic is None:
            raise NonPolynomialError(f"IC candidate for {lam}, {mu} is not a polynomial in t^r")
        acc = RatFunc.from_poly(ic) * RatFunc.t_power(1, n_stat(lam))
        for nu, gv in g.items():
            if nu == lam or not gv or not multi_comp_le(nu, lam):
                continue
            acc = acc - RatFunc.from_poly(gv) * _ktilde_product(lam, nu)
        value = acc / _ktilde_product(lam, lam)
        poly = value.poly()
        if poly is None:
            raise NonPolynomialError(f"g for {lam}, {mu} is {value}, not a polynomial")
        g[lam] = poly
    return g


def _ktilde_product(lam, nu) -> RatFunc:
    out = RatFunc.constant(1, 1)
    for a, b in zip(lam, nu):
        if sum(a) != sum(b):
            return RatFunc.constant(1, 0)
        if a:
            out = out * RatFunc.from_poly(classical_kostka_modified(a, b))
    return out


def cor37_g(nu, mu) -> Poly:
    """g^mu_nu(t), solved from the IC candidates by unitriangular elimination."""
    nu, mu = as_multipartition(nu), as_multipartition(mu)
    if not is_ic_shape(mu):
        raise ValueError("mu must have empty components before the last two")
    return _cor37_column(mu)[nu]


def prop317_rhs(nu, xi, r: int) -> RatFunc:
    """t^(a(mu) - a(nu)) g^xi_nu(t^-r) with mu = (-, ..., -, xi)."""
    nu = as_multipartition(nu)
    mu = concentrated(as_partition(xi), r)
    g = RatFunc.from_poly(hall_g(nu, xi))
    if not g:
        return g
    return g.substitute(-r) * RatFunc.t_power(1, a_stat(mu) - a_stat(nu))

