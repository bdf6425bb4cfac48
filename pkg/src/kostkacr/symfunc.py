"""Classical (level one) symmetric functions in Schur coordinates.

Nothing here materializes variables: a symmetric function is a finite map
from partition labels to coefficients.  Characters of the symmetric group
give the power-sum/Schur transition, and Littlewood-Richardson numbers come
from the character expansion of products of power sums, which keeps them
independent of any tableau combinatorics.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .exactalg import Poly, RatFunc
from .partitions import as_partition, dominance_le, partitions_of, size


@lru_cache(maxsize=None)
def mn_character(lam: tuple, mu: tuple) -> int:
    """chi^lam evaluated on the class of cycle type mu (Murnaghan-Nakayama).

    Border strips are removed via beta-numbers: taking a strip of length k
    off lam moves one bead from position b to b - k, with sign given by the
    number of beads jumped over.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"character needs |lam| = |mu|, got {lam} and {mu}")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beads:
            continue
        sign = -1 if sum(1 for c in beta if nb < c < b) % 2 else 1
        new_beta = sorted((beads - {b}) | {nb}, reverse=True)
        m = len(new_beta)
        new_lam = tuple(x for x in (new_beta[j] - (m - 1 - j) for j in range(m)) if x > 0)
        total += sign * mn_character(new_lam, rest)
    return total


def z_classical(lam) -> int:
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


def z_classical_t(lam) -> RatFunc:
    """z_lam / prod_i (1 - t^lam_i)."""
    den = Poly.constant(1, 1)
    for part in lam:
        den = den * (Poly.constant(1, 1) - Poly.monomial(1, part))
    return RatFunc(Poly.constant(1, z_classical(lam)), den)


@dataclass
class SymExpansion:
    """A symmetric function written in a Schur basis.

    ``terms`` maps labels (partitions for level 1, r-partitions otherwise)
    to nonzero coefficients.  Coefficients are RatFunc for anything coming
    out of the t-deformed machinery, but plain ints are accepted too.
    """

    level: int
    degree: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    def __getitem__(self, label):
        return self.terms.get(label, 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return (self.level, self.degree) == (other.level, other.degree) and self.terms == other.terms

    def __add__(self, other: SymExpansion) -> SymExpansion:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return SymExpansion(self.level, self.degree, out)

    def scaled(self, c) -> SymExpansion:
        return SymExpansion(self.level, self.degree, {k: c * v for k, v in self.terms.items()})

    def map_coeffs(self, fn) -> SymExpansion:
        return SymExpansion(self.level, self.degree, {k: fn(v) for k, v in self.terms.items()})

    def to_json(self) -> dict:
        def label(k):
            return [list(p) for p in k] if self.level > 1 else list(k)

        def coeff(v):
            return v.to_json() if isinstance(v, RatFunc) else str(v)

        terms = sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)
        return {"level": self.level, "degree": self.degree,
                "terms": [{"label": label(k), "coeff": coeff(v)} for k, v in terms]}


def schur(lam, coeff=1) -> SymExpansion:
    lam = as_partition(lam)
    return SymExpansion(1, sum(lam), {lam: coeff})


@lru_cache(maxsize=None)
def _lr_pair(alpha: tuple, beta: tuple) -> dict[tuple, int]:
    """s_alpha * s_beta in the Schur basis via the power-sum expansion."""
    a, b = sum(alpha), sum(beta)
    if a == 0:
        return {beta: 1}
    if b == 0:
        return {alpha: 1}
    out = {}
    for nu in partitions_of(a + b):
        acc = Fraction(0)
        for rho in partitions_of(a):
            x = mn_character(alpha, rho)
            if not x:
                continue
            for sigma in partitions_of(b):
                y = mn_character(beta, sigma)
                if not y:
                    continue
                merged = tuple(sorted(rho + sigma, reverse=True))
                acc += Fraction(x * y * mn_character(nu, merged), z_classical(rho) * z_classical(sigma))
        if acc:
            if acc.denominator != 1 or acc < 0:
                raise ArithmeticError(f"non-integral LR coefficient {acc}")
            out[nu] = int(acc)
    return out


def schur_product(f: SymExpansion, g: SymExpansion) -> SymExpansion:
    if f.level != 1 or g.level != 1:
        raise ValueError("schur_product works on level-1 expansions")
    out: dict = {}
    for alpha, x in f.terms.items():
        for beta, y in g.terms.items():
            xy = x * y
            for nu, c in _lr_pair(alpha, beta).items():
                term = xy * c
                out[nu] = out[nu] + term if nu in out else term
    return SymExpansion(1, f.degree + g.degree, out)


@lru_cache(maxsize=None)
def lr_product(factors: tuple) -> dict[tuple, int]:
    """Integer Schur expansion of s_{factors[0]} * ... * s_{factors[-1]}."""
    current = {(): 1}
    for fac in factors:
        nxt: dict = {}
        for alpha, c in current.items():
            for nu, d in _lr_pair(alpha, tuple(fac)).items():
                nxt[nu] = nxt.get(nu, 0) + c * d
        current = nxt
    return {k: v for k, v in current.items() if v}


def lr_coeff(eta, factors) -> int:
    """Coefficient of s_eta in the product of s_f over the factors."""
    factors = tuple(as_partition(f) for f in factors)
    eta = as_partition(eta)
    if sum(eta) != sum(size(f) for f in factors):
        return 0
    return lr_product(factors).get(eta, 0)


def classical_kostka(lam, mu) -> Poly:
    """K_{lam,mu}(t), read off the level-one orthogonalization table."""
    from .multisym import kostka_multi

    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: {lam} vs {mu}")
    value = kostka_multi(sum(lam), 1, "-").value((lam,), (mu,))
    poly = value.poly()
    if poly is None:
        raise ArithmeticError(f"K_{lam},{mu}(t) = {value} is not a polynomial")
    return poly


def classical_kostka_modified(lam, mu) -> Poly:
    """t^{n(mu)} K_{lam,mu}(1/t)."""
    from .partitions import n_stat

    k = RatFunc.from_poly(classical_kostka(lam, mu))
    return (k.substitute(-1) * RatFunc.t_power(1, n_stat(tuple(mu)))).poly()


def classical_hl(mu) -> SymExpansion:
    """P_mu(y; t) in Schur coordinates."""
    from .multisym import hl_multi

    mu = as_partition(mu)
    fam = hl_multi(sum(mu), 1, "-")
    return SymExpansion(1, sum(mu), {k[0]: v for k, v in fam.expansion((mu,)).terms.items()})


def kostka_number(lam, mu) -> int:
    """K_{lam,mu}(1), the number of semistandard tableaux of shape lam, weight mu."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu) or not dominance_le(mu, lam):
        return 0
    return int(classical_kostka(lam, mu)(1).rational())
