"""Hall-Littlewood functions and Kostka functions for r-partitions.

The ring of r-colored symmetric functions is handled in the Schur basis
s_lam = s_{lam^(1)}(x^(1)) ... s_{lam^(r)}(x^(r)).  The twisted power sums
p_lam are expanded in that basis once per (n, r); inverting that transition
puts every Schur function in the p-basis, where the sesquilinear form is
diagonal with values z_lam(t).

Conventions:

* the form conjugates zeta in its first argument and is linear in the
  second (``conj_slot="first"``); ``t`` is never conjugated;
* P^-_lam sits in the first slot: <P^-_lam, P^+_mu> = 0 for lam != mu.

The form is not Hermitian once r >= 3, so the two conventions give
genuinely different families: moving the conjugation to the second slot
transposes the Gram matrix and swaps the roles of P^- and P^+.  The default
is the one under which the charge formula for K^- holds.

The Gram matrix of the Schur basis turns out to have rational coefficients
(the Galois group only permutes the p-basis), so the elimination runs over
Q(t); any irrational residue is reported as a ConventionError.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from flint import fmpq, fmpq_poly

from .exactalg import CycRational, Poly, RatFunc, field
from .partitions import (
    a_stat,
    enumerate_multipartitions,
    format_multipartition,
    is_ic_shape,
    size,
    size_vector,
)
from .symfunc import SymExpansion, mn_character, z_classical

CONJ_SLOTS = ("first", "second")


class ConventionError(ArithmeticError):
    """Raised when a quantity that must have rational coefficients does not."""


class DegenerateGramError(ArithmeticError):
    """A zero pivot appeared during bi-orthogonalization."""


# ------------------------------------------------------------------ p -> s


@lru_cache(maxsize=None)
def _labels(n: int, r: int) -> tuple:
    return enumerate_multipartitions(n, r, "lex-c")


@lru_cache(maxsize=None)
def _index(n: int, r: int) -> dict:
    return {lam: i for i, lam in enumerate(_labels(n, r))}


@lru_cache(maxsize=None)
def _p_row(nu: tuple, r: int) -> dict:
    """Schur coordinates of p_nu as a dict label -> CycRational."""
    n = size(nu)
    fld = field(r)
    factors = [(k, m) for k in range(r) for m in nu[k]]
    labels = _labels(n, r)
    acc: dict = {}
    for assign in product(range(r), repeat=len(factors)):
        # p^{(k)}_m contributes zeta^{(k-1)(j-1)} p_m(x^(j)); here k, j are 0-based
        power = sum(k * j for (k, _), j in zip(factors, assign)) % r
        rhos = [[] for _ in range(r)]
        for (_, m), j in zip(factors, assign):
            rhos[j].append(m)
        rhos = [tuple(sorted(x, reverse=True)) for x in rhos]
        sizes = tuple(sum(x) for x in rhos)
        for lam in labels:
            if size_vector(lam) != sizes:
                continue
            c = 1
            for comp, rho in zip(lam, rhos):
                c *= mn_character(comp, rho)
                if not c:
                    break
            if c:
                vec = acc.setdefault(lam, [0] * r)
                vec[power] += c
    out = {}
    for lam, vec in acc.items():
        val = CycRational(r, fld.reduce([fmpq(v) for v in vec]))
        if val:
            out[lam] = val
    return out


def pmulti_to_schur(nu, r: int | None = None) -> SymExpansion:
    """Expand the twisted power sum p_nu in the Schur basis."""
    nu = tuple(tuple(p) for p in nu)
    r = len(nu) if r is None else r
    terms = {lam: RatFunc.constant(r, c) for lam, c in _p_row(nu, r).items()}
    return SymExpansion(r, size(nu), terms)


def _invert_constant(mat: list[list[CycRational]], r: int) -> list[list[CycRational]]:
    """Gauss-Jordan inverse over Q(zeta_r)."""
    size_ = len(mat)
    zero = CycRational.from_rational(r, 0)
    one = CycRational.from_rational(r, 1)
    aug = [list(row) + [one if i == j else zero for j in range(size_)]
           for i, row in enumerate(mat)]
    for col in range(size_):
        piv = next(i for i in range(col, size_) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv if x else x for x in aug[col]]
        for i in range(size_):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b if b else a for a, b in zip(aug[i], aug[col])]
    return [row[size_:] for row in aug]


@lru_cache(maxsize=None)
def _s_to_p(n: int, r: int) -> list[list[CycRational]]:
    """W with s_lam = sum_nu W[lam][nu] p_nu, rows and columns in _labels order."""
    labels = _labels(n, r)
    idx = _index(n, r)
    zero = CycRational.from_rational(r, 0)
    mat = [[zero] * len(labels) for _ in labels]
    for a, nu in enumerate(labels):
        for lam, c in _p_row(nu, r).items():
            mat[a][idx[lam]] = c
    # mat[nu][lam] expresses p in s; its inverse expresses s in p
    inv = _invert_constant(mat, r)
    return inv


def z_multi_int(nu) -> int:
    r = len(nu)
    out = 1
    for comp in nu:
        out *= r ** len(comp) * z_classical(comp)
    return out


def z_multi(nu, r: int | None = None) -> RatFunc:
    """z_nu(t) = z_nu * prod_k prod_j 1/(1 - zeta^(k-1) t^(nu^(k)_j))."""
    nu = tuple(tuple(p) for p in nu)
    r = len(nu) if r is None else r
    den = Poly.constant(r, 1)
    one = Poly.constant(r, 1)
    for k, comp in enumerate(nu):
        zk = CycRational.zeta(r, k)
        for m in comp:
            den = den * (one - Poly.monomial(r, m, zk))
    return RatFunc(Poly.constant(r, z_multi_int(nu)), den)


@lru_cache(maxsize=None)
def _z_over_common(n: int, r: int):
    """Write every z_nu(t) as Q_nu(t) / L(t) with one rational L.

    1/(1 - zeta^j t^m) = (sum_{s<r} zeta^{js} t^{ms}) / (1 - t^{rm}), so each
    z_nu(t) has a rational denominator prod (1 - t^{r m}).
    """
    labels = _labels(n, r)
    dens = []
    nums = []
    for nu in labels:
        den = fmpq_poly([1])
        num = Poly.constant(r, z_multi_int(nu))
        for k, comp in enumerate(nu):
            for m in comp:
                den = den * fmpq_poly([1] + [0] * (r * m - 1) + [-1])
                geo = {m * s: CycRational.zeta(r, k * s) for s in range(r)}
                num = num * Poly.from_coeffs(r, geo)
        dens.append(den)
        nums.append(num)
    common = fmpq_poly([1])
    for d in dens:
        common = common * d // common.gcd(d)
    qs = [num * Poly.from_rational_poly(r, common // d) for num, d in zip(nums, dens)]
    return common, qs


# ------------------------------------------------------------ the form


def _common_denominator(coeffs, r: int) -> Poly:
    den = Poly.constant(r, 1)
    for c in coeffs:
        d = c.den
        if d.degree() > 0:
            den = den * d.exact_div(den.gcd(d))
    return den


def _p_coordinates(f: SymExpansion, n: int, r: int) -> tuple[list[Poly], Poly]:
    """Numerators of the p-coordinates of f over one common denominator."""
    labels = _labels(n, r)
    idx = _index(n, r)
    w = _s_to_p(n, r)
    coeffs = [c if isinstance(c, RatFunc) else RatFunc.constant(r, c) for _, c in f]
    den = _common_denominator(coeffs, r)
    out = [Poly.zero(r) for _ in labels]
    for lam, c in f:
        c = c if isinstance(c, RatFunc) else RatFunc.constant(r, c)
        num = c.num * den.exact_div(c.den)
        row = w[idx[lam]]
        for j, wv in enumerate(row):
            if wv:
                out[j] = out[j] + num.scale(wv)
    return out, den


def _check_space(f: SymExpansion, n: int, r: int):
    if f.level != r or f.degree != n:
        raise ValueError(f"expected an expansion of degree {n} and level {r}")


def form(f: SymExpansion, g: SymExpansion, conj_slot: str = "first") -> RatFunc:
    """The sesquilinear form <f, g> with <p_lam, p_mu> = delta z_lam(t)."""
    if (f.level, f.degree) != (g.level, g.degree):
        raise ValueError("form arguments live in different spaces")
    return form_matrix([f], [g], conj_slot)[0][0]


def form_matrix(fs, gs, conj_slot: str = "first") -> list[list[RatFunc]]:
    """Evaluate <f, g> for all pairs, sharing the p-basis rewriting."""
    if conj_slot not in CONJ_SLOTS:
        raise ValueError(f"conj_slot must be one of {CONJ_SLOTS}")
    if not fs or not gs:
        return [[] for _ in fs]
    r, n = fs[0].level, fs[0].degree
    for h in list(fs) + list(gs):
        _check_space(h, n, r)
    common, qs = _z_over_common(n, r)
    common = Poly.from_rational_poly(r, common)
    fc = [_p_coordinates(f, n, r) for f in fs]
    gc = [_p_coordinates(g, n, r) for g in gs]
    if conj_slot == "second":
        gc = [([x.conj() for x in xs], d.conj()) for xs, d in gc]
    else:
        fc = [([x.conj() for x in xs], d.conj()) for xs, d in fc]
    weighted = [([a * q for a, q in zip(xs, qs)], d) for xs, d in fc]
    out = []
    for xs, dx in weighted:
        row = []
        for ys, dy in gc:
            acc = Poly.zero(r)
            for a, b in zip(xs, ys):
                if a and b:
                    acc = acc + a * b
            row.append(RatFunc(acc, dx * dy * common))
        out.append(row)
    return out


# ------------------------------------------------------------ Gram matrix


@dataclass(frozen=True)
class GramMatrix:
    n: int
    r: int
    order: str
    labels: tuple
    entries: tuple  # tuple of tuples of RatFunc over Q(zeta_r)

    def __getitem__(self, key):
        lam, mu = key
        idx = {l: i for i, l in enumerate(self.labels)}
        return self.entries[idx[lam]][idx[mu]]


@lru_cache(maxsize=None)
def _gram_rational(n: int, r: int, conj_slot: str) -> tuple:
    """Gram matrix in _labels order, coefficients projected to Q(t)."""
    labels = _labels(n, r)
    w = _s_to_p(n, r)
    common, qs = _z_over_common(n, r)
    size_ = len(labels)
    if conj_slot == "second":
        left, right = w, [[x.conj() for x in row] for row in w]
    else:
        left, right = [[x.conj() for x in row] for row in w], w
    rows = []
    for i in range(size_):
        weighted = [qs[k].scale(left[i][k]) if left[i][k] else None for k in range(size_)]
        row = []
        for j in range(size_):
            acc = Poly.zero(r)
            for k in range(size_):
                if weighted[k] is not None and right[j][k]:
                    acc = acc + weighted[k].scale(right[j][k])
            if not acc.is_rational():
                raise ConventionError(
                    "conjugation convention violated: Gram entry "
                    f"<s{format_multipartition(labels[i])}, s{format_multipartition(labels[j])}>"
                    " has irrational coefficients")
            row.append(RatFunc(Poly.from_rational_poly(1, acc.comps[0]),
                               Poly.from_rational_poly(1, common)))
        rows.append(tuple(row))
    return tuple(rows)


def gram(n: int, r: int, order: str = "lex-c", conj_slot: str = "first") -> GramMatrix:
    """<s_lam, s_mu> for all pairs, rows and columns in the chosen total order."""
    labels = enumerate_multipartitions(n, r, order)
    base = _gram_rational(n, r, conj_slot)
    idx = _index(n, r)
    entries = tuple(tuple(base[idx[a]][idx[b]].with_order(r) for b in labels) for a in labels)
    return GramMatrix(n, r, order, labels, entries)


# ------------------------------------------------------- bi-orthogonalization


def _udl(mat: list[list[RatFunc]]):
    """Factor mat = U D V with U unit upper, V unit lower triangular.

    Pivots are taken from the bottom-right corner upwards, i.e. from the
    smallest label in a descending order.  Returns (U, D, V).
    """
    size_ = len(mat)
    if size_ == 0:
        return [], [], []
    order = mat[0][0].order if size_ else 1
    zero = RatFunc.constant(order, 0)
    one = RatFunc.constant(order, 1)
    s = [list(row) for row in mat]
    u = [[one if i == j else zero for j in range(size_)] for i in range(size_)]
    v = [[one if i == j else zero for j in range(size_)] for i in range(size_)]
    d = [zero] * size_
    for k in range(size_ - 1, -1, -1):
        piv = s[k][k]
        if piv.is_zero():
            raise DegenerateGramError(f"degenerate Gram matrix: zero pivot at index {k}")
        d[k] = piv
        inv = piv.inverse()
        col = [s[i][k] * inv if s[i][k] else zero for i in range(k)]
        row = [s[k][j] for j in range(k)]
        for i in range(k):
            u[i][k] = col[i]
        for j in range(k):
            if row[j]:
                v[k][j] = row[j] * inv
        for i in range(k):
            ci = col[i]
            if not ci:
                continue
            si = s[i]
            for j in range(k):
                if row[j]:
                    si[j] = si[j] - ci * row[j]
    return u, d, v


def _invert_unit_upper(u: list[list[RatFunc]]) -> list[list[RatFunc]]:
    size_ = len(u)
    if size_ == 0:
        return []
    order = u[0][0].order
    zero = RatFunc.constant(order, 0)
    one = RatFunc.constant(order, 1)
    inv = [[one if i == j else zero for j in range(size_)] for i in range(size_)]
    # solve row by row from the bottom: inv[i][j] = -sum_{i<k<=j} u[i][k] inv[k][j]
    for i in range(size_ - 1, -1, -1):
        for j in range(i + 1, size_):
            acc = zero
            for k in range(i + 1, j + 1):
                if u[i][k] and inv[k][j]:
                    acc = acc + u[i][k] * inv[k][j]
            inv[i][j] = -acc
    return inv


def _transpose(m):
    return [list(col) for col in zip(*m)]


def biorthogonalize(g: GramMatrix):
    """Return (A, B, D, K^-, K^+) with A G B^T = D.

    Rows of A are the Schur coefficients of P^-, rows of B those of P^+,
    both indexed by g.labels (descending) and unitriangular: row lam is
    supported on lam and labels below it.  K^- and K^+ are the inverses of
    A and B.  Coefficients are rational, so conjugating A changes nothing.
    """
    rational = all(e.is_rational() for row in g.entries for e in row)
    mat = [[e.with_order(1) if rational else e for e in row] for row in g.entries]
    k_minus, d, v = _udl(mat)
    k_plus = _transpose(v)
    a = _invert_unit_upper(k_minus)
    b = _invert_unit_upper(k_plus)
    return a, b, d, k_minus, k_plus


# ------------------------------------------------------- families and tables


@dataclass(frozen=True)
class HLFamily:
    sign: str
    n: int
    r: int
    order: str
    labels: tuple
    matrix: tuple  # rows: Schur coefficients of P^sign, over Q(t) (order 1)
    conj_slot: str = CONJ_SLOTS[0]

    def expansion(self, lam) -> SymExpansion:
        i = self.labels.index(tuple(tuple(p) for p in lam))
        terms = {mu: c.with_order(self.r) for mu, c in zip(self.labels, self.matrix[i]) if c}
        return SymExpansion(self.r, self.n, terms)

    @property
    def expansions(self) -> dict:
        return {lam: self.expansion(lam) for lam in self.labels}


@dataclass(frozen=True)
class KostkaTable:
    sign: str
    n: int
    r: int
    order: str
    labels: tuple
    matrix: tuple  # matrix[i][j] = K^sign_{labels[i], labels[j]} over Q(t)
    conj_slot: str = CONJ_SLOTS[0]

    def value(self, lam, mu) -> RatFunc:
        """K^sign_{lam,mu}(t) with coefficients in Q (embedded at order 1)."""
        lam = tuple(tuple(p) for p in lam)
        mu = tuple(tuple(p) for p in mu)
        return self.matrix[self._pos(lam)][self._pos(mu)]

    def _pos(self, lam) -> int:
        try:
            return self._positions[lam]
        except AttributeError:
            object.__setattr__(self, "_positions", {l: i for i, l in enumerate(self.labels)})
            return self._positions[lam]

    @property
    def entries(self) -> dict:
        return {(a, b): self.matrix[i][j]
                for i, a in enumerate(self.labels)
                for j, b in enumerate(self.labels) if self.matrix[i][j]}

    def to_json(self) -> dict:
        return {
            "n": self.n, "r": self.r, "sign": self.sign, "order": self.order,
            "conj_slot": self.conj_slot,
            "entries": [
                {"lambda": [list(p) for p in a], "mu": [list(p) for p in b],
                 "value": v.to_json()}
                for i, a in enumerate(self.labels)
                for j, b in enumerate(self.labels)
                if (v := self.matrix[i][j])
            ],
        }


@lru_cache(maxsize=None)
def _tables(n: int, r: int, order: str, conj_slot: str):
    g = gram(n, r, order, conj_slot)
    a, b, d, k_minus, k_plus = biorthogonalize(g)
    for mat in (a, b, k_minus, k_plus):
        for row in mat:
            for e in row:
                if not e.is_rational():
                    raise ConventionError("conjugation convention violated: "
                                          f"irrational coefficient in {e}")
    freeze = lambda m: tuple(tuple(row) for row in m)  # noqa: E731
    return g.labels, freeze(a), freeze(b), tuple(d), freeze(k_minus), freeze(k_plus)


def _check_sign(sign: str) -> str:
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return sign


def hl_multi(n: int, r: int, sign: str = "-", order: str = "lex-c",
             conj_slot: str = "first") -> HLFamily:
    labels, a, b, _, _, _ = _tables(n, r, order, conj_slot)
    mat = a if _check_sign(sign) == "-" else b
    return HLFamily(sign, n, r, order, labels, mat, conj_slot)


def kostka_multi(n: int, r: int, sign: str = "-", order: str = "lex-c",
                 conj_slot: str = "first") -> KostkaTable:
    labels, _, _, _, k_minus, k_plus = _tables(n, r, order, conj_slot)
    mat = k_minus if _check_sign(sign) == "-" else k_plus
    return KostkaTable(sign, n, r, order, labels, mat, conj_slot)


def pairing_diagonal(n: int, r: int, order: str = "lex-c", conj_slot: str = "first") -> dict:
    """<P^-_lam, P^+_lam> as produced by the elimination."""
    labels, _, _, d, _, _ = _tables(n, r, order, conj_slot)
    return dict(zip(labels, d))


def kostka_modified(lam, mu, sign: str = "-", order: str = "lex-c") -> RatFunc:
    """t^{a(mu)} K^sign_{lam,mu}(1/t)."""
    lam = tuple(tuple(p) for p in lam)
    mu = tuple(tuple(p) for p in mu)
    k = kostka_multi(size(lam), len(lam), sign, order).value(lam, mu)
    return k.substitute(-1) * RatFunc.t_power(1, a_stat(mu))


def ic_minus_candidate(lam, mu, order: str = "lex-c") -> Poly | None:
    """IC^-_{lam,mu}(t) from t^{a(lam)} IC(t^r) = K~^-_{lam,mu}(t), or None.

    None means the quotient K~^- / t^{a(lam)} is not a polynomial in t^r.
    """
    lam = tuple(tuple(p) for p in lam)
    mu = tuple(tuple(p) for p in mu)
    r = len(mu)
    if not is_ic_shape(mu):
        raise ValueError(f"{format_multipartition(mu)} has nonempty components before the last two")
    quotient = kostka_modified(lam, mu, "-", order) * RatFunc.t_power(1, -a_stat(lam))
    poly = quotient.poly()
    if poly is None:
        return None
    coeffs = poly.coeffs()
    if any(e % r for e in coeffs):
        return None
    return Poly.from_coeffs(1, {e // r: c for e, c in coeffs.items()})
