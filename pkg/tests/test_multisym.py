import cmath
from itertools import product

import pytest

from kostkacr.exactalg import CycRational, Poly, RatFunc, parse_ratfunc, t_poly
from kostkacr.multisym import (
    CONJ_SLOTS,
    GramMatrix,
    biorthogonalize,
    form,
    form_matrix,
    gram,
    hl_multi,
    ic_minus_candidate,
    kostka_modified,
    kostka_multi,
    pairing_diagonal,
    pmulti_to_schur,
    z_multi,
)
from kostkacr.partitions import a_stat, enumerate_multipartitions, is_ic_shape, partitions_of, total_order_cmp
from kostkacr.symfunc import SymExpansion, classical_kostka, mn_character, z_classical

E = ()
T0 = 0.37  # sample point for numeric checks


def as_rat(text, order=1):
    return parse_ratfunc(text, order)


def s(*lam):
    r = len(lam)
    return SymExpansion(r, sum(sum(p) for p in lam), {tuple(lam): RatFunc.constant(r, 1)})


def eval_ratfunc(f: RatFunc, t: float, r: int) -> complex:
    z = cmath.exp(2j * cmath.pi / r)

    def ev(p: Poly):
        total = 0j
        for e, c in p.coeffs().items():
            total += sum(float(x) * z ** i for i, x in enumerate(c.coords)) * t ** e
        return total

    return ev(f.num) / ev(f.den)


# ------------------------------------------------------------ numeric oracle


def _schur_in_p_numeric(lam, r):
    """p-basis coordinates of s_lam from classical characters and untwisting.

    s_{lam^(j)}(x^(j)) = sum_rho chi(rho)/z_rho p_rho(x^(j)) and
    p_m(x^(j)) = (1/r) sum_k zeta^{-k j} p^{(k)}_m  (0-based j, k).
    """
    z = cmath.exp(2j * cmath.pi / r)
    coords = {tuple(E for _ in range(r)): 1 + 0j}
    for j, comp in enumerate(lam):
        n = sum(comp)
        expansion = {}
        for rho in partitions_of(n):
            chi = mn_character(comp, rho)
            if not chi:
                continue
            for ks in product(range(r), repeat=len(rho)):
                coeff = chi / z_classical(rho) / r ** len(rho)
                for k in ks:
                    coeff *= z ** (-k * j)
                parts = [[] for _ in range(r)]
                for m, k in zip(rho, ks):
                    parts[k].append(m)
                key = tuple(tuple(sorted(p, reverse=True)) for p in parts)
                expansion[key] = expansion.get(key, 0) + coeff
        new = {}
        for a, ca in coords.items():
            for b, cb in expansion.items():
                key = tuple(tuple(sorted(x + y, reverse=True)) for x, y in zip(a, b))
                new[key] = new.get(key, 0) + ca * cb
        coords = new
    return coords


def _z_numeric(nu, t, r):
    z = cmath.exp(2j * cmath.pi / r)
    val = 1 + 0j
    for k, comp in enumerate(nu):
        val *= r ** len(comp) * z_classical(comp)
        for m in comp:
            val /= 1 - z ** k * t ** m
    return val


def numeric_gram(n, r, t):
    labels = enumerate_multipartitions(n, r)
    coords = [_schur_in_p_numeric(lam, r) for lam in labels]
    out = []
    for a in coords:
        row = []
        for b in coords:
            row.append(sum(a[nu].conjugate() * b[nu] * _z_numeric(nu, t, r) for nu in a if nu in b))
        out.append(row)
    return labels, out


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4)])
def test_gram_matches_numeric_oracle(n, r):
    labels, expected = numeric_gram(n, r, T0)
    g = gram(n, r)
    assert g.labels == labels
    for i, lam in enumerate(labels):
        for j, mu in enumerate(labels):
            got = eval_ratfunc(g[lam, mu], T0, r)
            assert abs(got - expected[i][j]) < 1e-9 * (1 + abs(expected[i][j])), (lam, mu)


# ------------------------------------------------------------ z and p


def test_z_multi_examples():
    assert z_multi(((1,),)) == as_rat("1/(1 - t)")
    assert z_multi(((1,), E)) == as_rat("2/(1 - t)", 2)
    assert z_multi((E, (1,))) == as_rat("2/(1 + t)", 2)


def test_z_multi_r3_has_cyclotomic_denominator():
    z = z_multi((E, (1,), E))
    assert not z.is_rational()
    assert z * z_multi((E, E, (1,))).inverse() == \
        RatFunc(Poly.constant(3, 1) - Poly.monomial(3, 1, CycRational.zeta(3, 2)),
                Poly.constant(3, 1) - Poly.monomial(3, 1, CycRational.zeta(3)))


def test_pmulti_examples():
    one = RatFunc.constant(1, 1)
    assert pmulti_to_schur(((1,),)) == SymExpansion(1, 1, {((1,),): one})
    one2 = RatFunc.constant(2, 1)
    assert pmulti_to_schur(((1,), E)) == SymExpansion(2, 1, {((1,), E): one2, (E, (1,)): one2})
    assert pmulti_to_schur((E, (1,))) == SymExpansion(2, 1, {((1,), E): one2, (E, (1,)): -one2})


# ------------------------------------------------------------ form and Gram


def test_form_examples():
    assert form(s((1,)), s((1,))) == as_rat("1/(1 - t)")
    # s = (p^(1) + p^(2))/2, so the value is (2/(1-t) + 2/(1+t))/4
    assert form(s((1,), E), s((1,), E)) == as_rat("1/(1 - t^2)", 2)
    assert form(s((1,), E), s(E, (1,))) == as_rat("t/(1 - t^2)", 2)


def test_power_sums_are_orthogonal():
    for r in (1, 2, 3):
        labels = enumerate_multipartitions(2, r)
        ps = [pmulti_to_schur(nu) for nu in labels]
        mat = form_matrix(ps, ps)
        for i, nu in enumerate(labels):
            for j in range(len(labels)):
                if i == j:
                    assert mat[i][j] == z_multi(nu)
                else:
                    assert mat[i][j].is_zero()


def test_form_is_conjugate_linear_in_the_chosen_slot():
    r = 3
    zeta = RatFunc.constant(r, CycRational.zeta(r))
    f, g = s((1,), E, E), s(E, (1,), E)
    base = form(f, g)
    assert form(f.scaled(zeta), g) == base * zeta.conj()
    assert form(f, g.scaled(zeta)) == base * zeta
    assert form(f, g.scaled(zeta), "second") == form(f, g, "second") * zeta.conj()


def test_form_rejects_bad_input():
    with pytest.raises(ValueError):
        form(s((1,)), s((1,), E))
    with pytest.raises(ValueError):
        form(s((1,)), s((1,)), "third")


def test_gram_small_cases():
    assert gram(1, 1).entries == ((as_rat("1/(1 - t)"),),)
    g = gram(1, 2)
    assert g.entries == ((as_rat("1/(1 - t^2)", 2), as_rat("t/(1 - t^2)", 2)),
                         (as_rat("t/(1 - t^2)", 2), as_rat("1/(1 - t^2)", 2)))
    assert gram(0, 3).entries == ((RatFunc.constant(3, 1),),)


def test_gram_r3_degree_one_is_circulant():
    g = gram(1, 3)
    for i in range(3):
        for j in range(3):
            assert g.entries[i][j] == RatFunc.t_power(3, (j - i) % 3) / as_rat("1 - t^3", 3)


@pytest.mark.parametrize("n,r", [(n, r) for r in (1, 2, 3) for n in range(4)])
def test_gram_is_rational_and_slot_flip_transposes(n, r):
    g = gram(n, r)
    flipped = gram(n, r, conj_slot="second")
    size_ = len(g.labels)
    for i in range(size_):
        for j in range(size_):
            assert g.entries[i][j].is_rational()
            assert flipped.entries[i][j] == g.entries[j][i]
            if r <= 2:
                assert g.entries[i][j] == g.entries[j][i]


def test_gram_not_symmetric_for_r3():
    g = gram(1, 3)
    assert g.entries[0][1] != g.entries[1][0]


# ------------------------------------------------------------ elimination


def test_biorthogonalize_identity():
    one, zero = RatFunc.constant(1, 1), RatFunc.constant(1, 0)
    labels = enumerate_multipartitions(2, 1)
    ident = tuple(tuple(one if i == j else zero for j in range(2)) for i in range(2))
    a, b, d, km, kp = biorthogonalize(GramMatrix(2, 1, "lex-c", labels, ident))
    assert [list(row) for row in a] == [list(row) for row in ident]
    assert [list(row) for row in b] == [list(row) for row in ident]
    assert list(d) == [one, one]


def _matmul(x, y):
    return [[sum((x[i][k] * y[k][j] for k in range(len(y))), RatFunc.constant(1, 0))
             for j in range(len(y[0]))] for i in range(len(x))]


@pytest.mark.parametrize("n,r", [(n, r) for r in (1, 2, 3) for n in range(1, 4)])
def test_biorthogonalize_factorization(n, r):
    g = gram(n, r)
    a, b, d, km, kp = biorthogonalize(g)
    mat = [[e.with_order(1) for e in row] for row in g.entries]
    bt = [list(col) for col in zip(*b)]
    prod = _matmul(_matmul(a, mat), bt)
    size_ = len(mat)
    for i in range(size_):
        for j in range(size_):
            assert prod[i][j] == (d[i] if i == j else 0)
        assert d[i]
        # unitriangular: row i supported on labels at or below label i
        for j in range(i):
            assert a[i][j].is_zero() and b[i][j].is_zero()
        assert a[i][i] == 1 and b[i][i] == 1
    assert _matmul(a, km) == [[RatFunc.constant(1, int(i == j)) for j in range(size_)] for i in range(size_)]


def test_hall_littlewood_two_row_case():
    fam = hl_multi(2, 1)
    assert fam.expansion(((2,),)) == SymExpansion(1, 2, {((2,),): RatFunc.constant(1, 1),
                                                         ((1, 1),): RatFunc.t_power(1, 1, -1)})
    assert fam.expansion(((1, 1),)) == SymExpansion(1, 2, {((1, 1),): RatFunc.constant(1, 1)})


@pytest.mark.parametrize("n,r", [(n, r) for r in (1, 2, 3) for n in range(4)])
def test_families_are_biorthogonal_under_the_form(n, r):
    minus = hl_multi(n, r, "-")
    plus = hl_multi(n, r, "+")
    labels = minus.labels
    mat = form_matrix([minus.expansion(l) for l in labels], [plus.expansion(l) for l in labels])
    diag = pairing_diagonal(n, r)
    for i, lam in enumerate(labels):
        for j in range(len(labels)):
            if i == j:
                assert mat[i][j] and mat[i][j] == diag[lam].with_order(r)
            else:
                assert mat[i][j].is_zero()


@pytest.mark.parametrize("n,r", [(n, r) for r in (1, 2, 3) for n in range(4)])
def test_kostka_tables_unitriangular_and_rational(n, r):
    for sign in "+-":
        table = kostka_multi(n, r, sign)
        for i, lam in enumerate(table.labels):
            assert table.value(lam, lam) == 1
            for j, mu in enumerate(table.labels):
                v = table.value(lam, mu)
                assert v.is_rational()
                if j < i:
                    assert v.is_zero()
                    assert total_order_cmp(mu, lam) == 1


@pytest.mark.parametrize("n", range(5))
def test_r2_families_coincide_and_are_polynomial(n):
    assert hl_multi(n, 2, "-").matrix == hl_multi(n, 2, "+").matrix
    for sign in "+-":
        for (lam, mu), v in kostka_multi(n, 2, sign).entries.items():
            p = v.poly()
            assert p is not None
            assert p.leading_coefficient() == 1
            assert p.degree() == a_stat(mu) - a_stat(lam)
            assert all(c.rational().q == 1 for c in p.coeffs().values())


@pytest.mark.parametrize("n", range(7))
def test_level_one_matches_classical(n):
    table = kostka_multi(n, 1)
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert table.value((lam,), (mu,)) == RatFunc.from_poly(classical_kostka(lam, mu))


def test_r2_kostka_example():
    lam, mu = ((1,), (1,)), (E, (1, 1))
    assert kostka_multi(2, 2).value(lam, mu) == as_rat("t + t^3")
    assert kostka_modified(lam, mu) == as_rat("t^3 + t")
    assert ic_minus_candidate(lam, mu) == t_poly(1, [1, 1])


def test_modified_kostka_diagonal_and_level_one():
    for r in (1, 2, 3):
        for lam in enumerate_multipartitions(3, r):
            assert kostka_modified(lam, lam) == RatFunc.t_power(1, a_stat(lam))
    # a((1,1)) = 1 at level one, so t * K(1/t) = t * (1/t)
    assert kostka_modified(((2,),), ((1, 1),)) == 1


def test_ic_candidate_diagonal_and_precondition():
    for r in (2, 3):
        for mu in enumerate_multipartitions(3, r):
            if is_ic_shape(mu):
                assert ic_minus_candidate(mu, mu) == t_poly(1, [1])
    with pytest.raises(ValueError):
        ic_minus_candidate(((1,), E, E), ((1,), E, E))


@pytest.mark.parametrize("n", range(6))
def test_ic_level_one_nonnegative(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            p = ic_minus_candidate((lam,), (mu,))
            assert p is not None
            assert all(c.rational() >= 0 and c.rational().q == 1 for c in p.coeffs().values())


def test_slot_flip_swaps_the_two_families():
    for n in range(4):
        assert kostka_multi(n, 3, "-", conj_slot="second").matrix == kostka_multi(n, 3, "+").matrix
        assert kostka_multi(n, 3, "+", conj_slot="second").matrix == kostka_multi(n, 3, "-").matrix


def test_table_json_and_validation():
    data = kostka_multi(1, 2).to_json()
    assert data["n"] == 1 and data["r"] == 2 and data["sign"] == "-"
    assert data["conj_slot"] == CONJ_SLOTS[0]
    assert {(str(e["lambda"]), str(e["mu"])) for e in data["entries"]} == {
        ("[[1], []]", "[[1], []]"), ("[[1], []]", "[[], [1]]"), ("[[], [1]]", "[[], [1]]")}
    with pytest.raises(ValueError):
        kostka_multi(1, 2, "x")


def test_empty_size_table():
    table = kostka_multi(0, 2)
    assert table.labels == ((E, E),)
    assert table.value((E, E), (E, E)) == 1
