import itertools

import pytest

from klaffine import (
    AffinePerm,
    C0Factorization,
    DominantWeight,
    HeckeElem,
    RootDatum,
    Session,
    assemble,
    c0_factorize,
    c_basis,
    d_of,
    d_set_characterization,
    dist_involutions,
    e_elem,
    f_elem,
    from_word,
    gamma0_contains,
    mu,
    mu_c0_decomposed,
    t_mul,
    translation,
)
from klaffine import special as sp
from klaffine.cells import in_c0
from klaffine.weyl import ball_raw, finite_group, longest_finite


def W0(n):
    return [AffinePerm(p) for p in finite_group(n + 1)]


def test_d_of_examples():
    for n in (1, 2, 3, 4):
        e = AffinePerm(tuple(range(1, n + 2)))
        assert d_of(e) == e
        assert d_of(sp.w0(n)) == sp.w0(n) * translation([1] * n)
    for n in (4, 5, 6):
        w = sp.theorem_w(n)
        d = d_of(w)
        assert d == from_word("0", n) * sp.v(n)
        x = [0] * n
        for i in (0, 1, n - 2, n - 1):
            x[i] = 1
        assert d == w * translation(x)
    with pytest.raises(ValueError):
        d_of(from_word("0", 2))


def test_factorize_examples():
    for n in (1, 2, 4):
        f = c0_factorize(sp.w0(n)).factorization
        e = AffinePerm(tuple(range(1, n + 2)))
        assert (f.u, f.x, f.w) == (e, DominantWeight([0] * n), e)
    for n in (4, 5):
        vw0 = sp.v(n) * sp.w0(n)
        q = c0_factorize(vw0)
        assert q.in_c0
        assert vw0.length() == sp.v(n).length() + sp.w0(n).length()
        assert q.factorization.assemble() == vw0
        assert q.factorization.w == AffinePerm(tuple(range(1, n + 2)))
    for n in (2, 3):
        assert not c0_factorize(from_word("1", n)).in_c0


def test_factorization_json():
    f = c0_factorize(sp.v(4) * sp.w0(4)).factorization
    assert C0Factorization.from_json(f.to_json()) == f


@pytest.mark.parametrize("n", [1, 2])
def test_factorization_roundtrip(n):
    for u, w in itertools.product(W0(n), W0(n)):
        for x in itertools.product(range(3), repeat=n):
            z = assemble(u, x, w)
            f = c0_factorize(z).factorization
            assert (f.u, tuple(f.x), f.w) == (u, x, w)
            assert z.length() == (d_of(u).length() + translation(x).length()
                                  + sp.w0(n).length() + d_of(w).length())


def test_c0_is_exactly_the_parametrized_set_n1():
    # every element of length <= l(w0) + 6 is in c_0 iff it is assembled
    n = 1
    assembled = {assemble(u, x, w).window for u, w in itertools.product(W0(n), W0(n))
                 for x in itertools.product(range(8), repeat=n)}
    for z in ball_raw(2, 7):
        assert in_c0(z) == (z in assembled)


def test_gamma0_contains():
    for n in (2, 4):
        w0 = sp.w0(n)
        assert gamma0_contains(w0)
        assert gamma0_contains(translation([1] * n) * w0)
        assert gamma0_contains(translation([2] + [0] * (n - 1)) * w0)
        assert not gamma0_contains(from_word("1", n))
    assert gamma0_contains(sp.v(4) * sp.w0(4))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dist_involutions(n):
    D = dist_involutions(RootDatum(n))
    assert sp.w0(n) in D
    assert len(D) == len(W0(n))
    assert all((m * m).is_identity() for m in D)


def test_d_set_examples():
    e1 = AffinePerm((1, 2))
    s1 = from_word("1", 1)
    assert d_set_characterization(RootDatum(1)) == {d_of(e1), d_of(s1)}
    d2 = d_set_characterization(RootDatum(2))
    assert len(d2) == 6 and AffinePerm((1, 2, 3)) in d2
    with pytest.raises(ValueError):
        d_set_characterization(RootDatum(4))


def test_e_f_identity():
    n = 2
    s = Session(n)
    e = AffinePerm((1, 2, 3))
    assert e_elem(e, s) == HeckeElem.T(e)
    assert f_elem(e, s) == HeckeElem.T(e)
    cw0 = c_basis(sp.w0(n), s)
    for w, u in itertools.product(W0(n), W0(n)):
        lhs = t_mul(e_elem(w, s), t_mul(cw0, f_elem(u, s)))
        assert lhs == c_basis(d_of(w) * sp.w0(n) * d_of(u).inverse(), s)


def test_e_f_identity_sampled_n3():
    n = 3
    s = Session(n)
    cw0 = c_basis(sp.w0(n), s)
    ws = W0(n)
    for w, u in [(ws[0], ws[5]), (ws[7], ws[0]), (ws[3], ws[11]), (ws[-1], ws[-1])]:
        lhs = t_mul(e_elem(w, s), t_mul(cw0, f_elem(u, s)))
        assert lhs == c_basis(d_of(w) * sp.w0(n) * d_of(u).inverse(), s)


@pytest.mark.parametrize("n,tot", [(1, 3), (2, 2)])
def test_mu_decomposed_matches_engine(n, tot):
    s = Session(n)
    elems = [assemble(u, x, w) for u, w in itertools.product(W0(n), W0(n))
             for x in itertools.product(range(tot + 1), repeat=n) if sum(x) <= tot]
    for y, w in itertools.product(elems, elems):
        if y.length() < w.length():
            assert mu_c0_decomposed(y, w, s) == mu(y, w, s), (y, w)


def test_mu_decomposed_same_right_cell_is_zero():
    n = 2
    s = Session(n)
    u = W0(n)[3]
    e = W0(n)[0]
    y = assemble(u, [1, 0], e)
    w = assemble(u, [1, 1], e)
    assert mu_c0_decomposed(y, w, s) == 0


def test_mu_decomposed_needs_c0():
    with pytest.raises(ValueError):
        mu_c0_decomposed(from_word("1", 2), sp.w0(2))


def test_longest_window():
    assert longest_finite(3) == (3, 2, 1)


def test_mu_support_law_n2():
    # mu(y, w) != 0 on c_0 forces a shared left or right cell
    n = 2
    s = Session(n)
    elems = [(u, w, assemble(u, x, w)) for u, w in itertools.product(W0(n), W0(n))
             for x in itertools.product(range(3), repeat=n) if sum(x) <= 2]
    hits = 0
    for (u1, w1, a), (u2, w2, b) in itertools.combinations(elems, 2):
        if mu(a, b, s):
            hits += 1
            assert u1 == u2 or w1 == w2
    assert hits > 0
