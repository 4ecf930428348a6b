import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klaffine import (
    AffinePerm,
    RootDatum,
    Weight,
    WordError,
    bruhat_leq,
    descents,
    from_indices,
    from_word,
    inverse,
    length,
    length_im,
    multiply,
    omega_conjugate,
    parse_element,
    reduced_word,
    translation,
)
from klaffine import special as sp
from klaffine.weyl import (
    ball_raw,
    component,
    length as raw_length,
    compose,
    finite_group,
    identity,
    longest_finite,
    rmul_s,
)


def words(n, max_len=12):
    return st.tuples(st.integers(0, n), st.lists(st.integers(0, n), max_size=max_len))


def elem(n, data):
    k, word = data
    return from_indices(word, n, omega=k)


# -- worked examples ---------------------------------------------------------


def test_from_word_examples():
    e = from_word("", 2)
    assert e.window == (1, 2, 3) and e.k == 0
    w = from_word("w", 2)
    assert w.window == (2, 3, 4) and w.k == 1
    assert from_word("1", 2).window == (2, 1, 3)


def test_from_word_errors():
    with pytest.raises(WordError):
        from_word("3", 2)
    with pytest.raises(WordError):
        from_word("s1", 2)
    with pytest.raises(WordError):
        parse_element("t[1,2]", 3)
    with pytest.raises(WordError):
        parse_element("[1,1,2]", 2)


def test_multiply_examples():
    n = 3
    N = n + 1
    w = from_word("1 0 2 w 3", n)
    assert w * from_word("", n) == w
    s1 = from_word("1", 2)
    assert (s1 * s1).is_identity()
    om = from_word("w", n)
    assert multiply(*[om] * N).is_identity()
    for i in range(N):
        s = from_indices([i], n)
        assert om * s * om.inverse() == from_indices([(i + 1) % N], n)


def test_inverse_examples():
    n = 2
    assert inverse(from_word("", n)).is_identity()
    assert inverse(from_word("w", n)) == from_word("w w", n)
    assert inverse(from_word("1 2", n)) == from_word("2 1", n)


def test_length_examples():
    assert length(sp.w0(4)) == 10
    for n in range(2, 7):
        assert length(sp.x1xn(n)) == 2 * n
    for n in range(4, 8):
        assert length(sp.v(n)) == 2 * n + 1


def test_length_im_examples():
    for n in (1, 2, 3, 4):
        e = AffinePerm(tuple(range(1, n + 2)))
        assert length_im([0] * n, e) == 0
        assert length_im([0] * n, sp.w0(n)) == n * (n + 1) // 2
    assert length_im([2] * 4, sp.w0(4)) == 50 == length(translation([2] * 4) * sp.w0(4))
    with pytest.raises(ValueError):
        length_im([0, 0], from_word("0", 2))


def test_descent_examples():
    for n in (1, 2, 4):
        assert descents(from_word("", n), "right") == set()
        assert descents(sp.w0(n), "right") == set(range(1, n + 1))
    for n in (4, 5, 6):
        assert descents(sp.theorem_w(n), "right") == {1, 2, n - 1, n}


def test_bruhat_examples():
    for n in (4, 5):
        y = sp.x1xn(n) * sp.w0(n)
        vw0 = sp.v(n) * sp.w0(n)
        assert bruhat_leq(y, vw0)
        assert length(vw0) - length(y) == 1
    assert not bruhat_leq(from_word("w", 2), from_word("1", 2))
    e = from_word("", 2)
    for w in map(AffinePerm, ball_raw(3, 5, components=[0])):
        assert bruhat_leq(e, w)


def test_translation_examples():
    for n in range(2, 7):
        assert translation([0] * n).is_identity()
        x1 = translation([1] + [0] * (n - 1))
        assert x1 == from_indices(list(range(2, n + 1)) + [0], n, omega=n)
        xn = translation([0] * (n - 1) + [1])
        assert xn == from_indices(list(range(n - 1, 0, -1)) + [0], n, omega=1)
        word = list(range(1, n + 1)) + list(range(n - 1, 0, -1)) + [0]
        assert x1 * xn == from_indices(word, n)
    for n in range(3, 7):
        x2 = translation([0, 1] + [0] * (n - 2))
        word = list(range(4, n + 1)) + [0, 1] + list(range(3, n + 1)) + [0]
        assert x2 == from_indices(word, n, omega=n - 1)
    for n in range(4, 7):
        word = []
        for j in range(n - 3, -1, -1):
            word += [j, j + 1]
        x = translation([0] * (n - 2) + [1, 0])
        assert x == from_indices(word + [n, 0], n, omega=2)


def test_omega_conjugate_examples():
    n = 3
    for i in range(n + 1):
        s = from_indices([i], n)
        assert omega_conjugate(s, 1) == from_indices([(i + 1) % (n + 1)], n)
    w = from_word("1 0 3 2 w", n)
    assert omega_conjugate(w, 0) == w
    assert omega_conjugate(omega_conjugate(w, 1), -1) == w


def test_reduced_word_examples():
    assert reduced_word(from_word("", 2)) == (0, [])
    assert reduced_word(from_word("w", 2)) == (1, [])
    k, word = reduced_word(from_word("1 2 1", 2))
    assert k == 0 and len(word) == 3


def test_root_datum():
    d = RootDatum(3)
    assert d.N == 4
    assert d.w0() == sp.w0(3)
    assert d.omega(4).is_identity()
    assert d.rho() == Weight([1, 1, 1])


# -- properties ----------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), words(n), words(n), words(n))))
def test_group_axioms(args):
    n, a, b, c = args
    x, y, z = elem(n, a), elem(n, b), elem(n, c)
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity()
    assert (x.inverse() * x).is_identity()
    assert x.inverse().inverse() == x
    assert (x * y).k == (x.k + y.k) % (n + 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), words(n, 16))))
def test_length_and_descents(args):
    n, a = args
    w = elem(n, a)
    lw = w.length()
    assert w.inverse().length() == lw
    right = w.descents("right")
    for i in range(n + 1):
        assert (w.rmul(i).length() == lw - 1) == (i in right)
        assert abs(w.rmul(i).length() - lw) == 1
        assert abs(w.lmul(i).length() - lw) == 1
    assert w.descents("left") == w.inverse().descents("right")
    k, word = reduced_word(w)
    assert len(word) == lw
    assert from_indices(word, n, omega=k) == w
    assert omega_conjugate(w, 1).length() == lw


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                        st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                        st.permutations(range(1, n + 2)))))
def test_translations_and_length_formula(args):
    n, x, y, perm = args
    tx, ty = translation(x), translation(y)
    assert tx * ty == translation([a + b for a, b in zip(x, y)])
    assert tx.length() == translation([-a for a in x]).length()
    u = AffinePerm(tuple(perm))
    assert (tx * u).length() == length_im(x, u)


def test_length_formula_exhaustive_small():
    for n in (1, 2, 3):
        N = n + 1
        for u in finite_group(N):
            for x in itertools.product(range(-2, 3), repeat=n):
                assert raw_length(compose(translation(x).window, u)) == length_im(x, u)


def _subword_set(word, k, N):
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        w = identity(N) if not k else from_indices([], N - 1, omega=k).window
        for keep, i in zip(mask, word):
            if keep:
                w = rmul_s(w, i)
        out.add(w)
    return out


@pytest.mark.parametrize("n,max_len", [(1, 8), (2, 8), (3, 8)])
def test_bruhat_matches_subword_property(n, max_len):
    N = n + 1
    elems = sorted(ball_raw(N, max_len, components=[0]), key=lambda w: (raw_length(w), w))
    bad = 0
    for w in elems:
        k, word = reduced_word(AffinePerm(w))
        below = _subword_set(word, k, N)
        for y in elems:
            if raw_length(y) > raw_length(w):
                break
            if bruhat_leq(AffinePerm(y), AffinePerm(w)) != (y in below):
                bad += 1
    assert bad == 0


def test_bruhat_components():
    for w in ball_raw(3, 4):
        for y in ball_raw(3, 3):
            if component(y) != component(w):
                assert not bruhat_leq(AffinePerm(y), AffinePerm(w))


def test_rank_mismatch():
    with pytest.raises(ValueError):
        from_word("1", 2) * from_word("1", 3)
    with pytest.raises(ValueError):
        bruhat_leq(from_word("1", 2), from_word("1", 3))


def test_w0_window():
    assert longest_finite(4) == (4, 3, 2, 1)
