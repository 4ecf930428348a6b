"""
Named elements used in the rank-parametric verification scenarios, built
from words in n.  All words are evaluated left to right; "* w0" means
right multiplication by the longest element of W_0.
"""

from .weyl import AffinePerm, from_indices, longest_finite, translation


def _up(a, b):
    return list(range(a, b + 1))


def _down(a, b):
    return list(range(a, b - 1, -1))


def _with_w0(word, n):
    return from_indices(word, n) * AffinePerm(longest_finite(n + 1))


def w0(n):
    return AffinePerm(longest_finite(n + 1))


def v_word(n):
    "s1 sn s0 s2 ... s_{n-2} s_{n-1} s_{n-2} ... s1 sn s0"
    return [1, n, 0] + _up(2, n - 2) + _down(n - 1, 1) + [n, 0]


def v(n):
    return from_indices(v_word(n), n)


def v1(n):
    "s1 v"
    return from_indices([1] + v_word(n), n)


def v2(n):
    "sn s1 v"
    return from_indices([n, 1] + v_word(n), n)


def z(n, i):
    "s0 s_i ... s1 s3 ... sn s0 w0"
    return _with_w0([0] + _down(i, 1) + _up(3, n) + [0], n)


def u2(n):
    "s2 s3 ... sn s0 w0"
    return _with_w0(_up(2, n) + [0], n)


def s0w0(n):
    return _with_w0([0], n)


def s1s0w0(n):
    return _with_w0([1, 0], n)


def w_ij(n, i, j):
    return _with_w0([n, 0] + _down(i, 1) + _up(j, n) + [0], n)


def u_ij(n, i, j):
    return _with_w0([0] + _down(i, 1) + _up(j, n) + [0], n)


def v_ij(n, i, j):
    return _with_w0(_down(i, 1) + _up(j, n) + [0], n)


def w_i(n, i):
    return _with_w0(_down(i, 1) + [0], n)


def u_j(n, j):
    return _with_w0(_up(j, n) + [0], n)


def lemma_family(n):
    """the Gamma_0 elements listed as candidates for w0 <= z < v1 w0"""
    out = {w0(n), s0w0(n)}
    for i in range(1, n):
        for j in range(3, n + 1):
            out.update((w_ij(n, i, j), u_ij(n, i, j), v_ij(n, i, j)))
        out.add(w_i(n, i))
    for j in range(2, n + 1):
        out.add(u_j(n, j))
    return out


def x1xn(n):
    return translation([1] + [0] * (n - 2) + [1])


def two_rho(n):
    return translation([2] * n)


def theorem_w(n):
    "s_{n-1}...s1 sn s_{n-1}...s2 s4 s5...sn s3 s4...s_{n-1} s1 sn, in W_0"
    word = _down(n - 1, 1) + _down(n, 2) + _up(4, n) + _up(3, n - 1) + [1, n]
    return from_indices(word, n)
