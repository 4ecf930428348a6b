"""
The lowest two-sided cell c_0 and its left cell Gamma_0.

For u in W_0 let d_u = u * t_(sum of x_i over simple roots alpha_i with
u(alpha_i) < 0).  Every z in c_0 factors uniquely as

    z = d_u * t_x * w0 * d_w^-1,   u, w in W_0,  x dominant,

with lengths adding up.  Naming: C0Factorization(u, x, w) always means
this order, so u indexes the right cell (left factor d_u) and w indexes
the left cell (right factor d_w^-1).  Sources that write d_w x w0 d_u^-1
swap the two letters.
"""

from dataclasses import dataclass
from typing import Optional

from . import hecke
from .kl import _session_for
from .tensor import DominantWeight, tensor_mult, weyl_dim
from .weyl import (
    AffinePerm,
    RootDatum,
    Weight,
    ball_raw,
    compose,
    finite_group,
    finite_part,
    inverse,
    is_finite,
    is_gamma0,
    length,
    longest_finite,
    right_descents,
    rmul_s,
    translation_weight,
    translation_window,
)


def _d_raw(u):
    N = len(u)
    coords = [0] * (N - 1)
    for i in right_descents(u):
        if i:
            coords[i - 1] = 1
    return compose(u, translation_window(coords))


def d_of(u):
    """d_u for u in W_0"""
    if not u.is_finite():
        raise ValueError("d_of needs an element of W_0")
    return AffinePerm._raw(_d_raw(u.window))


def _d_table(N):
    return [(u, _d_raw(u)) for u in finite_group(N)]


@dataclass(frozen=True)
class C0Factorization:
    u: AffinePerm
    x: DominantWeight
    w: AffinePerm

    def assemble(self):
        return assemble(self.u, self.x, self.w)

    def to_json(self):
        return {"u": list(self.u.window), "x": list(self.x.coords),
                "w": list(self.w.window)}

    @classmethod
    def from_json(cls, d):
        return cls(AffinePerm(d["u"]), DominantWeight(d["x"]), AffinePerm(d["w"]))


@dataclass(frozen=True)
class CellQuery:
    element: AffinePerm
    factorization: Optional[C0Factorization]

    @property
    def in_c0(self):
        return self.factorization is not None


def assemble(u, x, w):
    """d_u * t_x * w0 * d_w^-1"""
    N = u.N
    x = x.coords if isinstance(x, Weight) else tuple(x)
    z = compose(_d_raw(u.window), translation_window(x))
    z = compose(z, longest_finite(N))
    z = compose(z, inverse(_d_raw(w.window)))
    return AffinePerm._raw(z)


def _factor_raw(z):
    N = len(z)
    lz = length(z)
    w0 = longest_finite(N)
    l0 = length(w0)
    found = []
    for w, dw in _d_table(N):
        ldw = length(dw)
        a = compose(z, dw)
        if length(a) + ldw != lz or not is_gamma0(a):
            continue
        b = compose(a, w0)
        if length(b) + l0 != length(a):
            continue
        u = finite_part(b)
        du = _d_raw(u)
        t = compose(inverse(du), b)
        x = translation_weight(t)
        if x is None or any(c < 0 for c in x):
            continue
        if length(du) + length(t) != length(b):
            continue
        found.append((u, x, w))
    if len(found) > 1:
        raise ArithmeticError(f"{z} has {len(found)} lowest-cell factorizations")
    return found[0] if found else None


def c0_factorize(z):
    got = _factor_raw(z.window)
    if got is None:
        return CellQuery(z, None)
    u, x, w = got
    return CellQuery(z, C0Factorization(AffinePerm._raw(u), DominantWeight(x),
                                        AffinePerm._raw(w)))


def in_c0(z):
    return _factor_raw(z.window if isinstance(z, AffinePerm) else z) is not None


def gamma0_contains(z):
    return is_gamma0(z.window)


def dist_involutions(datum):
    N = datum.N
    w0 = longest_finite(N)
    return {AffinePerm._raw(compose(compose(d, w0), inverse(d))) for _, d in _d_table(N)}


def d_set_characterization(datum, simple_only=False, max_length=None):
    """
    {z : z w0 in c_0 and z w0 s not in c_0 for every s in W_0 - {e}},
    found by exhaustive search over all z with l(z) <= max_length (default
    l(t_rho), an upper bound for every l(d_w)).  With simple_only the
    condition is imposed for simple reflections s only.
    """
    if datum.n > 3:
        raise ValueError("d_set_characterization is exhaustive only for n <= 3")
    N = datum.N
    w0 = longest_finite(N)
    if max_length is None:
        max_length = length(translation_window([1] * datum.n))
    if simple_only:
        tests = [rmul_s(tuple(range(1, N + 1)), i) for i in range(1, N)]
    else:
        tests = finite_group(N)[1:]
    out = set()
    for z in ball_raw(N, max_length):
        zw = compose(z, w0)
        if _factor_raw(zw) is None:
            continue
        if all(_factor_raw(compose(zw, s)) is None for s in tests):
            out.add(AffinePerm._raw(z))
    return out


# ---------------------------------------------------------------------------
# E and F


def _ef(u, session, flip):
    u = u if isinstance(u, AffinePerm) else AffinePerm(u)
    if not u.is_finite():
        raise ValueError("e_elem/f_elem need an element of W_0")
    session = _session_for(u, session)
    N = u.N
    w0 = longest_finite(N)
    l0 = length(w0)
    d = _d_raw(u.window)
    ld = length(d)
    dw0 = compose(d, w0)
    terms = {}
    for y in hecke.lower_interval_raw(d):
        yw0 = compose(y, w0)
        if length(yw0) != length(y) + l0:
            continue
        p = session.kl.p(yw0, dw0)
        if p:
            key = inverse(y) if flip else y
            terms[key] = hecke._qpoly(p, -ld)
    return hecke.HeckeElem._wrap(u.n, terms)


def e_elem(u, session=None):
    return _ef(u, session, False)


def f_elem(u, session=None):
    return _ef(u, session, True)


# ---------------------------------------------------------------------------
# mu on c_0


def _dual(x):
    return DominantWeight(reversed(tuple(x)))


def delta_support(u, u2, session):
    """
    {z1: delta_{w0 d_u^-1, d_u2 w0, z1 w0}} over the dominant z1 where it
    is nonzero, read off the full product C_{w0 d_u^-1} C_{d_u2 w0}.
    """
    N = len(u)
    w0 = longest_finite(N)
    a = length(w0)
    left = compose(w0, inverse(_d_raw(u)))
    right = compose(_d_raw(u2), w0)
    out = {}
    for z, h in hecke.product_c(left, right, session).items():
        top = max(h)
        if top > a:
            raise ArithmeticError(f"h has degree {top} above a = {a}")
        delta = h.get(a - 1, 0)
        if not delta:
            continue
        z1 = translation_weight(compose(z, w0))
        if z1 is None or any(c < 0 for c in z1):
            raise ArithmeticError(f"support element {z} is not of the form z1 w0")
        out[DominantWeight(z1)] = delta
    return out


def _mu_gamma0(u, x, u2, x2, session):
    # y = d_u t_x w0, w = d_u2 t_x2 w0, both in Gamma_0
    if u == u2:
        return 0
    total = 0
    for z1, delta in delta_support(u, u2, session).items():
        total += tensor_mult(_dual(x), x2, _dual(z1)) * delta
    return total


def mu_c0_decomposed(y, w, session=None):
    """
    mu(y, w) for y, w in c_0 from lowest-cell data: the pair is moved
    into Gamma_0 (inverting first if it shares a right rather than a left
    cell), then mu is the sum over z1 of m_{x*, x', z1*} times
    delta_{w0 d_u^-1, d_u' w0, z1 w0}.
    """
    session = _session_for(y, session)
    fy = _factor_raw(y.window)
    fw = _factor_raw(w.window)
    if fy is None or fw is None:
        raise ValueError("mu_c0_decomposed needs both elements in c_0")
    (uy, xy, wy), (uw, xw, ww) = fy, fw
    if wy != ww:
        if uy != uw:
            return 0
        # invert: (d_u t_x w0 d_w^-1)^-1 = d_w t_{x*} w0 d_u^-1
        uy, xy, wy = wy, tuple(reversed(xy)), uy
        uw, xw, ww = ww, tuple(reversed(xw)), uw
    return _mu_gamma0(uy, DominantWeight(xy), uw, DominantWeight(xw), session)


def bound_B(datum, session=None):
    """
    max over u, u' in W_0 of sum_z1 dim V(z1) delta_{w0 d_u^-1, d_u' w0, z1 w0}
    """
    if datum.n > 2:
        raise ValueError("bound_B is exhaustive only for n <= 2")
    if session is None:
        from .kl import get_session
        session = get_session(datum.n)
    best = 0
    W0 = finite_group(datum.N)
    for u in W0:
        for u2 in W0:
            s = sum(weyl_dim(z1) * d for z1, d in delta_support(u, u2, session).items())
            best = max(best, s)
    return best


__all__ = [
    "C0Factorization", "CellQuery", "RootDatum", "assemble", "bound_B",
    "c0_factorize", "d_of", "d_set_characterization", "delta_support",
    "dist_involutions", "e_elem", "f_elem", "gamma0_contains", "in_c0",
    "is_finite", "mu_c0_decomposed",
]
