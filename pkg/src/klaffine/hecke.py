"""
Iwahori-Hecke algebra of the extended affine Weyl group over Z[v, v^-1],
v = q^(1/2), in the standard basis T_w, with the canonical basis
C_w = v^(-l(w)) sum_{y <= w} P_{y,w}(q) T_y.

Internally an element is a dict window -> {exponent of v: int}; the
public HeckeElem wraps that with LaurentPoly coefficients.

Structure constants h_{x,y,z} (C_x C_y = sum_z h_{x,y,z} C_z) have two
independent evaluation routes:

* y in Gamma_0: work in the left ideal M = H C_{w0}, whose basis
  m_g = T_{g w0} C_{w0} is indexed by g in Gamma_0.  T_s acts on m_g by

      s g > g                    ->  m_{sg}
      s g < g, s g in Gamma_0    ->  q m_{sg} + (q - 1) m_g
      s g < g, s g not in Gamma_0 ->  q m_g

  and C_y = v^(-l(y) + l(w0)) sum_g P_{g,y} m_g.  Only Gamma_0 columns of
  the KL table are needed, so this reaches the ranks used for the
  lowest-cell computations.
* otherwise: expand both factors in the T basis, multiply, and peel off
  C_z from the top (T-route).  x^-1 in Gamma_0 is first reduced to the
  module route through the anti-involution T_w -> T_{w^-1}, which gives
  h_{x,y,z} = h_{y^-1,x^-1,z^-1}.
"""

from .kl import Session, _session_for
from .laurent import LaurentPoly, _check
from .weyl import (
    AffinePerm,
    component,
    inverse,
    is_gamma0,
    is_left_descent,
    left_descents,
    length,
    lmul_omega,
    lmul_s,
    longest_finite,
    lower_interval_raw,
    omega_window,
)


# ---------------------------------------------------------------------------
# raw coefficient dicts {exp: c}


def _acc(out, key, poly, shift=0, factor=1):
    "out[key] += factor * v^shift * poly, dropping zeros"
    cur = out.get(key)
    if cur is None:
        cur = out[key] = {}
    for e, c in poly.items():
        e += shift
        c = cur.get(e, 0) + factor * c
        if c:
            cur[e] = c
        else:
            del cur[e]
    if not cur:
        del out[key]


def _qpoly(p, shift=0):
    "q-polynomial tuple -> {exp of v: c}, times v^shift"
    return {2 * i + shift: c for i, c in enumerate(p) if c}


def _mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            else:
                del out[e]
    return out


def _to_laurent(d):
    return LaurentPoly.from_dict(d)


def _from_laurent(p):
    return {e: c for e, c in p.terms()}


def _clean(vec):
    for c in vec.values():
        for a in c.values():
            _check(a)
    return {w: c for w, c in vec.items() if c}


# ---------------------------------------------------------------------------
# T-basis arithmetic


def ts_left(vec, s):
    "T_s * vec"
    out = {}
    for w, c in vec.items():
        sw = lmul_s(w, s)
        if is_left_descent(w, s):
            _acc(out, sw, c, 2)
            _acc(out, w, c, 2)
            _acc(out, w, c, 0, -1)
        else:
            _acc(out, sw, c)
    return out


def tomega_left(vec, k):
    return {lmul_omega(w, k): dict(c) for w, c in vec.items()}


def t_mul_raw(a, b):
    """
    sum_x a_x T_x b.  T_x b is built as T_s (T_{sx} b) with s the smallest
    left descent, memoized, so supports that are intervals cost one T_s
    application per element.
    """
    cache = {}

    def tx(x):
        got = cache.get(x)
        if got is not None:
            return got
        ld = left_descents(x)
        if not ld:
            got = tomega_left(b, component(x))
        else:
            got = ts_left(tx(lmul_s(x, ld[0])), ld[0])
        cache[x] = got
        return got

    out = {}
    for x in sorted(a, key=length):
        cx = a[x]
        for w, c in tx(x).items():
            _acc(out, w, _mul(cx, c))
    return _clean(out)


def c_basis_raw(w, session):
    lw = length(w)
    return {y: _qpoly(session.kl.p(y, w), -lw) for y in lower_interval_raw(w)}


def to_c_basis_raw(vec, session):
    """
    Triangular elimination: the longest term T_m (ties broken by window)
    with coefficient c forces h_m = c v^l(m); subtract h_m C_m and repeat.
    """
    vec = {w: dict(c) for w, c in vec.items()}
    out = {}
    while vec:
        m = max(vec, key=lambda w: (length(w), w))
        c = dict(vec[m])
        lm = length(m)
        out[m] = {e + lm: a for e, a in c.items()}
        for y in lower_interval_raw(m):
            p = session.kl.p(y, m)
            if p:
                _acc(vec, y, _mul(c, _qpoly(p)), 0, -1)
        assert m not in vec
    return out


# ---------------------------------------------------------------------------
# the Gamma_0 module H C_{w0}


def module_ts(vec, s):
    "T_s acting on sum_g vec[g] m_g"
    out = {}
    for g, c in vec.items():
        sg = lmul_s(g, s)
        if not is_left_descent(g, s):
            _acc(out, sg, c)
        elif is_gamma0(sg):
            _acc(out, sg, c, 2)
            _acc(out, g, c, 2)
            _acc(out, g, c, 0, -1)
        else:
            _acc(out, g, c, 2)
    return out


def _vsum(a, b):
    out = {g: dict(c) for g, c in a.items()}
    for g, c in b.items():
        _acc(out, g, c)
    return out


def module_symmetrize(vec, N):
    """
    sum_{a in W_0} T_a acting on vec, through the factorization
    W_0 = B_1 B_2 ... B_n with B_k = {e, s_k, s_k s_{k-1}, ..., s_k...s_1};
    each sum over B_k is applied in Horner form.
    """
    for k in range(N - 1, 0, -1):
        z = vec
        for j in range(1, k + 1):
            z = _vsum(vec, module_ts(z, j))
        vec = z
    return vec


def module_c(y, session):
    "C_y as a module vector, y in Gamma_0"
    shift = -(length(y) - length(longest_finite(len(y))))
    return {g: _qpoly(p, shift) for g, p in session.kl0.column(y).items()}


def module_act_c(x, vec, session):
    "C_x acting on a module vector"
    N = len(x)
    lx = length(x)
    if x == longest_finite(N):
        return {g: {e - lx: a for e, a in c.items()}
                for g, c in module_symmetrize(vec, N).items() if c}
    cache = {}

    def tx(a):
        got = cache.get(a)
        if got is not None:
            return got
        ld = left_descents(a)
        if not ld:
            got = {lmul_omega(g, component(a)): dict(c) for g, c in vec.items()}
        else:
            got = module_ts(tx(lmul_s(a, ld[0])), ld[0])
        cache[a] = got
        return got

    out = {}
    for a in sorted(lower_interval_raw(x), key=length):
        p = session.kl.p(a, x)
        pa = _qpoly(p, -lx)
        for g, c in tx(a).items():
            _acc(out, g, _mul(pa, c))
    return out


def module_to_c(vec, session):
    "expand a module vector in {C_z : z in Gamma_0}"
    vec = {g: dict(c) for g, c in vec.items()}
    l0 = length(longest_finite(len(next(iter(vec))))) if vec else 0
    out = {}
    while vec:
        g = max(vec, key=lambda w: (length(w), w))
        c = dict(vec[g])
        lu = length(g) - l0
        out[g] = {e + lu: a for e, a in c.items()}
        for h, p in session.kl0.column(g).items():
            if p:
                _acc(vec, h, _mul(c, _qpoly(p)), 0, -1)
        assert g not in vec
    return out


# ---------------------------------------------------------------------------
# structure constants


def _check_bar(prod):
    for z, c in prod.items():
        for e, a in c.items():
            if c.get(-e) != a:
                raise ArithmeticError(f"h coefficient at {z} is not bar invariant")
    return prod


def product_module(x, y, session):
    "{z: h_{x,y,z}} for y in Gamma_0"
    if not is_gamma0(y):
        raise ValueError("module route needs y in Gamma_0")
    return _check_bar(module_to_c(module_act_c(x, module_c(y, session), session), session))


def product_t(x, y, session):
    "{z: h_{x,y,z}} by T-basis multiplication"
    prod = t_mul_raw(c_basis_raw(x, session), c_basis_raw(y, session))
    return _check_bar(to_c_basis_raw(prod, session))


def product_c(x, y, session, route=None):
    """
    {z: h_{x,y,z}} as raw dicts.  route is None (choose), "module" or "t".
    """
    key = (x, y, route)
    got = session.products.get(key)
    if got is not None:
        return got
    if route == "t":
        got = product_t(x, y, session)
    elif route == "module" or (route is None and is_gamma0(y)):
        got = product_module(x, y, session)
    elif route is None and is_gamma0(inverse(x)):
        flipped = product_module(inverse(y), inverse(x), session)
        got = {inverse(z): c for z, c in flipped.items()}
    else:
        got = product_t(x, y, session)
    session.products[key] = got
    return got


# ---------------------------------------------------------------------------
# public API


class HeckeElem:
    """Finite sum of c_w T_w with LaurentPoly coefficients c_w."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for w, c in (terms or {}).items():
            if not isinstance(w, AffinePerm):
                w = AffinePerm(w)
            if w.n != n:
                raise ValueError("rank mismatch")
            if not isinstance(c, LaurentPoly):
                c = LaurentPoly((c,))
            if c:
                self.terms[w] = c

    @classmethod
    def T(cls, w, coeff=1):
        return cls(w.n, {w: coeff})

    @classmethod
    def _wrap(cls, n, raw):
        out = cls(n)
        out.terms = {AffinePerm._raw(w): _to_laurent(c) for w, c in raw.items() if c}
        return out

    def _raw(self):
        return {w.window: _from_laurent(c) for w, c in self.terms.items()}

    def _same_rank(self, other):
        if not isinstance(other, HeckeElem):
            return False
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return True

    def __add__(self, other):
        if not self._same_rank(other):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, LaurentPoly()) + c
        return HeckeElem(self.n, out)

    def __sub__(self, other):
        if not self._same_rank(other):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, int):
            c = LaurentPoly((c,))
        return HeckeElem(self.n, {w: a * c for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return t_mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def coeff(self, w):
        return self.terms.get(w, LaurentPoly())

    def __repr__(self):
        parts = [f"({c})T{w!r}" for w, c in sorted(self.terms.items(),
                                                   key=lambda t: (t[0].length(), t[0].window))]
        return " + ".join(parts) if parts else "0"


def t_mul(a, b):
    if a.n != b.n:
        raise ValueError("rank mismatch")
    return HeckeElem._wrap(a.n, t_mul_raw(a._raw(), b._raw()))


def c_basis(w, session=None):
    session = _session_for(w, session)
    return HeckeElem._wrap(w.n, c_basis_raw(w.window, session))


def to_c_basis(h, session=None):
    "{z: coefficient of C_z} for a Hecke element"
    if session is None:
        from .kl import get_session
        session = get_session(h.n)
    raw = to_c_basis_raw(h._raw(), session)
    return {AffinePerm._raw(z): _to_laurent(c) for z, c in raw.items() if c}


def product(x, y, session=None, route=None):
    "C_x C_y as {z: h_{x,y,z}}"
    session = _session_for(x, session)
    if x.n != y.n:
        raise ValueError("rank mismatch")
    raw = product_c(x.window, y.window, session, route)
    return {AffinePerm._raw(z): _to_laurent(c) for z, c in raw.items()}


def h_const(x, y, z, session=None, route=None):
    session = _session_for(x, session)
    if not x.n == y.n == z.n:
        raise ValueError("rank mismatch")
    raw = product_c(x.window, y.window, session, route)
    return _to_laurent(raw.get(z.window, {}))


def delta_gamma(x, y, z, a, session=None):
    """
    (gamma, delta): the coefficients of v^a and v^(a-1) in h_{x,y,z}.
    A term above v^a means a is not a(z).
    """
    h = h_const(x, y, z, session)
    if h and h.max_deg > a:
        raise ValueError(f"h_{{x,y,z}} has degree {h.max_deg} > a = {a}")
    return h.coeff(a), h.coeff(a - 1)


def pi_delta(z, session=None):
    """
    (delta(z), pi(z)): degree and leading coefficient of P_{e,z}, with e
    replaced by omega^k for z in component k.
    """
    session = _session_for(z, session)
    base = omega_window(z.N, z.k)
    p = session.kl.p(base, z.window)
    return len(p) - 1, p[-1]


__all__ = [
    "HeckeElem", "Session", "t_mul", "c_basis", "to_c_basis", "product",
    "h_const", "delta_gamma", "pi_delta",
]
