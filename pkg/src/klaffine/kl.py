"""
Kazhdan-Lusztig polynomials for the extended affine Weyl group of type A_n.

Two recursions share the memo-table machinery:

* KLEngine       -- the classical left-descent recursion over arbitrary pairs,
                    with memo keys canonicalized under omega-conjugation and
                    (y, w) -> (y^-1, w^-1).
* Gamma0Engine   -- the same recursion with every intermediate element and
                    every correction term restricted to the left cell
                    Gamma_0 = {z : R(z) contains s_1..s_n}.

Polynomials are tuples of ints, index = power of q.  Both engines compute
P_{y,w} lazily: only the pairs reachable from the requested one are
evaluated, and the correction sum runs over the interval [y, sw] instead of
a full column.

ROracle recomputes P from R-polynomials and bar invariance, sharing nothing
with the engines beyond the window arithmetic.
"""

import json
import sys
import time

from . import weyl
from .laurent import QPoly, padd, pcoeff, pshift, psub_scaled
from .weyl import (
    bruhat_leq_raw,
    component,
    conj_omega,
    gamma0_descent,
    gamma0_interval_raw,
    interval_raw,
    is_gamma0,
    is_left_descent,
    is_right_descent,
    left_descents,
    length,
    lmul_s,
    rmul_s,
)

ONE = (1,)
ZERO = ()
FORMAT_VERSION = 1

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class ResourceLimitError(RuntimeError):
    pass


class CacheFormatError(ValueError):
    pass


class Budget:
    """Node and wall-clock limits shared by the engines of one session."""

    def __init__(self, max_nodes=None, max_seconds=None):
        self.max_nodes = max_nodes
        self.deadline = time.monotonic() + max_seconds if max_seconds else None

    def check(self, nodes):
        if self.max_nodes is not None and nodes > self.max_nodes:
            raise ResourceLimitError(f"memo node budget {self.max_nodes} exceeded")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise ResourceLimitError("time budget exceeded")


class KLTable:
    """
    Memo of KL polynomials keyed by (y, w) window pairs.  Entries are
    written once; a plain dict gives atomic insert-if-absent under the GIL,
    and racing writers of the same key store equal values.
    """

    def __init__(self, n):
        self.n = n
        self.memo = {}
        self.computed = 0
        self.hits = 0

    def __len__(self):
        return len(self.memo)

    def get(self, key):
        p = self.memo.get(key)
        if p is not None:
            self.hits += 1
        return p

    def put(self, key, p):
        self.computed += 1
        return self.memo.setdefault(key, p)

    def stats(self):
        return {"entry_count": len(self.memo), "computed": self.computed,
                "hits": self.hits}

    def reset_counters(self):
        self.computed = 0
        self.hits = 0


# ---------------------------------------------------------------------------


def _canonical(y, w):
    "smallest (w', y') over omega-conjugation and simultaneous inversion"
    N = len(w)
    best = None
    for a, b in ((y, w), (weyl.inverse(y), weyl.inverse(w))):
        for k in range(N):
            cand = (conj_omega(b, k), conj_omega(a, k))
            if best is None or cand < best:
                best = cand
    return best[1], best[0]


class KLEngine:
    """Generic KL polynomials P_{y,w}, any y, w in the same rank."""

    def __init__(self, n, table=None, budget=None):
        self.n = n
        self.N = n + 1
        self.table = table if table is not None else KLTable(n)
        self.budget = budget or Budget()

    def _reduce(self, y, w):
        # P_{y,w} = P_{sy,w} = P_{yt,w} for s in L(w), t in R(w)
        lw = left_descents(w)
        rw = weyl.right_descents(w)
        moved = True
        while moved:
            moved = False
            for s in lw:
                if not is_left_descent(y, s):
                    y = lmul_s(y, s)
                    moved = True
            for t in rw:
                if not is_right_descent(y, t):
                    y = rmul_s(y, t)
                    moved = True
        return y

    def p(self, y, w):
        if y == w:
            return ONE
        ly = length(y)
        lw = length(w)
        if ly >= lw or component(y) != component(w):
            return ZERO
        y = self._reduce(y, w)
        if y == w:
            return ONE
        if not bruhat_leq_raw(y, w):
            return ZERO
        ly = length(y)
        if lw - ly <= 2:
            return ONE
        key = _canonical(y, w)
        got = self.table.get(key)
        if got is not None:
            return got
        return self.table.put(key, self._compute(y, w, ly, lw))

    def _compute(self, y, w, ly, lw):
        self.budget.check(len(self.table))
        s = left_descents(w)[0]
        v = lmul_s(w, s)
        lv = lw - 1
        P = padd(self.p(lmul_s(y, s), v), pshift(self.p(y, v), 1))
        for z in interval_raw(y, v):
            if z == v:
                continue
            lz = length(z)
            if (lv - lz) % 2 == 0 or not is_left_descent(z, s):
                continue
            m = pcoeff(self.p(z, v), (lv - lz - 1) // 2)
            if m:
                P = psub_scaled(P, self.p(y, z), m, (lw - lz) // 2)
        return P

    def mu(self, y, w):
        "symmetric leading coefficient; 0 for incomparable pairs"
        ly, lw = length(y), length(w)
        if ly > lw:
            y, w, ly, lw = w, y, lw, ly
        if (lw - ly) % 2 == 0:
            return 0
        return pcoeff(self.p(y, w), (lw - ly - 1) // 2)


class Gamma0Engine:
    """
    KL polynomials for y, w in Gamma_0.  Each step uses a left descent s of
    w with sw in Gamma_0; when sy leaves Gamma_0 the first two terms merge
    into (1 + q) P_{y,sw}, and only z in Gamma_0 enter the correction sum.
    """

    def __init__(self, n, table=None, budget=None):
        self.n = n
        self.N = n + 1
        self.table = table if table is not None else KLTable(n)
        self.budget = budget or Budget()

    def _reduce(self, y, w):
        moved = True
        lw = left_descents(w)
        while moved:
            moved = False
            for s in lw:
                if not is_left_descent(y, s):
                    y = lmul_s(y, s)
                    moved = True
        return y

    def p(self, y, w):
        if y == w:
            return ONE
        ly = length(y)
        lw = length(w)
        if ly >= lw or component(y) != component(w):
            return ZERO
        y = self._reduce(y, w)
        if y == w:
            return ONE
        if not bruhat_leq_raw(y, w):
            return ZERO
        ly = length(y)
        if lw - ly <= 2:
            return ONE
        key = (y, w)
        got = self.table.get(key)
        if got is not None:
            return got
        return self.table.put(key, self._compute(y, w, ly, lw))

    def _compute(self, y, w, ly, lw):
        self.budget.check(len(self.table))
        s = gamma0_descent(w)
        v = lmul_s(w, s)
        lv = lw - 1
        sy = lmul_s(y, s)
        Pyv = self.p(y, v)
        if is_gamma0(sy):
            P = padd(self.p(sy, v), pshift(Pyv, 1))
        else:
            P = padd(Pyv, pshift(Pyv, 1))
        for z in gamma0_interval_raw(y, v):
            if z == v:
                continue
            lz = length(z)
            if (lv - lz) % 2 == 0 or not is_left_descent(z, s):
                continue
            m = pcoeff(self.p(z, v), (lv - lz - 1) // 2)
            if m:
                P = psub_scaled(P, self.p(y, z), m, (lw - lz) // 2)
        return P

    def mu(self, y, w):
        ly, lw = length(y), length(w)
        if ly > lw:
            y, w, ly, lw = w, y, lw, ly
        if (lw - ly) % 2 == 0:
            return 0
        return pcoeff(self.p(y, w), (lw - ly - 1) // 2)

    def column(self, w):
        "{g: P_{g,w}} over Gamma_0 elements g <= w"
        lo = weyl.gamma0_minimum(len(w), component(w))
        return {g: self.p(g, w) for g in gamma0_interval_raw(lo, w)}


# ---------------------------------------------------------------------------
# R-polynomial oracle


class ROracle:
    """
    P_{y,w} from R-polynomials: R_{x,w} by the standard descent recursion and
    then the triangular system q^(l(w)-l(x)) bar(P_{x,w}) = sum_{x<=z<=w}
    R_{x,z} P_{z,w}, solved from the top of [y, w] downward.  Bruhat order
    comes from brute-force subword enumeration.
    """

    def __init__(self, n, max_gap=10):
        self.n = n
        self.N = n + 1
        self.max_gap = max_gap
        self._below = {}
        self._R = {}

    def below(self, w):
        "all subword products of a reduced word of w"
        got = self._below.get(w)
        if got is not None:
            return got
        k, word = weyl.reduced_word_raw(w)
        prods = {weyl.omega_window(self.N, k)}
        for i in word:
            prods |= {rmul_s(x, i) for x in prods}
        got = frozenset(prods)
        self._below[w] = got
        return got

    def R(self, x, w):
        if x == w:
            return ONE
        if x not in self.below(w):
            return ZERO
        key = (x, w)
        got = self._R.get(key)
        if got is not None:
            return got
        s = left_descents(w)[0]
        sw = lmul_s(w, s)
        sx = lmul_s(x, s)
        if is_left_descent(x, s):
            r = self.R(sx, sw)
        else:
            a = self.R(x, sw)
            r = padd(psub_scaled(pshift(a, 1), a, 1, 0), pshift(self.R(sx, sw), 1))
        self._R[key] = r
        return r

    def p(self, y, w):
        if y == w:
            return ONE
        if y not in self.below(w):
            return ZERO
        gap = length(w) - length(y)
        if gap > self.max_gap:
            raise ResourceLimitError(f"oracle budget: length gap {gap} > {self.max_gap}")
        elems = [z for z in self.below(w) if y in self.below(z)]
        elems.sort(key=length, reverse=True)
        P = {w: ONE}
        for x in elems[1:]:
            rhs = ()
            for z in elems:
                if z in P and z != x:
                    r = self.R(x, z)
                    if r:
                        rhs = padd(rhs, _pmul(r, P[z]))
            d = length(w) - length(x)
            low = tuple(-c for c in rhs[: (d - 1) // 2 + 1])
            while low and low[-1] == 0:
                low = low[:-1]
            # the remaining part of rhs must be q^d * bar(P)
            high = tuple(pcoeff(rhs, i) for i in range(d + 1))
            expect = [0] * (d + 1)
            for i, c in enumerate(low):
                expect[d - i] += c
            for i in range(d + 1):
                if i <= (d - 1) // 2:
                    continue
                if high[i] != expect[i]:
                    raise ArithmeticError("R-polynomial system is inconsistent")
            P[x] = low
        return P[y]


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


# ---------------------------------------------------------------------------
# persistence


def save_tables(path, n, tables):
    "write the union of the given tables as a kltab JSON-lines file"
    seen = set()
    with open(path, "w") as fh:
        fh.write(json.dumps({"format": "kltab", "version": FORMAT_VERSION, "n": n}) + "\n")
        for table in tables:
            for (y, w), p in sorted(table.memo.items()):
                if (y, w) in seen:
                    continue
                seen.add((y, w))
                fh.write(json.dumps({"n": n, "y": list(y), "w": list(w), "p": list(p)}) + "\n")
    return len(seen)


def read_table_file(path, n):
    "yield ((y, w), p) records after validating the header"
    with open(path) as fh:
        header = fh.readline()
        try:
            head = json.loads(header)
        except json.JSONDecodeError:
            raise CacheFormatError(f"{path}: missing kltab header") from None
        if head.get("format") != "kltab":
            raise CacheFormatError(f"{path}: not a kltab file")
        if head.get("version") != FORMAT_VERSION:
            raise CacheFormatError(f"{path}: unsupported version {head.get('version')}")
        if head.get("n") != n:
            raise CacheFormatError(f"{path}: cache is for rank {head.get('n')}, session has rank {n}")
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            if rec.get("n") != n:
                raise CacheFormatError(f"{path}: record of rank {rec.get('n')}")
            yield (tuple(rec["y"]), tuple(rec["w"])), tuple(rec["p"])


def load_into(path, generic, gamma0):
    count = 0
    for (y, w), p in read_table_file(path, generic.n):
        count += 1
        generic.table.memo.setdefault(_canonical(y, w), p)
        if is_gamma0(y) and is_gamma0(w):
            gamma0.table.memo.setdefault((y, w), p)
    return count


def as_qpoly(p):
    return QPoly(p)


# ---------------------------------------------------------------------------
# sessions and public wrappers


class Session:
    """
    Per-rank state: one generic engine, one Gamma_0 engine (separate memo
    tables so the two recursions stay independent cross-checks), a shared
    budget, and caches for Hecke products.
    """

    def __init__(self, n, max_nodes=None, max_seconds=None):
        self.n = n
        self.N = n + 1
        self.budget = Budget(max_nodes, max_seconds)
        self.kl = KLEngine(n, budget=self.budget)
        self.kl0 = Gamma0Engine(n, budget=self.budget)
        self.products = {}

    def stats(self):
        g = self.kl.table.stats()
        g0 = self.kl0.table.stats()
        return {
            "entry_count": g["entry_count"] + g0["entry_count"],
            "computed": g["computed"] + g0["computed"],
            "hits": g["hits"] + g0["hits"],
            "generic": g,
            "gamma0": g0,
        }

    def reset_counters(self):
        self.kl.table.reset_counters()
        self.kl0.table.reset_counters()

    def save_cache(self, path):
        return save_tables(path, self.n, [self.kl.table, self.kl0.table])

    def load_cache(self, path):
        return load_into(path, self.kl, self.kl0)


_sessions = {}


def get_session(n):
    s = _sessions.get(n)
    if s is None:
        s = _sessions[n] = Session(n)
    return s


def _session_for(elem, session):
    if session is None:
        return get_session(elem.n)
    if session.n != elem.n:
        raise ValueError(f"element of rank {elem.n} used with a rank {session.n} session")
    return session


def kl_poly(y, w, session=None):
    session = _session_for(w, session)
    if y.n != w.n:
        raise ValueError("rank mismatch")
    return QPoly(session.kl.p(y.window, w.window))


def kl_poly_gamma0(y, w, session=None):
    session = _session_for(w, session)
    if not (is_gamma0(y.window) and is_gamma0(w.window)):
        raise ValueError("kl_poly_gamma0 needs both arguments in Gamma_0")
    return QPoly(session.kl0.p(y.window, w.window))


def mu(y, w, session=None, gamma0=False):
    session = _session_for(w, session)
    eng = session.kl0 if gamma0 else session.kl
    return eng.mu(y.window, w.window)


def r_oracle_kl(y, w, max_gap=10):
    return QPoly(ROracle(w.n, max_gap).p(y.window, w.window))
