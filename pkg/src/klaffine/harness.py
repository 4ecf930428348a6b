"""
Verification scenarios.  Each scenario returns a VerificationReport: an
ordered list of claims (description, expected, computed, pass).  The
JSON form is the report; the text table is rendered from it.
"""

import itertools
import json
import random
import time
from dataclasses import dataclass, field

from . import special as sp
from .cells import (
    _factor_raw,
    assemble,
    bound_B,
    c0_factorize,
    d_of,
    d_set_characterization,
    delta_support,
    dist_involutions,
    e_elem,
    f_elem,
    mu_c0_decomposed,
)
from .hecke import c_basis, delta_gamma, product, t_mul
from .kl import Session
from .laurent import QPoly, padd, pshift, psub_scaled
from .tensor import (
    DominantWeight,
    char_oracle,
    tensor_decompose,
    tensor_mult,
    weight_multiplicity,
    weights_of,
    weyl_dim,
)
from .weyl import (
    AffinePerm,
    RootDatum,
    Weight,
    ball_raw,
    finite_group,
    gamma0_interval_raw,
    is_left_descent,
    left_descents,
    length,
    longest_finite,
    right_descents,
    rmul_s,
    translation,
)

REPORT_VERSION = 1
SCENARIOS = ("lemma34", "thm33", "bound", "tensor", "cells")


class ScenarioError(ValueError):
    pass


def _jsonable(x):
    if isinstance(x, QPoly):
        return str(x)
    if isinstance(x, (AffinePerm, Weight)):
        return repr(x)
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(a) for a in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(a) for a in x]
    return x


@dataclass
class Claim:
    desc: str
    expected: object
    got: object
    passed: bool

    def to_json(self):
        return {"desc": self.desc, "expected": _jsonable(self.expected),
                "got": _jsonable(self.got), "pass": bool(self.passed)}


@dataclass
class VerificationReport:
    scenario: str
    n: int
    claims: list = field(default_factory=list)
    elapsed_ms: object = None
    cache: dict = field(default_factory=dict)

    def check(self, desc, expected, got):
        self.claims.append(Claim(desc, expected, got, expected == got))

    def require(self, desc, ok, got=None):
        "boolean claim; got defaults to ok"
        self.claims.append(Claim(desc, True, ok if got is None else got, bool(ok)))

    @property
    def passed(self):
        return all(c.passed for c in self.claims)

    def to_json(self):
        return {
            "version": REPORT_VERSION,
            "scenario": self.scenario,
            "n": self.n,
            "pass": self.passed,
            "claims": [c.to_json() for c in self.claims],
            "elapsed_ms": self.elapsed_ms,
            "cache": self.cache,
        }


def render_json(data):
    return json.dumps(data, indent=2, sort_keys=False)


def render_table(data):
    "plain-text rendering of a report's JSON form"
    lines = [f"scenario {data['scenario']}  n={data['n']}"]
    rows = [("PASS" if c["pass"] else "FAIL", c["desc"], json.dumps(c["expected"]),
             json.dumps(c["got"])) for c in data["claims"]]
    w = max((len(r[1]) for r in rows), default=0)
    for status, desc, exp, got in rows:
        lines.append(f"  {status}  {desc.ljust(w)}  expected {exp}  got {got}")
    verdict = "PASS" if data["pass"] else "FAIL"
    tail = f"{verdict}: {sum(c['pass'] for c in data['claims'])}/{len(data['claims'])} claims"
    if data.get("elapsed_ms") is not None:
        tail += f" in {data['elapsed_ms']} ms"
    lines.append(tail)
    return "\n".join(lines)


# ---------------------------------------------------------------------------


def _lead(p, deg):
    return p[deg] if 0 <= deg < len(p) else 0


def lemma34(n, session, report):
    if n < 4:
        raise ScenarioError("lemma34 needs n >= 4")
    g = session.kl0
    W0 = sp.w0(n)
    s0w0 = sp.s0w0(n)
    u2 = sp.u2(n)
    V = sp.v(n) * W0
    V1 = sp.v1(n) * W0
    V2 = sp.v2(n) * W0

    def P(a, b):
        return QPoly(g.p(a.window, b.window))

    report.check("P(s0w0, z1)", QPoly((1, 1)), P(s0w0, sp.z(n, 1)))
    report.check("P(s1s0w0, z1)", QPoly((1, 1)), P(sp.s1s0w0(n), sp.z(n, 1)))
    report.check("P(s0w0, z2)", QPoly((1, 2, 1)), P(s0w0, sp.z(n, 2)))
    report.check("P(u2, z2)", QPoly((1,)), P(u2, sp.z(n, 2)))
    for i in range(3, n):
        report.check(f"P(u2, z{i})", QPoly((1, 1)), P(u2, sp.z(n, i)))

    for i in range(2, n):
        p = g.p(s0w0.window, sp.z(n, i).window)
        if n > i + 1:
            report.check(f"top of P(s0w0, z{i}) is q^{i}+2q^{i - 1}",
                         [1, 2], [len(p) - 1 == i and _lead(p, i), _lead(p, i - 1)])
        else:
            report.check(f"top of P(s0w0, z{i}) is 2q^{i - 1}",
                         [i - 1, 2], [len(p) - 1, _lead(p, i - 1)])

    # recursion (5); a mu term with a half-integral exponent must vanish
    for i in range(3, n):
        prev = g.p(s0w0.window, sp.z(n, i - 1).window)
        rhs = padd(prev, pshift(prev, 1))
        rhs = psub_scaled(rhs, g.p(s0w0.window, sp.z(n, i - 2).window), 1, 1)
        ok = True
        for m, twice in ((g.mu(s0w0.window, sp.z(n, i - 1).window), n + i - 1),
                         (g.mu(u2.window, sp.z(n, i - 1).window), i)):
            if m and twice % 2:
                ok = False
            elif m:
                rhs = psub_scaled(rhs, (1,), m, twice // 2)
        report.check(f"recursion for P(s0w0, z{i})", str(QPoly(rhs)) if ok else "integral",
                     str(P(s0w0, sp.z(n, i))))

    report.require("z_{n-1} = v2 w0", sp.z(n, n - 1) == V2)

    # (1) and (2): every correction term sits below the degree bound
    lv, l1 = V.length(), V1.length()
    for label, top, s, ltop, bound in (("(1)", V1, 1, lv, n), ("(2)", V2, n, l1, n - 1)):
        worst = -1
        for z in gamma0_interval_raw(W0.window, top.window):
            if z == top.window or not is_left_descent(z, s):
                continue
            if g.mu(z, top.window):
                worst = max(worst, (ltop - length(z)) // 2 + len(g.p(W0.window, z)) - 1)
        report.require(f"claim {label}: correction degrees < {bound}", worst < bound, worst)

    report.check("P(w0, v2w0) = P(s0w0, v2w0)", str(P(s0w0, V2)), str(P(W0, V2)))
    p = g.p(W0.window, V.window)
    report.check("mu(w0, vw0)", 2, _lead(p, n))
    a = W0.length()
    report.check("delta_{w0, vw0, w0}", (0, 2), delta_gamma(W0, V, W0, a, session))
    report.check("generic engine agrees on P(w0, vw0)", str(QPoly(p)),
                 str(QPoly(session.kl.p(W0.window, V.window))))


def thm33(n, session, report, direct=False):
    if n < 4:
        raise ScenarioError("thm33 needs n >= 4")
    W0 = sp.w0(n)
    v = sp.v(n)
    V = v * W0
    a = W0.length()
    y = sp.x1xn(n) * W0
    report.check("l(v)", 2 * n + 1, v.length())
    report.check("l(vw0) - l(w0)", v.length(), V.length() - a)
    w = sp.theorem_w(n)
    report.check("R(w)", sorted({1, 2, n - 1, n}), sorted(w.descents("right")))
    report.require("w x1 x2 x_{n-1} xn = s0 v = d_w",
                   w * translation([1, 1] + [0] * (n - 4) + [1, 1]) == from_s0(n) * v
                   and d_of(w) == from_s0(n) * v)
    report.require("x1xn w0 <= vw0 with gap 1",
                   session.kl0.p(y.window, V.window) != () and V.length() - y.length() == 1)
    report.check("mu(x1xn w0, vw0)", 1, session.kl0.mu(y.window, V.window))
    report.check("delta_{w0, vw0, w0}", (0, 2), delta_gamma(W0, V, W0, a, session))
    report.check("delta_{w0, vw0, x1xn w0}", (0, 1), delta_gamma(W0, V, y, a, session))
    support = delta_support(tuple(range(1, n + 2)), _factor_raw(V.window)[0], session)
    report.check("dominant z1 with delta_{w0, vw0, z1 w0} != 0",
                 sorted([[0] * n, [1] + [0] * (n - 2) + [1]]),
                 sorted(list(z.coords) for z in support))
    rho2 = DominantWeight([2] * n)
    adj = DominantWeight([1] + [0] * (n - 2) + [1])
    report.check("m_{x1xn, 2rho, 2rho}", n, tensor_mult(adj, rho2, rho2))
    X = sp.two_rho(n) * W0
    report.check("mu(2rho w0, v 2rho w0) by decomposition", n + 2,
                 mu_c0_decomposed(X, v * X, session))
    if direct:
        p = session.kl0.p(X.window, (v * X).window)
        d = (V.length() - a - 1) // 2
        report.check("mu(2rho w0, v 2rho w0) from P directly", n + 2, _lead(p, d))


def from_s0(n):
    return AffinePerm(rmul_s(tuple(range(1, n + 2)), 0))


def _c0_ball(N, extra):
    "all c_0 elements with l <= l(w0) + extra"
    l0 = length(longest_finite(N))
    return sorted((z for z in ball_raw(N, l0 + extra) if _factor_raw(z)), key=lambda z: (length(z), z))


def bound(n, session, report, extra=10):
    if n > 2:
        raise ScenarioError("bound needs n <= 2")
    B = bound_B(RootDatum(n), session)
    report.require("bound_B >= 1", B >= 1, B)
    E = _c0_ball(n + 1, extra)
    worst = 0
    for w in E:
        for y in E:
            if length(y) < length(w):
                worst = max(worst, session.kl.mu(y, w))
    report.require(f"max mu over c0 pairs with l <= l(w0)+{extra} is <= bound_B",
                   worst <= B, [worst, B])
    if n == 1:
        report.check("max mu on c0 for n = 1", 1, worst)


def _dominant_upto(n, total):
    for t in range(total + 1):
        for c in itertools.product(range(t + 1), repeat=n):
            if sum(c) == t:
                yield DominantWeight(c)


def _adjoint(n):
    return DominantWeight([2]) if n == 1 else DominantWeight([1] + [0] * (n - 2) + [1])


def tensor(n, session, report):
    adj = _adjoint(n)
    report.check("weyl_dim(adjoint)", (n + 1) ** 2 - 1, weyl_dim(adj))
    report.check("dim V(x1xn)_0", n, weight_multiplicity(adj, [0] * n))
    if n >= 2:
        rho2 = DominantWeight([2] * n)
        report.check("m_{x1xn, 2rho, 2rho}", n, tensor_mult(adj, rho2, rho2))
        if n <= 5:
            bad = 0
            for lam, m in weights_of(adj).items():
                z = Weight(a + b for a, b in zip(rho2.coords, lam.coords))
                if tensor_mult(adj, rho2, DominantWeight(z.coords)) != m:
                    bad += 1
            report.check("m_{x1xn, x, x+lam} = dim V(x1xn)_lam", 0, bad)
    if n <= 3:
        W = list(_dominant_upto(n, 4))
        cons = orac = sym = 0
        for x, y in itertools.product(W, W):
            d = tensor_decompose(x, y)
            if sum(m * weyl_dim(z) for z, m in d.items()) != weyl_dim(x) * weyl_dim(y):
                cons += 1
            if d != char_oracle(x, y):
                orac += 1
            if d != tensor_decompose(y, x):
                sym += 1
        report.check("dimension conservation violations", 0, cons)
        report.check("char_oracle disagreements", 0, orac)
        report.check("symmetry violations", 0, sym)
    rng = random.Random(n)
    W = list(_dominant_upto(n, 3))
    dual_bad = 0
    for _ in range(40):
        x, y, z = (rng.choice(W) for _ in range(3))
        if tensor_mult(x, y, z) != tensor_mult(z.dual(), y, x.dual()):
            dual_bad += 1
    report.check("duality violations (sampled)", 0, dual_bad)
    if n <= 4:
        bad = sum(1 for x in _dominant_upto(n, 4)
                  if sum(weights_of(x).values()) != weyl_dim(x))
        report.check("sum of weight multiplicities != weyl_dim", 0, bad)


def cells(n, session, report):
    N = n + 1
    datum = RootDatum(n)
    W0 = [AffinePerm(p) for p in finite_group(N)]
    w0 = AffinePerm(longest_finite(N))
    if n <= 3:
        bad = 0
        for u, w in itertools.product(W0, W0):
            for x in _dominant_upto(n, 4 if n <= 2 else 2):
                f = c0_factorize(assemble(u, x, w)).factorization
                if f is None or (f.u, f.x, f.w) != (u, x, w):
                    bad += 1
        report.check("factorization round-trip failures", 0, bad)
    D = dist_involutions(datum)
    report.check("number of distinguished involutions", len(W0), len(D))
    report.require("distinguished involutions are involutions",
                   all((m * m).is_identity() for m in D))
    report.require("each d_u w0 d_u^-1 factors as (u, 0, u)",
                   all(_dinv_ok(u, w0) for u in W0))
    if n <= 3:
        dset = {d_of(u) for u in W0}
        report.require("d-set characterization (all s in W_0 - {e})",
                       d_set_characterization(datum) == dset)
        report.require("d-set characterization (simple s only)",
                       d_set_characterization(datum, simple_only=True) == dset)
        bad = 0
        tot = 3 if n <= 2 else 1
        elems = [(u, x, w, assemble(u, x, w)) for u, w in itertools.product(W0, W0)
                 for x in _dominant_upto(n, tot)]
        for (u1, _, w1, a), (u2, _, w2, b) in itertools.combinations(elems, 2):
            if w1 == w2 and right_descents(a.window) != right_descents(b.window):
                bad += 1
            if u1 == u2 and left_descents(a.window) != left_descents(b.window):
                bad += 1
        report.check("descent-set cell law violations", 0, bad)
    if n == 2:
        bad = 0
        cw0 = c_basis(w0, session)
        for w, u in itertools.product(W0, W0):
            lhs = t_mul(e_elem(w, session), t_mul(cw0, f_elem(u, session)))
            if lhs != c_basis(d_of(w) * w0 * d_of(u).inverse(), session):
                bad += 1
        report.check("E_{d_w} C_w0 F_{d_u} != C_{d_w w0 d_u^-1}", 0, bad)
        report.check("h-transfer violations", 0, h_transfer_violations(session))
        report.check("mu-transfer violations", 0, mu_transfer_violations(session))


def _dinv_ok(u, w0):
    d = d_of(u)
    f = c0_factorize(d * w0 * d.inverse()).factorization
    return f is not None and f.u == u and f.w == u and not any(f.x.coords)


def h_transfer_violations(session, max_weight=1):
    """
    h_{d_u w0 y^-1 d_w^-1, d_w' z w0 d_u^-1, d_u x w0 d_u^-1}
      = h_{w0 y^-1 d_w^-1, d_w' z w0, x w0}
    over all u, w, w' in W_0 and y, z of weight at most max_weight.
    """
    n = session.n
    N = n + 1
    W0 = [AffinePerm(p) for p in finite_group(N)]
    w0 = AffinePerm(longest_finite(N))
    weights = list(_dominant_upto(n, max_weight))
    bad = 0
    for u, w, w2 in itertools.product(W0, W0, W0):
        du, dw, dw2 = d_of(u), d_of(w), d_of(w2)
        for y, z in itertools.product(weights, weights):
            ty_inv = translation(y).inverse()
            left = w0 * ty_inv * dw.inverse()
            right = dw2 * translation(z) * w0
            base = product(left, right, session)
            dressed = product(du * left, right * du.inverse(), session)
            for x, h in base.items():
                if h != dressed.get(du * x * du.inverse()):
                    bad += 1
            if len(base) != len(dressed):
                bad += 1
    return bad


def mu_transfer_violations(session, max_weight=1):
    "mu(d_w y w0 d_u^-1, d_w' z w0 d_u^-1) = mu(d_w y w0, d_w' z w0)"
    n = session.n
    N = n + 1
    W0 = [AffinePerm(p) for p in finite_group(N)]
    weights = list(_dominant_upto(n, max_weight))
    bad = 0
    e = AffinePerm(tuple(range(1, N + 1)))
    for u, w, w2 in itertools.product(W0, W0, W0):
        for y, z in itertools.product(weights, weights):
            a, b = assemble(w, y, u), assemble(w2, z, u)
            a0, b0 = assemble(w, y, e), assemble(w2, z, e)
            if session.kl.mu(a.window, b.window) != session.kl.mu(a0.window, b0.window):
                bad += 1
    return bad


# ---------------------------------------------------------------------------


def run(scenario, n, session=None, direct=False, timing=True):
    if scenario not in SCENARIOS:
        raise ScenarioError(f"unknown scenario {scenario!r}; choose from {', '.join(SCENARIOS)}")
    session = session or Session(n)
    report = VerificationReport(scenario, n)
    t = time.monotonic()
    if scenario == "lemma34":
        lemma34(n, session, report)
    elif scenario == "thm33":
        thm33(n, session, report, direct=direct)
    elif scenario == "bound":
        bound(n, session, report)
    elif scenario == "tensor":
        tensor(n, session, report)
    else:
        cells(n, session, report)
    if timing:
        report.elapsed_ms = int((time.monotonic() - t) * 1000)
    st = session.stats()
    report.cache = {"entry_count": st["entry_count"], "computed": st["computed"],
                    "hits": st["hits"]}
    return report
