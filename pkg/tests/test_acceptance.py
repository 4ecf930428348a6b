"""
Acceptance criteria 1-8.  Each test records one PASS/FAIL line in
RESULTS; conftest prints them at the end of the pytest run, and running
this file as a script prints them directly.
"""

import itertools
import sys
import time

import pytest

from klaffine import (
    DominantWeight,
    ResourceLimitError,
    Session,
    char_oracle,
    kl_poly_gamma0,
    length_im,
    mu_c0_decomposed,
    tensor_decompose,
    tensor_mult,
    weyl_dim,
)
from klaffine import harness
from klaffine import special as sp
from klaffine.kl import ROracle
from klaffine.weyl import (
    ball_raw,
    compose,
    conj_omega,
    finite_group,
    inverse,
    is_gamma0,
    left_descents,
    length,
    lmul_s,
    longest_finite,
    right_descents,
    rmul_s,
    translation_window,
)

RESULTS = {}


def status_text(ok):
    return "SKIP" if ok is None else ("PASS" if ok else "FAIL")


def record(k, ok, detail):
    "ok is True, False, or None for skipped"
    RESULTS[k] = (ok, detail)
    print(f"criterion {k}: {status_text(ok)}  {detail}")
    return ok


def _failed_claims(report):
    return [c.desc for c in report.claims if not c.passed]


def _ball_sorted(N, L, comps=None):
    return sorted(ball_raw(N, L, comps), key=lambda w: (length(w), w))


# ---------------------------------------------------------------------------


def test_criterion_1_lemma_values():
    bad = []
    times = []
    for n in (4, 5):
        t = time.monotonic()
        r = harness.run("lemma34", n)
        times.append(f"n={n} {time.monotonic() - t:.1f}s")
        bad += [f"n={n}: {d}" for d in _failed_claims(r)]
    assert record(1, not bad, "; ".join(bad) or "lemma values n=4,5 (" + ", ".join(times) + ")")


def test_criterion_2_theorem_by_decomposition():
    bad = []
    got = {}
    for n in (4, 5, 6):
        s = Session(n)
        r = harness.run("thm33", n, s)
        bad += [f"n={n}: {d}" for d in _failed_claims(r)]
        x = sp.two_rho(n) * sp.w0(n)
        got[n] = mu_c0_decomposed(x, sp.v(n) * x, s)
        if got[n] != n + 2:
            bad.append(f"n={n}: mu = {got[n]}")
    assert record(2, not bad, "; ".join(bad) or f"mu by decomposition {got}")


def test_criterion_3_theorem_direct():
    n = 4
    s = Session(n, max_seconds=1800)
    x = sp.two_rho(n) * sp.w0(n)
    y = sp.v(n) * x
    t = time.monotonic()
    try:
        p = kl_poly_gamma0(x, y, s)
    except ResourceLimitError as exc:
        record(3, None, f"budget exceeded: {exc}")
        pytest.skip(f"direct computation exceeded its budget: {exc}")
    d = (y.length() - x.length() - 1) // 2
    ok = p.degree == d and p.leading() == n + 2
    assert record(3, ok, f"n=4 leading coefficient {p.coeff(d)} at q^{d} "
                         f"({time.monotonic() - t:.0f}s)")


def test_criterion_4_mu_adjoint():
    got = {}
    for n in (4, 5):
        s = Session(n)
        y = sp.x1xn(n) * sp.w0(n)
        w = sp.v(n) * sp.w0(n)
        got[n] = (s.kl.mu(y.window, w.window), s.kl0.mu(y.window, w.window))
    ok = all(v == (1, 1) for v in got.values())
    assert record(4, ok, f"mu(x1xn w0, vw0) generic/Gamma_0: {got}")


def test_criterion_5_tensor():
    bad = []
    for n in range(4, 9):
        adj = DominantWeight([1] + [0] * (n - 2) + [1])
        rho2 = DominantWeight([2] * n)
        m = tensor_mult(adj, rho2, rho2)
        if m != n:
            bad.append(f"m_(x1xn,2rho,2rho)={m} at n={n}")
    checked = 0
    for n in (1, 2, 3):
        ws = [DominantWeight(a) for a in itertools.product(range(5), repeat=n) if sum(a) <= 4]
        for x, y in itertools.product(ws, ws):
            d = tensor_decompose(x, y)
            checked += 1
            if sum(weyl_dim(z) * c for z, c in d.items()) != weyl_dim(x) * weyl_dim(y):
                bad.append(f"dimension {x} {y}")
            if d != char_oracle(x, y):
                bad.append(f"oracle {x} {y}")
    assert record(5, not bad, "; ".join(bad[:5]) or
                  f"m = n for n=4..8; {checked} pairs agree with char_oracle")


def test_criterion_6_oracle_equivalence():
    bad = 0
    pairs = 0
    for n, L in ((1, 10), (2, 8)):
        s = Session(n)
        orc = ROracle(n)
        el = _ball_sorted(n + 1, L)
        for w in el:
            for y in el:
                if length(y) > length(w):
                    break
                pairs += 1
                bad += s.kl.p(y, w) != orc.p(y, w)
    gpairs = 0
    for n in (1, 2, 3):
        s = Session(n)
        l0 = length(longest_finite(n + 1))
        g = [w for w in _ball_sorted(n + 1, l0 + 8) if is_gamma0(w)]
        for w in g:
            for y in g:
                if length(y) > length(w):
                    break
                gpairs += 1
                bad += s.kl.p(y, w) != s.kl0.p(y, w)
    assert record(6, bad == 0, f"{bad} mismatches over {pairs} oracle pairs "
                               f"and {gpairs} Gamma_0 pairs")


def test_criterion_7_bound():
    bad = []
    for n in (1, 2):
        r = harness.run("bound", n)
        bad += [f"n={n}: {d}" for d in _failed_claims(r)]
    detail = {c.desc: c.got for c in r.claims}
    assert record(7, not bad, "; ".join(bad) or f"n=2 (max mu, B) = "
                  f"{detail['max mu over c0 pairs with l <= l(w0)+10 is <= bound_B']}")


def _structural_violations():
    v = {}
    # group axioms and descent laws on small balls
    g = d = 0
    for n in (1, 2, 3):
        N = n + 1
        el = _ball_sorted(N, 4 if n < 3 else 3)
        for a, b in itertools.product(el, el):
            ab = compose(a, b)
            g += length(ab) > length(a) + length(b)
            g += compose(ab, inverse(b)) != a
        for a, b, c in itertools.product(el[:12], el[:12], el[::5]):
            g += compose(compose(a, b), c) != compose(a, compose(b, c))
        for w in _ball_sorted(N, 6 if n < 3 else 5):
            lw = length(w)
            R = set(right_descents(w))
            L = set(left_descents(w))
            for i in range(N):
                d += (length(rmul_s(w, i)) < lw) != (i in R)
                d += (length(lmul_s(w, i)) < lw) != (i in L)
            d += L != set(right_descents(inverse(w)))
    v["group axioms"] = g
    v["descent laws"] = d
    # length against the root-by-root formula
    m = 0
    for n in (1, 2, 3):
        for u in finite_group(n + 1):
            for x in itertools.product(range(-2, 3), repeat=n):
                m += length(compose(translation_window(x), u)) != length_im(x, u)
    v["length formula"] = m
    # KL laws
    deg = sym = om = 0
    for n, L in ((1, 8), (2, 6), (3, 5)):
        s = Session(n)
        el = _ball_sorted(n + 1, L)
        for w in el:
            for y in el:
                if length(y) >= length(w):
                    break
                p = s.kl.p(y, w)
                if not p:
                    continue
                deg += 2 * (len(p) - 1) > length(w) - length(y) - 1
                sym += s.kl.p(inverse(y), inverse(w)) != p
                for k in range(1, n + 1):
                    om += s.kl.p(conj_omega(y, k), conj_omega(w, k)) != p
    v["degree bounds"] = deg
    v["P_(y,w) = P_(y^-1,w^-1)"] = sym
    v["omega-conjugation"] = om
    # cell suites: d-set for n <= 3, E/F, h-transfer and mu-transfer for n = 2
    for n in (1, 2, 3):
        r = harness.run("cells", n)
        v[f"cells n={n}"] = len(_failed_claims(r))
    return v


def test_criterion_8_structural():
    t = time.monotonic()
    v = _structural_violations()
    bad = {k: c for k, c in v.items() if c}
    assert record(8, not bad, (f"violations {bad}" if bad else
                               f"{len(v)} suites, zero violations") +
                  f" ({time.monotonic() - t:.0f}s)")


if __name__ == "__main__":
    tests = [test_criterion_1_lemma_values, test_criterion_2_theorem_by_decomposition,
             test_criterion_3_theorem_direct, test_criterion_4_mu_adjoint,
             test_criterion_5_tensor, test_criterion_6_oracle_equivalence,
             test_criterion_7_bound, test_criterion_8_structural]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
        except pytest.skip.Exception:
            pass
    sys.exit(1 if failed else 0)
