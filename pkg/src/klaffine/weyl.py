"""
Extended affine Weyl group of type A_n in window notation.

An element is a bijection sigma of the integers with
sigma(i + N) = sigma(i) + N, N = n + 1, stored as the tuple
(sigma(1), ..., sigma(N)).  The central shift i -> i + N is factored
out, so windows are normalized to have sum(sigma(i) - i) = k*N with
0 <= k < N; k is the omega-component.

Most functions here work on raw window tuples since the KL engine calls
them in tight loops.  AffinePerm is the public wrapper.
"""

from functools import lru_cache
from itertools import permutations
import re

INT64_MAX = 2**63 - 1


class WordError(ValueError):
    pass


# ---------------------------------------------------------------------------
# raw window arithmetic


def normalize(w):
    N = len(w)
    k = (sum(w) - N * (N + 1) // 2) // N
    m = k // N
    if m:
        shift = m * N
        return tuple(x - shift for x in w)
    return tuple(w)


def component(w):
    N = len(w)
    return ((sum(w) - N * (N + 1) // 2) // N) % N


def evaluate(w, i):
    N = len(w)
    r = (i - 1) % N
    return w[r] + (i - 1 - r)


def compose(a, b):
    "window of i -> a(b(i))"
    N = len(a)
    out = []
    for x in b:
        r = (x - 1) % N
        out.append(a[r] + (x - 1 - r))
    return normalize(out)


def inverse(w):
    N = len(w)
    out = [0] * N
    for j, x in enumerate(w, 1):
        r = (x - 1) % N
        out[r] = j - (x - 1 - r)
    return normalize(out)


def length(w):
    N = len(w)
    total = 0
    for i in range(N):
        wi = w[i]
        for j in range(i + 1, N):
            d = (w[j] - wi) // N
            total += d if d >= 0 else -d
    return total


def right_descents(w):
    N = len(w)
    out = []
    if w[N - 1] - N > w[0]:
        out.append(0)
    for i in range(1, N):
        if w[i - 1] > w[i]:
            out.append(i)
    return out


def is_right_descent(w, i):
    if i == 0:
        return w[-1] - len(w) > w[0]
    return w[i - 1] > w[i]


def left_descents(w):
    return right_descents(inverse(w))


def is_left_descent(w, i):
    # s_i w < w iff w^{-1}(i) > w^{-1}(i+1)
    N = len(w)
    lo = hi = None
    for j, x in enumerate(w, 1):
        r = x % N
        if r == i % N:
            lo = j - (x - i)
        elif r == (i + 1) % N:
            hi = j - (x - i - 1)
    return lo > hi


def rmul_s(w, i):
    "w * s_i"
    N = len(w)
    out = list(w)
    if i == 0:
        out[0], out[N - 1] = w[N - 1] - N, w[0] + N
    else:
        out[i - 1], out[i] = w[i], w[i - 1]
    return tuple(out)


def lmul_s(w, i):
    "s_i * w"
    N = len(w)
    a = i % N
    b = (i + 1) % N
    out = []
    for x in w:
        r = x % N
        if r == a:
            out.append(x + 1)
        elif r == b:
            out.append(x - 1)
        else:
            out.append(x)
    return tuple(out)


def lmul_omega(w, k=1):
    "omega^k * w; omega is the unit shift i -> i + 1"
    return normalize(tuple(x + k for x in w))


def omega_window(N, k=1):
    return normalize(tuple(i + k for i in range(1, N + 1)))


def conj_omega(w, k=1):
    "omega^k w omega^-k"
    N = len(w)
    k %= N
    if k == 0:
        return tuple(w)
    # (omega w omega^-1)(i) = w(i-1) + 1
    out = [evaluate(w, i - k) + k for i in range(1, N + 1)]
    return normalize(out)


def identity(N):
    return tuple(range(1, N + 1))


def longest_finite(N):
    return tuple(range(N, 0, -1))


def simple(N, i):
    return rmul_s(identity(N), i)


def is_finite(w):
    "True when w lies in W_0, i.e. permutes {1..N}"
    return sorted(w) == list(range(1, len(w) + 1))


def is_translation(w):
    N = len(w)
    return all((x - i) % N == 0 for i, x in enumerate(w, 1))


def translation_window(coords):
    """
    Translation by the weight with fundamental coordinates coords.
    With lam_i = sum_{j >= i} a_j the window is sigma(i) = i - N*lam_i.
    """
    N = len(coords) + 1
    lam = [0] * N
    acc = 0
    for i in range(N - 2, -1, -1):
        acc += coords[i]
        lam[i] = acc
    return normalize(tuple(i + 1 - N * lam[i] for i in range(N)))


def translation_weight(w):
    "inverse of translation_window; None if w is not a translation"
    N = len(w)
    if not is_translation(w):
        return None
    lam = [(i - x) // N for i, x in enumerate(w, 1)]
    return tuple(lam[i] - lam[i + 1] for i in range(N - 1))


def finite_part(w):
    """
    The permutation u in W_0 with w = u * t for a translation t
    (residues of the window).
    """
    N = len(w)
    return tuple((x - 1) % N + 1 for x in w)


def reduced_word_raw(w):
    """
    (k, word) with w = omega^k s_{word[0]} ... s_{word[-1]}, extracted by
    repeatedly stripping the smallest-index left descent.
    """
    N = len(w)
    k = component(w)
    rest = lmul_omega(w, -k) if k else tuple(w)
    word = []
    while True:
        ld = left_descents(rest)
        if not ld:
            break
        i = ld[0]
        word.append(i)
        rest = lmul_s(rest, i)
    assert rest == identity(N)
    return k, word


@lru_cache(maxsize=1 << 20)
def bruhat_leq_raw(y, w):
    """
    Bruhat order by descent lifting.  Elements in different
    omega-components are incomparable.
    """
    ly = length(y)
    lw = length(w)
    if ly > lw:
        return False
    if ly == lw:
        return y == w
    if component(y) != component(w):
        return False
    if lw == 0:
        return y == w
    s = left_descents(w)[0]
    sw = lmul_s(w, s)
    if is_left_descent(y, s):
        return bruhat_leq_raw(lmul_s(y, s), sw)
    return bruhat_leq_raw(y, sw)


def finite_group(N):
    "all elements of W_0 as windows, identity first, sorted by length"
    elems = [tuple(p) for p in permutations(range(1, N + 1))]
    elems.sort(key=lambda p: (length(p), p))
    return elems


# ---------------------------------------------------------------------------
# public types


class RootDatum:
    """
    Root datum of type A_n: simple roots alpha_1..alpha_n, affine index
    set {0..n}, period N = n + 1.
    """

    def __init__(self, n):
        if int(n) != n or n < 1:
            raise ValueError(f"rank must be a positive integer, got {n}")
        self.n = int(n)
        self.N = self.n + 1

    @property
    def simple_indices(self):
        return tuple(range(1, self.N))

    @property
    def affine_indices(self):
        return tuple(range(self.N))

    def positive_roots(self):
        "pairs (i, j), 1 <= i < j <= N, standing for e_i - e_j"
        return [(i, j) for i in range(1, self.N) for j in range(i + 1, self.N + 1)]

    def fundamental(self, i):
        return Weight([1 if j == i else 0 for j in range(1, self.N)])

    def rho(self):
        return Weight([1] * self.n)

    def identity(self):
        return AffinePerm(identity(self.N))

    def w0(self):
        return AffinePerm(longest_finite(self.N))

    def omega(self, k=1):
        return AffinePerm(omega_window(self.N, k))

    def s(self, i):
        if not 0 <= i <= self.n:
            raise WordError(f"generator index {i} out of range 0..{self.n}")
        return AffinePerm(simple(self.N, i))

    def __eq__(self, other):
        return isinstance(other, RootDatum) and other.n == self.n

    def __hash__(self):
        return hash(("RootDatum", self.n))

    def __repr__(self):
        return f"RootDatum(n={self.n})"


class Weight:
    """Integral weight in the fundamental-weight basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(int(a) for a in coords)
        if not self.coords:
            raise ValueError("weight needs at least one coordinate")

    @property
    def n(self):
        return len(self.coords)

    def __add__(self, other):
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Weight(-a for a in self.coords)

    def __mul__(self, k):
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Weight) and other.coords == self.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "[" + ",".join(str(a) for a in self.coords) + "]"

    def dual(self):
        "x* = -w0(x): reverses the coordinates in type A"
        return Weight(reversed(self.coords))

    def pairing(self, i):
        "<x, alpha_i^vee>"
        return self.coords[i - 1]

    def is_dominant(self):
        return all(a >= 0 for a in self.coords)

    def epsilon(self):
        "coordinates (lam_1..lam_N) in the e_i basis with lam_N = 0"
        lam = []
        acc = 0
        for a in reversed(self.coords):
            acc += a
            lam.append(acc)
        return tuple(reversed(lam)) + (0,)

    def root_pairing(self, i, j):
        "<x, (e_i - e_j)^vee> for 1 <= i < j <= N"
        return sum(self.coords[i - 1:j - 1])


class AffinePerm:
    """
    Element of the extended affine Weyl group of type A_n, immutable.
    Multiplication is composition: (a * b)(i) = a(b(i)).
    """

    __slots__ = ("window", "_hash")

    def __init__(self, window):
        w = tuple(int(x) for x in window)
        N = len(w)
        if N < 2:
            raise ValueError("window must have length n + 1 >= 2")
        if sorted(x % N for x in w) != list(range(N)):
            raise ValueError(f"window {list(w)} is not a bijection mod {N}")
        w = normalize(w)
        if any(abs(x) > INT64_MAX for x in w):
            raise OverflowError("window entry exceeds 64-bit range")
        self.window = w
        self._hash = hash(w)

    @classmethod
    def _raw(cls, w):
        obj = object.__new__(cls)
        obj.window = w
        obj._hash = hash(w)
        return obj

    @property
    def N(self):
        return len(self.window)

    @property
    def n(self):
        return len(self.window) - 1

    @property
    def k(self):
        return component(self.window)

    def __eq__(self, other):
        return isinstance(other, AffinePerm) and other.window == self.window

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.window < other.window

    def __repr__(self):
        return "[" + ",".join(str(x) for x in self.window) + "]"

    def __mul__(self, other):
        if not isinstance(other, AffinePerm):
            return NotImplemented
        if other.N != self.N:
            raise ValueError("rank mismatch")
        return AffinePerm._raw(compose(self.window, other.window))

    def __call__(self, i):
        return evaluate(self.window, i)

    def inverse(self):
        return AffinePerm._raw(inverse(self.window))

    def length(self):
        return length(self.window)

    def descents(self, side="right"):
        if side == "right":
            return frozenset(right_descents(self.window))
        if side == "left":
            return frozenset(left_descents(self.window))
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def is_identity(self):
        return self.window == identity(self.N)

    def is_finite(self):
        return is_finite(self.window)

    def lmul(self, i):
        return AffinePerm._raw(lmul_s(self.window, i))

    def rmul(self, i):
        return AffinePerm._raw(rmul_s(self.window, i))


def multiply(*elems):
    if not elems:
        raise ValueError("multiply needs at least one element")
    out = elems[0]
    for e in elems[1:]:
        out = out * e
    return out


def translation(x):
    if not isinstance(x, Weight):
        x = Weight(x)
    return AffinePerm._raw(translation_window(x.coords))


def omega_conjugate(w, k):
    return AffinePerm._raw(conj_omega(w.window, k))


def reduced_word(w):
    return reduced_word_raw(w.window)


def bruhat_leq(y, w):
    if y.N != w.N:
        raise ValueError("rank mismatch")
    return bruhat_leq_raw(y.window, w.window)


def length_im(x, w):
    """
    Length of t_x * w for w in W_0, evaluated root by root:
    sum over positive roots a of |<x,a^vee> + 1| if w(a) < 0, else |<x,a^vee>|.
    With the translation sign used here, "w(a) < 0" for a = e_i - e_j
    means i, j are inverted by w^-1, i.e. i and j appear out of order in
    the window of w.
    """
    if not isinstance(x, Weight):
        x = Weight(x)
    win = w.window if isinstance(w, AffinePerm) else tuple(w)
    if not is_finite(win):
        raise ValueError("length_im needs a finite Weyl group element")
    N = len(win)
    if x.n != N - 1:
        raise ValueError("rank mismatch")
    pos = [0] * N
    for i, a in enumerate(win):
        pos[a - 1] = i
    total = 0
    for i in range(1, N):
        for j in range(i + 1, N + 1):
            p = x.root_pairing(i, j)
            if pos[i - 1] > pos[j - 1]:
                total += abs(p + 1)
            else:
                total += abs(p)
    return total


# ---------------------------------------------------------------------------
# word syntax

_TRANS = re.compile(r"^t\[(-?\d+(?:,-?\d+)*)\]$")


def parse_token(tok, n):
    N = n + 1
    if tok == "w":
        return omega_window(N, 1)
    if tok == "w^-1":
        return omega_window(N, -1)
    if tok == "w0":
        return longest_finite(N)
    if tok.isdigit():
        i = int(tok)
        if i > n:
            raise WordError(f"generator index {i} out of range 0..{n}")
        return simple(N, i)
    if tok.startswith("x") and tok[1:].isdigit():
        i = int(tok[1:])
        if not 1 <= i <= n:
            raise WordError(f"fundamental weight x{i} out of range 1..{n}")
        return translation_window([1 if j == i else 0 for j in range(1, N)])
    m = _TRANS.match(tok)
    if m:
        coords = [int(a) for a in m.group(1).split(",")]
        if len(coords) != n:
            raise WordError(f"t[...] needs {n} coordinates, got {len(coords)}")
        return translation_window(coords)
    raise WordError(f"malformed token {tok!r}")


def from_word(expr, n):
    """
    Evaluate a word left to right.  expr is either whitespace-separated
    text or a sequence of tokens; integer tokens stand for s_i.
    """
    if isinstance(expr, str):
        tokens = expr.split()
    else:
        tokens = [str(t) for t in expr]
    N = n + 1
    w = identity(N)
    for tok in tokens:
        w = compose(w, parse_token(tok, n))
    return AffinePerm._raw(w)


def from_indices(indices, n, omega=0):
    "omega^omega * s_{i1} ... s_{im}"
    w = omega_window(n + 1, omega)
    for i in indices:
        i %= n + 1
        w = rmul_s(w, i)
    return AffinePerm._raw(w)


def parse_window(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise WordError(f"window must look like [a,b,...], got {text!r}")
    try:
        vals = [int(a) for a in text[1:-1].split(",")]
    except ValueError:
        raise WordError(f"bad window {text!r}") from None
    try:
        return AffinePerm(vals)
    except ValueError as exc:
        raise WordError(str(exc)) from None


def parse_element(text, n):
    "either a bracketed window or a word"
    text = text.strip()
    if text.startswith("[") and "," in text and not text.startswith("t["):
        w = parse_window(text)
        if w.n != n:
            raise WordError(f"window has rank {w.n}, expected {n}")
        return w
    return from_word(text, n)


# ---------------------------------------------------------------------------
# Bruhat intervals
#
# Both enumerations use the lifting property with s a left descent of the
# upper end b:  z <= b  iff  min(z, sz) <= sb.


def is_gamma0(w):
    "all finite simple reflections are right descents (window strictly decreasing)"
    for i in range(len(w) - 1):
        if w[i] <= w[i + 1]:
            return False
    return True


@lru_cache(maxsize=1 << 16)
def interval_raw(a, b):
    "the Bruhat interval [a, b] as a frozenset of windows"
    if not bruhat_leq_raw(a, b):
        return frozenset()
    if a == b:
        return frozenset((a,))
    s = left_descents(b)[0]
    sb = lmul_s(b, s)
    if is_left_descent(a, s):
        lower = interval_raw(lmul_s(a, s), sb)
        out = {lmul_s(z, s) for z in lower if not is_left_descent(z, s)}
        out.update(interval_raw(a, sb))
    else:
        lower = interval_raw(a, sb)
        out = set(lower)
        out.update(lmul_s(z, s) for z in lower if not is_left_descent(z, s))
    return frozenset(out)


def gamma0_descent(w):
    "smallest s with sw < w and sw still in Gamma_0, or None"
    for s in range(len(w)):
        if is_left_descent(w, s):
            sw = lmul_s(w, s)
            if is_gamma0(sw):
                return s
    return None


@lru_cache(maxsize=1 << 16)
def gamma0_interval_raw(a, b):
    """
    [a, b] intersected with Gamma_0, for a, b in Gamma_0.  Runs the
    lifting recursion inside the minimal coset representatives u = z*w0,
    so only Gamma_0 elements are ever generated.
    """
    if not bruhat_leq_raw(a, b):
        return frozenset()
    if a == b:
        return frozenset((a,))
    s = gamma0_descent(b)
    sb = lmul_s(b, s)
    sa = lmul_s(a, s)
    if is_left_descent(a, s) and is_gamma0(sa):
        lower = gamma0_interval_raw(sa, sb)
        out = {lmul_s(z, s) for z in lower if not is_left_descent(z, s)}
        out.update(gamma0_interval_raw(a, sb))
    else:
        lower = gamma0_interval_raw(a, sb)
        out = set(lower)
        out.update(lmul_s(z, s) for z in lower if not is_left_descent(z, s))
    return frozenset(out)


def lower_interval_raw(w):
    "all y <= w (same omega-component)"
    N = len(w)
    return interval_raw(omega_window(N, component(w)), w)


def gamma0_minimum(N, k=0):
    "omega^k w0, the smallest Gamma_0 element of component k"
    return lmul_omega(longest_finite(N), k)


def ball_raw(N, max_length, components=None):
    "all elements of length <= max_length in the given omega-components"
    out = set()
    for k in range(N) if components is None else components:
        frontier = [omega_window(N, k)]
        seen = set(frontier)
        for _ in range(max_length):
            nxt = []
            for w in frontier:
                lw = length(w)
                for i in range(N):
                    x = rmul_s(w, i)
                    if x not in seen and length(x) == lw + 1:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        out |= seen
    return out


def interval(a, b):
    return sorted((AffinePerm._raw(z) for z in interval_raw(a.window, b.window)),
                  key=lambda z: (z.length(), z.window))


def clear_caches():
    bruhat_leq_raw.cache_clear()
    interval_raw.cache_clear()
    gamma0_interval_raw.cache_clear()
