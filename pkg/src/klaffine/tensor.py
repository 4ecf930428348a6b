"""
Characteristic-zero representation combinatorics of SL_{n+1}.

Dominant weights are given in fundamental coordinates (a_1..a_n) and
turned into partitions lam_i = a_i + ... + a_n.  Tensor multiplicities
are Littlewood-Richardson coefficients; partitions that differ by full
columns of height n + 1 describe the same SL module.

char_oracle shares none of that: it expands Schur polynomials from
semistandard tableaux, multiplies them, and strips highest weights.
"""

from functools import lru_cache
from math import prod

from .weyl import Weight


class DominantWeight(Weight):
    """Weight with all fundamental coordinates nonnegative."""

    __slots__ = ()

    def __init__(self, coords):
        super().__init__(coords)
        if any(a < 0 for a in self.coords):
            raise ValueError(f"weight {list(self.coords)} is not dominant")


def _dominant(x):
    return x if isinstance(x, DominantWeight) else DominantWeight(x)


class Partition(tuple):
    """Weakly decreasing nonnegative parts, trailing zeros dropped."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be nonnegative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        return self[i] if i < len(self) else 0

    @classmethod
    def from_weight(cls, x):
        lam = []
        acc = 0
        for a in reversed(tuple(x)):
            acc += a
            lam.append(acc)
        return cls(reversed(lam))

    def to_weight(self, n):
        "fundamental coordinates; a full column of height n+1 is dropped"
        if len(self) > n + 1:
            raise ValueError(f"partition {tuple(self)} has more than {n + 1} rows")
        return DominantWeight(self.part(i) - self.part(i + 1) for i in range(n))


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


@lru_cache(maxsize=1 << 16)
def lr_coefficient(lam, mu, nu):
    """
    c^nu_{lam,mu}: LR tableaux of shape nu/lam and content mu.  Cells are
    filled in reading order (rows top to bottom, each row right to left),
    keeping rows weakly increasing, columns strictly increasing, and the
    reading word a lattice word.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size:
        return 0
    if len(lam) > len(nu) or any(lam[i] > nu[i] for i in range(len(lam))):
        return 0
    cells = [(r, c) for r in range(len(nu))
             for c in range(nu[r] - 1, lam.part(r) - 1, -1)]
    if not cells:
        return 1 if not mu else 0
    k = len(mu)
    filling = {}
    counts = [0] * (k + 1)

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = k
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for e in range(lo, hi + 1):
            if counts[e] >= mu[e - 1]:
                continue
            if e > 1 and counts[e] + 1 > counts[e - 1]:
                continue
            counts[e] += 1
            filling[(r, c)] = e
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[e] -= 1
        return total

    return rec(0)


def tensor_mult(x, y, z):
    """
    Multiplicity of V(z) in V(x) (x) V(y).  z lifts to the partition
    part(z) + k (1^(n+1)) with k fixed by the total size.
    """
    x, y, z = _dominant(x), _dominant(y), _dominant(z)
    if not x.n == y.n == z.n:
        raise ValueError("rank mismatch")
    N = x.n + 1
    lam = Partition.from_weight(x)
    mu = Partition.from_weight(y)
    base = Partition.from_weight(z)
    extra = lam.size + mu.size - base.size
    if extra < 0 or extra % N:
        return 0
    k = extra // N
    nu = Partition(base.part(i) + k for i in range(N))
    return lr_coefficient(lam, mu, nu)


def tensor_decompose(x, y):
    """{z: m_{x,y,z}} over all z with nonzero multiplicity"""
    x, y = _dominant(x), _dominant(y)
    if x.n != y.n:
        raise ValueError("rank mismatch")
    N = x.n + 1
    lam = Partition.from_weight(x)
    mu = Partition.from_weight(y)
    out = {}
    for nu in _partitions(lam.size + mu.size, N, lam, mu):
        c = lr_coefficient(lam, mu, nu)
        if c:
            z = nu.to_weight(x.n)
            out[z] = out.get(z, 0) + c
    return out


def _partitions(total, rows, lam, mu):
    "partitions of total with at most rows parts, containing lam and mu"
    out = []

    def rec(i, left, cap, parts):
        if i == rows:
            if left == 0:
                out.append(Partition(parts))
            return
        floor = max(lam.part(i), mu.part(i))
        for p in range(min(cap, left), floor - 1, -1):
            rec(i + 1, left - p, p, parts + [p])

    rec(0, total, total, [])
    return out


# ---------------------------------------------------------------------------
# dimensions and weight multiplicities


def weyl_dim(hw):
    hw = _dominant(hw)
    lam = hw.epsilon()
    N = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(N) for j in range(i + 1, N))
    den = prod(j - i for i in range(N) for j in range(i + 1, N))
    return num // den


def _dominates(a, b):
    "a >= b in dominance order; equal sums assumed"
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sb > sa:
            return False
    return True


@lru_cache(maxsize=1 << 18)
def _freudenthal(lam, mu):
    """
    dim V(lam)_mu for partitions-like epsilon vectors of equal length and
    sum, mu dominant (weakly decreasing).
    """
    if mu == lam:
        return 1
    if not _dominates(lam, mu):
        return 0
    N = len(lam)
    rho = tuple(N - 1 - i for i in range(N))

    def norm2(a):
        return sum((p + r) ** 2 for p, r in zip(a, rho))

    denom = norm2(lam) - norm2(mu)
    total = 0
    for i in range(N):
        for j in range(i + 1, N):
            k = 1
            while True:
                nxt = list(mu)
                nxt[i] += k
                nxt[j] -= k
                dom = tuple(sorted(nxt, reverse=True))
                if not _dominates(lam, dom):
                    break
                m = _freudenthal(lam, dom)
                total += (nxt[i] - nxt[j]) * m
                k += 1
    total *= 2
    if total % denom:
        raise ArithmeticError("Freudenthal recursion produced a non-integer")
    return total // denom


def weight_multiplicity(hw, wt):
    """dim V(hw)_wt by Freudenthal's formula (wt in fundamental coordinates)"""
    hw = _dominant(hw)
    if not isinstance(wt, Weight):
        wt = Weight(wt)
    if wt.n != hw.n:
        raise ValueError("rank mismatch")
    lam = hw.epsilon()
    mu = wt.epsilon()
    N = len(lam)
    diff = sum(lam) - sum(mu)
    if diff % N:
        return 0
    shift = diff // N
    mu = tuple(sorted((m + shift for m in mu), reverse=True))
    return _freudenthal(tuple(lam), mu)


def weights_of(hw):
    """{weight: multiplicity} over all weights of V(hw), fundamental coordinates"""
    hw = _dominant(hw)
    lam = tuple(hw.epsilon())
    N = len(lam)
    out = {}
    for mu in _compositions(sum(lam), N, lam[0]):
        dom = tuple(sorted(mu, reverse=True))
        m = _freudenthal(lam, dom) if _dominates(lam, dom) else 0
        if m:
            out[Weight(mu[i] - mu[i + 1] for i in range(N - 1))] = m
    return out


def _compositions(total, parts, cap):
    if parts == 1:
        return [(total,)] if 0 <= total <= cap else []
    out = []
    for first in range(min(total, cap), -1, -1):
        for rest in _compositions(total - first, parts - 1, cap):
            out.append((first,) + rest)
    return out


# ---------------------------------------------------------------------------
# character oracle


@lru_cache(maxsize=1 << 10)
def schur(shape, N):
    """Schur polynomial s_shape(x_1..x_N) as {exponent vector: coeff}"""
    shape = tuple(shape)
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    out = {}
    fill = {}
    content = [0] * N

    def rec(idx):
        if idx == len(cells):
            key = tuple(content)
            out[key] = out.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, fill[(r, c - 1)])
        if r > 0:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for e in range(lo, N + 1):
            fill[(r, c)] = e
            content[e - 1] += 1
            rec(idx + 1)
            content[e - 1] -= 1
        fill.pop((r, c), None)

    if len(shape) <= N:
        rec(0)
    return out


def char_oracle(x, y, budget=10**6):
    """
    {z: m_{x,y,z}} from the product of the two Weyl characters, decomposed
    by repeatedly removing the character of the largest dominant monomial.
    """
    x, y = _dominant(x), _dominant(y)
    if x.n != y.n:
        raise ValueError("rank mismatch")
    if weyl_dim(x) * weyl_dim(y) > budget:
        raise ValueError("character oracle budget exceeded")
    N = x.n + 1
    a = schur(tuple(x.epsilon()), N)
    b = schur(tuple(y.epsilon()), N)
    ch = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(p + q for p, q in zip(e1, e2))
            ch[e] = ch.get(e, 0) + c1 * c2
    out = {}
    while ch:
        top = max(e for e in ch if all(e[i] >= e[i + 1] for i in range(N - 1)))
        c = ch[top]
        if c < 0:
            raise ArithmeticError("negative multiplicity in character oracle")
        for e, d in schur(top, N).items():
            r = ch.get(e, 0) - c * d
            if r:
                ch[e] = r
            else:
                ch.pop(e, None)
        z = DominantWeight(top[i] - top[i + 1] for i in range(N - 1))
        out[z] = out.get(z, 0) + c
    return out
