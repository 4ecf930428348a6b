"""
Exact integer Laurent polynomials in v = q^(1/2), and polynomials in q.

KL polynomials inside the engine are plain tuples of ints indexed by the
power of q (the empty tuple is zero); the helpers at the bottom operate
on those.  LaurentPoly and QPoly are the public value types.
"""

INT64_MAX = 2**63 - 1


def _check(c):
    if c > INT64_MAX or c < -INT64_MAX - 1:
        raise OverflowError(f"coefficient {c} exceeds 64-bit range")


def _term(c, var, e):
    if e == 0:
        body = str(abs(c))
    else:
        mono = var if e == 1 else f"{var}^{e}"
        body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
    return ("-" if c < 0 else "+") + body


def _render(pairs, var):
    if not pairs:
        return "0"
    s = "".join(_term(c, var, e) for e, c in pairs)
    return s[1:] if s[0] == "+" else s


class LaurentPoly:
    """
    sum_i coeffs[i] * v^(min_deg + i); canonical form has no zero
    coefficient at either end and the zero polynomial has no coeffs.
    """

    __slots__ = ("min_deg", "coeffs")

    def __init__(self, coeffs=(), min_deg=0):
        c = [int(a) for a in coeffs]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        c = c[lo:hi]
        for a in c:
            _check(a)
        self.coeffs = tuple(c)
        self.min_deg = min_deg + lo if c else 0

    @classmethod
    def monomial(cls, deg, c=1):
        return cls((c,), deg)

    @classmethod
    def from_dict(cls, d):
        d = {e: c for e, c in d.items() if c}
        if not d:
            return cls()
        lo = min(d)
        hi = max(d)
        return cls([d.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def from_q(cls, qcoeffs, shift=0):
        "sum_i qcoeffs[i] q^i * v^shift as a Laurent polynomial in v"
        out = [0] * (2 * len(qcoeffs) - 1) if qcoeffs else []
        for i, a in enumerate(qcoeffs):
            out[2 * i] = a
        return cls(out, shift)

    def is_zero(self):
        return not self.coeffs

    @property
    def max_deg(self):
        return self.min_deg + len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, deg):
        i = deg - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self):
        return [(self.min_deg + i, c) for i, c in enumerate(self.coeffs) if c]

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_deg - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_deg - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.min_deg)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly([other * c for c in self.coeffs], self.min_deg)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.min_deg + other.min_deg)

    __rmul__ = __mul__

    def shift(self, k):
        "multiply by v^k"
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.min_deg + k)

    def bar(self):
        "v -> v^-1"
        if not self.coeffs:
            return self
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.max_deg)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_deg == other.min_deg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_deg, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return _render(self.terms(), "v")

    def to_json(self):
        return {"min_deg": self.min_deg, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, d):
        return cls(d["coeffs"], d["min_deg"])


class QPoly:
    """Polynomial in q with integer coefficients, coeffs[i] of q^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        for a in c:
            _check(a)
        self.coeffs = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def to_laurent(self):
        return LaurentPoly.from_q(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == QPoly(other).coeffs
        if isinstance(other, int):
            return self.coeffs == QPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        return _render([(i, c) for i, c in enumerate(self.coeffs) if c], "q")


def parse_qpoly(text):
    "inverse of str(QPoly), e.g. '1+2q+q^2'"
    text = text.replace(" ", "")
    if text == "0":
        return QPoly()
    d = {}
    for sign, body in _split_terms(text):
        if "q" in body:
            c, _, e = body.partition("q")
            e = int(e[1:]) if e.startswith("^") else 1
            c = int(c) if c else 1
        else:
            c, e = int(body), 0
        d[e] = d.get(e, 0) + sign * c
    return QPoly([d.get(i, 0) for i in range(max(d) + 1)])


def _split_terms(text):
    out = []
    i = 0
    sign = 1
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        i = 1
    start = i
    while i < len(text):
        ch = text[i]
        if ch in "+-" and text[i - 1] != "^":
            out.append((sign, text[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    out.append((sign, text[start:]))
    return out


# ---------------------------------------------------------------------------
# raw q-polynomial tuples used by the KL engine


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def psub_scaled(a, b, c, k):
    "a - c * q^k * b"
    if not b or not c:
        return a
    n = max(len(a), len(b) + k)
    out = list(a) + [0] * (n - len(a))
    for i, x in enumerate(b):
        out[i + k] -= c * x
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def pshift(a, k):
    return (0,) * k + tuple(a) if a else ()


def pcoeff(a, i):
    return a[i] if 0 <= i < len(a) else 0
