"""Exact univariate polynomial and rational-function arithmetic.

Polynomials are little-endian coefficient lists (index = power of z) over
Python ints/Fractions.  :class:`RationalFunc` keeps a canonical form --
integer coefficients, polynomial gcd 1, positive leading denominator
coefficient -- so equality is structural and common factors can never hide
a pole.  The module also carries the Sturm-chain root counting and Yun
square-free decomposition used for isolating real roots; refinement is by
exact rational bisection, so results are deterministic at any precision.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Sequence, Union

from treeflowers.series import NotInvertible, Series, _norm

Scalar = Union[int, Fraction]


class NonRational(ValueError):
    """The requested object has no exact rational-function form."""


# ---------------------------------------------------------------------------
# polynomial helpers (little-endian coefficient lists)
# ---------------------------------------------------------------------------


def poly_trim(p: Sequence[Scalar]) -> list:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_is_zero(p: Sequence[Scalar]) -> bool:
    return all(c == 0 for c in p)


def poly_degree(p: Sequence[Scalar]) -> int:
    p = poly_trim(p)
    return -1 if p == [0] else len(p) - 1


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_neg(a):
    return [-c for c in a]


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_mul(a, b):
    if poly_is_zero(a) or poly_is_zero(b):
        return [0]
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return poly_trim(out)


def poly_scale(a, c: Scalar):
    return poly_trim([x * c for x in a])


def poly_eval(p, x):
    """Horner evaluation; exact for Fraction x, works for float/mpf too."""
    acc = 0 * x
    for c in reversed(poly_trim(p)):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    if len(p) <= 1:
        return [0]
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def poly_divmod(a, b):
    """Quotient and remainder over the rationals."""
    a = [Fraction(c) for c in poly_trim(a)]
    b = [Fraction(c) for c in poly_trim(b)]
    if poly_is_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = a[:]
    db, lb = len(b) - 1, b[-1]
    while not poly_is_zero(r) and len(poly_trim(r)) - 1 >= db:
        r = poly_trim(r)
        shift = len(r) - 1 - db
        coef = r[-1] / lb
        q[shift] += coef
        for i, bc in enumerate(b):
            r[shift + i] -= coef * bc
        r = r[:-1] if r and r[-1] == 0 else r
    return poly_trim(q), poly_trim(r)


def poly_exact_div(a, b):
    q, r = poly_divmod(a, b)
    if not poly_is_zero(r):
        raise ValueError("polynomial division was not exact")
    return q


def poly_content(p) -> int:
    g = 0
    for c in p:
        g = _int_gcd(g, abs(int(c)))
    return g or 1


def poly_to_int(p) -> list:
    """Clear denominators and return an integer polynomial (same roots)."""
    p = poly_trim(p)
    lcm = 1
    for c in p:
        if isinstance(c, Fraction):
            d = c.denominator
            lcm = lcm * d // _int_gcd(lcm, d)
    return [int(c * lcm) for c in p]


def poly_primitive(p) -> list:
    """Primitive integer polynomial with positive leading coefficient."""
    p = poly_to_int(p)
    if poly_is_zero(p):
        return [0]
    c = poly_content(p)
    p = [x // c for x in p]
    if p[-1] < 0:
        p = [-x for x in p]
    return p


def poly_gcd(a, b) -> list:
    """Primitive, positive-leading gcd via the Euclidean algorithm over Q."""
    a, b = poly_trim(a), poly_trim(b)
    if poly_is_zero(a):
        return poly_primitive(b)
    if poly_is_zero(b):
        return poly_primitive(a)
    while not poly_is_zero(b):
        _, r = poly_divmod(a, b)
        a, b = b, r
    return poly_primitive(a)


def squarefree_decomposition(p) -> list:
    """Yun's algorithm: [(q_i, i)] with p ~ prod q_i^i, the q_i squarefree."""
    p = poly_primitive(p)
    if poly_degree(p) <= 0:
        return []
    dp = poly_derivative(p)
    a0 = poly_gcd(p, dp)
    if poly_degree(a0) == 0:
        return [(p, 1)]
    b = poly_exact_div(p, a0)
    c = poly_exact_div(dp, a0)
    d = poly_sub(c, poly_derivative(b))
    out = []
    i = 1
    while poly_degree(b) > 0:
        ai = poly_gcd(b, d)
        if poly_degree(ai) > 0:
            out.append((poly_primitive(ai), i))
        b_next = poly_exact_div(b, ai)
        c_next = poly_exact_div(d, ai)
        d = poly_sub(c_next, poly_derivative(b_next))
        b = b_next
        i += 1
    return out


# -- Sturm machinery --------------------------------------------------------


def _scale_positive(p) -> list:
    """Integer version of p scaled by a positive rational (signs preserved)."""
    p = poly_to_int(p)
    c = poly_content(p)
    return [x // c for x in p]


def sturm_chain(p) -> list:
    """Sturm sequence of a squarefree polynomial."""
    chain = [_scale_positive(poly_trim(p))]
    d = poly_derivative(chain[0])
    if poly_is_zero(d):
        return chain
    chain.append(_scale_positive(d))
    while poly_degree(chain[-1]) >= 1:
        _, r = poly_divmod(chain[-2], chain[-1])
        if poly_is_zero(r):
            break
        chain.append(_scale_positive(poly_neg(r)))
    return chain


def _sign_variations(values) -> int:
    signs = [0 if v == 0 else (1 if v > 0 else -1) for v in values]
    signs = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def count_roots(chain, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b] for a squarefree chain."""
    va = _sign_variations([poly_eval(c, a) for c in chain])
    vb = _sign_variations([poly_eval(c, b) for c in chain])
    return va - vb


def cauchy_root_bound(p) -> Fraction:
    """All real roots of p lie in (-B, B)."""
    p = poly_trim(p)
    lead = abs(Fraction(p[-1]))
    if lead == 0:
        raise ValueError("zero polynomial has no root bound")
    m = max((abs(Fraction(c)) for c in p[:-1]), default=Fraction(0))
    return 1 + m / lead


def _strip_zero_root(p):
    """Remove z^v factors so that p(0) != 0; returns (p, v)."""
    p = poly_trim(p)
    v = 0
    while p[0] == 0 and len(p) > 1:
        p = p[1:]
        v += 1
    return p, v


def isolate_positive_roots(p, hi: Fraction | None = None) -> list:
    """Disjoint isolating intervals (a, b] for the roots of squarefree p in (0, hi]."""
    p, _ = _strip_zero_root(p)
    if poly_degree(p) <= 0:
        return []
    if hi is None:
        hi = cauchy_root_bound(p)
    while poly_eval(p, hi) == 0:
        hi += 1
    chain = sturm_chain(p)
    out = []
    stack = [(Fraction(0), Fraction(hi))]
    while stack:
        a, b = stack.pop()
        k = count_roots(chain, a, b)
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort()
    return out


def refine_root(p, a: Fraction, b: Fraction, precision_bits: int = 96) -> Fraction:
    """Shrink an isolating interval (a, b] of squarefree p by Sturm bisection.

    Returns the midpoint once the interval is narrower than 2^-precision_bits
    (or the exact root if a bisection point hits it).
    """
    chain = sturm_chain(p)
    width_goal = Fraction(1, 2**precision_bits)
    while b - a > width_goal:
        mid = (a + b) / 2
        if poly_eval(p, mid) == 0:
            return mid
        if count_roots(chain, a, mid) == 1:
            b = mid
        else:
            a = mid
    return (a + b) / 2


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFunc:
    """Quotient of integer polynomials in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable[Scalar], den: Iterable[Scalar] = (1,)):
        n = [Fraction(c) if not isinstance(c, (int, Fraction)) else c for c in num]
        d = [Fraction(c) if not isinstance(c, (int, Fraction)) else c for c in den]
        for c in list(n) + list(d):
            if not isinstance(c, (int, Fraction)):
                raise TypeError("rational-function coefficients must be exact")
        d = poly_trim(d)
        if poly_is_zero(d):
            raise ZeroDivisionError("zero denominator polynomial")
        n = poly_trim(n)
        if poly_is_zero(n):
            self.num, self.den = (0,), (1,)
            return
        g = poly_gcd(n, d)
        if poly_degree(g) > 0:
            n = poly_exact_div(n, g)
            d = poly_exact_div(d, g)
        # joint scaling to integers, then joint content reduction
        lcm = 1
        for c in list(n) + list(d):
            if isinstance(c, Fraction):
                q = c.denominator
                lcm = lcm * q // _int_gcd(lcm, q)
        ni = [int(c * lcm) for c in n]
        di = [int(c * lcm) for c in d]
        c = _int_gcd(poly_content(ni), poly_content(di))
        ni = [x // c for x in ni]
        di = [x // c for x in di]
        if di[-1] < 0:
            ni = [-x for x in ni]
            di = [-x for x in di]
        self.num = tuple(ni)
        self.den = tuple(di)

    # -- constructors --------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "RationalFunc":
        return cls([c])

    @classmethod
    def z(cls) -> "RationalFunc":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int) -> "RationalFunc":
        return cls([0] * k + [1])

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num == (0,)

    def is_polynomial(self) -> bool:
        return poly_degree(list(self.den)) == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RationalFunc([other])
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunc({format_poly(self.num)!r}, {format_poly(self.den)!r})"

    def __str__(self) -> str:
        if self.den == (1,):
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunc([x])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunc(
            poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den)),
            poly_mul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(poly_neg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunc(poly_mul(self.num, o.num), poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunc(poly_mul(self.num, o.den), poly_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (1 / self) ** (-k)
        out = RationalFunc([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "RationalFunc":
        n, d = list(self.num), list(self.den)
        return RationalFunc(
            poly_sub(poly_mul(poly_derivative(n), d), poly_mul(n, poly_derivative(d))),
            poly_mul(d, d),
        )

    def eval(self, x):
        """Evaluate at x (Fraction for exact results, float/mpf otherwise)."""
        return poly_eval(self.num, x) / poly_eval(self.den, x)

    # -- expansion ---------------------------------------------------------

    def series(self, order: int) -> Series:
        """Taylor expansion at 0; requires den(0) != 0."""
        d0 = self.den[0]
        if d0 == 0:
            raise NotInvertible("rational function has a pole at 0")
        num, den = self.num, self.den
        coeffs: list = [0] * (order + 1)
        inv0 = Fraction(1, d0)
        for n in range(order + 1):
            s = num[n] if n < len(num) else 0
            for k in range(1, min(n, len(den) - 1) + 1):
                dk = den[k]
                if dk:
                    s -= dk * coeffs[n - k]
            coeffs[n] = _norm(s * inv0) if s else 0
        return Series(coeffs)

    def coefficient_at(self, n: int):
        """[z^n] of the expansion, via the denominator recurrence (O(n deg))."""
        return self.series(n).coeffs[n]


def format_poly(p) -> str:
    """Human-readable ascending-power rendering, e.g. '1 - 2*z + z^3'."""
    p = poly_trim(list(p))
    if poly_is_zero(p):
        return "0"
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            pow_ = "z" if i == 1 else f"z^{i}"
            term = f"{mag}{pow_}"
            term = ("-" if c < 0 else "") + term
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out
