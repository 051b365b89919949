"""Exact truncated formal power series over arbitrary-precision rationals.

A :class:`Series` of order N holds coefficients for z^0 .. z^N; every
operation is exact (coefficients are Python ints or ``fractions.Fraction``
values in lowest terms) and never reads beyond the truncation window.
Binary operations require equal orders -- there is no silent re-truncation,
so precision loss cannot go unnoticed.

:class:`DualSeries` pairs a series with its first-order jet in an auxiliary
marking variable around 1; it is used to extract cumulative generating
functions of parameters without differentiating closed forms by hand.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

Coef = Union[int, Fraction]


class OrderMismatch(ValueError):
    """Binary operation on series of different truncation orders."""


class NotInvertible(ValueError):
    """Inverse or division demanded of a series with no series inverse."""


class NonContractive(RuntimeError):
    """Fixed-point iteration failed to stabilise within order+2 steps."""


def _norm(c: Coef) -> Coef:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"series coefficients must be exact (int/Fraction), got {type(c).__name__}")


class Series:
    """Truncated power series with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coef]):
        cs = [_norm(c) for c in coeffs]
        if not cs:
            raise ValueError("a series needs at least the z^0 coefficient")
        self.coeffs = cs

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Coef], order: int) -> "Series":
        """Series of the given order; short coefficient lists are zero-padded."""
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than order+1")
        return cls(list(coeffs) + [0] * (order + 1 - len(coeffs)))

    @classmethod
    def constant(cls, c: Coef, order: int) -> "Series":
        return cls([c] + [0] * order)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def x(cls, order: int) -> "Series":
        """The series z (order must be >= 1 to carry it)."""
        if order < 1:
            raise ValueError("order 0 cannot represent z")
        return cls.from_coeffs([0, 1], order)

    @classmethod
    def monomial(cls, k: int, order: int) -> "Series":
        """The series z^k (zero series when k exceeds the order)."""
        cs = [0] * (order + 1)
        if 0 <= k <= order:
            cs[k] = 1
        return cls(cs)

    # -- basics ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Coef:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"Series(order={self.order}, [{head}{tail}])"

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_order(self, other: "Series") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Series):
            self._check_order(other)
            return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return Series(cs)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, Series):
            self._check_order(other)
            return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Series):
            self._check_order(other)
            a, b = self.coeffs, other.coeffs
            n = len(a)
            out = [0] * n
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j in range(n - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
            return Series(out)
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise NotInvertible("zero constant term")
        n = len(a)
        inv0 = Fraction(1, 1) / a[0]
        b = [0] * n
        b[0] = _norm(inv0)
        for m in range(1, n):
            s = 0
            for k in range(1, m + 1):
                ak = a[k]
                if ak:
                    s += ak * b[m - k]
            b[m] = _norm(-s * inv0) if s else 0
        return Series(b)

    def sqrt(self) -> "Series":
        """Square root of a series with constant term 1."""
        a = self.coeffs
        if a[0] != 1:
            raise NotInvertible("series sqrt requires constant term 1")
        n = len(a)
        b: list[Coef] = [0] * n
        b[0] = 1
        half = Fraction(1, 2)
        for m in range(1, n):
            s = 0
            for k in range(1, m):
                bk = b[k]
                if bk:
                    s += bk * b[m - k]
            b[m] = _norm((a[m] - s) * half)
        return Series(b)

    def compose(self, inner: "Series") -> "Series":
        """self(inner(z)); inner must have zero constant term."""
        self._check_order(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs inner constant term 0")
        # Horner over the inner series.
        acc = Series.constant(self.coeffs[-1], self.order)
        for k in range(len(self.coeffs) - 2, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    # -- reshaping ---------------------------------------------------------

    def truncate(self, order: int) -> "Series":
        """Drop coefficients above ``order`` (which must not exceed self.order)."""
        if order > self.order:
            raise OrderMismatch("truncate cannot extend a series")
        return Series(self.coeffs[: order + 1])

    def shift_up(self, k: int) -> "Series":
        """Multiply by z^k, keeping the order (top coefficients fall off)."""
        if k < 0:
            raise ValueError("negative shift")
        n = len(self.coeffs)
        return Series(([0] * k + self.coeffs)[:n])

    def shift_down(self, k: int) -> "Series":
        """Exact division by z^k; the first k coefficients must vanish."""
        if k == 0:
            return self
        if any(self.coeffs[:k]):
            raise NotInvertible(f"cannot divide by z^{k}: low-order coefficients nonzero")
        if k > self.order:
            raise OrderMismatch("shift_down below order 0")
        return Series(self.coeffs[k:])

    def z_derivative(self) -> "Series":
        """z * d/dz, which keeps the truncation order."""
        return Series([n * c for n, c in enumerate(self.coeffs)])


class DualSeries:
    """A series together with its first-order jet in a marking variable.

    ``value`` is f(z, u) at u=1 and ``derivative`` is d/du f(z, u) at u=1;
    arithmetic follows the jet rules (product/quotient) exactly.
    """

    __slots__ = ("value", "derivative")

    def __init__(self, value: Series, derivative: Series):
        if len(value.coeffs) != len(derivative.coeffs):
            raise OrderMismatch("dual components must share the truncation order")
        self.value = value
        self.derivative = derivative

    @classmethod
    def lift(cls, value: Series) -> "DualSeries":
        """Embed a plain series (derivative 0)."""
        return cls(value, Series.zero(value.order))

    @classmethod
    def one(cls, order: int) -> "DualSeries":
        return cls(Series.one(order), Series.zero(order))

    @property
    def order(self) -> int:
        return self.value.order

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DualSeries):
            return self.value == other.value and self.derivative == other.derivative
        return NotImplemented

    def __repr__(self) -> str:
        return f"DualSeries(value={self.value!r}, derivative={self.derivative!r})"

    def __add__(self, other):
        if isinstance(other, DualSeries):
            return DualSeries(self.value + other.value, self.derivative + other.derivative)
        if isinstance(other, (int, Fraction)):
            return DualSeries(self.value + other, self.derivative)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return DualSeries(-self.value, -self.derivative)

    def __sub__(self, other):
        if isinstance(other, (DualSeries, int, Fraction)):
            return self + (-other if isinstance(other, DualSeries) else -other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, DualSeries):
            return DualSeries(
                self.value * other.value,
                self.value * other.derivative + self.derivative * other.value,
            )
        if isinstance(other, (int, Fraction)):
            return DualSeries(self.value * other, self.derivative * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "DualSeries":
        vinv = self.value.inverse()
        return DualSeries(vinv, -(vinv * vinv * self.derivative))

    def shift_up(self, k: int) -> "DualSeries":
        return DualSeries(self.value.shift_up(k), self.derivative.shift_up(k))

    def truncate(self, order: int) -> "DualSeries":
        return DualSeries(self.value.truncate(order), self.derivative.truncate(order))


# -- module-level operation surface ---------------------------------------


def add(a: Series, b: Series) -> Series:
    return a + b


def mul(a: Series, b: Series) -> Series:
    return a * b


def inverse(a: Series) -> Series:
    return a.inverse()


def compose(outer: Series, inner: Series) -> Series:
    return outer.compose(inner)


def finite_product(factors: Sequence[Series]) -> Series:
    """Left fold of mul over a nonempty list of equal-order series."""
    if not factors:
        raise ValueError("finite_product of an empty list")
    acc = factors[0]
    for f in factors[1:]:
        acc = acc * f
    return acc


def solve_fixed_point(update: Callable, order: int, start=None):
    """Solve X = update(X) for a contractive update on (dual) series.

    The update must strictly increase the z-adic valuation of any error,
    so each sweep fixes at least one more coefficient; the iteration is
    declared non-contractive after order+2 sweeps without stabilising.
    """
    x = Series.one(order) if start is None else start
    for _ in range(order + 2):
        nxt = update(x)
        if nxt == x:
            return x
        x = nxt
    raise NonContractive(
        f"no fixed point within {order + 2} iterations; "
        "the specification is not a contraction"
    )
