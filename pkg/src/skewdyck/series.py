"""Truncated formal power series over exact coefficient rings.

Two coefficient rings are supported: plain rationals (``fractions.Fraction``)
and polynomials in a single marker variable ``w`` with rational coefficients
(:class:`WPoly`).  A :class:`Series` carries an explicit truncation order N:
coefficients of z^0..z^N are exact, everything beyond is unknown.  Operations
never report a coefficient they cannot guarantee; where an order cannot be
preserved it shrinks.

All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction

RATIONAL = "rational"
WPOLY = "wpoly"


class SeriesError(ValueError):
    """Base class for series arithmetic errors."""


class RingMismatchError(SeriesError):
    """Operands live over different coefficient rings."""


class NonUnitError(SeriesError):
    """A divisor (or constant term) is not invertible in its ring."""


class ExactnessError(SeriesError):
    """An operation that must be exact (z-power division, identity check)
    found a nonzero remainder.  Usually signals a transcribed-formula bug."""


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as a rational coefficient")


class WPoly:
    """Polynomial in the edge-color marker w, exact rational coefficients.

    Stored as a coefficient tuple indexed by the power of w, trailing zeros
    trimmed.  Zero is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("WPoly is immutable")

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, WPoly) else cls.const(_frac(x))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WPoly.const(other)
        if not isinstance(other, WPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("WPoly", self.coeffs))

    def __add__(self, other):
        other = WPoly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return WPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return WPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-WPoly.coerce(other))

    def __rsub__(self, other):
        return WPoly.coerce(other) + (-self)

    def __mul__(self, other):
        other = WPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return WPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return WPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a WPoly")
        result = WPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self):
        if self.degree != 0:
            raise NonUnitError(f"{self} is not a unit in the w-polynomial ring")
        return WPoly.const(Fraction(1) / self.coeffs[0])

    def eval(self, value):
        """Evaluate at a rational value of w (a ring homomorphism)."""
        value = _frac(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def deriv(self):
        return WPoly(k * c for k, c in enumerate(self.coeffs) if k >= 1)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*w" if c != 1 else "w")
            else:
                parts.append(f"{c}*w^{k}" if c != 1 else f"w^{k}")
        return " + ".join(parts)


W_VAR = WPoly((0, 1))


def _coerce_coeff(x, ring):
    if ring == RATIONAL:
        if isinstance(x, WPoly):
            raise RingMismatchError("w-polynomial coefficient in a rational series")
        return _frac(x)
    return WPoly.coerce(x)


def _is_unit(c, ring):
    if ring == RATIONAL:
        return c != 0
    return bool(c) and c.degree == 0


def _invert(c, ring):
    if ring == RATIONAL:
        if c == 0:
            raise NonUnitError("division by a series with zero constant term")
        return Fraction(1) / c
    return c.inverse()


class Series:
    """Truncated power series: exact coefficients of z^0..z^order."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring=RATIONAL):
        cs = tuple(_coerce_coeff(c, ring) for c in coeffs)
        if not cs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coeff(self, n):
        if n < 0:
            return _coerce_coeff(0, self.ring)
        if n > self.order:
            raise SeriesError(
                f"coefficient of z^{n} requested beyond guaranteed order {self.order}"
            )
        return self.coeffs[n]

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order, ring=RATIONAL):
        return cls([0] * (order + 1), ring)

    @classmethod
    def one(cls, order, ring=RATIONAL):
        return cls([1] + [0] * order, ring)

    @classmethod
    def z(cls, order, ring=RATIONAL):
        if order < 1:
            raise SeriesError("need order >= 1 to represent z")
        return cls([0, 1] + [0] * (order - 1), ring)

    @classmethod
    def from_dict(cls, powers, order, ring=RATIONAL):
        """Series from a {power: coefficient} mapping (a polynomial)."""
        cs = [0] * (order + 1)
        for p, c in powers.items():
            if p <= order:
                cs[p] = c
        return cls(cs, ring)

    def truncate(self, order):
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], self.ring)

    # -- ring plumbing ------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {other!r}")
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        return Series(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], self.ring
        )

    def __sub__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        return Series(
            [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], self.ring
        )

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, WPoly)):
            s = _coerce_coeff(other, self.ring)
            return Series([c * s for c in self.coeffs], self.ring)
        self._check(other)
        n = min(self.order, other.order)
        out = [_coerce_coeff(0, self.ring) for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return Series(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative series power; use inv() explicitly")
        result = Series.one(self.order, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[: min(8, len(self.coeffs))])
        tail = ", ..." if self.order >= 8 else ""
        return f"Series([{shown}{tail}], order={self.order}, ring={self.ring})"


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def inv(b):
    """Multiplicative inverse of a series with invertible constant term."""
    if not _is_unit(b.coeffs[0], b.ring):
        raise NonUnitError("series has no invertible constant term")
    n = b.order
    q0 = _invert(b.coeffs[0], b.ring)
    out = [q0]
    zero = _coerce_coeff(0, b.ring)
    for k in range(1, n + 1):
        acc = zero
        for i in range(1, k + 1):
            if b.coeffs[i]:
                acc = acc + b.coeffs[i] * out[k - i]
        out.append(-(q0 * acc))
    return Series(out, b.ring)


def div(a, b):
    """Quotient q with q*b = a to truncation; b must have a unit constant."""
    a._check(b)
    n = min(a.order, b.order)
    if not _is_unit(b.coeffs[0], b.ring):
        raise NonUnitError("division by a series with non-invertible constant term")
    q0 = _invert(b.coeffs[0], b.ring)
    out = []
    for k in range(n + 1):
        acc = a.coeffs[k]
        for i in range(1, k + 1):
            if b.coeffs[i]:
                acc = acc - b.coeffs[i] * out[k - i]
        out.append(acc * q0)
    return Series(out, a.ring)


def sqrt_one(a):
    """Square root with constant term 1; requires a(0) = 1 exactly."""
    if a.coeffs[0] != _coerce_coeff(1, a.ring):
        raise NonUnitError("sqrt_one requires constant term exactly 1")
    n = a.order
    half = Fraction(1, 2)
    out = [_coerce_coeff(1, a.ring)]
    for k in range(1, n + 1):
        acc = a.coeffs[k]
        for i in range(1, k):
            acc = acc - out[i] * out[k - i]
        out.append(acc * half)
    return Series(out, a.ring)


def shift_divide(a, k):
    """Exact division by z^k; the low-order coefficients must vanish."""
    if k < 0:
        raise ValueError("shift_divide needs k >= 0")
    if k == 0:
        return a
    if a.order < k:
        raise SeriesError(f"order {a.order} too small to divide by z^{k}")
    for i in range(k):
        if a.coeffs[i]:
            raise ExactnessError(
                f"division by z^{k}: coefficient of z^{i} is {a.coeffs[i]}, not 0"
            )
    return Series(a.coeffs[k:], a.ring)


def shift_up(a, k):
    """Multiply by z^k, keeping the same order (top coefficients drop off)."""
    if k < 0:
        raise ValueError("shift_up needs k >= 0")
    zero = _coerce_coeff(0, a.ring)
    cs = [zero] * min(k, a.order + 1) + list(a.coeffs)
    return Series(cs[: a.order + 1], a.ring)


def compose(f, g):
    """f(g(z)); g must have zero constant term."""
    f._check(g)
    if g.coeffs[0]:
        raise SeriesError("composition requires g(0) = 0")
    n = min(f.order, g.order)
    g = g.truncate(n)
    result = Series([f.coeffs[n]] + [0] * n, f.ring)
    for k in range(n - 1, -1, -1):
        result = result * g + Series([f.coeffs[k]] + [0] * n, f.ring)
    return result


def reversion(g):
    """Compositional inverse h with g(h(z)) = z to truncation."""
    if g.coeffs[0]:
        raise SeriesError("reversion requires g(0) = 0")
    if not _is_unit(g.coeffs[1] if g.order >= 1 else 0, g.ring):
        raise NonUnitError("reversion requires an invertible linear coefficient")
    n = g.order
    g1_inv = _invert(g.coeffs[1], g.ring)
    h = [_coerce_coeff(0, g.ring), g1_inv]
    for m in range(2, n + 1):
        partial = Series(h + [0] * (m + 1 - len(h)), g.ring)
        defect = compose(g.truncate(m), partial).coeffs[m]
        h.append(-(defect * g1_inv))
    return Series(h + [0] * (n + 1 - len(h)), g.ring)


class ULinearRational:
    """Rational function of u with series coefficients and a denominator
    that is linear in u: num(u) / (den0 + den1*u), den0 a series unit."""

    __slots__ = ("num", "den0", "den1")

    def __init__(self, num, den0, den1):
        num = tuple(num)
        if not num:
            raise SeriesError("empty numerator")
        ring = den0.ring
        for part in num:
            part._check(den0)
        den0._check(den1)
        if not _is_unit(den0.coeffs[0], ring):
            raise NonUnitError("den0 must have an invertible constant term")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den0", den0)
        object.__setattr__(self, "den1", den1)

    def __setattr__(self, name, value):
        raise AttributeError("ULinearRational is immutable")


def extract_u(r, j):
    """Coefficient of u^j of num(u)/(den0 + den1*u), expanded geometrically."""
    if j < 0:
        raise ValueError("extract_u needs j >= 0")
    base = inv(r.den0)
    ratio = -(r.den1 * base)
    total = None
    for i, part in enumerate(r.num):
        t = j - i
        if t < 0:
            continue
        term = part * base * (ratio**t)
        total = term if total is None else total + term
    if total is None:
        total = Series.zero(r.den0.order, r.den0.ring)
    return total


# -- ring homomorphisms on WPOLY series -------------------------------


def specialize_w(s, value):
    """Evaluate every w-polynomial coefficient at a rational w (e.g. w=1)."""
    if s.ring != WPOLY:
        raise RingMismatchError("specialize_w needs a w-polynomial series")
    return Series([c.eval(value) for c in s.coeffs], RATIONAL)


def w_slice(s, k):
    """The rational series of [w^k] taken coefficientwise."""
    if s.ring != WPOLY:
        raise RingMismatchError("w_slice needs a w-polynomial series")
    return Series([c.coeff(k) for c in s.coeffs], RATIONAL)


def w_derivative(s):
    """d/dw applied coefficientwise."""
    if s.ring != WPOLY:
        raise RingMismatchError("w_derivative needs a w-polynomial series")
    return Series([c.deriv() for c in s.coeffs], WPOLY)


def to_wpoly_ring(s):
    """Embed a rational series into the w-polynomial ring."""
    if s.ring == WPOLY:
        return s
    return Series([WPoly.const(c) for c in s.coeffs], WPOLY)
