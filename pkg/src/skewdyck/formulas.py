"""Explicit coefficient formulas via weighted trinomial coefficients.

This module is a purely arithmetic route to single series coefficients: no
power-series division or square roots, only (generalized) binomials and the
trinomial coefficients [t^k](1 + m*t + t^2)^n.  It cross-validates the
kernel-method closed forms in :mod:`.genfunc` coefficient by coefficient.

Conventions
-----------
* Negative upper index: C(-m, k) = (-1)^k * C(m+k-1, k).  This is the unique
  convention under which ``lambda_coeff`` agrees with its series oracle
  [v^k]((1+v)^2 (1+2v)(1-v) / (2+v)^{j+1}).
* ``dual_coeff_explicit`` sums k = 0..N inclusive.  The k = N term
  multiplies trinomial(N-1; 0) = 1 by mu_{j;N}, which is nonzero whenever
  N <= j+3, so it cannot be dropped; the equality test against the series
  route pins this down.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .series import WPoly


def binom(n, k):
    """Binomial coefficient with integer upper index of either sign.

    For n < 0 uses C(-m, k) = (-1)^k * C(m+k-1, k); k < 0 gives 0.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(-n + k - 1, k)


@lru_cache(maxsize=None)
def _trinomial_row(n, middle):
    """Coefficient tuple of (1 + middle*t + t^2)^n, length 2n+1."""
    if n == 0:
        return (_one_like(middle),)
    prev = _trinomial_row(n - 1, middle)
    one = _one_like(middle)
    base = (one, middle, one)
    out = [_zero_like(middle)] * (2 * n + 1)
    for i, p in enumerate(prev):
        for j, b in enumerate(base):
            out[i + j] = out[i + j] + p * b
    return tuple(out)


def _one_like(middle):
    return WPoly.const(1) if isinstance(middle, WPoly) else Fraction(1)


def _zero_like(middle):
    return WPoly() if isinstance(middle, WPoly) else Fraction(0)


def trinomial(n, middle, k):
    """[t^k](1 + middle*t + t^2)^n; zero outside 0 <= k <= 2n.

    ``middle`` may be an integer, Fraction, or :class:`WPoly` (e.g. 2+w).
    Rows are memoized per (n, middle).
    """
    if n < 0:
        raise ValueError("trinomial upper index must be nonnegative")
    if isinstance(middle, int):
        middle = Fraction(middle)
    if k < 0 or k > 2 * n:
        return _zero_like(middle)
    return _trinomial_row(n, middle)[k]


# --- primal level coefficients ------------------------------------------------

_LAMBDA_TERMS = ((-9, 1), (27, 0), (-29, -1), (13, -2), (-2, -3))


def lambda_coeff(j, k):
    """The five-term rational weight lambda_{j;k}.

    Equals [v^k]((1+v)^2 (1+2v)(1-v) / (2+v)^{j+1}).
    """
    if k < 0:
        return Fraction(0)
    total = Fraction(0)
    for c, d in _LAMBDA_TERMS:
        # exponents of 2 run j+1+k, j+k, j-1+k, j-2+k, j-3+k and may be negative
        total += c * binom(-j - d, k) * Fraction(2) ** (-(j + d + k))
    return total


def kappa_coeff(j, k):
    """Integer weight kappa_{j;k} = [v^k]((1+v)^2 (1-v) / (1+2v)^j).

    These arise from the residue computation of [z^(2m+j)] of the primal
    level series under the substitution x = v/(1+3v+v^2), carried out with
    the correct square-root branch: 1/P^(j+1) maps to
    (1+3v+v^2)^(j+1)/(1+2v)^(j+1) (P is a unit, so its reciprocal power is
    a power series, unlike the conjugate root).
    """
    total = 0
    for i, e in enumerate((1, 1, -1, -1)):
        if k - i >= 0:
            total += e * binom(-j, k - i) * 2 ** (k - i)
    return total


def primal_coeff_explicit(j, m):
    """[z^(2m+j)] of the primal level-j total series, as an exact integer.

    Residue formula: sum_{k=0}^{m} kappa_{j;k} * trinomial(m-1+j, 3, m-k).
    Requires m >= 1 so the trinomial upper index m-1+j is nonnegative.
    """
    if m < 1:
        raise ValueError("primal_coeff_explicit requires m >= 1")
    total = Fraction(0)
    for k in range(m + 1):
        total += kappa_coeff(j, k) * trinomial(m - 1 + j, 3, m - k)
    if total.denominator != 1:
        raise ValueError(f"non-integral primal coefficient sum {total} at (j={j}, m={m})")
    return total.numerator


# --- dual level coefficients --------------------------------------------------


def mu_coeff(j, k):
    """The four-term integer weight mu_{j;k}.

    Equals [v^k]((3 - 7(2+v) + 5(2+v)^2 - (2+v)^3)(2+v)^j).
    """
    def term(c, n):
        # binom(n, k) vanishes for k > n >= 0, keeping the power of 2 integral
        b = binom(n, k)
        return 0 if b == 0 else c * b * 2 ** (n - k)

    return term(3, j) + term(-7, j + 1) + term(5, j + 2) + term(-1, j + 3)


def dual_coeff_explicit(j, N):
    """[z^(j+2N) u^j] of the dual kernel solution, as an exact integer.

    Sums k = 0..N inclusive (see module docstring).
    """
    if N < 1:
        raise ValueError("dual_coeff_explicit requires N >= 1")
    total = Fraction(0)
    for k in range(N + 1):
        total += mu_coeff(j, k) * trinomial(N - 1, 3, N - k)
    if total.denominator != 1:
        raise ValueError(f"non-integral dual coefficient sum {total} at (j={j}, N={N})")
    return total.numerator


# --- red-marked axis coefficients --------------------------------------------


def red_coeff_explicit(n):
    """[x^n] of the w-marked axis series S(0), as a :class:`WPoly`.

    Four-trinomial combination T(n) + T(n-1) - T(n-2) - T(n-3) with
    T(k) = trinomial(n-1, 2+w, k).
    """
    if n < 1:
        raise ValueError("red_coeff_explicit requires n >= 1")
    middle = WPoly((Fraction(2), Fraction(1)))

    def T(k):
        return trinomial(n - 1, middle, k)

    return T(n) + T(n - 1) - T(n - 2) - T(n - 3)
