"""Exact arithmetic in cyclotomic fields.

A :class:`Scalar` is an element of ``Q(zeta_N)`` stored in the power basis
``1, zeta, ..., zeta^(phi(N)-1)`` reduced modulo the N-th cyclotomic
polynomial.  Mixed-conductor arithmetic lifts both operands to the lcm of
their conductors.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import DivisionByZero

__all__ = ["Scalar", "cyclotomic_polynomial", "euler_phi"]


# -- integer polynomial helpers (coefficient lists, lowest degree first) ------

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_exact_div(num, den):
    """Exact division of integer polynomials; ``den`` is monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q = num[k + len(den) - 1]
        out[k] = q
        if q:
            for j, d in enumerate(den):
                num[k + j] -= q * d
    assert not any(num), "non-exact polynomial division"
    return out


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


@lru_cache(maxsize=None)
def _powers(n: int) -> tuple[tuple[int, ...], ...]:
    """``_powers(n)[j]`` is zeta_n**j reduced to the power basis, 0 <= j < n."""
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    rows = []
    vec = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(vec))
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            vec = [v - top * c for v, c in zip(vec, phi_poly[:-1])]
    return tuple(rows)


# -- polynomial arithmetic over Q, used for inversion ----------------------

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
        _trim(a)
    return _trim(q), a


def _qpoly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _qpoly_inverse_mod(a, m):
    """Inverse of ``a`` modulo ``m`` over Q via the extended Euclidean algorithm."""
    r0, r1 = list(m), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _poly_mul(q, s1) if q and s1 else [])
    # r0 is the gcd, a nonzero constant because m is irreducible
    assert len(r0) == 1
    return [c / r0[0] for c in s0]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Scalar:
    """Element of the cyclotomic field of conductor ``conductor``."""

    __slots__ = ("_n", "_c")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self._n, self._c = value._n, value._c
        elif isinstance(value, (int, Rational, str)):
            self._n, self._c = 1, (Fraction(value),)
        else:
            raise TypeError(f"cannot build a Scalar from {value!r}")

    @classmethod
    def _make(cls, n: int, coeffs) -> Scalar:
        obj = object.__new__(cls)
        coeffs = tuple(coeffs)
        if n > 1 and not any(coeffs[1:]):
            n, coeffs = 1, coeffs[:1]
        obj._n, obj._c = n, coeffs
        return obj

    @classmethod
    def root_of_unity(cls, exponent) -> Scalar:
        """``exp(2 pi i * exponent)`` for a rational ``exponent``."""
        e = _as_fraction(exponent) % 1
        n = e.denominator
        return cls._make(n, _powers(n)[e.numerator])

    @classmethod
    def i(cls) -> Scalar:
        return cls.root_of_unity(Fraction(1, 4))

    @classmethod
    def from_coeffs(cls, conductor: int, coeffs) -> Scalar:
        """Build from a map ``exponent -> rational`` (any exponents, reduced here)."""
        table = _powers(conductor)
        acc = [Fraction(0)] * euler_phi(conductor)
        for j, q in dict(coeffs).items():
            q = _as_fraction(q)
            for k, v in enumerate(table[j % conductor]):
                if v:
                    acc[k] += q * v
        return cls._make(conductor, acc)

    # -- accessors ------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return {j: q for j, q in enumerate(self._c) if q}

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return self._n == 1

    def as_fraction(self) -> Fraction:
        if self._n != 1:
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    def __complex__(self):
        return sum((complex(q) * cmath.exp(2j * math.pi * j / self._n)
                    for j, q in enumerate(self._c) if q), 0j)

    # -- conductor changes --------------------------------------------------

    def lift(self, m: int) -> Scalar:
        """Re-express in ``Q(zeta_m)``; ``m`` must be a multiple of the conductor."""
        n = self._n
        if m == n:
            return self
        if m % n:
            raise ValueError(f"conductor {m} is not a multiple of {n}")
        step = m // n
        table = _powers(m)
        acc = [Fraction(0)] * euler_phi(m)
        for j, q in enumerate(self._c):
            if q:
                for k, v in enumerate(table[(j * step) % m]):
                    if v:
                        acc[k] += q * v
        obj = object.__new__(Scalar)
        obj._n, obj._c = m, tuple(acc)
        return obj

    def minimal(self) -> Scalar:
        """Same value expressed over the smallest possible conductor."""
        n = self._n
        for m in _divisors(n)[:-1]:
            found = self._descend(m)
            if found is not None:
                return found
        return self

    def _descend(self, m):
        # solve sum_j x_j lift(zeta_m^j) == self over Q
        phi_m = euler_phi(m)
        step = self._n // m
        table = _powers(self._n)
        cols = [table[(j * step) % self._n] for j in range(phi_m)]
        rows = [[Fraction(cols[j][k]) for j in range(phi_m)] + [self._c[k]]
                for k in range(len(self._c))]
        pivots = []
        r = 0
        for col in range(phi_m):
            pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = 1 / rows[r][col]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
        if any(row[-1] for row in rows[r:]):
            return None
        sol = [Fraction(0)] * phi_m
        for i, col in enumerate(pivots):
            sol[col] = rows[i][-1]
        return Scalar._make(m, sol)

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)):
            return Scalar._make(1, (Fraction(other),))
        return None

    def _common(self, other):
        if self._n == other._n:
            return self, other
        m = self._n * other._n // math.gcd(self._n, other._n)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return Scalar._make(a._n, (x + y for x, y in zip(a._c, b._c)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(self._n, (-x for x in self._c))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._n == 1:
            q = other._c[0]
            return Scalar._make(self._n, (x * q for x in self._c))
        if self._n == 1:
            q = self._c[0]
            return Scalar._make(other._n, (q * x for x in other._c))
        a, b = self._common(other)
        n = a._n
        table = _powers(n)
        acc = [Fraction(0)] * len(a._c)
        for i, x in enumerate(a._c):
            if not x:
                continue
            for j, y in enumerate(b._c):
                if not y:
                    continue
                xy = x * y
                for k, v in enumerate(table[(i + j) % n]):
                    if v:
                        acc[k] += xy * v
        return Scalar._make(n, acc)

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        n = self._n
        if n == 1:
            return self
        table = _powers(n)
        acc = [Fraction(0)] * len(self._c)
        for j, q in enumerate(self._c):
            if q:
                for k, v in enumerate(table[(-j) % n]):
                    if v:
                        acc[k] += q * v
        return Scalar._make(n, acc)

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise DivisionByZero("inverse of zero scalar")
        if self._n == 1:
            return Scalar._make(1, (1 / self._c[0],))
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self._n)]
        inv = _qpoly_inverse_mod(list(self._c), phi_poly)
        inv = _qpoly_divmod(inv, phi_poly)[1] if len(inv) >= len(phi_poly) else inv
        inv = list(inv) + [Fraction(0)] * (len(self._c) - len(inv))
        return Scalar._make(self._n, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Scalar(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison and hashing ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return a._c == b._c

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        # the normalized trace Tr(x)/[K:Q] does not depend on the ambient field
        n = self._n
        t = Fraction(0)
        for j, q in enumerate(self._c):
            if q:
                m = n // math.gcd(j, n)
                t += q * Fraction(_mobius(m), euler_phi(m))
        # equals the value itself for rationals, so hashes agree with Fraction
        return hash(t)

    # -- printing ---------------------------------------------------------------

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def terms(self) -> list[tuple[Fraction, Fraction]]:
        """Canonical ``(coefficient, exponent)`` pairs: self = sum q * w(e)."""
        m = self.minimal()
        return [(q, Fraction(j, m._n)) for j, q in enumerate(m._c) if q]


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    parts = []
    for q, e in x.terms():
        if e == 0:
            body, unit = _format_rational(abs(q)), True
        else:
            unit = False
            body = "i" if e == Fraction(1, 4) else f"w({_format_rational(e)})"
            if abs(q) != 1:
                body = f"{_format_rational(abs(q))}*{body}"
        sign = "-" if q < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
