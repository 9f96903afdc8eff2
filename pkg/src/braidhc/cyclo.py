"""
Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored as an integer numerator vector over a positive common
denominator in the power basis 1, z, z^2, ..., z^(d-1) with d = phi(n).
The representation is always fully reduced modulo the n-th cyclotomic
polynomial and normalized (gcd of numerators and denominator is 1), so
structural equality is semantic equality.

>>> K = cyclotomic_field(3)
>>> z = K.zeta()
>>> z * z
-1 - z
>>> (z * z * z) == 1
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class FieldMismatchError(ValueError):
    """Raised when scalars from different cyclotomic fields are combined."""


# ---------------------------------------------------------------------------
# polynomials over Q, lowest degree first

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def poly_divmod(a, b):
    """Exact division with remainder of polynomials with Fraction coefficients."""
    a = [Fraction(x) for x in _trim(a)]
    b = [Fraction(x) for x in _trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = _trim(a)
    return _trim(q), a


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def poly_xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    old_r, r = _trim(a), _trim(b)
    old_s, s = [Fraction(1)], []
    old_t, t = [], [Fraction(1)]
    while r:
        q, rem = poly_divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _poly_sub(old_s, poly_mul(q, s))
        old_t, t = t, _poly_sub(old_t, poly_mul(q, t))
    lead = Fraction(old_r[-1])
    return ([x / lead for x in old_r], [x / lead for x in old_s],
            [x / lead for x in old_t])


@lru_cache(maxsize=None)
def _cyclotomic_int(n):
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1, got %r" % (n,))
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, _cyclotomic_int(d))
            assert not rem, "x^n - 1 not divisible by Phi_%d" % d
    coeffs = tuple(int(c) for c in num)
    assert all(Fraction(c) == x for c, x in zip(coeffs, num))
    return coeffs


def cyclotomic_polynomial(n):
    """Phi_n as a list of Fraction coefficients, lowest degree first.

    Computed by exact division of x^n - 1 by Phi_d for every proper divisor d.
    """
    return [Fraction(c) for c in _cyclotomic_int(n)]


def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


# ---------------------------------------------------------------------------

class CyclotomicField:
    """Q(zeta_n). Obtain instances through :func:`cyclotomic_field` (cached)."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("field order must be positive")
        self.n = n
        self._phi = _cyclotomic_int(n)
        self.degree = len(self._phi) - 1
        assert self.degree == euler_phi(n)
        d = self.degree
        # x^k mod Phi_n as integer vectors, extended on demand
        self._powers = [(1,) + (0,) * (d - 1)]
        self._extend_powers(max(2 * d - 1, n))
        table = self._powers
        self._zero = CyclotomicScalar._make(self, (0,) * d, 1)
        self._one = CyclotomicScalar._make(self, table[0], 1)
        self._zetas = [CyclotomicScalar._make(self, table[k], 1) for k in range(n)]

    @property
    def phi_n(self):
        return [Fraction(c) for c in self._phi]

    def __repr__(self):
        return "CyclotomicField(%d)" % self.n

    def __reduce__(self):
        return (cyclotomic_field, (self.n,))

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def zeta(self):
        return self._zetas[1 % self.n]

    def zeta_power(self, k):
        return self._zetas[k % self.n]

    def _reduce(self, coeffs):
        """Reduce an integer coefficient list modulo Phi_n (result has length degree)."""
        d = self.degree
        if len(coeffs) <= d:
            return list(coeffs) + [0] * (d - len(coeffs))
        out = list(coeffs[:d])
        powers = self._powers
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                if k >= len(powers):
                    self._extend_powers(k)
                    powers = self._powers
                for i, p in enumerate(powers[k]):
                    if p:
                        out[i] += c * p
        return out

    def _extend_powers(self, k):
        d = self.degree
        table = self._powers
        while len(table) <= k:
            cur = list(table[-1])
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self._phi[i]
            table.append(tuple(cur))

    def __call__(self, value):
        """Coerce an int, Fraction, coefficient list or scalar into the field."""
        if isinstance(value, CyclotomicScalar):
            if value.field is not self:
                raise FieldMismatchError("%r is not in %r" % (value, self))
            return value
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            return CyclotomicScalar._normalize(
                self, [value.numerator] + [0] * (self.degree - 1), value.denominator)
        return CyclotomicScalar.from_coeffs(self, value)


@lru_cache(maxsize=None)
def cyclotomic_field(n):
    return CyclotomicField(n)


def zeta_power(field, k):
    """zeta_n ** k in canonical form; k may be any integer."""
    return field.zeta_power(k)


def root_sum_check(field, b):
    """(1/n) * sum_{a=0}^{n-1} zeta^(-a*b): the Kronecker delta of b mod n."""
    n = field.n
    total = field.zero()
    for a in range(n):
        total = total + field.zeta_power(-a * b)
    return total * Fraction(1, n)


class CyclotomicScalar:
    """An immutable element of Q(zeta_n)."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _make(cls, field, num, den):
        self = object.__new__(cls)
        self.field = field
        self.num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _normalize(cls, field, num, den):
        if den < 0:
            num = [-x for x in num]
            den = -den
        g = gcd(den, *num)
        if g != 1:
            num = [x // g for x in num]
            den //= g
        return cls._make(field, tuple(num), den)

    @classmethod
    def from_coeffs(cls, field, coeffs):
        """Build from a Rational sequence in the power basis (reduced mod Phi_n)."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        return cls._normalize(field, field._reduce(ints), den)

    @property
    def coeffs(self):
        return tuple(Fraction(x, self.den) for x in self.num)

    # -- coercion ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicScalar):
            if other.field is not self.field:
                raise FieldMismatchError(
                    "cannot combine elements of Q(zeta_%d) and Q(zeta_%d)"
                    % (self.field.n, other.field.n))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    # -- predicates ------------------------------------------------------------
    def __bool__(self):
        return any(self.num)

    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def __eq__(self, other):
        if isinstance(other, CyclotomicScalar):
            return (self.field is other.field and self.den == other.den
                    and self.num == other.num)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.n, self.num, self.den))
        return self._hash

    # -- arithmetic ------------------------------------------------------------
    def __neg__(self):
        return CyclotomicScalar._make(self.field, tuple(-x for x in self.num), self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return CyclotomicScalar._normalize(
                self.field, [x + y for x, y in zip(self.num, other.num)], self.den)
        da, db = self.den, other.den
        return CyclotomicScalar._normalize(
            self.field, [x * db + y * da for x, y in zip(self.num, other.num)], da * db)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CyclotomicScalar._normalize(
                self.field, [x * other.numerator for x in self.num],
                self.den * other.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        one = self.field._one
        if other is one:
            return self
        if self is one:
            return other
        a, b = self.num, other.num
        d = len(a)
        if d == 1 or not any(b[1:]):
            return CyclotomicScalar._normalize(self.field, [x * b[0] for x in a],
                                               self.den * other.den)
        if not any(a[1:]):
            return CyclotomicScalar._normalize(self.field, [a[0] * y for y in b],
                                               self.den * other.den)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicScalar._normalize(
            self.field, self.field._reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.field.n)
        _, s, _ = poly_xgcd(list(self.coeffs), self.field.phi_n)
        return CyclotomicScalar.from_coeffs(self.field, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        acc, base = self.field.one(), self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # -- display / serialization ----------------------------------------------
    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else "z^%d" % k)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = "%s*%s" % ("(%s)" % c if c.denominator != 1 else c, mono)
            terms.append(s)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def to_json(self):
        return ["%d/%d" % (x // gcd(x, self.den), self.den // gcd(x, self.den))
                for x in self.num]

    @classmethod
    def from_json(cls, field, data):
        if not isinstance(data, list) or len(data) != field.degree:
            raise ValueError("expected a list of %d rational strings, got %r"
                             % (field.degree, data))
        return cls.from_coeffs(field, [Fraction(s) for s in data])
