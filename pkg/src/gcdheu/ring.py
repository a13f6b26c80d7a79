"""Coefficient rings: the integers and the Gaussian integers.

Integers are plain Python ``int``.  Gaussian integers are :class:`GaussInt`
values; a ``GaussInt`` with zero imaginary part compares and hashes equal to
the corresponding ``int``, so the scalar zero may be shared by both rings.
"""

from __future__ import annotations

import enum
from math import gcd, isqrt

from .errors import InvalidModulus


class Ring(enum.Enum):
    """Tag fixing the coefficient ring of a computation."""

    Z = "z"
    ZI = "zi"

    def scalar(self, re, im=0):
        if self is Ring.Z:
            if im:
                raise ValueError("integers have no imaginary part")
            return re
        return GaussInt(re, im)

    def one(self):
        return self.scalar(1)

    def contains(self, c) -> bool:
        if self is Ring.Z:
            return type(c) is int
        return type(c) is GaussInt or (type(c) is int and c == 0)


class GaussInt:
    """Gaussian integer ``re + im*i`` with arbitrary-precision parts.

    Treated as immutable.  Arithmetic accepts ``int`` operands on either side.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = re
        self.im = im

    @staticmethod
    def coerce(x) -> GaussInt:
        if type(x) is GaussInt:
            return x
        if isinstance(x, int):
            return GaussInt(int(x), 0)
        raise TypeError(f"cannot convert {type(x).__name__} to GaussInt")

    def __add__(self, other):
        if type(other) is GaussInt:
            return GaussInt(self.re + other.re, self.im + other.im)
        if isinstance(other, int):
            return GaussInt(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is GaussInt:
            return GaussInt(self.re - other.re, self.im - other.im)
        if isinstance(other, int):
            return GaussInt(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GaussInt(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other):
        if type(other) is GaussInt:
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussInt(a * c - b * d, a * d + b * c)
        if isinstance(other, int):
            return GaussInt(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = GaussInt(1, 0), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if type(other) is GaussInt:
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"


def _imag_str(b: int) -> str:
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return f"{b}*i"


I = GaussInt(0, 1)
UNITS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


def is_gaussian(a) -> bool:
    return type(a) is GaussInt


def norm(a) -> int:
    if type(a) is GaussInt:
        return a.norm()
    return a * a


def smod(a: int, z: int) -> int:
    """Symmetric remainder of ``a`` modulo ``z`` in the interval (-z/2, z/2]."""
    if z < 3:
        raise InvalidModulus(f"modulus must be >= 3, got {z}")
    r = a % z
    if 2 * r > z:
        r -= z
    return r


def gsmod(a, z: int) -> GaussInt:
    """Componentwise :func:`smod` of a Gaussian integer."""
    a = GaussInt.coerce(a)
    return GaussInt(smod(a.re, z), smod(a.im, z))


def scalar_smod(a, z: int):
    if type(a) is GaussInt:
        return gsmod(a, z)
    return smod(a, z)


def _round_half_down(n: int, d: int) -> int:
    # nearest integer to n/d (d > 0), ties toward -infinity
    return -((d - 2 * n) // (2 * d))


def gint_divmod(a, b):
    """Euclidean division in Z[i]: ``a = q*b + r`` with ``N(r) < N(b)``."""
    a, b = GaussInt.coerce(a), GaussInt.coerce(b)
    n = b.norm()
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    t = a * b.conjugate()
    q = GaussInt(_round_half_down(t.re, n), _round_half_down(t.im, n))
    return q, a - q * b


def normalizing_unit(a):
    """The unit ``u`` such that ``u*a`` has re > 0 and im >= 0 (or is zero)."""
    if type(a) is not GaussInt:
        return -1 if a < 0 else 1
    re, im = a.re, a.im
    if re > 0 and im >= 0:
        return UNITS[0]
    if re <= 0 and im > 0:
        return UNITS[3]
    if re < 0 and im <= 0:
        return UNITS[2]
    if re == 0 and im == 0:
        return UNITS[0]
    return UNITS[1]


def unit_normal(a):
    return a * normalizing_unit(a)


def gint_gcd(a, b):
    """Greatest common divisor in Z[i], unit-normalized.

    With two ``int`` arguments this is the ordinary non-negative gcd.

    >>> gint_gcd(GaussInt(2), GaussInt(1, 1))
    GaussInt(1, 1)
    """
    if type(a) is not GaussInt and type(b) is not GaussInt:
        return gcd(a, b)
    a, b = GaussInt.coerce(a), GaussInt.coerce(b)
    while b:
        _, r = gint_divmod(a, b)
        a, b = b, r
    return unit_normal(a)


def scalar_gcd(a, b):
    if type(a) is GaussInt or type(b) is GaussInt:
        return gint_gcd(a, b)
    return gcd(a, b)


def is_unit(a) -> bool:
    if type(a) is GaussInt:
        return a.norm() == 1
    return a == 1 or a == -1


def coeff_height(a) -> int:
    """Absolute value of a coefficient, rounded up for Gaussian integers."""
    if type(a) is not GaussInt:
        return abs(a)
    n = a.norm()
    s = isqrt(n)
    return s if s * s == n else s + 1


def exact_div(a, b):
    """Return ``q`` with ``a == q*b``, or ``None`` if ``b`` does not divide ``a``."""
    if type(a) is not GaussInt and type(b) is not GaussInt:
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        return None if r else q
    a, b = GaussInt.coerce(a), GaussInt.coerce(b)
    n = b.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero")
    t = a * b.conjugate()
    if t.re % n or t.im % n:
        return None
    return GaussInt(t.re // n, t.im // n)
