"""Exact coefficient fields: the rationals and prime fields F_p.

Rational scalars are plain ``fractions.Fraction`` values (always reduced,
positive denominator).  Prime-field scalars are ``Fp`` instances carrying
their modulus.  A field object (``QQ`` or ``PrimeField(p)``) converts
integers, provides constants and inversion, and renders coefficients in
the canonical "p/q" form.
"""

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch


class Fp:
    """Element of F_p; arithmetic stays reduced mod p."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _check(self, other):
        if not isinstance(other, Fp) or other.p != self.p:
            raise FieldMismatch("mixed-field operands: F_%d vs %r" % (self.p, other))

    def __add__(self, other):
        if isinstance(other, int):
            other = Fp(other, self.p)
        self._check(other)
        return Fp(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Fp(other, self.p)
        self._check(other)
        return Fp(self.value - other.value, self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Fp(other, self.p)
        self._check(other)
        return Fp(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero("inverse of 0 in F_%d" % self.p)
        return Fp(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        return isinstance(other, Fp) and other.p == self.p and other.value == self.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "Fp(%d, %d)" % (self.value, self.p)

    def __str__(self):
        return str(self.value)


class Rationals:
    """The field Q; scalars are Fraction."""

    name = "Q"

    def __call__(self, n):
        return Fraction(n)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def inv(self, c):
        if c == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(c)

    def contains(self, c):
        return isinstance(c, (Fraction, int))

    def coerce(self, c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        raise FieldMismatch("not a rational scalar: %r" % (c,))

    def render(self, c):
        if c.denominator == 1:
            return str(c.numerator)
        return "%d/%d" % (c.numerator, c.denominator)

    def random(self, rng, lo=-9, hi=9):
        return Fraction(rng.randint(lo, hi))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for a prime p < 2**31."""

    def __init__(self, p):
        if not (1 < p < 2**31):
            raise ValueError("modulus out of range: %d" % p)
        if any(p % q == 0 for q in range(2, min(p, 1 + int(p**0.5) + 1)) if q < p):
            raise ValueError("modulus is not prime: %d" % p)
        self.p = p
        self.name = "F%d" % p

    def __call__(self, n):
        return Fp(n, self.p)

    @property
    def zero(self):
        return Fp(0, self.p)

    @property
    def one(self):
        return Fp(1, self.p)

    def inv(self, c):
        return self.coerce(c).inverse()

    def contains(self, c):
        return isinstance(c, Fp) and c.p == self.p or isinstance(c, int)

    def coerce(self, c):
        if isinstance(c, Fp):
            if c.p != self.p:
                raise FieldMismatch("F_%d scalar in F_%d context" % (c.p, self.p))
            return c
        if isinstance(c, int):
            return Fp(c, self.p)
        raise FieldMismatch("not an F_%d scalar: %r" % (self.p, c))

    def render(self, c):
        return str(c.value)

    def random(self, rng, lo=None, hi=None):
        return Fp(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


QQ = Rationals()


def field_by_name(name):
    """Parse "Q" or "F<p>" into a field object."""
    if name == "Q":
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise ValueError("unknown field name: %r" % name)
