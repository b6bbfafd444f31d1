"""Exact scalar fields: the rationals, prime fields and the Gaussian rationals.

Every field object exposes the same small arithmetic interface so that the
linear-algebra kernel never needs to know which field it is working over.
Elements are plain Python values (``Fraction``, ``int`` mod p,
``GaussianRational``); they are immutable, so sharing them is always safe.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache


class GaussianRational:
    """An element re + im*i of Q(i) with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return QI.format(self)


class Field:
    """Common interface of the exact fields."""

    name: str
    characteristic: int
    has_conjugation = False

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<field {self.name}>"

    # Defaults suit fields whose elements support the arithmetic operators.
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def conj(self, a):
        return a

    def is_zero(self, a):
        return not a

    def elements(self):
        raise TypeError(f"{self.name} is infinite")


class RationalField(Field):
    name = "Q"
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __call__(self, value):
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def parse(self, text):
        text = str(text).strip()
        try:
            return Fraction(text)
        except ValueError:
            raise ValueError(f"cannot parse {text!r} as a rational") from None

    def format(self, a):
        return str(Fraction(a))


class PrimeField(Field):
    """GF(p); elements are ints in range(p)."""

    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime fields are limited to p < 2**31")
        self.p = p
        self.name = f"GF:{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __call__(self, value):
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def parse(self, text):
        text = str(text).strip()
        try:
            return self(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse {text!r} in {self.name}") from None

    def format(self, a):
        return str(a % self.p)

    def elements(self):
        return range(self.p)


_QI_TERM = re.compile(r"([+-]?)([^+-]*)")


class GaussianRationalField(Field):
    name = "Qi"
    characteristic = 0
    has_conjugation = True

    @property
    def zero(self):
        return GaussianRational(0, 0)

    @property
    def one(self):
        return GaussianRational(1, 0)

    @property
    def i(self):
        return GaussianRational(0, 1)

    def __call__(self, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex numbers are not exact")
        return GaussianRational(value, 0)

    def inv(self, a):
        return self(a).inverse()

    def conj(self, a):
        return self(a).conjugate()

    def parse(self, text):
        """Parse strings such as ``"2+5i"``, ``"-i"``, ``"3/4"``, ``"1/2-3/2i"``."""
        s = str(text).replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        re_part = Fraction(0)
        im_part = Fraction(0)
        pos = 0
        for m in _QI_TERM.finditer(s):
            if m.end() == m.start():
                continue
            sign, body = m.groups()
            if m.start() != pos or not body and not sign:
                raise ValueError(f"cannot parse {text!r} as a Gaussian rational")
            pos = m.end()
            factor = -1 if sign == "-" else 1
            try:
                if body.endswith("i"):
                    coeff = body[:-1]
                    if coeff.endswith("*"):
                        coeff = coeff[:-1]
                    im_part += factor * (Fraction(coeff) if coeff else 1)
                else:
                    re_part += factor * Fraction(body)
            except ValueError:
                raise ValueError(f"cannot parse {text!r} as a Gaussian rational") from None
        if pos != len(s):
            raise ValueError(f"cannot parse {text!r} as a Gaussian rational")
        return GaussianRational(re_part, im_part)

    def format(self, a):
        a = self(a)
        if not a.im:
            return str(a.re)
        im = "" if abs(a.im) == 1 else str(abs(a.im))
        if not a.re:
            return ("-" if a.im < 0 else "") + im + "i"
        return f"{a.re}{'-' if a.im < 0 else '+'}{im}i"


QQ = RationalField()
QI = GaussianRationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """Resolve ``"Q"``, ``"Qi"`` or ``"GF:p"``."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name == "Qi":
        return QI
    if name.startswith("GF:"):
        try:
            return GF(int(name[3:]))
        except ValueError as exc:
            raise ValueError(f"bad field {name!r}: {exc}") from None
    raise ValueError(f"unknown field {name!r}; expected Q, Qi or GF:p")
