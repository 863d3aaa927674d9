"""Exact arithmetic in the 8th cyclotomic field.

Everything downstream (supermatrices, Fock vectors, operators) is linear
algebra over Q(z) with z a primitive 8th root of unity, so this is the only
module that defines numbers.  An element is stored as

    c0 + c1*z + c2*z^2 + c3*z^3,        z^4 = -1,

with exact rational coefficients.  The field contains every constant the
oscillator operators need: the imaginary unit i = z^2, a square root of i
(z itself, pinned to exp(i*pi/4)) and sqrt(2) = z - z^3.  No floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class Cyclotomic:
    """Immutable element of Q(zeta8)."""

    __slots__ = ("c",)

    c: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(
            self, "c", (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))
        )

    @classmethod
    def _make(cls, comps: tuple) -> Cyclotomic:
        # trusted constructor: comps must already be a 4-tuple of Fractions
        self = object.__new__(cls)
        object.__setattr__(self, "c", comps)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- conversions ------------------------------------------------------

    @classmethod
    def from_rational(cls, x) -> Cyclotomic:
        return cls._make((Fraction(x), _F0, _F0, _F0))

    @staticmethod
    def coerce(x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Cyclotomic):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Cyclotomic.from_rational(other)
        a, b = self.c, other.c
        return Cyclotomic._make((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Cyclotomic):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Cyclotomic.from_rational(other)
        a, b = self.c, other.c
        return Cyclotomic._make((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        a = self.c
        return Cyclotomic._make((-a[0], -a[1], -a[2], -a[3]))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            if other == 1:
                return self
            a = self.c
            return Cyclotomic._make((a[0] * other, a[1] * other, a[2] * other, a[3] * other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        # convolution reduced modulo z^4 = -1
        return Cyclotomic._make((
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
        ))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta8)")
            a = self.c
            return Cyclotomic._make((a[0] / other, a[1] / other, a[2] / other, a[3] / other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = ONE
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois(self, k: int) -> Cyclotomic:
        """The automorphism z -> z^k for odd k."""
        a0, a1, a2, a3 = self.c
        k %= 8
        if k == 1:
            return self
        if k == 3:
            return Cyclotomic._make((a0, a3, -a2, a1))
        if k == 5:
            return Cyclotomic._make((a0, -a1, a2, -a3))
        if k == 7:
            return Cyclotomic._make((a0, -a3, -a2, -a1))
        raise ValueError(f"no Galois automorphism z -> z^{k}")

    def conjugate(self) -> Cyclotomic:
        """Complex conjugation: z -> z^-1.  A ring involution."""
        return self.galois(7)

    def inverse(self) -> Cyclotomic:
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta8)")
        # product of the remaining Galois conjugates over the field norm
        cofactor = self.galois(3) * self.galois(5) * self.galois(7)
        norm = self * cofactor
        n0, n1, n2, n3 = norm.c
        assert n1 == 0 and n2 == 0 and n3 == 0, "norm must be rational"
        return cofactor / n0

    # -- predicates and views ---------------------------------------------

    def __bool__(self):
        a = self.c
        return bool(a[0] or a[1] or a[2] or a[3])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            a = self.c
            return a[1] == 0 and a[2] == 0 and a[3] == 0 and a[0] == other
        if isinstance(other, Cyclotomic):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def is_rational(self) -> bool:
        a = self.c
        return not (a[1] or a[2] or a[3])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def is_real(self) -> bool:
        """Fixed by conjugation, i.e. of the form a + b*sqrt(2)."""
        a = self.c
        return a[2] == 0 and a[1] == -a[3]

    def real_parts(self) -> tuple[Fraction, Fraction]:
        """(a, b) with self = a + b*sqrt(2), for real elements."""
        if not self.is_real():
            raise ValueError(f"{self} is not real")
        return self.c[0], self.c[1]

    def is_positive_real(self) -> bool:
        """Exact test a + b*sqrt(2) > 0 under the embedding sqrt(2) > 0."""
        a, b = self.real_parts()
        if a >= 0 and b >= 0:
            return bool(a or b)
        if a <= 0 and b <= 0:
            return False
        # opposite signs: compare a^2 with 2 b^2
        if a > 0:
            return a * a > 2 * b * b
        return 2 * b * b > a * a

    def denominator_lcm(self) -> int:
        a = self.c
        return lcm(a[0].denominator, a[1].denominator, a[2].denominator, a[3].denominator)

    # -- rendering --------------------------------------------------------

    def __str__(self):
        parts = []
        for coeff, name in zip(self.c, ("", "z", "z2", "z3")):
            if coeff == 0:
                continue
            if not name:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(name)
            elif coeff == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{coeff}*{name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"Cyclotomic({self.c[0]!r}, {self.c[1]!r}, {self.c[2]!r}, {self.c[3]!r})"

    def to_json(self):
        return {
            "str": str(self),
            "coeffs": [[f.numerator, f.denominator] for f in self.c],
        }


_F0 = Fraction(0)

ZERO = Cyclotomic()
ONE = Cyclotomic(1)
I = Cyclotomic(0, 0, 1, 0)       # the imaginary unit, z^2
QROOT = Cyclotomic(0, 1, 0, 0)   # square root of I, z itself
SQRT2 = Cyclotomic(0, 1, 0, -1)  # z - z^3
HALF = Cyclotomic(Fraction(1, 2))


def cyc(x) -> Cyclotomic:
    """Shorthand coercion from int/Fraction."""
    return Cyclotomic.coerce(x)
