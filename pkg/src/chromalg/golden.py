"""Exact arithmetic in Q[phi], phi the golden ratio with phi^2 = phi + 1.

Elements are a + b*phi with rational a, b.  Comparisons never touch
floating point: the sign of a + b*phi is decided by case analysis on the
signs of a and b, squaring to compare |a| with |b*phi| in the mixed case
(phi^2 = phi + 1 keeps everything rational).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class GoldenNum:
    a: Fraction
    b: Fraction

    @staticmethod
    def of(a, b=0):
        return GoldenNum(Fraction(a), Fraction(b))

    @staticmethod
    def phi():
        return GoldenNum(Fraction(0), Fraction(1))

    def __add__(self, other):
        other = _coerce(other)
        return GoldenNum(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNum(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        # (a + b phi)(c + e phi) = ac + be + (ae + bc + be) phi
        a, b, c, e = self.a, self.b, other.a, other.b
        return GoldenNum(a * c + b * e, a * e + b * c + b * e)

    __rmul__ = __mul__

    def inverse(self):
        # 1/(a + b phi) = (a + b - b phi) / (a^2 + ab - b^2)
        n = self.a * self.a + self.a * self.b - self.b * self.b
        if n == 0:
            raise ZeroDivisionError("zero element of Q[phi]")
        return GoldenNum((self.a + self.b) / n, -self.b / n)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = GoldenNum.of(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def sign(self):
        """Exact sign of the real number a + b*phi: -1, 0 or +1."""
        a, b = self.a, self.b
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Mixed signs: a + b*phi = (u + v*sqrt5)/2 with u = 2a+b, v = b;
        # compare u^2 against 5v^2 to decide which part dominates.
        u = 2 * a + b
        v = b
        if u >= 0 and v > 0:
            return 1
        if u <= 0 and v < 0:
            return -1
        # u and v have opposite signs, both nonzero here (v != 0; u == 0 was
        # covered above only when v decided).
        diff = u * u - 5 * v * v
        if diff == 0:
            return 0
        dominant_u = diff > 0
        s_u = 1 if u > 0 else -1
        return s_u if dominant_u else -s_u

    def abs(self):
        return self if self.sign() >= 0 else -self

    def to_json(self):
        return {"a": str(self.a), "b": str(self.b)}

    @staticmethod
    def from_json(obj):
        return GoldenNum(Fraction(obj["a"]), Fraction(obj["b"]))

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*phi"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*phi"


def _coerce(x):
    if isinstance(x, GoldenNum):
        return x
    return GoldenNum.of(x)


PHI = GoldenNum.phi()
PHI_PLUS_1 = GoldenNum.of(1, 1)
PHI_PLUS_2 = GoldenNum.of(2, 1)


def golden_eval(p, point):
    """Evaluate an integer polynomial exactly at phi+1 or phi+2.

    point is "phi_plus_1" or "phi_plus_2" (a GoldenNum is also accepted).
    """
    if point == "phi_plus_1":
        x = PHI_PLUS_1
    elif point == "phi_plus_2":
        x = PHI_PLUS_2
    elif isinstance(point, GoldenNum):
        x = point
    else:
        raise ValueError(f"unknown evaluation point {point!r}")
    acc = GoldenNum.of(0)
    for c in reversed(p.coeffs):
        acc = acc * x + GoldenNum.of(c)
    return acc


def golden_sign(x):
    """Sign of a GoldenNum as one of "neg", "zero", "pos"."""
    s = x.sign()
    return ("neg", "zero", "pos")[s + 1]
