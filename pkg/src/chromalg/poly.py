"""Exact univariate polynomials over Z and their field of fractions.

A polynomial is a tuple of arbitrary-precision integer coefficients, lowest
degree first, with no trailing zeros, together with a variable tag ("Q" and
"d" are the tags used throughout; "x" appears for abstract minimal
polynomials).  The zero polynomial is the empty tuple and reports the
sentinel degree -1.

Rational functions are stored in lowest terms: numerator and denominator
share no polynomial factor, the integer contents of numerator and
denominator are coprime, and the denominator has positive leading
coefficient.  Structural equality therefore coincides with mathematical
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as int_gcd

from .errors import (
    DenominatorNotInvertible,
    InexactDivision,
    InvalidParameters,
    VariableMismatch,
)


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial with a variable tag."""

    coeffs: tuple
    var: str = "Q"

    @staticmethod
    def of(coeffs, var="Q"):
        return IntPoly(_trim(tuple(int(c) for c in coeffs)), var)

    @staticmethod
    def zero(var="Q"):
        return IntPoly((), var)

    @staticmethod
    def one(var="Q"):
        return IntPoly((1,), var)

    @staticmethod
    def x(var="Q"):
        return IntPoly((0, 1), var)

    @staticmethod
    def monomial(k, c=1, var="Q"):
        if c == 0:
            return IntPoly((), var)
        return IntPoly((0,) * k + (int(c),), var)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _check_var(self, other):
        if self.var != other.var:
            raise VariableMismatch(f"{self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.of((other,), self.var)
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(_trim(out), self.var)

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.of((other,), self.var)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly((), self.var)
            return IntPoly(tuple(c * other for c in self.coeffs), self.var)
        self._check_var(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(tuple(out), self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise InvalidParameters("negative power")
        result = IntPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by var**k (k >= 0)."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs, self.var)

    def content(self):
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, abs(c))
            if g == 1:
                return 1
        return g

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading() < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs), self.var)

    def divexact(self, other):
        """Exact division; raises InexactDivision on a nonzero remainder."""
        q, r = self._divmod_exact(other)
        if not r.is_zero():
            raise InexactDivision(f"{self} not divisible by {other}")
        return q

    def _divmod_exact(self, other):
        """Long division requiring every coefficient quotient to be integral."""
        self._check_var(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.leading()
        db = other.degree()
        if len(rem) - 1 < db:
            return IntPoly((), self.var), self
        q = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise InexactDivision("leading coefficient does not divide")
            f = c // lead
            q[i - db] = f
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] -= f * bc
        return IntPoly(_trim(q), self.var), IntPoly(_trim(rem), self.var)

    def rem(self, other):
        """Remainder of division; divisor must be monic or divide exactly."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial remainder by zero")
        if abs(other.leading()) == 1:
            _, r = self._divmod_exact(other)
            return r
        # Fall back to rational division and demand an integral remainder.
        q, r = self.qdivmod(other)
        rr = _frac_to_intpoly(r, self.var)
        if rr is None:
            raise InexactDivision("remainder is not integral")
        return rr

    def qdivmod(self, other):
        """Division over Q; returns coefficient lists of Fractions."""
        self._check_var(other)
        rem = [Fraction(c) for c in self.coeffs]
        db = other.degree()
        lead = Fraction(other.leading())
        if len(rem) - 1 < db:
            return [], rem
        q = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c / lead
            q[i - db] = f
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] -= f * bc
        while rem and not rem[-1]:
            rem.pop()
        return q, rem

    def gcd(self, other):
        """Primitive polynomial gcd (positive leading coefficient)."""
        self._check_var(other)
        a, b = self.primitive(), other.primitive()
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        while not b.is_zero():
            r = _pseudo_rem(a, b)
            a, b = b, r.primitive()
        return a.primitive()

    def compose(self, inner):
        """Substitute a polynomial for the variable (Horner)."""
        result = IntPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            result = result * inner + IntPoly.of((c,), inner.var)
        return result

    def rename(self, var):
        return IntPoly(self.coeffs, var)

    def eval_fraction(self, x):
        """Exact evaluation at a Fraction (or int)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x):
        return self.eval_fraction(x)

    def to_json(self):
        return {"var": self.var, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj):
        return IntPoly.of([int(s) for s in obj["coeffs"]], obj["var"])

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                v = self.var if i == 1 else f"{self.var}^{i}"
                body = v if mag == 1 else f"{mag}*{v}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def _pseudo_rem(a, b):
    """Pseudo-remainder prem(a, b): lc(b)^(da-db+1) * a mod b."""
    da, db = a.degree(), b.degree()
    rem = list(a.coeffs)
    lead = b.leading()
    for i in range(da, db - 1, -1):
        c = rem[i]
        for j in range(len(rem)):
            rem[j] *= lead
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[i - db + j] -= c * bc
        rem[i] = 0
    return IntPoly(_trim(rem), a.var)


def _frac_to_intpoly(frac_coeffs, var):
    out = []
    for c in frac_coeffs:
        if c.denominator != 1:
            return None
        out.append(int(c))
    return IntPoly(_trim(out), var)


def _fracs_to_primitive(frac_coeffs, var):
    """Clear denominators and strip content; canonical up to positive scale.

    The sign is preserved (only positive rational scaling), so results keep
    the sign of the true value as well as its zero set.
    """
    coeffs = list(frac_coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        return IntPoly((), var)
    den = 1
    for c in coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
        if g == 1:
            break
    return IntPoly(_trim([c // g for c in ints]), var)


def poly_arith(p, q, kind):
    """Shared entry point for polynomial arithmetic.

    kind is one of add, sub, mul, divexact, rem.
    """
    ops = {
        "add": lambda: p + q,
        "sub": lambda: p - q,
        "mul": lambda: p * q,
        "divexact": lambda: p.divexact(q),
        "rem": lambda: p.rem(q),
    }
    if kind not in ops:
        raise InvalidParameters(f"unknown kind {kind!r}")
    return ops[kind]()


# ---------------------------------------------------------------------------
# Chebyshev-type traces Delta_n and minimal polynomials of 2cos angles.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def delta(n):
    """Delta_n in the variable d:  Delta_0 = 1, Delta_1 = d,
    Delta_n = d*Delta_{n-1} - Delta_{n-2}.
    """
    if n < 0:
        raise InvalidParameters("delta requires n >= 0")
    if n == 0:
        return IntPoly.one("d")
    if n == 1:
        return IntPoly.x("d")
    return IntPoly.x("d") * delta(n - 1) - delta(n - 2)


@lru_cache(maxsize=None)
def cyclotomic(m):
    """The m-th cyclotomic polynomial, by repeated exact division of x^m - 1."""
    if m < 1:
        raise InvalidParameters("cyclotomic requires m >= 1")
    num = IntPoly.monomial(m, 1, "x") - IntPoly.one("x")
    for e in range(1, m):
        if m % e == 0:
            num = num.divexact(cyclotomic(e))
    return num


def minpoly_two_cos(k, m):
    """Minimal polynomial over Q of 2*cos(2*pi*k/m), in the variable x.

    The fraction k/m is gcd-reduced first.  m = 1, 2 give the rational
    values 2 and -2 (linear polynomials).  For m >= 3 the result is the
    monic irreducible polynomial obtained from the palindromic structure of
    the m-th cyclotomic polynomial via the substitution y + 1/y -> x.
    """
    if m <= 0:
        raise InvalidParameters("modulus must be positive")
    k %= m
    g = int_gcd(k, m) or m
    k, m = k // g, m // g
    if m == 1:
        return IntPoly.of((-2, 1), "x")
    if m == 2:
        return IntPoly.of((2, 1), "x")
    phi = cyclotomic(m)
    # phi is palindromic of even degree 2s; phi(y)/y^s = a_s + sum a_{s+j} (y^j + y^-j)
    s = phi.degree() // 2
    # p_j(x) = y^j + y^-j as a polynomial in x = y + 1/y
    p = [IntPoly.of((2,), "x"), IntPoly.x("x")]
    for j in range(2, s + 1):
        p.append(IntPoly.x("x") * p[j - 1] - p[j - 2])
    out = IntPoly.of((phi.coeffs[s],), "x")
    for j in range(1, s + 1):
        out = out + p[j] * phi.coeffs[s + j]
    return out


def minpoly_Q(j, n):
    """Monic minimal polynomial in Q of 2 + 2*cos(2*pi*j/(n+1)), 0 < j < n."""
    if not (0 < j < n):
        raise InvalidParameters("need 0 < j < n")
    base = minpoly_two_cos(j, n + 1)
    return base.compose(IntPoly.of((-2, 1), "Q")).rename("Q")


# ---------------------------------------------------------------------------
# Rational functions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RatFun:
    """Quotient of integer polynomials in canonical lowest-terms form."""

    num: IntPoly
    den: IntPoly

    @staticmethod
    def of(num, den=None):
        if den is None:
            den = IntPoly.one(num.var)
        num._check_var(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return RatFun(num, IntPoly.one(num.var))
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.divexact(g)
            den = den.divexact(g)
        cn, cd = num.content(), den.content()
        c = int_gcd(cn, cd)
        if den.leading() < 0:
            c = -c
        if c != 1:
            num = IntPoly(tuple(x // c for x in num.coeffs), num.var)
            den = IntPoly(tuple(x // c for x in den.coeffs), den.var)
        return RatFun(num, den)

    @staticmethod
    def from_poly(p):
        return RatFun(p, IntPoly.one(p.var))

    @staticmethod
    def const(c, var="d"):
        return RatFun.of(IntPoly.of((c,), var))

    @staticmethod
    def zero(var="d"):
        return RatFun(IntPoly.zero(var), IntPoly.one(var))

    @staticmethod
    def one(var="d"):
        return RatFun(IntPoly.one(var), IntPoly.one(var))

    @property
    def var(self):
        return self.num.var

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFun.const(other, self.var)
        return RatFun.of(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFun.const(other, self.var)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RatFun.of(self.num * other, self.den)
        return RatFun.of(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFun.const(other, self.var)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun.of(self.num * other.den, self.den * other.num)

    def inverse(self):
        return RatFun.one(self.var) / self

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(obj):
        return RatFun.of(IntPoly.from_json(obj["num"]),
                         IntPoly.from_json(obj["den"]))

    def __str__(self):
        if self.den == IntPoly.one(self.var):
            return str(self.num)
        return f"({self.num})/({self.den})"


def _poly_invmod(a, m):
    """Inverse of a modulo m over Q[x], as Fraction coefficients.

    Raises DenominatorNotInvertible when gcd(a, m) is non-constant.
    """
    # Extended Euclid over Q[x].
    r0, r1 = [Fraction(c) for c in m.coeffs], [Fraction(c) for c in a.coeffs]
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _frac_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
    if len(r0) != 1:
        raise DenominatorNotInvertible(
            "denominator shares a factor with the modulus")
    inv_lead = 1 / r0[0]
    return [c * inv_lead for c in s0]


def _frac_divmod(a, b):
    rem = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        f = c / b[-1]
        q[i - db] = f
        for j, bc in enumerate(b):
            rem[i - db + j] -= f * bc
    while rem and not rem[-1]:
        rem.pop()
    return q, rem


def _frac_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    while out and not out[-1]:
        out.pop()
    return out


def _frac_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    while out and not out[-1]:
        out.pop()
    return out


def ratfun_reduce_mod(r, m):
    """Reduce a rational function modulo a polynomial m in the same variable.

    Computes num * den^{-1} mod m and returns the primitive integer
    representative (canonical up to a positive rational scale, so the result
    is zero exactly when r vanishes at every root of m).  Raises
    DenominatorNotInvertible when the denominator shares a factor with m,
    signalling a pole at the special value.
    """
    r.num._check_var(m)
    if r.is_zero():
        return IntPoly.zero(m.var)
    inv = _poly_invmod(r.den, m)
    prod = _frac_mul([Fraction(c) for c in r.num.coeffs], inv)
    _, red = _frac_divmod(prod, [Fraction(c) for c in m.coeffs])
    return _fracs_to_primitive(red, m.var)


def poly_q_to_d(p):
    """Substitute Q = d^2 into a polynomial in Q."""
    out = [0] * (2 * len(p.coeffs))
    for i, c in enumerate(p.coeffs):
        out_i = 2 * i
        if c:
            out[out_i] = c
    return IntPoly(_trim(out), "d")


def poly_d_even_to_q(p):
    """Rewrite an even polynomial in d as a polynomial in Q = d^2."""
    for i, c in enumerate(p.coeffs):
        if c and i % 2:
            raise InvalidParameters("polynomial is not even in d")
    return IntPoly(_trim(list(p.coeffs[0::2])), "Q")


def lcm_polys(polys):
    """Least common multiple of a sequence of polynomials (primitive)."""
    acc = None
    for p in polys:
        if acc is None:
            acc = p.primitive()
            continue
        g = acc.gcd(p)
        acc = (acc * p.primitive()).divexact(g)
    return acc if acc is not None else None


def falling_factorial(n, var="Q"):
    """Q(Q-1)...(Q-n+1), the chromatic polynomial of the complete graph K_n."""
    out = IntPoly.one(var)
    for i in range(n):
        out = out * IntPoly.of((-i, 1), var)
    return out
