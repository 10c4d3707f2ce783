"""Exact rational functions in the formal symbol q.

A polynomial is a tuple of int coefficients in ascending degree, as in
``(1, 0, -2)`` for 1 - 2q^2.  ``QRational`` keeps a reduced numerator and
denominator: their polynomial gcd is 1, the joint integer content is 1, and
the denominator has positive leading coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError

Poly = "tuple[int, ...]"

ZERO = ()
ONE = (1,)


def pnorm(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b):
    n = max(len(a), len(b))
    return pnorm(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))


def pneg(a):
    return tuple(-x for x in a)


def pmul(a, b):
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return pnorm(out)


def ppow(a, n):
    out = ONE
    for _ in range(n):
        out = pmul(out, a)
    return out


def peval(a, q):
    """Evaluate at an exact point (Fraction in, Fraction out)."""
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * q + c
    return acc


def pcontent(a):
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    return g


def pprimitive(a):
    g = pcontent(a)
    if g in (0, 1):
        return a
    return tuple(x // g for x in a)


def _fdivmod(a, b):
    """Polynomial divmod over Q; inputs int tuples, outputs Fraction tuples."""
    r = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        k = len(r) - len(b)
        f = r[-1] / lead
        q[k] = f
        for i, c in enumerate(b):
            r[k + i] -= f * c
        r.pop()
    return q, r


def pgcd(a, b):
    """Primitive integer gcd of two integer polynomials (positive leading coefficient)."""
    a, b = pnorm(a), pnorm(b)
    while b:
        _, rem = _fdivmod(a, b)
        den = 1
        for c in rem:
            den = den * c.denominator // gcd(den, c.denominator)
        a, b = b, pnorm(tuple(int(c * den) for c in rem))
        b = pprimitive(b)
    a = pprimitive(a)
    if a and a[-1] < 0:
        a = pneg(a)
    return a if a else ZERO


def pdiv_exact(a, b):
    q, rem = _fdivmod(a, b)
    if any(rem):
        raise InputError("inexact polynomial division")
    # Gauss: an integer polynomial divided by a primitive divisor stays integral
    return pnorm(tuple(int(c) for c in q))


@dataclass(frozen=True)
class QRational:
    """Reduced quotient of integer polynomials in q."""

    num: tuple
    den: tuple

    def __post_init__(self):
        if not self.den:
            raise InputError("zero denominator")

    @staticmethod
    def of(num, den=ONE):
        num, den = pnorm(tuple(num)), pnorm(tuple(den))
        if not den:
            raise InputError("zero denominator")
        if not num:
            return QRational(ZERO, ONE)
        g = pgcd(num, den)
        if len(g) > 1 or g != ONE:
            num = pdiv_exact(num, g)
            den = pdiv_exact(den, g)
        c = gcd(pcontent(num), pcontent(den))
        if c > 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        if den[-1] < 0:
            num, den = pneg(num), pneg(den)
        return QRational(num, den)

    @staticmethod
    def monomial(k, coeff=1):
        """coeff * q^k, with k any integer (negative powers allowed)."""
        if k >= 0:
            return QRational.of((0,) * k + (coeff,))
        return QRational.of((coeff,), (0,) * (-k) + (1,))

    @staticmethod
    def const(c):
        return QRational.of((int(c),))

    @staticmethod
    def one_minus_q_inverse():
        # (q - 1)/q
        return QRational.of((-1, 1), (0, 1))

    def __mul__(self, other):
        return QRational.of(pmul(self.num, other.num), pmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise InputError("division by zero rational function")
        return QRational.of(pmul(self.num, other.den), pmul(self.den, other.num))

    def __add__(self, other):
        return QRational.of(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __sub__(self, other):
        return self + QRational.of(pneg(other.num), other.den)

    def __pow__(self, n):
        if n < 0:
            return QRational.of(ONE) / self ** (-n)
        return QRational.of(ppow(self.num, n), ppow(self.den, n))

    def is_one(self):
        return self.num == ONE and self.den == ONE

    def is_polynomial(self):
        return self.den == ONE

    def evaluate(self, q):
        q = Fraction(q)
        d = peval(self.den, q)
        if d == 0:
            raise InputError(f"pole at q = {q}")
        return peval(self.num, q) / d

    def degree_difference(self):
        """deg(num) - deg(den); the limit exponent as q grows."""
        return (len(self.num) - 1) - (len(self.den) - 1)

    def leading_ratio(self):
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[-1], self.den[-1])

    def to_json(self):
        return {"num": list(self.num), "den": list(self.den)}

    @staticmethod
    def from_json(doc):
        try:
            return QRational.of(tuple(doc["num"]), tuple(doc["den"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad rational-function document: {exc}") from exc

    def __str__(self):
        def side(p):
            if not p:
                return "0"
            terms = []
            for i, c in enumerate(p):
                if c == 0:
                    continue
                mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
                if not mono:
                    terms.append(str(c))
                elif c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}{mono}")
            return " + ".join(terms).replace("+ -", "- ")

        if self.den == ONE:
            return side(self.num)
        return f"({side(self.num)}) / ({side(self.den)})"
