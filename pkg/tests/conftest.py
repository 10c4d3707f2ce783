"""Shared numeric oracles for the test suite.

High-precision evaluation of factor products and coefficient terms lives
here so symbolic results can be cross-checked against plain limits.
"""

import mpmath as mp
import pytest

from fdquot.mero import ConstSym, Cyclotomic

mp.mp.dps = 60


def frac2mp(f):
    return mp.mpf(f.numerator) / mp.mpf(f.denominator)


def coeff_value(coeff, q):
    """Numeric value of a gamma-free SymCoeff at a concrete q > 1."""
    q = mp.mpf(q)
    val = frac2mp(coeff.scalar)
    for atom, exp in coeff.powers:
        kind = atom[0]
        if kind == "logq":
            base = mp.log(q)
        elif kind == "2pi":
            base = 2 * mp.pi
        elif kind == "qpow":
            base = mp.power(q, frac2mp(atom[1]))
        elif kind == "cyclo":
            base = 1 - mp.power(q, -frac2mp(atom[1]))
        else:
            raise ValueError(f"non-numeric atom {atom}")
        val *= mp.power(base, exp)
    return val


def expr_value(expr, s, q):
    """Numeric value of a gamma-free factor product at complex or real s."""
    q = mp.mpf(q)
    val = mp.mpf(1)
    for f in expr:
        if isinstance(f, Cyclotomic):
            assert f.c == 1, "numeric evaluation needs concrete unit constants"
            x = frac2mp(f.a) * s + frac2mp(f.b)
            val *= mp.power(1 - mp.power(q, -x), f.exponent)
        elif isinstance(f, ConstSym):
            base = {"logq": mp.log(q), "2pi": 2 * mp.pi}.get(f.name)
            if base is None:
                base = frac2mp(__import__("fractions").Fraction(f.name))
            val *= mp.power(base, f.exponent)
        else:
            raise ValueError(f"non-numeric factor {f}")
    return val


def leading_estimate(expr, s0, order, q=2, eps="1e-25"):
    """Estimate the leading coefficient as value(s0 + eps) / eps^order."""
    eps = mp.mpf(eps)
    s = frac2mp(s0) + eps if hasattr(s0, "numerator") else mp.mpf(s0) + eps
    return expr_value(expr, s, q) / mp.power(eps, order)


def assert_close(a, b, rel="1e-9"):
    a, b = mp.mpf(a), mp.mpf(b)
    assert mp.fabs(a - b) <= mp.mpf(rel) * max(mp.fabs(a), mp.fabs(b), mp.mpf(1)), (a, b)


@pytest.fixture(scope="session")
def g2():
    from fdquot import builtin_datum

    return builtin_datum("G2")
