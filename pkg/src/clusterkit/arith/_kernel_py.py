"""Pure-Python term-arithmetic kernel.

Terms are plain dicts mapping exponent tuples to nonzero coefficients
(int, or Fraction when non-integral). The compiled kernel in _kernel_c.pyx
implements the same functions; kernel.py picks one at import time.
"""

from fractions import Fraction

BACKEND = "python"


def norm_coef(c):
    """Collapse Fractions with denominator 1 back to int."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def add_terms(A, B):
    out = dict(A)
    for e, c in B.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = norm_coef(s)
            else:
                del out[e]
    return out


def sub_terms(A, B):
    out = dict(A)
    for e, c in B.items():
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = norm_coef(s)
            else:
                del out[e]
    return out


def neg_terms(A):
    return {e: -c for e, c in A.items()}


def mul_terms(A, B):
    if len(A) > len(B):
        A, B = B, A
    out = {}
    items = list(B.items())
    for ea, ca in A.items():
        for eb, cb in items:
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e)
            if s is None:
                out[e] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    for e, c in out.items():
        if type(c) is Fraction and c.denominator == 1:
            out[e] = c.numerator
    return out


def scale_terms(A, coef):
    if not coef:
        return {}
    return {e: norm_coef(c * coef) for e, c in A.items()}


def mul_monomial(A, exps, coef):
    """A * coef * x^exps."""
    if not coef:
        return {}
    out = {}
    for e, c in A.items():
        out[tuple(x + y for x, y in zip(e, exps))] = norm_coef(c * coef)
    return out


def isub_scaled(R, exps, coef, B):
    """R -= coef * x^exps * B, in place. Returns R."""
    for e, c in B.items():
        key = tuple(x + y for x, y in zip(e, exps))
        s = R.get(key)
        if s is None:
            R[key] = norm_coef(-coef * c)
        else:
            s = s - coef * c
            if s:
                R[key] = norm_coef(s)
            else:
                del R[key]
    return R
