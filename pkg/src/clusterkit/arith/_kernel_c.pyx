# cython: language_level=3
"""Compiled term-arithmetic kernel. Same contract as _kernel_py."""

from fractions import Fraction

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM

BACKEND = "cython"


cdef inline tuple _add_exps(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = (<object>PyTuple_GET_ITEM(a, i)) + (<object>PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def norm_coef(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def add_terms(dict A, dict B):
    cdef dict out = dict(A)
    cdef object e, c, s
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


def sub_terms(dict A, dict B):
    cdef dict out = dict(A)
    cdef object e, c, s
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


def neg_terms(dict A):
    cdef dict out = {}
    cdef object e, c
    for e, c in A.items():
        out[e] = -c
    return out


def mul_terms(dict A, dict B):
    cdef dict out = {}
    cdef list items
    cdef object ea, ca, eb, cb, s, e, c
    cdef Py_ssize_t j, nb
    if len(A) > len(B):
        A, B = B, A
    items = list(B.items())
    nb = len(items)
    for ea, ca in A.items():
        for j in range(nb):
            eb, cb = <tuple>items[j]
            e = _add_exps(<tuple>ea, <tuple>eb)
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


def scale_terms(dict A, coef):
    cdef dict out = {}
    cdef object e, c
    if not coef:
        return out
    for e, c in A.items():
        out[e] = norm_coef(c * coef)
    return out


def mul_monomial(dict A, tuple exps, coef):
    cdef dict out = {}
    cdef object e, c
    if not coef:
        return out
    for e, c in A.items():
        out[_add_exps(<tuple>e, exps)] = norm_coef(c * coef)
    return out


def isub_scaled(dict R, tuple exps, coef, dict B):
    cdef object e, c, s, key
    for e, c in B.items():
        key = _add_exps(<tuple>e, exps)
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
