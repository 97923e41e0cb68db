# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the hot inner loops.

Same contracts as resverify._kernels_py; coefficients stay arbitrary
Python objects (mpq/mpz/Fraction/int), the win is C-level loop and dict
handling around the big-number arithmetic.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem
from cpython.object cimport PyObject

from resverify._kernels_py import ExponentOverflow


def mul_dicts(dict a, dict b, object guard):
    """Sparse product of two key->coeff dicts."""
    cdef dict out = {}
    cdef object ka, ca, kb, cb, key, cc
    cdef PyObject *hit
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = ka + kb
            if key & guard:
                raise ExponentOverflow("monomial exponent exceeds packed bound")
            hit = PyDict_GetItem(out, key)
            if hit != NULL:
                cc = <object>hit
                cc = cc + ca * cb
                if cc:
                    PyDict_SetItem(out, key, cc)
                else:
                    PyDict_DelItem(out, key)
            else:
                PyDict_SetItem(out, key, ca * cb)
    return out


def addmul_term(dict acc, object coeff, object key, dict b, object guard):
    """In-place acc += coeff * x^key * b."""
    cdef object kb, cb, kk, cc
    cdef PyObject *hit
    for kb, cb in b.items():
        kk = key + kb
        if kk & guard:
            raise ExponentOverflow("monomial exponent exceeds packed bound")
        hit = PyDict_GetItem(acc, kk)
        if hit != NULL:
            cc = <object>hit
            cc = cc + coeff * cb
            if cc:
                PyDict_SetItem(acc, kk, cc)
            else:
                PyDict_DelItem(acc, kk)
        else:
            PyDict_SetItem(acc, kk, coeff * cb)


def bareiss_det_int(rows):
    """Fraction-free determinant of a square integer matrix."""
    cdef Py_ssize_t n = len(rows)
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef object prev, pivot, head
    cdef list row_i, row_k
    prev = 1
    for k in range(n - 1):
        row_k = <list>m[k]
        if not row_k[k]:
            for i in range(k + 1, n):
                if (<list>m[i])[k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
            row_k = <list>m[k]
        pivot = row_k[k]
        for i in range(k + 1, n):
            row_i = <list>m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * (<list>m[n - 1])[n - 1]
