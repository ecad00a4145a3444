# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled sweep kernels; contract identical to ``_pysweep``.

The inner loop evaluates postfix code against a flat Cayley table for every
assignment of k variables, walking assignments with an odometer so no Python
objects are touched inside the sweep.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from array import array

BACKEND = "compiled"


cdef inline long long _eval(const long long* code, Py_ssize_t code_len,
                            const long long* digits, long long n,
                            const long long* flat, long long* stack) noexcept nogil:
    cdef Py_ssize_t sp = 0
    cdef Py_ssize_t i
    cdef long long op, a, b
    for i in range(code_len):
        op = code[i]
        if op == -2:
            b = stack[sp - 1]
            a = stack[sp - 2]
            sp -= 2
            stack[sp] = flat[a * n + b]
            sp += 1
        elif op == -1:
            stack[sp] = 0
            sp += 1
        else:
            stack[sp] = digits[op]
            sp += 1
    return stack[0]


cdef struct _Buffers:
    long long* lhs
    long long* rhs
    long long* flat
    long long* digits
    long long* stack


cdef int _alloc(_Buffers* buf, object lhs_code, object rhs_code, object flat, long long k) except -1:
    cdef Py_ssize_t i
    cdef Py_ssize_t ln = len(lhs_code), rn = len(rhs_code), fn = len(flat)
    cdef Py_ssize_t depth = ln + rn + 2
    buf.lhs = <long long*> PyMem_Malloc(max(ln, 1) * sizeof(long long))
    buf.rhs = <long long*> PyMem_Malloc(max(rn, 1) * sizeof(long long))
    buf.flat = <long long*> PyMem_Malloc(max(fn, 1) * sizeof(long long))
    buf.digits = <long long*> PyMem_Malloc(max(k, 1) * sizeof(long long))
    buf.stack = <long long*> PyMem_Malloc(depth * sizeof(long long))
    try:
        if not (buf.lhs and buf.rhs and buf.flat and buf.digits and buf.stack):
            raise MemoryError()
        for i in range(ln):
            buf.lhs[i] = lhs_code[i]
        for i in range(rn):
            buf.rhs[i] = rhs_code[i]
        for i in range(fn):
            buf.flat[i] = flat[i]
        for i in range(k):
            buf.digits[i] = 0
    except BaseException:
        _free(buf)
        raise
    return 0


cdef void _free(_Buffers* buf) noexcept:
    PyMem_Free(buf.lhs)
    PyMem_Free(buf.rhs)
    PyMem_Free(buf.flat)
    PyMem_Free(buf.digits)
    PyMem_Free(buf.stack)


cdef inline bint _advance(long long* digits, long long k, long long n) noexcept nogil:
    # odometer increment, least-significant digit last; False on wrap-around
    cdef long long pos = k - 1
    while pos >= 0:
        digits[pos] += 1
        if digits[pos] < n:
            return True
        digits[pos] = 0
        pos -= 1
    return False


def first_divergence(lhs_code, rhs_code, long long n, flat, long long k):
    """Index of the first assignment where the two codes differ, or -1."""
    cdef _Buffers buf
    _alloc(&buf, lhs_code, rhs_code, flat, k)
    cdef Py_ssize_t ln = len(lhs_code), rn = len(rhs_code)
    cdef long long idx = 0, found = -1
    try:
        with nogil:
            while True:
                if _eval(buf.lhs, ln, buf.digits, n, buf.flat, buf.stack) != \
                        _eval(buf.rhs, rn, buf.digits, n, buf.flat, buf.stack):
                    found = idx
                    break
                idx += 1
                if not _advance(buf.digits, k, n):
                    break
        return found
    finally:
        _free(&buf)


def fingerprint(code, long long n, flat, long long k):
    """Values of ``code`` over the full assignment sweep, as packed bytes."""
    cdef long long total = 1
    cdef long long i
    for i in range(k):
        total *= n
    out = array("q", bytes(8 * total))
    cdef long long[::1] view = out
    cdef _Buffers buf
    _alloc(&buf, code, code, flat, k)
    cdef Py_ssize_t ln = len(code)
    cdef long long idx = 0
    try:
        with nogil:
            while True:
                view[idx] = _eval(buf.lhs, ln, buf.digits, n, buf.flat, buf.stack)
                idx += 1
                if not _advance(buf.digits, k, n):
                    break
        return out.tobytes()
    finally:
        _free(&buf)
