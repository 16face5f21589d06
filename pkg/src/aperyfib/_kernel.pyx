# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Fibonacci/Lucas kernels; same contract as ``_kernel_py``."""


def fib_lucas_pair(Py_ssize_t n):
    if n < 0:
        raise ValueError("index must be nonnegative")
    cdef object f = 0
    cdef object l = 2
    cdef object t
    cdef bint odd = False
    cdef int shift = 0
    cdef Py_ssize_t m = n
    while m:
        m >>= 1
        shift += 1
    while shift > 0:
        shift -= 1
        t = l * l
        f = f * l
        l = t + 2 if odd else t - 2
        if (n >> shift) & 1:
            t = f
            f = (t + l) >> 1
            l = (5 * t + l) >> 1
            odd = True
        else:
            odd = False
    return f, l


def fib_lucas_naive(Py_ssize_t n):
    if n < 0:
        raise ValueError("index must be nonnegative")
    cdef object f0 = 0
    cdef object f1 = 1
    cdef object t
    cdef Py_ssize_t i
    for i in range(n):
        t = f0 + f1
        f0 = f1
        f1 = t
    return f0, 2 * f1 - f0
