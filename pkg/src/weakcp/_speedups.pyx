# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for prime-field matrices.

Matrices are flat row-major lists of Python ints in 0..p-1.  Only the two
hot kernels live here (composition and Kronecker product); everything else,
including all rational arithmetic, stays in pure Python.
"""

from libc.stdlib cimport malloc, free


def matmul_mod(a, Py_ssize_t ar, Py_ssize_t ac, b, Py_ssize_t bc, long p):
    """Flat row-major product of an ar x ac and an ac x bc matrix mod p."""
    cdef Py_ssize_t i, j, k
    cdef long acc
    cdef long *fa = <long *> malloc(ar * ac * sizeof(long))
    cdef long *fb = <long *> malloc(ac * bc * sizeof(long))
    if fa == NULL or fb == NULL:
        if fa != NULL:
            free(fa)
        if fb != NULL:
            free(fb)
        raise MemoryError()
    try:
        for i in range(ar * ac):
            fa[i] = a[i]
        for i in range(ac * bc):
            fb[i] = b[i]
        out = [0] * (ar * bc)
        for i in range(ar):
            for j in range(bc):
                acc = 0
                for k in range(ac):
                    acc = (acc + fa[i * ac + k] * fb[k * bc + j]) % p
                out[i * bc + j] = acc
        return out
    finally:
        free(fa)
        free(fb)


def kron_mod(a, Py_ssize_t ar, Py_ssize_t ac, b, Py_ssize_t br, Py_ssize_t bc, long p):
    """Kronecker product of flat row-major matrices mod p."""
    cdef Py_ssize_t i1, j1, i2, j2, row, col
    cdef long av
    cdef Py_ssize_t rows = ar * br
    cdef Py_ssize_t cols = ac * bc
    out = [0] * (rows * cols)
    for i1 in range(ar):
        for j1 in range(ac):
            av = a[i1 * ac + j1]
            if av == 0:
                continue
            for i2 in range(br):
                row = (i1 * br + i2) * cols
                for j2 in range(bc):
                    out[row + j1 * bc + j2] = (av * b[i2 * bc + j2]) % p
    return out
