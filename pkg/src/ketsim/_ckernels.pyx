# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled amplitude kernels.

All functions update ``amps`` in place. Callers validate shapes and targets;
nothing here checks bounds.

Complex products are written out on real and imaginary parts. Plain C complex
multiplication goes through a NaN-safe library call and is several times
slower.
"""

from libc.stdlib cimport malloc, free


def apply_1q(double complex[::1] amps, double complex[:, ::1] m, Py_ssize_t target):
    cdef Py_ssize_t half = amps.shape[0] >> 1
    cdef Py_ssize_t stride = (<Py_ssize_t>1) << target
    cdef Py_ssize_t low = stride - 1
    cdef Py_ssize_t g, i0, i1
    cdef double *p = <double *> &amps[0]
    cdef double *q = <double *> &m[0, 0]
    cdef double ar, ai, br, bi
    cdef double m00r = q[0], m00i = q[1], m01r = q[2], m01i = q[3]
    cdef double m10r = q[4], m10i = q[5], m11r = q[6], m11i = q[7]
    with nogil:
        for g in range(half):
            i0 = 2 * (((g & ~low) << 1) | (g & low))
            i1 = i0 + 2 * stride
            ar = p[i0]
            ai = p[i0 + 1]
            br = p[i1]
            bi = p[i1 + 1]
            p[i0] = m00r * ar - m00i * ai + m01r * br - m01i * bi
            p[i0 + 1] = m00r * ai + m00i * ar + m01r * bi + m01i * br
            p[i1] = m10r * ar - m10i * ai + m11r * br - m11i * bi
            p[i1 + 1] = m10r * ai + m10i * ar + m11r * bi + m11i * br


def apply_kq(double complex[::1] amps, double complex[:, ::1] m, Py_ssize_t[::1] targets):
    cdef Py_ssize_t k = targets.shape[0]
    cdef Py_ssize_t dim = (<Py_ssize_t>1) << k
    cdef Py_ssize_t outer = amps.shape[0] >> k
    cdef Py_ssize_t g, base, r, c, b, t, j, idx
    cdef double accr, acci, mr, mi
    cdef double *p = <double *> &amps[0]
    cdef double *mat = <double *> &m[0, 0]
    cdef Py_ssize_t *offsets = <Py_ssize_t *> malloc(dim * sizeof(Py_ssize_t))
    cdef Py_ssize_t *ordered = <Py_ssize_t *> malloc(k * sizeof(Py_ssize_t))
    cdef double *buf = <double *> malloc(2 * dim * sizeof(double))
    if offsets == NULL or ordered == NULL or buf == NULL:
        free(offsets)
        free(ordered)
        free(buf)
        raise MemoryError()
    try:
        for r in range(dim):
            offsets[r] = 0
            for b in range(k):
                if (r >> b) & 1:
                    offsets[r] |= (<Py_ssize_t>1) << targets[b]
        # insertion sort; k is tiny
        for b in range(k):
            ordered[b] = targets[b]
        for b in range(1, k):
            t = ordered[b]
            j = b - 1
            while j >= 0 and ordered[j] > t:
                ordered[j + 1] = ordered[j]
                j -= 1
            ordered[j + 1] = t
        with nogil:
            for g in range(outer):
                base = g
                for b in range(k):
                    t = ordered[b]
                    base = ((base >> t) << (t + 1)) | (base & (((<Py_ssize_t>1) << t) - 1))
                for c in range(dim):
                    idx = 2 * (base + offsets[c])
                    buf[2 * c] = p[idx]
                    buf[2 * c + 1] = p[idx + 1]
                for r in range(dim):
                    accr = 0.0
                    acci = 0.0
                    for c in range(dim):
                        mr = mat[2 * (r * dim + c)]
                        mi = mat[2 * (r * dim + c) + 1]
                        accr = accr + mr * buf[2 * c] - mi * buf[2 * c + 1]
                        acci = acci + mr * buf[2 * c + 1] + mi * buf[2 * c]
                    idx = 2 * (base + offsets[r])
                    p[idx] = accr
                    p[idx + 1] = acci
    finally:
        free(offsets)
        free(ordered)
        free(buf)
