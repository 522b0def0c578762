# cython: boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernel; mirrors _purekernel exactly."""

__all__ = ["poly_mul", "poly_scale"]


def poly_mul(dict a, dict b, int p):
    """Multiply two sparse polynomials over F_p."""
    cdef dict out = {}
    cdef tuple ka, kb, key
    cdef long ca, cb, c
    cdef Py_ssize_t i, width
    cdef list buf
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        for kb, cb in b.items():
            width = len(ka)
            buf = [0] * width
            for i in range(width):
                buf[i] = <long> ka[i] + <long> kb[i]
            key = tuple(buf)
            c = (<long> out.get(key, 0) + ca * cb) % p
            if c:
                out[key] = c
            else:
                del out[key]
    return out


def poly_scale(dict a, int c, int p):
    """Multiply a sparse polynomial by the scalar c."""
    cdef dict out = {}
    cdef tuple k
    cdef long v
    c %= p
    if c == 0:
        return out
    if c == 1:
        return dict(a)
    for k, v in a.items():
        out[k] = v * c % p
    return out
