# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for sparse Laurent term dicts.

Same contract as _kernel_py: term dicts map (q-exponent, varsigma-exponent)
tuples to nonzero Python ints. Coefficients stay arbitrary-precision
objects; the speedup comes from typed loop plumbing only.
"""

BACKEND = "cython"


def kadd(dict a, dict b):
    """Termwise sum of two term dicts."""
    cdef dict out
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = c
        else:
            v = v + c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def ksub(dict a, dict b):
    cdef dict out
    if not b:
        return dict(a)
    out = dict(a)
    for k, c in b.items():
        v = out.get(k)
        if v is None:
            out[k] = -c
        else:
            v = v - c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def kneg(dict a):
    cdef dict out = {}
    for k, c in a.items():
        out[k] = -c
    return out


def kscale(dict a, n):
    """Multiply every coefficient by the int n."""
    cdef dict out = {}
    if n == 0:
        return out
    if n == 1:
        return dict(a)
    for k, c in a.items():
        out[k] = c * n
    return out


def kshift(dict a, long di, long dj, n):
    """Multiply by n * q^di * v^dj (n a nonzero int)."""
    cdef dict out = {}
    cdef long i, j
    for k, c in a.items():
        i = <long> (<tuple> k)[0]
        j = <long> (<tuple> k)[1]
        out[(i + di, j + dj)] = c * n
    return out


def kmul(dict a, dict b):
    """Convolution product of two term dicts."""
    cdef dict out = {}
    cdef long i1, j1, i2, j2
    cdef tuple ka, kb, key
    cdef list bitems
    if not a or not b:
        return out
    if len(b) > len(a):
        a, b = b, a
    bitems = list(b.items())
    for ka, c1 in a.items():
        i1 = <long> ka[0]
        j1 = <long> ka[1]
        for kb, c2 in bitems:
            key = ((i1 + <long> (<tuple> kb)[0]), (j1 + <long> (<tuple> kb)[1]))
            v = out.get(key)
            if v is None:
                out[key] = c1 * c2
            else:
                v = v + c1 * c2
                if v:
                    out[key] = v
                else:
                    del out[key]
    return out
