# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled univariate F_p kernels.

Same contract as `_ref`: polynomials are Python lists of ints, index =
degree, trailing zeros trimmed.  Coefficients are reduced mod p with
p < 2^31, so products fit in 64 bits.
"""

from libc.stdlib cimport malloc, free

IMPL = "compiled"


cdef unsigned long long *_to_c(list a) except NULL:
    cdef Py_ssize_t n = len(a)
    cdef unsigned long long *buf = <unsigned long long *> malloc((n if n else 1) * sizeof(unsigned long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _to_list(unsigned long long *buf, Py_ssize_t n):
    cdef Py_ssize_t m = n
    while m > 0 and buf[m - 1] == 0:
        m -= 1
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(m):
        out.append(buf[i])
    return out


cdef unsigned long long _inv_mod(unsigned long long a, unsigned long long p):
    # Fermat inverse; p prime, a != 0 mod p.
    cdef unsigned long long result = 1
    cdef unsigned long long base = a % p
    cdef unsigned long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def uni_trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def uni_add(list a, list b, unsigned long long p):
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    cdef Py_ssize_t i
    for i in range(len(b)):
        out[i] = (out[i] + b[i]) % p
    return uni_trim(out)


def uni_sub(list a, list b, unsigned long long p):
    cdef Py_ssize_t n = max(len(a), len(b))
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(len(a)):
        out[i] = a[i]
    for i in range(len(b)):
        out[i] = (out[i] - b[i] + p) % p
    return uni_trim(out)


def uni_scale(list a, c, unsigned long long p):
    cdef unsigned long long cc = c % p
    if cc == 0:
        return []
    cdef list out = []
    cdef Py_ssize_t i
    cdef unsigned long long ca
    for i in range(len(a)):
        ca = a[i]
        out.append((ca * cc) % p)
    return out


def uni_mul(list a, list b, unsigned long long p):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef unsigned long long *ca = _to_c(a)
    cdef unsigned long long *cb = _to_c(b)
    cdef Py_ssize_t nout = na + nb - 1
    cdef unsigned long long *out = <unsigned long long *> malloc(nout * sizeof(unsigned long long))
    if out == NULL:
        free(ca); free(cb)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef unsigned long long ai
    for i in range(nout):
        out[i] = 0
    for i in range(na):
        ai = ca[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] = (out[i + j] + ai * cb[j]) % p
    result = _to_list(out, nout)
    free(ca); free(cb); free(out)
    return result


def uni_divmod(list a, list b, unsigned long long p):
    if len(b) == 0:
        raise ZeroDivisionError("univariate division by zero")
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na < nb:
        return [], list(a)
    cdef unsigned long long *rem = _to_c(a)
    cdef unsigned long long *cb = _to_c(b)
    cdef Py_ssize_t db = nb - 1
    cdef unsigned long long inv = _inv_mod(cb[db], p)
    cdef Py_ssize_t nq = na - db
    cdef unsigned long long *quo = <unsigned long long *> malloc(nq * sizeof(unsigned long long))
    if quo == NULL:
        free(rem); free(cb)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef unsigned long long c, q
    for i in range(nq):
        quo[i] = 0
    for i in range(na - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = (c * inv) % p
        quo[i - db] = q
        for j in range(db + 1):
            rem[i - db + j] = (rem[i - db + j] + p * p - q * cb[j] % (p * p)) % p
    q_list = _to_list(quo, nq)
    r_list = _to_list(rem, db if db < na else na)
    free(rem); free(cb); free(quo)
    return q_list, r_list


def uni_rem(list a, list b, unsigned long long p):
    return uni_divmod(a, b, p)[1]


def uni_gcd(list a, list b, unsigned long long p):
    cdef list x = list(a)
    cdef list y = list(b)
    while y:
        x, y = y, uni_rem(x, y, p)
    if not x:
        return []
    return uni_scale(x, _inv_mod(x[len(x) - 1], p), p)


def uni_powmod(list a, e, list m, unsigned long long p):
    result = uni_rem([1], m, p)
    base = uni_rem(a, m, p)
    ee = int(e)
    while ee > 0:
        if ee & 1:
            result = uni_rem(uni_mul(result, base, p), m, p)
        base = uni_rem(uni_mul(base, base, p), m, p)
        ee >>= 1
    return result
