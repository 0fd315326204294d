# cython: language_level=3
"""Compiled twin of _pykernel: same dict-of-encoded-keys contract.

Coefficients remain Python ints (results routinely exceed machine
words); the win is C-level key arithmetic and loop bookkeeping in the
product and division kernels.
"""

from cpython.dict cimport PyDict_DelItem, PyDict_GetItem, PyDict_SetItem
from cpython.object cimport PyObject

IMPL_NAME = "c"

KEY_SHIFT = 32
KEY_MASK = (1 << 32) - 1

cdef long long SHIFT = 32
cdef long long MASK = (1LL << 32) - 1


def mkkey(t, c):
    return (t << KEY_SHIFT) | c


def key_t(key):
    return key >> KEY_SHIFT


def key_c(key):
    return key & KEY_MASK


def padd(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    cdef dict out = dict(a)
    cdef PyObject *ptr
    cdef object k, v, s
    for k, v in b.items():
        ptr = PyDict_GetItem(out, k)
        if ptr is NULL:
            PyDict_SetItem(out, k, v)
        else:
            s = <object> ptr + v
            if s:
                PyDict_SetItem(out, k, s)
            else:
                PyDict_DelItem(out, k)
    return out


def pneg(dict a):
    cdef dict out = {}
    cdef object k, v
    for k, v in a.items():
        PyDict_SetItem(out, k, -v)
    return out


def psub(dict a, dict b):
    cdef dict out = dict(a)
    cdef PyObject *ptr
    cdef object k, v, s
    for k, v in b.items():
        ptr = PyDict_GetItem(out, k)
        if ptr is NULL:
            PyDict_SetItem(out, k, -v)
        else:
            s = <object> ptr - v
            if s:
                PyDict_SetItem(out, k, s)
            else:
                PyDict_DelItem(out, k)
    return out


def pscale(dict a, n):
    cdef dict out = {}
    cdef object k, v
    if not n:
        return out
    for k, v in a.items():
        PyDict_SetItem(out, k, n * v)
    return out


def pshift(dict a, e):
    cdef dict out = {}
    cdef long long ee = e
    cdef long long kk
    cdef object k, v
    for k, v in a.items():
        kk = k
        PyDict_SetItem(out, kk + ee, v)
    return out


def pcyclo_mul(dict a, k):
    return psub(pshift(a, k), a)


def pwmin(dict a):
    cdef long long best = -1
    cdef long long kk, c
    cdef object k
    for k in a:
        kk = k
        c = kk & MASK
        if best < 0 or c < best:
            best = c
    return best


def pwdiv(dict a, e):
    cdef dict out = {}
    cdef long long ee = e
    cdef long long kk
    cdef object k, v
    for k, v in a.items():
        kk = k
        PyDict_SetItem(out, kk - ee, v)
    return out


cdef inline long long llabs(long long x):
    return -x if x < 0 else x


def pmul(dict a, dict b, d):
    cdef dict out = {}
    cdef long long dd = d
    cdef long long ka, kb, ta, tb, key
    cdef object oka, va, okb, vb, s, kobj
    cdef PyObject *ptr
    for oka, va in a.items():
        ka = oka
        ta = ka >> SHIFT
        for okb, vb in b.items():
            kb = okb
            tb = kb >> SHIFT
            key = ka + kb + dd * ((llabs(ta) + llabs(tb) - llabs(ta + tb)) >> 1)
            kobj = key
            ptr = PyDict_GetItem(out, kobj)
            if ptr is NULL:
                PyDict_SetItem(out, kobj, va * vb)
            else:
                s = <object> ptr + va * vb
                if s:
                    PyDict_SetItem(out, kobj, s)
                else:
                    PyDict_DelItem(out, kobj)
    return out


def pcyclo_div(dict a, k):
    if not a:
        return {}
    cdef long long kk = k
    cdef dict comps = {}
    cdef dict f, quo
    cdef PyObject *ptr
    cdef long long key, t, c, deg, i
    cdef object okey, v, coef, acc, tobj, cobj
    for okey, v in a.items():
        key = okey
        t = key >> SHIFT
        c = key & MASK
        tobj = t
        ptr = PyDict_GetItem(comps, tobj)
        if ptr is NULL:
            f = {}
            PyDict_SetItem(comps, tobj, f)
        else:
            f = <dict> ptr
        PyDict_SetItem(f, c, v)
    cdef dict out = {}
    for tobj, fo in comps.items():
        f = <dict> fo
        deg = -1
        for cobj in f:
            c = cobj
            if c > deg:
                deg = c
        if deg < kk:
            return None
        quo = {}
        for i in range(deg, kk - 1, -1):
            coef = f.pop(i, 0)
            if coef:
                PyDict_SetItem(quo, i - kk, coef)
                cobj = i - kk
                ptr = PyDict_GetItem(f, cobj)
                if ptr is NULL:
                    PyDict_SetItem(f, cobj, coef)
                else:
                    PyDict_SetItem(f, cobj, <object> ptr + coef)
        for v in f.values():
            if v:
                return None
        t = <long long> tobj
        key = t << SHIFT
        for cobj, v in quo.items():
            c = cobj
            PyDict_SetItem(out, key | c, v)
    return out
