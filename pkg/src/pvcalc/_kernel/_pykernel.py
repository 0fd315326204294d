"""Monomial-dict arithmetic in Z[u,v,w] / (w^d - uv), pure Python.

A polynomial in normal form (every monomial has min(u-exp, v-exp) = 0)
is a dict mapping an encoded key to a nonzero int coefficient.  The key
packs t = e_u - e_v and c = e_w >= 0 as  t * 2^KEY_SHIFT + c,  so key
addition adds both fields at once.  c stays far below 2^KEY_SHIFT for
anything this package produces.

Multiplying u^a v^b monomials creates min(a, b) stray uv pairs; each
folds into w^d.  In the (t, c) encoding the pair count of a product is
(|t1| + |t2| - |t1 + t2|) / 2, which is what pmul adds d times to c.
"""

IMPL_NAME = "python"

KEY_SHIFT = 32
KEY_MASK = (1 << KEY_SHIFT) - 1


def mkkey(t, c):
    return (t << KEY_SHIFT) | c


def key_t(key):
    return key >> KEY_SHIFT


def key_c(key):
    return key & KEY_MASK


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def pneg(a):
    return {k: -v for k, v in a.items()}


def psub(a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) - v
        if s:
            out[k] = s
        else:
            del out[k]
    return out


def pscale(a, n):
    if n == 0:
        return {}
    return {k: n * v for k, v in a.items()}


def pshift(a, e):
    # multiply by w^e, e >= 0: bumps only the c field
    return {k + e: v for k, v in a.items()}


def pcyclo_mul(a, k):
    # multiply by (w^k - 1)
    return psub(pshift(a, k), a)


def pwmin(a):
    return min(k & KEY_MASK for k in a)


def pwdiv(a, e):
    # divide by w^e; caller guarantees pwmin(a) >= e
    return {k - e: v for k, v in a.items()}


def pmul(a, b, d):
    out = {}
    for ka, va in a.items():
        ta = ka >> KEY_SHIFT
        for kb, vb in b.items():
            tb = kb >> KEY_SHIFT
            fold = (abs(ta) + abs(tb) - abs(ta + tb)) >> 1
            key = ka + kb + d * fold
            s = out.get(key, 0) + va * vb
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def pcyclo_div(a, k):
    """Exact quotient a / (w^k - 1), or None when not divisible.

    Multiplication by (w^k - 1) never mixes distinct t-components, so
    divisibility splits into one univariate synthetic division per t.
    """
    if not a:
        return {}
    comps = {}
    for key, v in a.items():
        comps.setdefault(key >> KEY_SHIFT, {})[key & KEY_MASK] = v
    out = {}
    for t, f in comps.items():
        deg = max(f)
        if deg < k:
            return None
        quo = {}
        for i in range(deg, k - 1, -1):
            coef = f.pop(i, 0)
            if coef:
                quo[i - k] = coef
                f[i - k] = f.get(i - k, 0) + coef
        if any(f.values()):
            return None
        base = t << KEY_SHIFT
        for c, v in quo.items():
            out[base | c] = v
    return out
