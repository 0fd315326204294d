"""Exact arithmetic in the realization ring of level d.

The ring is Z[u, v, w] / (w^d - uv), localized at w and at every
(w^k - 1).  Writing L for the class of the affine line, the generators
satisfy L = w^d, so w plays the role of L^(1/d) and u, v are the two
Hodge variables with uv = L.  Every class-like quantity in this package
(ambient surfaces, curves, strata) enters through its Hodge polynomial,
so equality verdicts here are verdicts about Hodge realizations.

Elements are stored as  num / (w^wpow * prod (w^k - 1))  with num a
polynomial in normal form (no monomial contains both u and v: uv pairs
are folded into w^d) and the denominator kept as data, never expanded.
Reduction is lazy: exact trial division of num by each stored factor
plus stripping common powers of w.  The ring is an integral domain
(w^d - uv is linear, hence irreducible, in u), so a difference over a
common denominator is zero exactly when the element is zero; no gcd
machinery is needed for an exact is_zero.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from . import _kernel as K
from .errors import (
    ChiDomainError,
    ContextError,
    ExponentError,
    LogPoleError,
    ParseError,
)

__all__ = [
    "HodgePoly", "RingElem", "zero", "one", "from_int", "from_hodge",
    "lpow", "lfactor", "is_zero", "ring_sum", "euler_realize",
    "numeric_eval", "render", "render_hodge", "legend", "parse_ring_elem",
]


# ---------------------------------------------------------------------------
# Hodge polynomials


class HodgePoly:
    """Polynomial in the Hodge variables u, v with int coefficients.

    INPUT: a dict {(eu, ev): coeff} or an iterable of (eu, ev, coeff)
    triples.  Instances are immutable by convention; all operations
    return new objects.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        data = {}
        if isinstance(terms, HodgePoly):
            data.update(terms._terms)
        elif isinstance(terms, dict):
            for (eu, ev), coeff in terms.items():
                if coeff:
                    data[(int(eu), int(ev))] = data.get((eu, ev), 0) + coeff
        else:
            for eu, ev, coeff in terms:
                if coeff:
                    key = (int(eu), int(ev))
                    s = data.get(key, 0) + coeff
                    if s:
                        data[key] = s
                    else:
                        del data[key]
        for (eu, ev), coeff in list(data.items()):
            if eu < 0 or ev < 0:
                raise ValueError("negative exponent in Hodge polynomial")
            if not coeff:
                del data[(eu, ev)]
        self._terms = data
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def scalar(cls, n):
        return cls({(0, 0): int(n)})

    def items(self):
        return self._terms.items()

    def coeff(self, eu, ev):
        return self._terms.get((eu, ev), 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = HodgePoly.scalar(other)
        if not isinstance(other, HodgePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = HodgePoly.scalar(other)
        if not isinstance(other, HodgePoly):
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            s = out.get(key, 0) + coeff
            if s:
                out[key] = s
            else:
                del out[key]
        res = HodgePoly.__new__(HodgePoly)
        res._terms = out
        res._hash = None
        return res

    __radd__ = __add__

    def __neg__(self):
        res = HodgePoly.__new__(HodgePoly)
        res._terms = {k: -v for k, v in self._terms.items()}
        res._hash = None
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = HodgePoly.scalar(other)
        if not isinstance(other, HodgePoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return HodgePoly.zero()
            res = HodgePoly.__new__(HodgePoly)
            res._terms = {k: other * v for k, v in self._terms.items()}
            res._hash = None
            return res
        if not isinstance(other, HodgePoly):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        res = HodgePoly.__new__(HodgePoly)
        res._terms = out
        res._hash = None
        return res

    __rmul__ = __mul__

    def evaluate(self, u, v):
        """Exact value at (u, v); accepts ints or Fractions."""
        total = 0
        for (eu, ev), coeff in self._terms.items():
            total += coeff * u ** eu * v ** ev
        return total

    def euler(self):
        """Evaluation at u = v = 1 (the topological Euler number)."""
        return sum(self._terms.values())

    def is_symmetric(self):
        return all(
            self._terms.get((b, a), 0) == c for (a, b), c in self._terms.items()
        )

    def __str__(self):
        if not self._terms:
            return "0"
        keys = sorted(self._terms, key=lambda k: (k[0] + k[1], k[0]), reverse=True)
        parts = []
        for i, key in enumerate(keys):
            coeff = self._terms[key]
            frag = _uv_monomial(key[0], key[1], abs(coeff))
            if i == 0:
                parts.append(("-" if coeff < 0 else "") + frag)
            else:
                parts.append((" - " if coeff < 0 else " + ") + frag)
        return "".join(parts)

    def __repr__(self):
        return f"HodgePoly({self})"


def _uv_monomial(eu, ev, coeff):
    vars_ = []
    if eu:
        vars_.append("u" if eu == 1 else f"u^{eu}")
    if ev:
        vars_.append("v" if ev == 1 else f"v^{ev}")
    if not vars_:
        return str(coeff)
    if coeff != 1:
        vars_.insert(0, str(coeff))
    return "*".join(vars_)


# ---------------------------------------------------------------------------
# Ring elements


def _as_exponent(a, d):
    """a*d as an int, or raise."""
    m = Fraction(a) * d
    if m.denominator != 1:
        raise ExponentError(f"exponent {a} is not a multiple of 1/{d}")
    return int(m)


def _normalize(d, num, wpow, cyclo):
    """Reduce stored data: trial-divide by the recorded cyclotomic
    factors (largest k first; a failed k can never start dividing again
    after a further division, so one descending pass suffices) and
    strip powers of w shared by numerator and denominator."""
    if not num:
        return {}, 0, ()
    counts = Counter(cyclo)
    for k in sorted(counts, reverse=True):
        while counts[k]:
            quo = K.pcyclo_div(num, k)
            if quo is None:
                break
            num = quo
            counts[k] -= 1
    if wpow:
        s = min(wpow, K.pwmin(num))
        if s:
            num = K.pwdiv(num, s)
            wpow -= s
    cy = []
    for k in sorted(counts):
        cy.extend([k] * counts[k])
    return num, wpow, tuple(cy)


class RingElem:
    """One element of the level-d realization ring.

    Low-level constructor: takes numerator dict (kernel encoding),
    denominator w-power and (w^k - 1) factor multiset, and normalizes.
    Prefer from_hodge / from_int / lpow / lfactor.  Instances are
    immutable by convention.
    """

    __slots__ = ("d", "num", "wpow", "cyclo")

    def __init__(self, d, num, wpow=0, cyclo=()):
        if d < 1:
            raise ContextError(f"invalid context d = {d}")
        if wpow < 0 or any(k < 1 for k in cyclo):
            raise ValueError("invalid denominator data")
        num, wpow, cyclo = _normalize(d, dict(num), wpow, tuple(cyclo))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "wpow", wpow)
        object.__setattr__(self, "cyclo", cyclo)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    # -- helpers

    def _check(self, other):
        if self.d != other.d:
            raise ContextError(f"mixed contexts d = {self.d} and d = {other.d}")

    def _coerce(self, other):
        if isinstance(other, int):
            return from_int(other, self.d)
        if isinstance(other, RingElem):
            self._check(other)
            return other
        return None

    def is_zero(self):
        return not self.num

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_sum([self, other])

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.d, K.pneg(self.num), self.wpow, self.cyclo)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_sum([self, -other])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ring_sum([other, -self])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(
            self.d,
            K.pmul(self.num, other.num, self.d),
            self.wpow + other.wpow,
            self.cyclo + other.cyclo,
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = one(self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"RingElem({render(self)!r}, d={self.d})"


def zero(d):
    return RingElem(d, {})


def one(d):
    return RingElem(d, {0: 1})


def from_int(n, d):
    return RingElem(d, {0: int(n)} if n else {})


def from_hodge(h, d):
    """Embed a Hodge polynomial: u stays u, v stays v, uv pairs fold
    into w^d."""
    num = {}
    for (eu, ev), coeff in h.items():
        m = min(eu, ev)
        key = K.mkkey(eu - ev, d * m)
        num[key] = num.get(key, 0) + coeff
    return RingElem(d, {k: v for k, v in num.items() if v})


def lpow(a, d):
    """L^a = w^(a*d); a may be a negative or fractional exponent as
    long as a*d is an integer."""
    m = _as_exponent(a, d)
    if m >= 0:
        return RingElem(d, {K.mkkey(0, m): 1})
    return RingElem(d, {0: 1}, wpow=-m)


@lru_cache(maxsize=None)
def _lfactor_cached(m, d):
    # (L - 1) / (L^(m/d) - 1) with m = a*d != 0
    top = {K.mkkey(0, d): 1, 0: -1}
    if m > 0:
        return RingElem(d, top, cyclo=(m,))
    # (w^m - 1) with m < 0 equals -(w^|m| - 1) / w^|m|
    num = K.pneg(K.pshift(top, -m))
    return RingElem(d, num, cyclo=(-m,))


def lfactor(a, d):
    """(L - 1) / (L^a - 1).  A zero exponent is a logarithmic pole."""
    m = _as_exponent(a, d)
    if m == 0:
        raise LogPoleError("lfactor(0): logarithmic pole in the first sum")
    return _lfactor_cached(m, d)


def is_zero(x):
    return x.is_zero()


def ring_sum(terms, d=None):
    """Sum over one common denominator (per-factor max multiplicity,
    i.e. an lcm).  Cheaper than folding with + when many terms share
    factors, and associative/commutative on stored data."""
    terms = list(terms)
    if not terms:
        if d is None:
            raise ContextError("empty sum needs an explicit d")
        return zero(d)
    d0 = terms[0].d
    for t in terms:
        if t.d != d0:
            raise ContextError(f"mixed contexts d = {d0} and d = {t.d}")
    if d is not None and d != d0:
        raise ContextError(f"mixed contexts d = {d} and d = {d0}")
    if len(terms) == 1:
        return terms[0]
    wp = max(t.wpow for t in terms)
    union = Counter()
    for t in terms:
        union |= Counter(t.cyclo)
    acc = {}
    for t in terms:
        num = t.num
        if not num:
            continue
        if wp > t.wpow:
            num = K.pshift(num, wp - t.wpow)
        missing = union - Counter(t.cyclo)
        for k, mult in missing.items():
            for _ in range(mult):
                num = K.pcyclo_mul(num, k)
        acc = K.padd(acc, num)
    cy = []
    for k in sorted(union):
        cy.extend([k] * union[k])
    return RingElem(d0, acc, wp, tuple(cy))


# ---------------------------------------------------------------------------
# Specializations


def euler_realize(x):
    """Euler-characteristic value in Q.

    Substitutes u -> s^d, v -> 1, w -> s and takes the limit s -> 1:
    with r denominator factors the numerator must be divisible by
    (s - 1)^r, and the value is the quotient at s = 1 divided by the
    product of the factor indices k.  Everything reachable through the
    public constructors admits this limit; the error guards hand-built
    representatives like a bare 1/(w - 1).
    """
    if not x.num:
        return Fraction(0)
    d = x.d
    deg = 0
    for key in x.num:
        t = K.key_t(key)
        e = K.key_c(key) + (d * t if t > 0 else 0)
        if e > deg:
            deg = e
    coeffs = [0] * (deg + 1)
    for key, coeff in x.num.items():
        t = K.key_t(key)
        e = K.key_c(key) + (d * t if t > 0 else 0)
        coeffs[e] += coeff
    for _ in range(len(x.cyclo)):
        if sum(coeffs) != 0:
            raise ChiDomainError("no Euler specialization for this representative")
        # exact quotient by (s - 1): suffix sums
        acc = 0
        quo = [0] * (len(coeffs) - 1) if len(coeffs) > 1 else [0]
        for i in range(len(coeffs) - 1, 0, -1):
            acc += coeffs[i]
            quo[i - 1] = acc
        coeffs = quo
    den = 1
    for k in x.cyclo:
        den *= k
    return Fraction(sum(coeffs), den)


def _int_root(q, d):
    """Integer m >= 2 with m^d = q, or None."""
    if d == 1:
        return q
    m = round(q ** (1.0 / d))
    for cand in (m - 1, m, m + 1):
        if cand >= 2 and cand ** d == q:
            return cand
    return None


class _QExt:
    """Q[x] / (x^d - q) with dense Fraction-coefficient vectors."""

    def __init__(self, d, q):
        self.d = d
        self.q = q

    def scalar(self, a):
        vec = [Fraction(0)] * self.d
        vec[0] = Fraction(a)
        return vec

    def xpow(self, e):
        # q is a unit: x^-1 = x^(d-1)/q
        d, q = self.d, self.q
        vec = [Fraction(0)] * d
        alpha, beta = divmod(e, d)
        vec[beta] = Fraction(q) ** alpha
        return vec

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def scale(self, a, c):
        return [x * c for x in a]

    def mul(self, a, b):
        d, q = self.d, self.q
        out = [Fraction(0)] * d
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                k = i + j
                if k >= d:
                    out[k - d] += x * y * q
                else:
                    out[k] += x * y
        return out

    def inv(self, a):
        # extended Euclid against x^d - q in Q[x]
        d, q = self.d, self.q
        mod = [Fraction(-q)] + [Fraction(0)] * (d - 1) + [Fraction(1)]
        r0, r1 = mod, list(a) + [Fraction(0)]
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            while len(r1) > 1 and not r1[-1]:
                r1.pop()
            quo, rem = _polydivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _polysub(s0, _polymul(quo, s1))
        while len(r0) > 1 and not r0[-1]:
            r0.pop()
        if len(r0) != 1 or not r0[0]:
            raise ZeroDivisionError("denominator not invertible mod x^d - q")
        inv_scale = 1 / r0[0]
        out = [c * inv_scale for c in s0]
        out = out[:d] + [Fraction(0)] * max(0, d - len(out))
        # s0 may have degree >= d only if a was unreduced; it is not
        return out[:d]


def _polydivmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if db < 0 or not lb:
        raise ZeroDivisionError
    quo = [Fraction(0)] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c / lb
            quo[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return quo, a[:db] if db else [Fraction(0)]


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


def numeric_eval(x, q):
    """Point-count style evaluation at u = q, v = 1, w = x with
    x^d = q, as a coefficient vector over Q.

    When q is a perfect d-th power m^d the evaluation factors further
    through x -> m and a single rational comes back ([value]); else
    the result is the length-d coefficient vector mod x^d - q.
    """
    d = x.d
    q = int(q)
    if q < 2:
        raise ValueError("q must be an integer >= 2")
    m = _int_root(q, d)
    if m is not None:
        numval = 0
        for key, coeff in x.num.items():
            t = K.key_t(key)
            c = K.key_c(key)
            numval += coeff * m ** c * (q ** t if t > 0 else 1)
        denval = m ** x.wpow
        for k in x.cyclo:
            denval *= m ** k - 1
        return [Fraction(numval, denval)]
    ext = _QExt(d, q)
    num = ext.scalar(0)
    for key, coeff in x.num.items():
        t = K.key_t(key)
        c = K.key_c(key)
        term = ext.xpow(c)
        scale = Fraction(coeff) * (Fraction(q) ** t if t > 0 else 1)
        num = ext.add(num, ext.scale(term, scale))
    den = ext.xpow(x.wpow)
    for k in x.cyclo:
        den = ext.mul(den, ext.add(ext.xpow(k), ext.scalar(-1)))
    return ext.mul(num, ext.inv(den))


# ---------------------------------------------------------------------------
# Rendering


def legend(d):
    return "w = L" if d == 1 else f"w = L^(1/{d})"


def _w_monomial(t, c, coeff):
    vars_ = []
    if t > 0:
        vars_.append("u" if t == 1 else f"u^{t}")
    elif t < 0:
        vars_.append("v" if t == -1 else f"v^{-t}")
    if c:
        vars_.append("w" if c == 1 else f"w^{c}")
    if not vars_:
        return str(coeff)
    if coeff != 1:
        vars_.insert(0, str(coeff))
    return "*".join(vars_)


def _render_num(num, monomial):
    keys = sorted(num, key=lambda k: (K.key_c(k), K.key_t(k)), reverse=True)
    negate = all(num[k] < 0 for k in keys)
    parts = []
    for i, key in enumerate(keys):
        coeff = num[key]
        if negate:
            coeff = -coeff
        frag = monomial(K.key_t(key), K.key_c(key), abs(coeff))
        if i == 0:
            parts.append(("-" if coeff < 0 else "") + frag)
        else:
            parts.append((" - " if coeff < 0 else " + ") + frag)
    body = "".join(parts)
    if negate:
        return "-(" + body + ")" if len(keys) > 1 else "-" + body
    return body


def render(x):
    """Canonical text form.  Round-trips through parse_ring_elem."""
    if not x.num:
        return "0"
    numstr = _render_num(x.num, _w_monomial)
    if not x.wpow and not x.cyclo:
        return numstr
    if len(x.num) > 1 and not numstr.startswith("-("):
        numstr = "(" + numstr + ")"
    factors = []
    if x.wpow:
        factors.append("w" if x.wpow == 1 else f"w^{x.wpow}")
    counts = Counter(x.cyclo)
    for k in sorted(counts):
        base = "(w - 1)" if k == 1 else f"(w^{k} - 1)"
        e = counts[k]
        factors.append(base if e == 1 else f"{base}^{e}")
    den = factors[0] if len(factors) == 1 else "(" + " * ".join(factors) + ")"
    return numstr + " / " + den


def _uv_power(c, d):
    e = Fraction(c, d)
    if e == 1:
        return "u*v"
    if e.denominator == 1:
        return f"(u*v)^{e}"
    return f"(u*v)^({e})"


def _hodge_monomial_factory(d):
    def mono(t, c, coeff):
        vars_ = []
        if t > 0:
            vars_.append("u" if t == 1 else f"u^{t}")
        elif t < 0:
            vars_.append("v" if t == -1 else f"v^{-t}")
        if c:
            vars_.append(_uv_power(c, d))
        if not vars_:
            return str(coeff)
        if coeff != 1:
            vars_.insert(0, str(coeff))
        return "*".join(vars_)

    return mono


def render_hodge(x):
    """Same element displayed with (u*v)^(k/d) in place of w^k (uv = L).
    Display form only; the canonical parser does not read it."""
    if not x.num:
        return "0"
    d = x.d
    numstr = _render_num(x.num, _hodge_monomial_factory(d))
    if not x.wpow and not x.cyclo:
        return numstr
    if len(x.num) > 1 and not numstr.startswith("-("):
        numstr = "(" + numstr + ")"
    factors = []
    if x.wpow:
        factors.append(_uv_power(x.wpow, d))
    counts = Counter(x.cyclo)
    for k in sorted(counts):
        base = f"({_uv_power(k, d)} - 1)"
        e = counts[k]
        factors.append(base if e == 1 else f"{base}^{e}")
    den = factors[0] if len(factors) == 1 else "(" + " * ".join(factors) + ")"
    return numstr + " / " + den


# ---------------------------------------------------------------------------
# Parsing (canonical w-form)

_TOKEN = re.compile(r"\s*(\d+|[uvw]|\^|\*|\+|-|/|\(|\))")


def _tokenize(s):
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"bad character at position {pos}: {s[pos:pos + 8]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, d):
        self.toks = tokens
        self.i = 0
        self.d = d

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        if expect is not None and tok != expect:
            raise ParseError(f"expected {expect!r}, got {tok!r}")
        self.i += 1
        return tok

    def take_int(self):
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected an integer, got {tok!r}")
        return int(tok)

    def parse_elem(self):
        num = self.parse_numerator()
        wpow, cyclo = 0, []
        if self.peek() == "/":
            self.take()
            wpow, cyclo = self.parse_denominator()
        if self.peek() is not None:
            raise ParseError(f"trailing input at token {self.peek()!r}")
        return RingElem(self.d, num, wpow, tuple(cyclo))

    def parse_numerator(self):
        neg = False
        if self.peek() == "-" and self.i + 1 < len(self.toks) and self.toks[self.i + 1] == "(":
            self.take()
            neg = True
        if self.peek() == "(":
            self.take()
            num = self.parse_sum()
            self.take(")")
        else:
            num = self.parse_sum()
        return {k: -v for k, v in num.items()} if neg else num

    def parse_sum(self):
        num = {}
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        while True:
            key, coeff = self.parse_term()
            coeff *= sign
            s = num.get(key, 0) + coeff
            if s:
                num[key] = s
            elif key in num:
                del num[key]
            if self.peek() == "+":
                self.take()
                sign = 1
            elif self.peek() == "-":
                self.take()
                sign = -1
            else:
                return num

    def parse_term(self):
        coeff = 1
        eu = ev = ew = 0
        saw = False
        while True:
            tok = self.peek()
            if tok is not None and tok.isdigit():
                self.take()
                coeff *= int(tok)
                saw = True
            elif tok in ("u", "v", "w"):
                self.take()
                e = 1
                if self.peek() == "^":
                    self.take()
                    e = self.take_int()
                if tok == "u":
                    eu += e
                elif tok == "v":
                    ev += e
                else:
                    ew += e
                saw = True
            else:
                raise ParseError(f"expected a monomial, got {tok!r}")
            if self.peek() == "*":
                self.take()
                continue
            break
        if not saw:
            raise ParseError("empty term")
        m = min(eu, ev)
        return K.mkkey(eu - ev, ew + self.d * m), coeff

    def parse_denominator(self):
        # a parenthesized factor group "(w^2 * (w - 1))" versus a single
        # "(w^k - 1)" factor: after the leading "(w" (and optional
        # exponent) a "-" marks the cyclotomic factor
        if self.peek() == "(":
            j = self.i + 1
            group = False
            if j < len(self.toks) and self.toks[j] == "(":
                # "((w - 1)^2 * ...)" can only be a factor group
                group = True
            elif j < len(self.toks) and self.toks[j] == "w":
                j += 1
                if j < len(self.toks) and self.toks[j] == "^":
                    j += 2
                if j < len(self.toks) and self.toks[j] != "-":
                    group = True
            if group:
                self.take("(")
                wpow, cyclo = self.parse_factor_list()
                self.take(")")
                return wpow, cyclo
        return self.parse_factor_list()

    def parse_factor_list(self):
        wpow = 0
        cyclo = []
        while True:
            tok = self.peek()
            if tok == "w":
                self.take()
                e = 1
                if self.peek() == "^":
                    self.take()
                    e = self.take_int()
                wpow += e
            elif tok == "(":
                self.take()
                self.take("w")
                k = 1
                if self.peek() == "^":
                    self.take()
                    k = self.take_int()
                self.take("-")
                if self.take() != "1":
                    raise ParseError("denominator factors look like (w^k - 1)")
                self.take(")")
                e = 1
                if self.peek() == "^":
                    self.take()
                    e = self.take_int()
                cyclo.extend([k] * e)
            else:
                raise ParseError(f"bad denominator factor at {tok!r}")
            if self.peek() == "*":
                self.take()
                continue
            return wpow, cyclo


def parse_ring_elem(s, d):
    """Parse the canonical w-form.  parse(render(x), x.d) reproduces
    x with identical stored data."""
    tokens = _tokenize(s)
    if not tokens:
        raise ParseError("empty input")
    if tokens == ["0"]:
        return zero(d)
    return _Parser(tokens, d).parse_elem()
