"""Exact coefficient arithmetic over the field Q(q, varsigma).

Two layers:

* LaurentPoly: an element of Z[q^{+-1}, varsigma^{+-1}], stored as a sparse
  dict mapping (q-exponent, varsigma-exponent) to nonzero int. The dict
  kernels live in the backend module selected by _kernel.
* Scalar: a fraction num/den of LaurentPolys with den != 0. Equality is by
  cross-multiplication, so it never depends on how far a representative was
  reduced. Construction still normalizes: the denominator is shifted to touch
  exponent zero in both variables, joint integer content is removed, a
  primitive-PRS gcd in Z[q] is divided out when the denominator is
  varsigma-free, and the denominator's leading sign is fixed positive.

The canonical text form (shared by parse/str round-trips, tables and golden
files) writes a polynomial as terms ascending by (q-exponent, v-exponent),
with `v` denoting varsigma: coefficient omitted when +-1, exponent 1 written
bare, exponent 0 factors dropped, terms joined by ` + ` / ` - `. Examples:
`q + q^-1`, `q^2*v - 3*v^2`, `0`. A Scalar prints `(<num>)/(<den>)`, or
`<num>` alone when the denominator is 1.
"""

import math

from . import _kernel as _k
from .errors import (
    DenominatorVanishes,
    DivisionByZero,
    NotIntegral,
    RequiresSpecialized,
)

_ONE_TERMS = {(0, 0): 1}


def _min_exps(t):
    mi = min(i for i, _ in t)
    mj = min(j for _, j in t)
    return mi, mj


def _div_exact_raw(a, b):
    """Exact quotient of term dicts a/b, or None when b does not divide a.

    b must be nonzero. Works for Laurent supports by shifting both operands
    to ordinary polynomials first; ordinary exact division then proceeds by
    cancelling lex-leading terms, which must terminate because the leading
    monomial strictly decreases in the well-ordered lex order on N x N.
    """
    if not a:
        return {}
    ai, aj = _min_exps(a)
    bi, bj = _min_exps(b)
    rem = {(i - ai, j - aj): c for (i, j), c in a.items()}
    div = {(i - bi, j - bj): c for (i, j), c in b.items()}
    if len(div) == 1:
        ((di, dj), dc), = div.items()
        out = {}
        for (i, j), c in rem.items():
            qc, r = divmod(c, dc)
            if r:
                return None
            out[(i - di + ai - bi, j - dj + aj - bj)] = qc
        return out
    lead_d = max(div)
    cd = div[lead_d]
    quot = {}
    while rem:
        lr = max(rem)
        di = lr[0] - lead_d[0]
        dj = lr[1] - lead_d[1]
        if di < 0 or dj < 0:
            return None
        qc, r = divmod(rem[lr], cd)
        if r:
            return None
        quot[(di, dj)] = qc
        rem = _k.ksub(rem, _k.kshift(div, di, dj, qc))
    si, sj = ai - bi, aj - bj
    if si or sj:
        quot = _k.kshift(quot, si, sj, 1)
    return quot


def _uni_primitive(p):
    """Strip integer content from {exp: int}; leading coefficient ends positive."""
    if not p:
        return p
    g = 0
    for c in p.values():
        g = math.gcd(g, c)
    if p[max(p)] < 0:
        g = -g
    if g != 1:
        p = {e: c // g for e, c in p.items()}
    return p


def _uni_prem(a, b):
    """Pseudo-remainder of univariate {exp: int} dicts, b nonzero."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r:
        dr = max(r)
        if dr < db:
            break
        lr = r.pop(dr)
        nxt = {e: c * lb for e, c in r.items()}
        for e, c in b.items():
            if e == db:
                continue
            k = e + dr - db
            v = nxt.get(k, 0) - lr * c
            if v:
                nxt[k] = v
            elif k in nxt:
                del nxt[k]
        r = nxt
    return r


def _uni_gcd(a, b):
    """Primitive gcd in Z[q] of two {exp: int} dicts via primitive PRS."""
    # monomial content first so the PRS sees true polynomials
    if a:
        ma = min(a)
        if ma:
            a = {e - ma: c for e, c in a.items()}
    if b:
        mb = min(b)
        if mb:
            b = {e - mb: c for e, c in b.items()}
    a = _uni_primitive(dict(a))
    b = _uni_primitive(dict(b))
    if not a:
        return b
    if not b:
        return a
    if max(a) < max(b):
        a, b = b, a
    while b:
        r = _uni_prem(a, b)
        a, b = b, _uni_primitive(r)
    return a


def _term_body(i, j):
    parts = []
    if i == 1:
        parts.append("q")
    elif i != 0:
        parts.append(f"q^{i}")
    if j == 1:
        parts.append("v")
    elif j != 0:
        parts.append(f"v^{j}")
    return "*".join(parts)


def _parse_term(t):
    c = 1
    i = 0
    j = 0
    for f in t.split("*"):
        f = f.strip()
        if f == "q":
            i += 1
        elif f == "v":
            j += 1
        elif f.startswith("q^"):
            i += int(f[2:])
        elif f.startswith("v^"):
            j += int(f[2:])
        elif f:
            c *= int(f)
        else:
            raise ValueError(f"empty factor in term {t!r}")
    return (i, j), c


class LaurentPoly:
    """Element of Z[q^{+-1}, varsigma^{+-1}] with exact int coefficients."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in terms.items():
                if c:
                    i, j = k
                    t[(int(i), int(j))] = int(c)
        self._t = t
        self._h = None

    @classmethod
    def _raw(cls, t):
        # internal: t already pruned, ownership transferred
        self = cls.__new__(cls)
        self._t = t
        self._h = None
        return self

    @classmethod
    def zero(cls):
        return _LP_ZERO

    @classmethod
    def one(cls):
        return _LP_ONE

    @classmethod
    def from_int(cls, n):
        return cls._raw({(0, 0): n} if n else {})

    @classmethod
    def monomial(cls, i=0, j=0, c=1):
        return cls._raw({(i, j): c} if c else {})

    @classmethod
    def q(cls, i=1):
        return cls.monomial(i, 0)

    @classmethod
    def vs(cls, j=1):
        return cls.monomial(0, j)

    def terms(self):
        """Iterate (q_exp, vs_exp, coeff) ascending in (q_exp, vs_exp)."""
        for k in sorted(self._t):
            yield k[0], k[1], self._t[k]

    def coeff(self, i, j=0):
        return self._t.get((i, j), 0)

    def is_zero(self):
        return not self._t

    def is_one(self):
        return self._t == _ONE_TERMS

    def is_varsigma_free(self):
        return all(j == 0 for _, j in self._t)

    def is_monomial(self):
        return len(self._t) == 1

    def is_nonneg(self):
        """True iff every integer coefficient is >= 0."""
        return all(c >= 0 for c in self._t.values())

    def int_content(self):
        g = 0
        for c in self._t.values():
            g = math.gcd(g, c)
        return g

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._t == ({(0, 0): other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(_k.kadd(self._t, other._t))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(_k.ksub(self._t, other._t))

    def __rsub__(self, other):
        if isinstance(other, int):
            return LaurentPoly.from_int(other) - self
        return NotImplemented

    def __neg__(self):
        return LaurentPoly._raw(_k.kneg(self._t))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._raw(_k.kscale(self._t, other))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._raw(_k.kmul(self._t, other._t))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("LaurentPoly powers take a nonnegative int")
        out = _LP_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def shift(self, di, dj=0):
        """Multiply by the monomial q^di * v^dj."""
        if not self._t:
            return self
        return LaurentPoly._raw(_k.kshift(self._t, di, dj, 1))

    def subst_q_inv(self):
        """Substitute q -> q^-1 (varsigma untouched)."""
        return LaurentPoly._raw({(-i, j): c for (i, j), c in self._t.items()})

    def subst_v_qinv(self):
        """Substitute varsigma -> q^-1."""
        out = {}
        for (i, j), c in self._t.items():
            k = (i - j, 0)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return LaurentPoly._raw(out)

    def exact_div(self, other):
        """Exact quotient self/other, or None when other does not divide self."""
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if other.is_zero():
            raise DivisionByZero("division of LaurentPoly by zero")
        q = _div_exact_raw(self._t, other._t)
        return None if q is None else LaurentPoly._raw(q)

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for k in sorted(self._t):
            c = self._t[k]
            body = _term_body(*k)
            if not body:
                mag = str(abs(c))
            elif abs(c) == 1:
                mag = body
            else:
                mag = f"{abs(c)}*{body}"
            if not parts:
                parts.append(mag if c > 0 else "-" + mag)
            else:
                parts.append((" + " if c > 0 else " - ") + mag)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"

    @classmethod
    def parse(cls, s):
        """Inverse of str for the canonical grammar (tolerant of extra spaces)."""
        s = s.strip()
        if s == "0":
            return cls.zero()
        sign = 1
        if s.startswith("-"):
            sign = -1
            s = s[1:].lstrip()
        out = {}
        term = []
        ops = []
        # split on top-level " + " / " - "
        rest = s
        while True:
            pi = rest.find(" + ")
            mi = rest.find(" - ")
            if pi == -1 and mi == -1:
                term.append(rest)
                break
            if mi == -1 or (pi != -1 and pi < mi):
                term.append(rest[:pi])
                ops.append(1)
                rest = rest[pi + 3:]
            else:
                term.append(rest[:mi])
                ops.append(-1)
                rest = rest[mi + 3:]
        signs = [sign] + ops
        for sg, t in zip(signs, term):
            k, c = _parse_term(t)
            v = out.get(k, 0) + sg * c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return cls._raw(out)


_LP_ZERO = LaurentPoly._raw({})
_LP_ONE = LaurentPoly._raw({(0, 0): 1})


def _reduce(n, d):
    """Normalize a raw fraction of term dicts; returns fresh (num, den)."""
    if not n:
        return {}, dict(_ONE_TERMS)
    mi, mj = _min_exps(d)
    if mi or mj:
        n = _k.kshift(n, -mi, -mj, 1)
        d = _k.kshift(d, -mi, -mj, 1)
    else:
        n = dict(n)
        d = dict(d)
    g = 0
    for c in n.values():
        g = math.gcd(g, c)
    for c in d.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    if g > 1:
        n = {k: c // g for k, c in n.items()}
        d = {k: c // g for k, c in d.items()}
    if len(d) > 1 and all(j == 0 for _, j in d):
        du = {i: c for (i, _), c in d.items()}
        guni = du
        slices = {}
        for (i, j), c in n.items():
            slices.setdefault(j, {})[i] = c
        for sl in slices.values():
            guni = _uni_gcd(guni, sl)
            if guni and max(guni) == min(guni):
                guni = None
                break
        if guni and max(guni) > 0:
            glp = {(e, 0): c for e, c in guni.items()}
            n2 = _div_exact_raw(n, glp)
            d2 = _div_exact_raw(d, glp)
            if n2 is not None and d2 is not None:
                n, d = n2, d2
                mi, mj = _min_exps(d)
                if mi or mj:
                    n = _k.kshift(n, -mi, -mj, 1)
                    d = _k.kshift(d, -mi, -mj, 1)
    if d[max(d)] < 0:
        n = _k.kneg(n)
        d = _k.kneg(d)
    return n, d


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, LaurentPoly):
        return Scalar._make(dict(x._t), dict(_ONE_TERMS))
    return None


class Scalar:
    """Fraction of LaurentPolys; equality by cross-multiplication."""

    __slots__ = ("_n", "_d")

    def __init__(self, num, den=1):
        if isinstance(num, int):
            num = LaurentPoly.from_int(num)
        if isinstance(den, int):
            den = LaurentPoly.from_int(den)
        if not isinstance(num, LaurentPoly) or not isinstance(den, LaurentPoly):
            raise TypeError("Scalar takes LaurentPoly or int num/den")
        if den.is_zero():
            raise DivisionByZero("Scalar with zero denominator")
        n, d = _reduce(num._t, den._t)
        self._n = LaurentPoly._raw(n)
        self._d = LaurentPoly._raw(d)

    @classmethod
    def _make(cls, n, d):
        # internal: raw dicts, reduced here exactly once
        self = cls.__new__(cls)
        n, d = _reduce(n, d)
        self._n = LaurentPoly._raw(n)
        self._d = LaurentPoly._raw(d)
        return self

    @classmethod
    def zero(cls):
        return _SC_ZERO

    @classmethod
    def one(cls):
        return _SC_ONE

    @classmethod
    def from_int(cls, n):
        return cls._make({(0, 0): n} if n else {}, dict(_ONE_TERMS))

    @classmethod
    def q_power(cls, i):
        s = _QPOW.get(i)
        if s is None:
            s = cls._make({(i, 0): 1}, dict(_ONE_TERMS))
            _QPOW[i] = s
        return s

    @classmethod
    def vs_power(cls, j, i=0):
        return cls._make({(i, j): 1}, dict(_ONE_TERMS))

    @property
    def num(self):
        return self._n

    @property
    def den(self):
        return self._d

    def is_zero(self):
        return self._n.is_zero()

    def is_one(self):
        return self._n._t == self._d._t

    def is_varsigma_free(self):
        return self._n.is_varsigma_free() and self._d.is_varsigma_free()

    def __bool__(self):
        return not self._n.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._d._t == other._d._t:
            return self._n._t == other._n._t
        return _k.kmul(self._n._t, other._d._t) == _k.kmul(other._n._t, self._d._t)

    __hash__ = None

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n1, d1 = self._n._t, self._d._t
        n2, d2 = other._n._t, other._d._t
        if d1 == d2:
            return Scalar._make(_k.kadd(n1, n2), dict(d1))
        return Scalar._make(
            _k.kadd(_k.kmul(n1, d2), _k.kmul(n2, d1)), _k.kmul(d1, d2)
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n1, d1 = self._n._t, self._d._t
        n2, d2 = other._n._t, other._d._t
        if d1 == d2:
            return Scalar._make(_k.ksub(n1, n2), dict(d1))
        return Scalar._make(
            _k.ksub(_k.kmul(n1, d2), _k.kmul(n2, d1)), _k.kmul(d1, d2)
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        s = Scalar.__new__(Scalar)
        s._n = -self._n
        s._d = self._d
        return s

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._make(
            _k.kmul(self._n._t, other._n._t), _k.kmul(self._d._t, other._d._t)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("Scalar division by zero")
        return Scalar._make(
            _k.kmul(self._n._t, other._d._t), _k.kmul(self._d._t, other._n._t)
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero Scalar")
        return Scalar._make(dict(self._d._t), dict(self._n._t))

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("Scalar powers take an int")
        if n < 0:
            return self.inverse() ** (-n)
        out = _SC_ONE
        base = self
        for _ in range(n):
            out = out * base
        return out

    def bar(self):
        """Substitute q -> q^-1; defined only on varsigma-free scalars."""
        if not self.is_varsigma_free():
            raise RequiresSpecialized(
                "bar is defined only on varsigma-free scalars; specialize first"
            )
        return Scalar._make(
            self._n.subst_q_inv()._t, self._d.subst_q_inv()._t
        )

    def specialize_varsigma(self):
        """Substitute varsigma -> q^-1 in num and den."""
        d = self._d.subst_v_qinv()
        if d.is_zero():
            raise DenominatorVanishes(
                "denominator vanishes under varsigma -> q^-1"
            )
        return Scalar._make(self._n.subst_v_qinv()._t, d._t)

    def to_laurent(self):
        """Flatten to a LaurentPoly; raises NotIntegral when den does not divide num."""
        if self._d.is_one():
            return self._n
        q = self._n.exact_div(self._d)
        if q is None:
            raise NotIntegral(f"{self} is not a Laurent polynomial")
        return q

    def __str__(self):
        if self._d.is_one():
            return str(self._n)
        return f"({self._n})/({self._d})"

    def __repr__(self):
        return f"Scalar({self})"

    @classmethod
    def parse(cls, s):
        s = s.strip()
        if s.startswith("(") and s.endswith(")"):
            cut = s.find(")/(")
            if cut != -1:
                return cls(
                    LaurentPoly.parse(s[1:cut]), LaurentPoly.parse(s[cut + 3:-1])
                )
        return cls(LaurentPoly.parse(s))


_QPOW = {}
_SC_ZERO = Scalar.from_int(0)
_SC_ONE = Scalar.from_int(1)
