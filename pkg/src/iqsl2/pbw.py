"""PBW-ordered elements of the quantized enveloping algebra of sl2.

Monomial basis E^a K^b F^c with a, c >= 0 and b any integer. The pinned
relations are

    K E = q^2 E K,   K F = q^-2 F K,   E F - F E = (K - K^-1)/(q - q^-1),

and every product is rewritten into the basis through the commutation
identity E F^c = F^c E + [c] F^{c-1} (q^{1-c} K - q^{c-1} K^-1)/(q - q^-1).
Products of basis monomials are memoized, which makes the repeated
right-multiplications behind divided powers and coproducts cheap.

Beyond the algebra itself this module carries the operators the divided
power laws need: the Cartan-type element h = (K^-2 - 1)/(q^2 - 1) and its
shifted binomials, the bar-twisted anti-involution chi (E, F, K fixed,
coefficients barred, defined on varsigma-free input), and evaluation on a
weight vector (K acts by q^m, E and F keep their symbols).
"""

from .coeff import LaurentPoly, Scalar
from .errors import RequiresSpecialized
from .qcomb import qfact, qint

_SC_ONE = Scalar.one()
_UNIT = (0, 0, 0)

_GEN_MONO = {
    "E": (1, 0, 0),
    "F": (0, 0, 1),
    "K": (0, 1, 0),
    "Kinv": (0, -1, 0),
}

# normal form of m1 * m2, keyed by the monomial pair
_MONO_CACHE = {}

# [c] / (q - q^-1), keyed by c
_CDIV_CACHE = {}


def _cdiv(c):
    s = _CDIV_CACHE.get(c)
    if s is None:
        s = Scalar(qint(c), LaurentPoly.q(1) - LaurentPoly.q(-1))
        _CDIV_CACHE[c] = s
    return s


def _acc(out, m, s):
    v = out.get(m)
    if v is None:
        if not s.is_zero():
            out[m] = s
        return
    v = v + s
    if v.is_zero():
        del out[m]
    else:
        out[m] = v


def _rmul_E(t):
    """Right-multiply a normal-form dict by E."""
    out = {}
    for (a, b, c), s in t.items():
        _acc(out, (a + 1, b, c), s * Scalar.q_power(2 * b))
        if c:
            w = s * _cdiv(c)
            _acc(out, (a, b - 1, c - 1), w * Scalar.q_power(1 - c))
            _acc(out, (a, b + 1, c - 1), -(w * Scalar.q_power(c - 1)))
    return out


def _rmul_K(t, sign):
    return {
        (a, b + sign, c): s * Scalar.q_power(2 * c * sign)
        for (a, b, c), s in t.items()
    }


def _rmul_F(t):
    return {(a, b, c + 1): s for (a, b, c), s in t.items()}


def _mono_mul(m1, m2):
    """Normal form of m1 * m2 as a dict {monomial: Scalar}."""
    if m1 == _UNIT:
        return {m2: _SC_ONE}
    if m2 == _UNIT:
        return {m1: _SC_ONE}
    key = (m1, m2)
    r = _MONO_CACHE.get(key)
    if r is not None:
        return r
    a2, b2, c2 = m2
    if c2 > 0:
        r = _rmul_F(_mono_mul(m1, (a2, b2, c2 - 1)))
    elif b2 > 0:
        r = _rmul_K(_mono_mul(m1, (a2, b2 - 1, 0)), 1)
    elif b2 < 0:
        r = _rmul_K(_mono_mul(m1, (a2, b2 + 1, 0)), -1)
    else:
        r = _rmul_E(_mono_mul(m1, (a2 - 1, 0, 0)))
    _MONO_CACHE[key] = r
    return r


def _coerce_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, LaurentPoly)):
        return Scalar(x)
    return None


class UElement:
    """Finite Scalar combination of PBW monomials."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for m, s in terms.items():
                a, b, c = m
                if a < 0 or c < 0:
                    raise ValueError(f"bad PBW monomial {m}")
                s = _coerce_scalar(s)
                if not s.is_zero():
                    t[(a, b, c)] = s
        self._t = t

    @classmethod
    def _raw(cls, t):
        self = cls.__new__(cls)
        self._t = t
        return self

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({_UNIT: _SC_ONE})

    @classmethod
    def monomial(cls, a, b, c, coeff=1):
        s = _coerce_scalar(coeff)
        if s.is_zero():
            return cls.zero()
        if a < 0 or c < 0:
            raise ValueError(f"bad PBW monomial {(a, b, c)}")
        return cls._raw({(a, b, c): s})

    @classmethod
    def gen(cls, name):
        """One of E, F, K, Kinv, or Echeck = varsigma E K^-1."""
        if name == "Echeck":
            return cls._raw({(1, -1, 0): Scalar(LaurentPoly.vs())})
        m = _GEN_MONO.get(name)
        if m is None:
            raise ValueError(f"unknown generator {name!r}")
        return cls._raw({m: _SC_ONE})

    def terms(self):
        """Iterate (monomial, Scalar) in lex order on (a, b, c)."""
        for m in sorted(self._t):
            yield m, self._t[m]

    def coeff(self, a, b, c):
        return self._t.get((a, b, c), Scalar.zero())

    def support(self):
        return sorted(self._t)

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        a, b = self._t, other._t
        # stored coefficients are never zero, so supports must match
        if a.keys() != b.keys():
            return False
        return all(a[m] == b[m] for m in a)

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        out = dict(self._t)
        for m, s in other._t.items():
            _acc(out, m, s)
        return UElement._raw(out)

    def __sub__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        out = dict(self._t)
        for m, s in other._t.items():
            _acc(out, m, -s)
        return UElement._raw(out)

    def __neg__(self):
        return UElement._raw({m: -s for m, s in self._t.items()})

    def scale(self, s):
        s = _coerce_scalar(s)
        if s is None:
            raise TypeError("scale takes a Scalar, LaurentPoly, or int")
        if s.is_zero():
            return UElement.zero()
        return UElement._raw({m: v * s for m, v in self._t.items()})

    def __mul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, UElement):
            return NotImplemented
        out = {}
        for m1, s1 in self._t.items():
            for m2, s2 in other._t.items():
                w = s1 * s2
                for m, f in _mono_mul(m1, m2).items():
                    _acc(out, m, w * f)
        return UElement._raw(out)

    def __rmul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("UElement powers take a nonnegative int")
        out = UElement.one()
        for _ in range(n):
            out = out * self
        return out

    def specialize_varsigma(self):
        out = {}
        for m, s in self._t.items():
            _acc(out, m, s.specialize_varsigma())
        return UElement._raw(out)

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for m in sorted(self._t):
            a, b, c = m
            factors = []
            if a == 1:
                factors.append("E")
            elif a:
                factors.append(f"E^{a}")
            if b == 1:
                factors.append("K")
            elif b:
                factors.append(f"K^{b}")
            if c == 1:
                factors.append("F")
            elif c:
                factors.append(f"F^{c}")
            head = f"({self._t[m]})"
            parts.append("*".join([head] + factors) if factors else head)
        return " + ".join(parts)

    def __repr__(self):
        return f"UElement({self})"


def u_gen(name):
    return UElement.gen(name)


def divided_power(name, n):
    """E^{(n)}, F^{(n)}, or Echeck^{(n)} = (varsigma E K^-1)^n / [n]!."""
    if n < 0:
        raise ValueError("divided power of negative order")
    if n == 0:
        return UElement.one()
    inv_fact = Scalar(LaurentPoly.one(), qfact(n))
    if name == "E":
        return UElement._raw({(n, 0, 0): inv_fact})
    if name == "F":
        return UElement._raw({(0, 0, n): inv_fact})
    if name == "Echeck":
        # (E K^-1)^n = q^{-n(n-1)} E^n K^-n, then the varsigma^n prefactor
        s = Scalar(LaurentPoly.monomial(-n * (n - 1), n), qfact(n))
        return UElement._raw({(n, -n, 0): s})
    raise ValueError(f"no divided power for generator {name!r}")


def u_h():
    """h = (K^-2 - 1)/(q^2 - 1)."""
    d = LaurentPoly.q(2) - LaurentPoly.one()
    inv = Scalar(LaurentPoly.one(), d)
    return UElement._raw({(0, -2, 0): inv, _UNIT: -inv})


_HBINOM_CACHE = {}


def u_h_binom(a, n):
    """Shifted h-binomial: product over i = 1..n of
    (q^{4a+4i-4} K^-2 - 1)/(q^{4i} - 1)."""
    if n < 0:
        raise ValueError("h-binomial of negative order")
    key = (a, n)
    r = _HBINOM_CACHE.get(key)
    if r is None:
        if n == 0:
            r = UElement.one()
        else:
            prev = u_h_binom(a, n - 1)
            d = LaurentPoly.q(4 * n) - LaurentPoly.one()
            factor = UElement._raw(
                {
                    (0, -2, 0): Scalar(LaurentPoly.q(4 * a + 4 * n - 4), d),
                    _UNIT: Scalar(-LaurentPoly.one(), d),
                }
            )
            r = prev * factor
        _HBINOM_CACHE[key] = r
    return r


def chi(x):
    """Anti-involution: fixes E, F, K, bars every coefficient.

    chi(E^a K^b F^c) is the normal form of F^c K^b E^a with the barred
    coefficient. Only varsigma-free elements are accepted; specialize
    varsigma -> q^-1 first.
    """
    out = {}
    for (a, b, c), s in x._t.items():
        if not s.is_varsigma_free():
            raise RequiresSpecialized(
                "chi is defined after specializing varsigma -> q^-1"
            )
        w = s.bar() * Scalar.q_power(2 * b * c)
        for m, f in _mono_mul((0, b, c), (a, 0, 0)).items():
            _acc(out, m, w * f)
    return UElement._raw(out)


def weight_eval(x, m):
    """Evaluate on a weight vector of weight m: K^b acts by q^{mb}.

    Linear map sending E^a K^b F^c to q^{mb} E^a F^c; the output lives in
    the same PBW dict with all K-exponents zero.
    """
    out = {}
    for (a, b, c), s in x._t.items():
        _acc(out, (a, 0, c), s * Scalar.q_power(m * b))
    return UElement._raw(out)
