"""Tensor square of the quantized enveloping algebra, and the coproduct.

TensorElement stores a Scalar for each pair of PBW monomials. The coproduct
acts on generators by

    delta(E) = E x 1 + K x E,      delta(F) = 1 x F + F x K^-1,
    delta(K) = K x K,              delta(K^-1) = K^-1 x K^-1,

and extends to PBW monomials through delta(E)^a delta(K)^b delta(F)^c, with
the generator powers memoized. A small triple-tensor helper supports the
coassociativity checks without a full three-fold element type.
"""

from .coeff import LaurentPoly, Scalar
from .pbw import UElement, _acc, _coerce_scalar, _mono_mul

_SC_ONE = Scalar.one()
_UNIT = (0, 0, 0)


class TensorElement:
    """Finite Scalar combination of pairs of PBW monomials."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, s in terms.items():
                m1, m2 = k
                s = _coerce_scalar(s)
                if not s.is_zero():
                    t[(tuple(m1), tuple(m2))] = s
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
        return cls._raw({(_UNIT, _UNIT): _SC_ONE})

    @classmethod
    def from_pair(cls, x, y):
        """Tensor product of two UElements."""
        out = {}
        for m1, s1 in x._t.items():
            for m2, s2 in y._t.items():
                s = s1 * s2
                if not s.is_zero():
                    out[(m1, m2)] = s
        return cls._raw(out)

    def terms(self):
        for k in sorted(self._t):
            yield k, self._t[k]

    def coeff(self, m1, m2):
        return self._t.get((tuple(m1), tuple(m2)), Scalar.zero())

    def is_zero(self):
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        a, b = self._t, other._t
        if a.keys() != b.keys():
            return False
        return all(a[k] == b[k] for k in a)

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        out = dict(self._t)
        for k, s in other._t.items():
            _acc(out, k, s)
        return TensorElement._raw(out)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        out = dict(self._t)
        for k, s in other._t.items():
            _acc(out, k, -s)
        return TensorElement._raw(out)

    def __neg__(self):
        return TensorElement._raw({k: -s for k, s in self._t.items()})

    def scale(self, s):
        s = _coerce_scalar(s)
        if s.is_zero():
            return TensorElement.zero()
        return TensorElement._raw({k: v * s for k, v in self._t.items()})

    def __mul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, TensorElement):
            return NotImplemented
        out = {}
        for (x1, y1), s1 in self._t.items():
            for (x2, y2), s2 in other._t.items():
                w = s1 * s2
                px = _mono_mul(x1, x2)
                py = _mono_mul(y1, y2)
                for mx, fx in px.items():
                    wf = w * fx
                    for my, fy in py.items():
                        _acc(out, (mx, my), wf * fy)
        return TensorElement._raw(out)

    def __rmul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        return NotImplemented

    def specialize_varsigma(self):
        out = {}
        for k, s in self._t.items():
            _acc(out, k, s.specialize_varsigma())
        return TensorElement._raw(out)

    def __str__(self):
        if not self._t:
            return "0"

        def side(m):
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
            return "*".join(factors) if factors else "1"

        parts = []
        for m1, m2 in sorted(self._t):
            s = self._t[(m1, m2)]
            parts.append(f"({s})*({side(m1)})⊗({side(m2)})")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorElement({self})"


_DELTA_GEN = {
    "E": TensorElement._raw(
        {((1, 0, 0), _UNIT): _SC_ONE, ((0, 1, 0), (1, 0, 0)): _SC_ONE}
    ),
    "F": TensorElement._raw(
        {(_UNIT, (0, 0, 1)): _SC_ONE, ((0, 0, 1), (0, -1, 0)): _SC_ONE}
    ),
    "K": TensorElement._raw({((0, 1, 0), (0, 1, 0)): _SC_ONE}),
    "Kinv": TensorElement._raw({((0, -1, 0), (0, -1, 0)): _SC_ONE}),
}


def delta_gen(name):
    """Coproduct of a single generator (Echeck included for convenience)."""
    t = _DELTA_GEN.get(name)
    if t is not None:
        return t
    if name == "Echeck":
        return delta(UElement.gen("Echeck"))
    raise ValueError(f"unknown generator {name!r}")


_DELTA_E_POW = {0: TensorElement.one()}
_DELTA_F_POW = {0: TensorElement.one()}
_DELTA_MONO_CACHE = {}


def _delta_E_pow(a):
    r = _DELTA_E_POW.get(a)
    if r is None:
        r = _delta_E_pow(a - 1) * _DELTA_GEN["E"]
        _DELTA_E_POW[a] = r
    return r


def _delta_F_pow(c):
    r = _DELTA_F_POW.get(c)
    if r is None:
        r = _delta_F_pow(c - 1) * _DELTA_GEN["F"]
        _DELTA_F_POW[c] = r
    return r


def _delta_mono(m):
    r = _DELTA_MONO_CACHE.get(m)
    if r is None:
        a, b, c = m
        r = _delta_E_pow(a)
        if b:
            kk = TensorElement._raw({((0, b, 0), (0, b, 0)): _SC_ONE})
            r = r * kk
        if c:
            r = r * _delta_F_pow(c)
        _DELTA_MONO_CACHE[m] = r
    return r


def delta(x):
    """Coproduct of a UElement, as a TensorElement in PBW x PBW form."""
    out = {}
    for m, s in x._t.items():
        for k, f in _delta_mono(m)._t.items():
            _acc(out, k, s * f)
    return TensorElement._raw(out)


def expand_left(t):
    """Apply delta to left legs: dict {(m1, m2, m3): Scalar}."""
    out = {}
    for (x, y), s in t._t.items():
        for (x1, x2), f in _delta_mono(x)._t.items():
            _acc(out, (x1, x2, y), s * f)
    return out


def expand_right(t):
    """Apply delta to right legs: dict {(m1, m2, m3): Scalar}."""
    out = {}
    for (x, y), s in t._t.items():
        for (y1, y2), f in _delta_mono(y)._t.items():
            _acc(out, (x, y1, y2), s * f)
    return out
