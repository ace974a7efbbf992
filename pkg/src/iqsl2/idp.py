"""Divided powers of the coideal generator B, in both families.

The coideal subalgebra of the quantized enveloping algebra is the
commutative polynomial ring in the single element B = F + varsigma E K^-1.
It carries two families ("ev" and "odd") of divided powers B^{(n)}, each
given by a closed product formula and, equivalently, by a two-term
recursion. This module provides

* ``BPolynomial``      -- polynomials in the commuting symbol B over Scalar;
* ``idp_closed`` / ``idp_recursive``
                       -- two independent constructions of B^{(n)};
* ``idp_basis_expand`` -- triangular change of basis from powers of B to
                          divided powers;
* ``mult_closed``      -- closed-form structure constants of
                          B^{(m)} B^{(n)}, all eight parity cases;
* ``s_component`` / ``comult_closed``
                       -- the right tensor legs S_{n,r} of the coproduct,
                          Delta(B^{(n)}) = sum_r B^{(n-r)} (x) S_{n,r},
                          with E-check powers on the left;
* ``s_component_reversed`` / ``comult_closed_reversed``
                       -- the same legs written with F powers on the left
                          and E-check powers on the right;
* ``idp_to_pbw``       -- substitution B = F + varsigma E K^-1;
* ``comult_direct`` / ``comult_theorem`` / ``comult_theorem_reversed``
                       -- the coproduct computed from first principles,
                          and assembled from either kind of closed legs.

Ratios of quantum integers are built by ``qratio``, which cancels common
indices multiset-wise before multiplying anything out; an index pair 0/0 is
removed exactly, which resolves the one removable singularity among the
closed multiplication formulas (both-odd case of the "odd" family at
l = a+1) without special-casing.
"""

from collections import Counter

from .coeff import LaurentPoly, Scalar
from .errors import DivisionByZero, NegativeInput
from .pbw import UElement, _coerce_scalar, divided_power, u_h_binom
from .qcomb import qbinom, qfact, qint
from .tensor import TensorElement, delta

EV = "ev"
ODD = "odd"
PARITIES = (EV, ODD)

_SC_ZERO = Scalar.zero()
_SC_ONE = Scalar.one()
# q*varsigma, the combination every correction term carries
_QVS = Scalar.vs_power(1, 1)


def _check_parity(p):
    if p not in PARITIES:
        raise ValueError(f"unknown family {p!r}; expected 'ev' or 'odd'")


class BPolynomial:
    """Polynomial in the commuting symbol B with Scalar coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for d, s in coeffs.items():
                if d < 0:
                    raise ValueError(f"negative degree {d}")
                s = _coerce_scalar(s)
                if not s.is_zero():
                    c[d] = s
        self._c = c

    @classmethod
    def _raw(cls, c):
        self = cls.__new__(cls)
        self._c = c
        return self

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: _SC_ONE})

    @classmethod
    def b(cls):
        return cls._raw({1: _SC_ONE})

    @classmethod
    def monomial(cls, d, coeff=1):
        if d < 0:
            raise ValueError(f"negative degree {d}")
        s = _coerce_scalar(coeff)
        if s.is_zero():
            return cls.zero()
        return cls._raw({d: s})

    def coeffs(self):
        """Iterate (degree, Scalar) in ascending degree."""
        for d in sorted(self._c):
            yield d, self._c[d]

    def coeff(self, d):
        return self._c.get(d, _SC_ZERO)

    def degree(self):
        """Largest degree with a nonzero coefficient; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if not isinstance(other, BPolynomial):
            return NotImplemented
        a, b = self._c, other._c
        if a.keys() != b.keys():
            return False
        return all(a[d] == b[d] for d in a)

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, BPolynomial):
            return NotImplemented
        out = dict(self._c)
        for d, s in other._c.items():
            t = out.get(d)
            t = s if t is None else t + s
            if t.is_zero():
                out.pop(d, None)
            else:
                out[d] = t
        return BPolynomial._raw(out)

    def __sub__(self, other):
        if not isinstance(other, BPolynomial):
            return NotImplemented
        out = dict(self._c)
        for d, s in other._c.items():
            t = out.get(d)
            t = -s if t is None else t - s
            if t.is_zero():
                out.pop(d, None)
            else:
                out[d] = t
        return BPolynomial._raw(out)

    def __neg__(self):
        return BPolynomial._raw({d: -s for d, s in self._c.items()})

    def scale(self, s):
        s = _coerce_scalar(s)
        if s is None:
            raise TypeError("scale takes a Scalar, LaurentPoly, or int")
        if s.is_zero():
            return BPolynomial.zero()
        return BPolynomial._raw({d: v * s for d, v in self._c.items()})

    def __mul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, BPolynomial):
            return NotImplemented
        out = {}
        for d1, s1 in self._c.items():
            for d2, s2 in other._c.items():
                d = d1 + d2
                w = s1 * s2
                t = out.get(d)
                t = w if t is None else t + w
                if t.is_zero():
                    out.pop(d, None)
                else:
                    out[d] = t
        return BPolynomial._raw(out)

    def __rmul__(self, other):
        s = _coerce_scalar(other)
        if s is not None:
            return self.scale(s)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("BPolynomial powers take a nonnegative int")
        out = BPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def specialize_varsigma(self):
        out = {}
        for d, s in self._c.items():
            v = s.specialize_varsigma()
            if not v.is_zero():
                out[d] = v
        return BPolynomial._raw(out)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c):
            head = f"({self._c[d]})"
            if d == 0:
                parts.append(head)
            elif d == 1:
                parts.append(f"{head}*B")
            else:
                parts.append(f"{head}*B^{d}")
        return " + ".join(parts)

    def __repr__(self):
        return f"BPolynomial({self})"


def qratio(nums, dens):
    """Product of quantum integers over ``nums`` divided by the product over
    ``dens``, the arguments being lists of integer indices.

    Indices common to both lists cancel multiset-wise before anything is
    multiplied out. Cancelling by index keeps a removable 0/0 exact: a 0
    appearing on both sides drops out as the pair it is. After cancellation
    a remaining 0 numerator index gives the zero Scalar, and a remaining 0
    denominator index is a genuine division by zero.
    """
    nc = Counter(nums)
    dc = Counter(dens)
    common = nc & dc
    if common:
        nc -= common
        dc -= common
    if dc.get(0):
        raise DivisionByZero("vanishing quantum integer in a denominator")
    if nc.get(0):
        return _SC_ZERO
    num = LaurentPoly.one()
    for i in nc.elements():
        num = num * qint(i)
    den = LaurentPoly.one()
    for i in dc.elements():
        den = den * qint(i)
    return Scalar(num, den)


_CLOSED_CACHE = {}


def idp_closed(p, n):
    """The closed product form of the divided power B^{(n)} in family ``p``.

    With k = floor(n/2), the product has k quadratic factors B^2 - qvs[i]^2
    over an index sequence fixed by the family and the parity of n (even
    indices from 0 or from 2 for the "ev" family, odd indices for the "odd"
    family), preceded by a bare B when n is odd, all divided by [n]!.
    """
    _check_parity(p)
    if n < 0:
        raise NegativeInput("divided power of negative order")
    key = (p, n)
    r = _CLOSED_CACHE.get(key)
    if r is not None:
        return r
    k, n_odd = divmod(n, 2)
    b = BPolynomial.b()
    prod = b if n_odd else BPolynomial.one()
    bb = b * b
    for j in range(1, k + 1):
        if p == EV:
            idx = 2 * j if n_odd else 2 * j - 2
        else:
            idx = 2 * j - 1
        sq = qint(idx)
        shift = LaurentPoly.monomial(1, 1) * (sq * sq)  # q varsigma [idx]^2
        prod = prod * (bb - BPolynomial.monomial(0, shift))
    r = prod.scale(Scalar(LaurentPoly.one(), qfact(n)))
    _CLOSED_CACHE[key] = r
    return r


_REC_CACHE = {}


def idp_recursive(p, n):
    """B^{(n)} computed by the family's two-term recursion.

    Both families start from B^{(0)} = 1 and B^{(1)} = B. One parity step
    divides B * B^{(n-1)} by [n]; the other first subtracts
    qvs [n-1] B^{(n-2)}. Which step applies to which parity of n is what
    distinguishes the families. Independent of ``idp_closed`` by design:
    the two constructions cross-check each other.
    """
    _check_parity(p)
    if n < 0:
        raise NegativeInput("divided power of negative order")
    key = (p, n)
    r = _REC_CACHE.get(key)
    if r is not None:
        return r
    if n == 0:
        r = BPolynomial.one()
    elif n == 1:
        r = BPolynomial.b()
    else:
        top = BPolynomial.b() * idp_recursive(p, n - 1)
        # the step with the correction term lands on odd n for "ev",
        # on even n for "odd"
        corrected = (n % 2 == 1) if p == EV else (n % 2 == 0)
        if corrected:
            top = top - idp_recursive(p, n - 2).scale(_QVS * Scalar(qint(n - 1)))
        r = top.scale(Scalar(LaurentPoly.one(), qint(n)))
    _REC_CACHE[key] = r
    return r


def idp_basis_expand(x, p):
    """Coefficients c_j with x = sum_j c_j B^{(j)} in family ``p``.

    Triangular back-substitution from the top degree down: B^{(j)} has
    degree j with leading coefficient 1/[j]!. Degrees on the parity lattice
    of the top degree are always recorded, zeros included; a nonzero
    coefficient off that lattice is recorded as well.
    """
    _check_parity(p)
    out = {}
    rem = x
    top = rem.degree()
    if top < 0:
        return out
    lattice = top % 2
    for j in range(top, -1, -1):
        c = rem.coeff(j)
        if not c.is_zero():
            c = c * Scalar(qfact(j))
            rem = rem - idp_closed(p, j).scale(c)
            out[j] = c
        elif j % 2 == lattice:
            out[j] = _SC_ZERO
    if not rem.is_zero():
        raise AssertionError("triangular expansion left a remainder")
    return out


def _prefixed(pref, ratio, l):
    return pref * ratio * (_QVS ** l)


def mult_closed(p, m, n):
    """Closed-form coefficients of B^{(m)} B^{(n)} on divided powers.

    Returns a mapping degree -> Scalar with only nonzero entries; the
    product equals sum_d coeff[d] * B^{(d)} in family ``p``. Each of the
    eight (family, parity of m, parity of n) cases is a binomial prefactor
    times a sum of ratios of quantum integers; sums are evaluated over
    their full stated range, with out-of-range terms vanishing through
    zero quantum integers.
    """
    _check_parity(p)
    if m < 0 or n < 0:
        raise NegativeInput("divided power of negative order")
    out = {}

    def put(deg, s):
        if not s.is_zero():
            t = out.get(deg)
            t = s if t is None else t + s
            if t.is_zero():
                out.pop(deg, None)
            else:
                out[deg] = t

    if p == EV:
        if m % 2 and n % 2:
            # both odd: m = 2k-1, n = 2a-1
            k, a = (m + 1) // 2, (n + 1) // 2
            pref = Scalar(qbinom(2 * k + 2 * a - 2, 2 * k - 1))
            for l in range(1, k + 1):
                nums, dens = [], []
                for i in range(2, l + 1):
                    nums += [2 * a - 2 * i + 2, 2 * k - 2 * i + 2]
                    dens += [2 * k + 2 * a - 2 * i + 1, 2 * i - 2]
                put(2 * k + 2 * a - 2 * l,
                    _prefixed(pref, qratio(nums, dens), l - 1))
        elif m % 2:
            # m = 2k-1 odd, n = 2a even
            k, a = (m + 1) // 2, n // 2
            pref = Scalar(qbinom(2 * k + 2 * a - 1, 2 * k - 1))
            put(2 * k + 2 * a - 1, pref)
            for l in range(1, k + 1):
                nums, dens = [], []
                for i in range(1, l + 1):
                    nums += [2 * a - 2 * i + 2, 2 * k - 2 * i + 2]
                    dens += [2 * k + 2 * a - 2 * i + 1, 2 * i]
                put(2 * k + 2 * a - 2 * l - 1,
                    _prefixed(pref, qratio(nums, dens), l))
        elif n % 2:
            # m = 2k even, n = 2a-1 odd
            k, a = m // 2, (n + 1) // 2
            pref = Scalar(qbinom(2 * k + 2 * a - 1, 2 * k))
            put(2 * k + 2 * a - 1, pref)
            for l in range(1, k + 1):
                nums, dens = [], []
                for i in range(1, l + 1):
                    nums += [2 * a - 2 * i + 2, 2 * k - 2 * i + 2]
                    dens += [2 * k + 2 * a - 2 * i + 1, 2 * i]
                put(2 * k + 2 * a - 2 * l - 1,
                    _prefixed(pref, qratio(nums, dens), l))
        else:
            # both even: m = 2k, n = 2a
            k, a = m // 2, n // 2
            pref = Scalar(qbinom(2 * k + 2 * a, 2 * k))
            put(2 * k + 2 * a, pref)
            for l in range(1, k + 1):
                nums = [2 * k + 2 * a - 2 * l]
                dens = [2 * k + 2 * a]
                for i in range(1, l + 1):
                    nums += [2 * a - 2 * i + 2, 2 * k - 2 * i + 2]
                    dens += [2 * k + 2 * a - 2 * i + 1, 2 * i]
                put(2 * k + 2 * a - 2 * l,
                    _prefixed(pref, qratio(nums, dens), l))
    else:
        if not m % 2 and not n % 2:
            # both even: m = 2k, n = 2a
            k, a = m // 2, n // 2
            pref = Scalar(qbinom(2 * k + 2 * a, 2 * k))
            put(2 * k + 2 * a, pref)
            for l in range(1, k + 1):
                nums, dens = [], []
                for i in range(1, l + 1):
                    nums += [2 * a - 2 * i + 2, 2 * k - 2 * i + 2]
                    dens += [2 * k + 2 * a - 2 * i + 1, 2 * i]
                put(2 * k + 2 * a - 2 * l,
                    _prefixed(pref, qratio(nums, dens), l))
        elif not m % 2:
            # m = 2k even, n = 2a+1 odd
            k, a = m // 2, (n - 1) // 2
            pref = Scalar(qbinom(2 * k + 2 * a + 1, 2 * k))
            put(2 * k + 2 * a + 1, pref)
            for l in range(1, k + 1):
                nums, dens = [], []
                for i in range(1, l + 1):
                    nums += [2 * a - 2 * i + 2, 2 * k - 2 * i + 2]
                    dens += [2 * k + 2 * a - 2 * i + 3, 2 * i]
                put(2 * k + 2 * a - 2 * l + 1,
                    _prefixed(pref, qratio(nums, dens), l))
        elif not n % 2:
            # m = 2k+1 odd, n = 2a even
            k, a = (m - 1) // 2, n // 2
            pref = Scalar(qbinom(2 * k + 2 * a + 1, 2 * k + 1))
            put(2 * k + 2 * a + 1, pref)
            for l in range(1, k + 1):
                nums, dens = [], []
                for i in range(1, l + 1):
                    nums += [2 * a - 2 * i + 2, 2 * k - 2 * i + 2]
                    dens += [2 * k + 2 * a - 2 * i + 3, 2 * i]
                put(2 * k + 2 * a - 2 * l + 1,
                    _prefixed(pref, qratio(nums, dens), l))
        else:
            # both odd: m = 2k+1, n = 2a+1
            k, a = (m - 1) // 2, (n - 1) // 2
            pref = Scalar(qbinom(2 * k + 2 * a + 2, 2 * k + 1))
            put(2 * k + 2 * a + 2, pref)
            for l in range(1, k + 2):
                nums, dens = [], []
                for i in range(1, l + 1):
                    nums += [2 * a - 2 * i + 2, 2 * k - 2 * i + 4]
                    dens += [2 * k + 2 * a - 2 * i + 3, 2 * i]
                first = qratio(
                    nums + [2 * k + 2 * a - 2 * l + 2, 2 * k - 2 * l + 2],
                    dens + [2 * k + 2 * a + 2, 2 * k + 2],
                )
                second = qratio(
                    nums + [2 * k + 2 * a - 2 * l + 3,
                            2 * k + 2 * a - 2 * l + 3, 2 * l],
                    dens + [2 * k + 2 * a + 2, 2 * a - 2 * l + 2, 2 * k + 2],
                )
                put(2 * k + 2 * a - 2 * l + 2,
                    _prefixed(pref, first + second, l))
    return out


def _leg_exponent_style(p, n):
    """True when the closed coproduct legs of (family p, order n) use the
    q-exponent c(2c-1) with floor (r-2)/2, False for c(2c+1) with floor
    (r-1)/2. The two families use the two styles on opposite parities."""
    return (p == EV) == (n % 2 == 0)


def s_component(p, n, r):
    """The right tensor leg S_{n,r} of the coproduct of B^{(n)}.

    A triple sum over c in [0, floor(r/2)] and a in [0, r-2c] of

        q^{X + (r-2c)(r-n) - a(r-2c-a)} (qvs)^c
            Echeck^{(a)} [h-binomial; A]_c K^{r-n} F^{(r-2c-a)}

    where X = c(2c-1), A = -floor((r-2)/2) in one exponent style and
    X = c(2c+1), A = -floor((r-1)/2) in the other. Zero outside 0 <= r <= n.
    """
    _check_parity(p)
    if n < 0:
        raise NegativeInput("divided power of negative order")
    if r < 0 or r > n:
        return UElement.zero()
    style = _leg_exponent_style(p, n)
    shift = -((r - 2) // 2) if style else -((r - 1) // 2)
    kpow = UElement.monomial(0, r - n, 0)
    out = UElement.zero()
    for c in range(r // 2 + 1):
        x = c * (2 * c - 1) if style else c * (2 * c + 1)
        hb = u_h_binom(shift, c)
        qvs_c = Scalar.vs_power(c, c)
        for a in range(r - 2 * c + 1):
            e = x + (r - 2 * c) * (r - n) - a * (r - 2 * c - a)
            term = (divided_power("Echeck", a) * hb * kpow
                    * divided_power("F", r - 2 * c - a))
            out = out + term.scale(Scalar.q_power(e) * qvs_c)
    return out


def s_component_reversed(p, n, r):
    """S_{n,r} in the reversed presentation: F powers on the left, E-check
    powers on the right, signs (-1)^c, with

        (-1)^c q^{Y - (r-2c)(r-n) + a(r-2c-a)} (qvs)^c
            F^{(a)} [h-binomial; 1-c+G]_c K^{r-n} Echeck^{(r-2c-a)}

    where Y = 3c, G = floor((r-2)/2) in the exponent style that pairs with
    X = c(2c-1) above, and Y = c, G = floor((r-1)/2) in the other.
    """
    _check_parity(p)
    if n < 0:
        raise NegativeInput("divided power of negative order")
    if r < 0 or r > n:
        return UElement.zero()
    style = _leg_exponent_style(p, n)
    g = (r - 2) // 2 if style else (r - 1) // 2
    kpow = UElement.monomial(0, r - n, 0)
    out = UElement.zero()
    for c in range(r // 2 + 1):
        y = 3 * c if style else c
        hb = u_h_binom(1 - c + g, c)
        qvs_c = Scalar.vs_power(c, c)
        if c % 2:
            qvs_c = -qvs_c
        for a in range(r - 2 * c + 1):
            e = y - (r - 2 * c) * (r - n) + a * (r - 2 * c - a)
            term = (divided_power("F", a) * hb * kpow
                    * divided_power("Echeck", r - 2 * c - a))
            out = out + term.scale(Scalar.q_power(e) * qvs_c)
    return out


def comult_closed(p, n):
    """All closed coproduct legs [(r, S_{n,r})] for r = 0..n."""
    _check_parity(p)
    if n < 0:
        raise NegativeInput("divided power of negative order")
    return [(r, s_component(p, n, r)) for r in range(n + 1)]


def comult_closed_reversed(p, n):
    """All reversed coproduct legs [(r, S_{n,r})] for r = 0..n."""
    _check_parity(p)
    if n < 0:
        raise NegativeInput("divided power of negative order")
    return [(r, s_component_reversed(p, n, r)) for r in range(n + 1)]


_B_PBW_POW = {0: UElement.one()}


def _b_pbw_pow(d):
    r = _B_PBW_POW.get(d)
    if r is None:
        base = UElement._raw(
            {(0, 0, 1): _SC_ONE, (1, -1, 0): Scalar(LaurentPoly.vs())}
        )
        r = _b_pbw_pow(d - 1) * base
        _B_PBW_POW[d] = r
    return r


def idp_to_pbw(x):
    """Substitute B = F + varsigma E K^-1 into a BPolynomial."""
    out = UElement.zero()
    for d, s in x.coeffs():
        out = out + _b_pbw_pow(d).scale(s)
    return out


def comult_direct(p, n):
    """The coproduct of B^{(n)} computed from first principles: apply the
    coproduct to the PBW image of the closed form."""
    _check_parity(p)
    if n < 0:
        raise NegativeInput("divided power of negative order")
    return delta(idp_to_pbw(idp_closed(p, n)))


def _assemble(p, n, legs):
    out = TensorElement.zero()
    for r, s in legs:
        out = out + TensorElement.from_pair(idp_to_pbw(idp_closed(p, n - r)), s)
    return out


def comult_theorem(p, n):
    """sum_r (PBW image of B^{(n-r)}) tensor S_{n,r}, from the closed legs."""
    return _assemble(p, n, comult_closed(p, n))


def comult_theorem_reversed(p, n):
    """Same assembly from the reversed legs."""
    return _assemble(p, n, comult_closed_reversed(p, n))
