"""Exact scalar arithmetic: rationals, rational functions, truncated Laurent
series, q-numbers and the algebra parameter set.

Three coefficient domains are used throughout the package:

* ``fractions.Fraction`` -- the ground field for specialized parameters;
* :class:`RatFunc` -- univariate rational functions over the rationals,
  used for the single active spectral variable during fusion;
* :class:`TruncLaurent` -- truncated Laurent series in the contraction
  parameter ``h``.

All values are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (DivisionByZero, NegativeValuation, NonInvertible,
                     NotGeneric, PoleAtEvaluation)

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (base 10) into an exact rational."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def q_number(k: int, q: Fraction) -> Fraction:
    """k_q = (q^k - q^-k)/(q - q^-1), evaluated in polynomial form.

    The polynomial form sum_{m} q^(k-1-2m) is valid for every q != 0,
    including q = +-1.
    """
    if k < 0:
        raise ValueError("q-number needs k >= 0")
    if q == 0:
        raise DivisionByZero("q = 0 in q-number")
    return sum((q ** (k - 1 - 2 * m) for m in range(k)), Fraction(0))


def q_factorial(k: int, q: Fraction) -> Fraction:
    """k_q! = 2_q 3_q ... k_q with 0_q! = 1_q! = 1."""
    out = Fraction(1)
    for m in range(2, k + 1):
        out *= q_number(m, q)
    return out


# ---------------------------------------------------------------------------
# integer polynomials (ascending coefficient tuples, no trailing zeros)
# ---------------------------------------------------------------------------

def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pcontent(a):
    g = 0
    for x in a:
        g = math.gcd(g, abs(x))
        if g == 1:
            break
    return g


def _pprim(a):
    g = _pcontent(a)
    if g in (0, 1):
        return a
    return tuple(x // g for x in a)


def _pseudo_rem(a, b):
    """Pseudo-remainder of a by b (integer coefficients)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and _trim(a):
        da = len(a) - 1
        la = a[-1]
        a = [x * lb for x in a]
        for j in range(len(b)):
            a[da - db + j] -= la * b[j]
        a = list(_trim(a))
        if not a:
            break
    return tuple(a)


def _pgcd(a, b):
    """Gcd of integer polynomials, primitive with positive leading coeff."""
    a, b = _pprim(a), _pprim(b)
    while b:
        r = _pprim(_pseudo_rem(a, b))
        a, b = b, r
    if not a:
        return ()
    return a if a[-1] > 0 else _pneg(a)


def _pdiv_exact(a, b):
    """Exact division of integer polynomials (b | a assumed)."""
    if not a:
        return ()
    out = [0] * (len(a) - len(b) + 1)
    a = list(a)
    lb = b[-1]
    for k in range(len(out) - 1, -1, -1):
        c = a[k + len(b) - 1]
        if c % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // lb
        out[k] = q
        if q:
            for j in range(len(b)):
                a[k + j] -= q * b[j]
    return _trim(out)


def _peval(a, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(a):
        out = out * x + c
    return out


class RatFunc:
    """Univariate rational function over Q with integer-polynomial storage.

    Invariants: den != 0, poly-gcd(num, den) = 1, gcd of the integer
    contents is 1, and den has positive leading coefficient.  Constants
    embed with den = (1,).
    """

    __slots__ = ("var", "num", "den")

    def __init__(self, num, den=(1,), var="u", _normalized=False):
        if not _normalized:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den
        self.var = var

    @staticmethod
    def _normalize(num, den):
        num, den = _trim(num), _trim(den)
        if not den:
            raise DivisionByZero("zero denominator in rational function")
        if not num:
            return (), (1,)
        g = _pgcd(num, den)
        if len(g) > 1 or g[:1] not in ((), (1,)):
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        cn, cd = _pcontent(num), _pcontent(den)
        g = math.gcd(cn, cd)
        if g > 1:
            num = tuple(x // g for x in num)
            den = tuple(x // g for x in den)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return num, den

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, x, var="u"):
        x = Fraction(x)
        return cls((x.numerator,), (x.denominator,), var=var)

    @classmethod
    def variable(cls, var="u"):
        return cls((0, 1), (1,), var=var)

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise ValueError("mixed variable tags %r, %r"
                                 % (self.var, other.var))
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, var=self.var)
        return None

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) <= 1

    def as_rational(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[0], self.den[0])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return RatFunc(num, _pmul(self.den, o.den), var=self.var)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = _padd(_pmul(self.num, o.den), _pneg(_pmul(o.num, self.den)))
        return RatFunc(num, _pmul(self.den, o.den), var=self.var)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, var=self.var,
                       _normalized=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # cross-cancel before multiplying to keep degrees small
        g1 = _pgcd(self.num, o.den)
        g2 = _pgcd(o.num, self.den)
        n1 = _pdiv_exact(self.num, g1) if len(g1) > 1 else self.num
        d2 = _pdiv_exact(o.den, g1) if len(g1) > 1 else o.den
        n2 = _pdiv_exact(o.num, g2) if len(g2) > 1 else o.num
        d1 = _pdiv_exact(self.den, g2) if len(g2) > 1 else self.den
        return RatFunc(_pmul(n1, n2), _pmul(d1, d2), var=self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by zero rational function")
        return self * RatFunc(o.den, o.num, var=self.var)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.var, self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def evaluate_at(self, x) -> Fraction:
        """Exact value at a rational point; raises on a pole."""
        x = Fraction(x)
        d = _peval(self.den, x)
        if d == 0:
            raise PoleAtEvaluation("pole of rational function at %s"
                                   % format_rational(x))
        return _peval(self.num, x) / d

    def __repr__(self):
        def fmt(p):
            if not p:
                return "0"
            parts = []
            for i, c in enumerate(p):
                if c == 0:
                    continue
                if i == 0:
                    parts.append(str(c))
                elif i == 1:
                    parts.append("%s*%s" % (c, self.var))
                else:
                    parts.append("%s*%s^%d" % (c, self.var, i))
            return " + ".join(parts)

        if self.den == (1,):
            return "(%s)" % fmt(self.num)
        return "(%s)/(%s)" % (fmt(self.num), fmt(self.den))


# ---------------------------------------------------------------------------
# truncated Laurent series in h
# ---------------------------------------------------------------------------

class TruncLaurent:
    """Truncated Laurent series sum_k c_k h^k known on [val, prec).

    ``coeffs`` stores the exponent window [val, prec); the leading stored
    coefficient is nonzero unless the element is zero on the whole window
    (then coeffs is empty and val == prec).
    """

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val, coeffs, prec=None):
        coeffs = list(coeffs)
        if prec is None:
            prec = val + len(coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        while len(coeffs) > prec - val:
            coeffs.pop()
        while coeffs and len(coeffs) < prec - val:
            coeffs.append(Fraction(0))
        if not coeffs:
            val = prec
        self.val = val
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self.prec = prec

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, prec):
        return cls(prec, (), prec)

    @classmethod
    def const(cls, x, prec):
        return cls(0, (Fraction(x),), prec)

    @classmethod
    def exp_h(cls, r, prec):
        """exp(r h) truncated: 1, r, r^2/2, ... on [0, prec)."""
        r = Fraction(r)
        c, out = Fraction(1), []
        for k in range(max(prec, 0)):
            out.append(c)
            c = c * r / (k + 1)
        return cls(0, out, prec)

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        """Coefficient of h^k (must lie below the precision bound)."""
        if k >= self.prec:
            raise NegativeValuation(
                "coefficient h^%d beyond precision %d" % (k, self.prec))
        if k < self.val:
            return Fraction(0)
        return self.coeffs[k - self.val]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncLaurent.const(other, self.prec)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        if self.is_zero() and o.is_zero():
            return TruncLaurent.zero(prec)
        val = min(self.val if self.coeffs else self.prec,
                  o.val if o.coeffs else o.prec, prec)
        out = [Fraction(0)] * (prec - val)
        for i, c in enumerate(self.coeffs):
            k = self.val + i
            if k < prec:
                out[k - val] += c
        for i, c in enumerate(o.coeffs):
            k = o.val + i
            if k < prec:
                out[k - val] += c
        return TruncLaurent(val, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return TruncLaurent(self.val, tuple(-c for c in self.coeffs),
                            self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            # zero with the correct propagated precision
            prec = min(self.prec + (o.val if o.coeffs else o.prec),
                       o.prec + (self.val if self.coeffs else self.prec))
            return TruncLaurent.zero(prec)
        val = self.val + o.val
        prec = min(self.prec + o.val, o.prec + self.val)
        out = [Fraction(0)] * (prec - val)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                k = i + j
                if k < len(out) and b != 0:
                    out[k] += a * b
        return TruncLaurent(val, out, prec)

    __rmul__ = __mul__

    def invert(self):
        if self.is_zero():
            raise NonInvertible("zero truncated Laurent series")
        n = len(self.coeffs)
        a0 = self.coeffs[0]
        inv = [Fraction(1) / a0]
        for k in range(1, n):
            s = Fraction(0)
            for j in range(1, k + 1):
                c = self.coeffs[j] if j < n else Fraction(0)
                s += c * inv[k - j]
            inv.append(-s / a0)
        return TruncLaurent(-self.val, inv, -self.val + n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.invert()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.invert()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # equality on the common window
        prec = min(self.prec, o.prec)
        lo = min(self.val if self.coeffs else prec,
                 o.val if o.coeffs else prec)
        for k in range(lo, prec):
            if self[k] != o[k]:
                return False
        return True

    def __hash__(self):
        raise TypeError("TruncLaurent is not hashable (window equality)")

    def __bool__(self):
        return not self.is_zero()

    def shift(self, k):
        """Multiply by h^k."""
        return TruncLaurent(self.val + k, self.coeffs, self.prec + k)

    def constant_term(self) -> Fraction:
        """The h^0 coefficient; genuine h-poles raise NEGATIVE_VALUATION."""
        if self.coeffs and self.val < 0:
            raise NegativeValuation(
                "true pole in h: valuation %d" % self.val)
        if self.prec < 1:
            raise NegativeValuation(
                "insufficient precision (%d) for a constant term" % self.prec)
        return self[0]

    def __repr__(self):
        if not self.coeffs:
            return "O(h^%d)" % self.prec
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.val + i
            if k == 0:
                parts.append(format_rational(c))
            else:
                parts.append("%s*h^%d" % (format_rational(c), k))
        return " + ".join(parts) + " + O(h^%d)" % self.prec


# ---------------------------------------------------------------------------
# parameter set and genericity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParamSet:
    """Exact parameter values with the derived constants.

    c = -1/(q nu) and mu = (q - q^-1 + nu^-1 - nu)/(q - q^-1), both exact.
    ``certified_n`` is the largest strand count the genericity checklist
    was verified for.
    """

    q: Fraction
    nu: Fraction
    c: Fraction
    mu: Fraction
    certified_n: int

    @property
    def delta(self) -> Fraction:
        return self.q - 1 / self.q


def _content_set(q: Fraction, nu: Fraction, n: int):
    vals = []
    for m in range(-n, n + 1):
        vals.append(q ** (2 * m))
    for m in range(-n, n + 1):
        vals.append(nu * nu * q ** (2 * m))
    return vals


def genericity_check(q: Fraction, nu: Fraction, n: int):
    """Return None if (q, nu) pass the genericity checklist for n strands,
    else the name of the violated constraint.

    The checklist makes NOT_GENERIC deterministic: (a) no small root of
    unity behaviour, (b) all potential quantum contents distinct, (c) no
    pole of the Q-factors or the fusion prefactor on contents, (d) no
    mu-type degeneration.
    """
    if q == 0 or q == 1 or q == -1:
        return "q in {0, +1, -1} (q - q^-1 vanishes)"
    if nu == 0:
        return "nu = 0"
    # (a) q^k != 1
    p = Fraction(1)
    for k in range(1, 4 * n + 5):
        p *= q
        if p == 1:
            return "q^%d = 1" % k
    # (b) contents pairwise distinct
    vals = _content_set(q, nu, n)
    if len(set(vals)) != len(vals):
        seen = {}
        for m in range(-n, n + 1):
            seen.setdefault(q ** (2 * m), "q^%d" % (2 * m))
        for m in range(-n, n + 1):
            v = nu * nu * q ** (2 * m)
            if v in seen:
                return "content collision nu^2 q^%d = %s" % (2 * m, seen[v])
            seen[v] = "nu^2 q^%d" % (2 * m)
        return "content collision"
    # (c) c x y != 1 for contents x, y (poles of Q-factors and prefactor)
    c = Fraction(-1) / (q * nu)
    for x in vals:
        for y in vals:
            if c * x * y == 1:
                return "c x y = 1 on potential contents"
    # (d) nu not of the form q^(1-k)
    for k in range(-2 * n, 2 * n + 1):
        if nu == q ** (1 - k):
            return "nu = q^%d (mu-type degeneration)" % (1 - k)
    return None


def make_params(q, nu, n: int) -> ParamSet:
    """Build a certified parameter set; raises NotGeneric on failure."""
    q, nu = Fraction(q), Fraction(nu)
    bad = genericity_check(q, nu, n)
    if bad is not None:
        raise NotGeneric(bad)
    c = Fraction(-1) / (q * nu)
    mu = (q - 1 / q + 1 / nu - nu) / (q - 1 / q)
    return ParamSet(q=q, nu=nu, c=c, mu=mu, certified_n=n)


DEFAULT_Q = Fraction(6, 5)
DEFAULT_NU = Fraction(7, 3)


def suggest_params(n: int) -> ParamSet:
    """A certified small-numerator parameter set for the requested n.

    Tries the default pair first, then scans small rationals.
    """
    try:
        return make_params(DEFAULT_Q, DEFAULT_NU, n)
    except NotGeneric:
        pass
    for a in range(2, 30):
        for b in range(1, a):
            if math.gcd(a, b) != 1:
                continue
            for c_, d in ((7, 3), (5, 2), (8, 3), (9, 4), (11, 3)):
                try:
                    return make_params(Fraction(a, b), Fraction(c_, d), n)
                except NotGeneric:
                    continue
    raise NotGeneric("search", "no generic parameters found for n=%d" % n)
