"""Polynomials in k over Q(n), and the normalized summand quotient BiRat.

KPoly is dense in k with RatFn coefficients.  BiRat keeps num/den coprime
as polynomials in k over the field Q(n) with a monic (in k) denominator, so
structural equality is semantic equality.

Coprimality checks go through an integer specialization of n first: if the
two specialized polynomials are already coprime over Q at a sample point
that preserves both leading coefficients, the originals are coprime over
Q(n) and the full Euclidean gcd is skipped.  That keeps parser-built values
cheap; the full gcd only runs when a genuine common factor exists.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional, Union

from .errors import DegenerateInput
from .poly import RatFn, UPoly

KCoef = Union[int, Fraction, RatFn]


def _as_ratfn(c: KCoef) -> RatFn:
    if isinstance(c, RatFn):
        return c
    return RatFn.const(c)


class KPoly:
    """Dense polynomial in k with RatFn coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[KCoef] = ()):
        cs = [_as_ratfn(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs: tuple[RatFn, ...] = tuple(cs)

    @staticmethod
    def zero() -> "KPoly":
        return _KP_ZERO

    @staticmethod
    def one() -> "KPoly":
        return _KP_ONE

    @staticmethod
    def k() -> "KPoly":
        return _KP_K

    @staticmethod
    def const(c: KCoef) -> "KPoly":
        return KPoly((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> RatFn:
        if not self.coeffs:
            return RatFn.zero()
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, KPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, RatFn)):
            return self == KPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("KPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"KPoly({list(self.coeffs)!r})"

    def _coerce(self, other) -> Optional["KPoly"]:
        if isinstance(other, KPoly):
            return other
        if isinstance(other, (int, Fraction, RatFn)):
            return KPoly.const(other)
        return None

    def __add__(self, other) -> "KPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return KPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "KPoly":
        return KPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "KPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "KPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "KPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return _KP_ZERO
        if len(b) == 1:
            c = b[0]
            return KPoly(tuple(ai * c for ai in a))
        if len(a) == 1:
            c = a[0]
            return KPoly(tuple(bi * c for bi in b))
        out: list[RatFn] = [RatFn.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return KPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "KPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = _KP_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "KPoly") -> tuple["KPoly", "KPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return _KP_ZERO, self
        quot: list[RatFn] = [RatFn.zero()] * (dq + 1)
        olc = other.lc
        oc = other.coeffs
        for i in range(dq, -1, -1):
            top = rem[i + len(oc) - 1]
            if not top.is_zero:
                q = top / olc
                quot[i] = q
                for j, c in enumerate(oc):
                    rem[i + j] = rem[i + j] - q * c
        return KPoly(quot), KPoly(rem)

    def __floordiv__(self, other: "KPoly") -> "KPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "KPoly") -> "KPoly":
        return self.divmod(other)[1]

    def div_linear(self, alpha: RatFn) -> tuple["KPoly", RatFn]:
        """Synthetic division by (k - alpha): (quotient, remainder)."""
        if self.is_zero:
            return _KP_ZERO, RatFn.zero()
        acc = RatFn.zero()
        out: list[RatFn] = []
        for c in reversed(self.coeffs):
            acc = acc * alpha + c
            out.append(acc)
        rem = out.pop()
        out.reverse()
        return KPoly(out), rem

    def derivative(self) -> "KPoly":
        return KPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def eval_at(self, a: KCoef) -> RatFn:
        """Value at k = a (a rational function of n), exact."""
        av = _as_ratfn(a)
        acc = RatFn.zero()
        for c in reversed(self.coeffs):
            acc = acc * av + c
        return acc

    def compose(self, other: "KPoly") -> "KPoly":
        acc = _KP_ZERO
        for c in reversed(self.coeffs):
            acc = acc * other + KPoly.const(c)
        return acc

    def subs_k_affine(self, u: KCoef, v: KCoef) -> "KPoly":
        """k -> u*k + v with constant u != 0 and v a RatFn."""
        return self.compose(KPoly((v, u)))

    def map_coeffs(self, fn: Callable[[RatFn], RatFn]) -> "KPoly":
        return KPoly(tuple(fn(c) for c in self.coeffs))

    def subs_n_affine(self, a: KCoef, b: KCoef) -> "KPoly":
        """n -> a*n + b inside every coefficient."""
        af = _as_ratfn(a).constant_value()
        bf = _as_ratfn(b).constant_value()
        return self.map_coeffs(lambda c: c.compose_affine(af, bf))

    def specialize_n(self, n0: Fraction | int) -> UPoly:
        """The univariate polynomial in k at n = n0; raises at coefficient poles."""
        return UPoly(tuple(c.evaluate(n0) for c in self.coeffs))

    def monic(self) -> "KPoly":
        if self.is_zero or self.lc == RatFn.one():
            return self
        inv = RatFn.one() / self.lc
        return KPoly(tuple(c * inv for c in self.coeffs))


_KP_ZERO = object.__new__(KPoly)
_KP_ZERO.coeffs = ()
_KP_ONE = object.__new__(KPoly)
_KP_ONE.coeffs = (RatFn.one(),)
_KP_K = object.__new__(KPoly)
_KP_K.coeffs = (RatFn.zero(), RatFn.one())


def _good_sample(polys: list[KPoly], start: int = 2) -> int:
    """An integer n0 where every coefficient is finite and every lc is nonzero."""
    n0 = start
    while True:
        ok = True
        for p in polys:
            for c in p.coeffs:
                if c.den.evaluate(n0) == 0:
                    ok = False
                    break
            if ok and not p.is_zero and p.lc.num.evaluate(n0) == 0:
                ok = False
            if not ok:
                break
        if ok:
            return n0
        n0 += 1


def _upoly_gcd_degree(a: UPoly, b: UPoly) -> int:
    from .poly import poly_gcd

    return poly_gcd(a, b).degree


def kpoly_gcd(a: KPoly, b: KPoly) -> KPoly:
    """Monic gcd of a and b as polynomials in k over Q(n).

    A single integer specialization that preserves both leading coefficients
    can only enlarge the gcd, so a degree-0 specialized gcd proves
    coprimality without running Euclid over Q(n).
    """
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return _KP_ONE
    n0 = _good_sample([a, b])
    if _upoly_gcd_degree(a.specialize_n(n0), b.specialize_n(n0)) == 0:
        return _KP_ONE
    # genuine common factor possible: monic Euclid over Q(n)
    x, y = a.monic(), b.monic()
    while not y.is_zero:
        x, y = y, (x % y)
        if not y.is_zero:
            y = y.monic()
    return x.monic()


class BiRat:
    """Reduced bivariate rational summand R(k, n).

    num/den are coprime in k over Q(n) and den is monic in k; the zero
    summand is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: KPoly, den: KPoly = _KP_ONE):
        if den.is_zero:
            raise DegenerateInput("denominator is identically zero")
        if num.is_zero:
            self.num = _KP_ZERO
            self.den = _KP_ONE
            return
        if den.degree > 0 and num.degree > 0:
            g = kpoly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lc = den.lc
        if lc != RatFn.one():
            inv = RatFn.one() / lc
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @staticmethod
    def _raw(num: KPoly, den: KPoly) -> "BiRat":
        r = object.__new__(BiRat)
        r.num = num
        r.den = den
        return r

    @staticmethod
    def zero() -> "BiRat":
        return BiRat._raw(_KP_ZERO, _KP_ONE)

    @staticmethod
    def one() -> "BiRat":
        return BiRat._raw(_KP_ONE, _KP_ONE)

    @staticmethod
    def const(c: KCoef) -> "BiRat":
        return BiRat(KPoly.const(c))

    @staticmethod
    def k() -> "BiRat":
        return BiRat._raw(_KP_K, _KP_ONE)

    @staticmethod
    def n() -> "BiRat":
        return BiRat._raw(KPoly.const(RatFn.n()), _KP_ONE)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash(("BiRat", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"BiRat({self.num!r}, {self.den!r})"

    @staticmethod
    def _coerce(other) -> Optional["BiRat"]:
        if isinstance(other, BiRat):
            return other
        if isinstance(other, (int, Fraction, RatFn)):
            return BiRat.const(other)
        if isinstance(other, KPoly):
            return BiRat(other)
        return None

    def __add__(self, other) -> "BiRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        if self.den == o.den:
            return BiRat(self.num + o.num, self.den)
        g = kpoly_gcd(self.den, o.den)
        if g.degree > 0:
            da = self.den // g
            db = o.den // g
            return BiRat(self.num * db + o.num * da, da * o.den)
        return BiRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "BiRat":
        return BiRat._raw(-self.num, self.den)

    def __sub__(self, other) -> "BiRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "BiRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "BiRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return BiRat.zero()
        return BiRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BiRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise DegenerateInput("denominator is identically zero")
        return BiRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "BiRat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int) -> "BiRat":
        if e < 0:
            if self.is_zero:
                raise DegenerateInput("denominator is identically zero")
            return BiRat(self.den, self.num) ** (-e)
        result = BiRat.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def subs_k_affine(self, u: KCoef, v: KCoef) -> "BiRat":
        """k -> u*k + v, renormalized."""
        return BiRat(self.num.subs_k_affine(u, v), self.den.subs_k_affine(u, v))

    def subs_n_affine(self, a: KCoef, b: KCoef) -> "BiRat":
        return BiRat(self.num.subs_n_affine(a, b), self.den.subs_n_affine(a, b))

    def reflect(self) -> "BiRat":
        """The summand R(n-1-k, n)."""
        return self.subs_k_affine(Fraction(-1), RatFn.n() - 1)

    def eval_k(self, x: KCoef) -> RatFn:
        """R(x, n) as a rational function of n; x must not be a root of den."""
        dv = self.den.eval_at(x)
        if dv.is_zero:
            raise ZeroDivisionError(f"denominator vanishes identically at k = {x}")
        return self.num.eval_at(x) / dv

    def specialize_n(self, n0: Fraction | int) -> tuple[UPoly, UPoly]:
        """(num, den) as univariate polynomials in k at n = n0."""
        return self.num.specialize_n(n0), self.den.specialize_n(n0)
