"""Exact univariate arithmetic over Q: polynomials and rational functions of n.

A UPoly is a dense tuple of Fraction coefficients indexed by degree; the
empty tuple is the zero polynomial and the trailing stored coefficient is
always nonzero.  A RatFn is a reduced quotient num/den of two UPoly with a
monic denominator, so two equal rational functions are structurally equal
and values can be dict keys.  Everything is immutable and safe to share.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, gcd as int_gcd, lcm as int_lcm
from typing import Iterable, Optional, Sequence, Union

Coef = Union[int, Fraction]


def _as_fraction(c: Coef) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UPoly:
    """Dense univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coef] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @staticmethod
    def zero() -> "UPoly":
        return _UP_ZERO

    @staticmethod
    def one() -> "UPoly":
        return _UP_ONE

    @staticmethod
    def const(c: Coef) -> "UPoly":
        return UPoly((c,))

    @staticmethod
    def x() -> "UPoly":
        return _UP_X

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UPoly({list(self.coeffs)!r})"

    def _coerce(self, other) -> Optional["UPoly"]:
        if isinstance(other, UPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UPoly.const(other)
        return None

    def __add__(self, other) -> "UPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "UPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "UPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "UPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return _UP_ZERO
        if len(b) == 1:
            c = b[0]
            return UPoly(tuple(ai * c for ai in a))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = _UP_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        """Exact polynomial division with remainder over Q."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return _UP_ZERO, self
        quot = [Fraction(0)] * (dq + 1)
        olc = other.lc
        oc = other.coeffs
        for i in range(dq, -1, -1):
            top = rem[i + len(oc) - 1]
            if top:
                q = top / olc
                quot[i] = q
                for j, c in enumerate(oc):
                    rem[i + j] -= q * c
        return UPoly(quot), UPoly(rem)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def derivative(self) -> "UPoly":
        return UPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, x: Coef) -> Fraction:
        """Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "UPoly") -> "UPoly":
        """self(other(x)), exact."""
        acc = _UP_ZERO
        for c in reversed(self.coeffs):
            acc = acc * other + UPoly.const(c)
        return acc

    def compose_affine(self, a: Coef, b: Coef) -> "UPoly":
        return self.compose(UPoly((b, a)))

    def monic(self) -> "UPoly":
        if self.is_zero or self.lc == 1:
            return self
        inv = 1 / self.lc
        return UPoly(tuple(c * inv for c in self.coeffs))

    def shift_degree(self, j: int) -> "UPoly":
        """Multiply by x**j."""
        if self.is_zero:
            return self
        return UPoly((Fraction(0),) * j + self.coeffs)


_UP_ZERO = object.__new__(UPoly)
_UP_ZERO.coeffs = ()
_UP_ONE = object.__new__(UPoly)
_UP_ONE.coeffs = (Fraction(1),)
_UP_X = object.__new__(UPoly)
_UP_X.coeffs = (Fraction(0), Fraction(1))


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd over Q (Euclid); gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: UPoly, b: UPoly) -> UPoly:
    if a.is_zero or b.is_zero:
        return _UP_ZERO
    return ((a * b) // poly_gcd(a, b)).monic()


def poly_squarefree(p: UPoly) -> list[tuple[UPoly, int]]:
    """Square-free decomposition by Yun's derivative-gcd cascade.

    Returns monic, pairwise coprime, square-free factors with strictly
    increasing multiplicities whose weighted product equals p up to a
    rational unit.
    """
    if p.is_zero:
        raise ValueError("squarefree of zero")
    p = p.monic()
    if p.degree < 1:
        return []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    if g.degree == 0:
        return [(p, 1)]
    out: list[tuple[UPoly, int]] = []
    w = p // g
    y = dp // g
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        h = poly_gcd(w, z)
        if h.degree > 0:
            out.append((h, i))
        w = w // h
        y = z // h
        z = y - w.derivative()
        i += 1
    return out


def _nullspace_vector(rows: list[list[Fraction]], ncols: int) -> Optional[list[Fraction]]:
    # Exact Gauss-Jordan; returns one nonzero kernel vector or None.
    mat = [row[:] for row in rows]
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [vi - f * vr for vi, vr in zip(mat[i], mat[r])]
        pivot_of_col[c] = r
        r += 1
    free = [c for c in range(ncols) if c not in pivot_of_col]
    if not free:
        return None
    fc = free[0]
    vec = [Fraction(0)] * ncols
    vec[fc] = Fraction(1)
    for c, pr in pivot_of_col.items():
        vec[c] = -mat[pr][fc]
    return vec


def cauchy_interpolate(
    points: Sequence[tuple[Coef, Coef]], deg_num: int, deg_den: int
) -> Optional["RatFn"]:
    """Rational interpolation with degree bounds.

    Returns the unique RatFn f with deg(num) <= deg_num, deg(den) <= deg_den
    passing through all points with a denominator that vanishes at none of
    them, or None when no such function exists.
    """
    pts = [(_as_fraction(x), _as_fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate x values")
    if len(pts) < deg_num + deg_den + 1:
        raise ValueError("insufficient points")
    ncols = deg_num + 1 + deg_den + 1
    rows = []
    for x, y in pts:
        xp = Fraction(1)
        row = []
        for _ in range(deg_num + 1):
            row.append(xp)
            xp *= x
        xp = Fraction(1)
        for _ in range(deg_den + 1):
            row.append(-y * xp)
            xp *= x
        rows.append(row)
    vec = _nullspace_vector(rows, ncols)
    if vec is None:
        return None
    num = UPoly(vec[: deg_num + 1])
    den = UPoly(vec[deg_num + 1 :])
    if den.is_zero:
        return None
    f = RatFn(num, den)
    for x, y in pts:
        dv = f.den.evaluate(x)
        if dv == 0 or f.num.evaluate(x) != y * dv:
            return None
    return f


class RatFn:
    """Rational function of n over Q, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = UPoly.const(num)
        if den is None:
            den = _UP_ONE
        elif isinstance(den, (int, Fraction)):
            den = UPoly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in RatFn")
        if num.is_zero:
            self.num = _UP_ZERO
            self.den = _UP_ONE
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        if den.lc != 1:
            inv = 1 / den.lc
            num = num * inv
            den = den.monic()
        self.num = num
        self.den = den

    @staticmethod
    def _raw(num: UPoly, den: UPoly) -> "RatFn":
        r = object.__new__(RatFn)
        r.num = num
        r.den = den
        return r

    @staticmethod
    def zero() -> "RatFn":
        return _RF_ZERO

    @staticmethod
    def one() -> "RatFn":
        return _RF_ONE

    @staticmethod
    def const(c: Coef) -> "RatFn":
        return RatFn(UPoly.const(c))

    @staticmethod
    def n() -> "RatFn":
        return _RF_N

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant rational function")
        if self.num.is_zero:
            return Fraction(0)
        return self.num.coeffs[0]

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash(("RatFn", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RatFn({self.num!r}, {self.den!r})"

    @staticmethod
    def _coerce(other) -> Optional["RatFn"]:
        if isinstance(other, RatFn):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFn.const(other)
        if isinstance(other, UPoly):
            return RatFn(other)
        return None

    def __add__(self, other) -> "RatFn":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.degree == 0:
            return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)
        da = self.den // g
        db = o.den // g
        return RatFn(self.num * db + o.num * da, da * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFn":
        return RatFn._raw(-self.num, self.den)

    def __sub__(self, other) -> "RatFn":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFn":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RatFn":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return _RF_ZERO
        # cross-cancel first so the final product is already reduced
        n1, d2 = self.num, o.den
        g = poly_gcd(n1, d2)
        if g.degree > 0:
            n1, d2 = n1 // g, d2 // g
        n2, d1 = o.num, self.den
        g = poly_gcd(n2, d1)
        if g.degree > 0:
            n2, d1 = n2 // g, d1 // g
        num = n1 * n2
        den = d1 * d2
        if den.lc != 1:
            num = num * (1 / den.lc)
            den = den.monic()
        return RatFn._raw(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFn":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero RatFn")
        return self * RatFn(o.den, o.num)

    def __rtruediv__(self, other) -> "RatFn":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int) -> "RatFn":
        if e < 0:
            if self.is_zero:
                raise ZeroDivisionError("zero to a negative power")
            return RatFn(self.den, self.num) ** (-e)
        result = _RF_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x: Coef) -> Fraction:
        """Exact value at n = x; raises ZeroDivisionError at a pole."""
        dv = self.den.evaluate(x)
        if dv == 0:
            raise ZeroDivisionError(f"pole of rational function at n = {x}")
        return self.num.evaluate(x) / dv

    def derivative(self) -> "RatFn":
        return RatFn(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def compose_affine(self, a: Coef, b: Coef) -> "RatFn":
        """f(a*n + b) for rational constants a != 0, b."""
        if _as_fraction(a) == 0:
            raise ValueError("degenerate affine substitution")
        return RatFn(self.num.compose_affine(a, b), self.den.compose_affine(a, b))

    def sort_key(self):
        """Canonical total order key (by size, then coefficients)."""
        return (
            max(self.num.degree, self.den.degree),
            self.num.degree,
            self.den.degree,
            self.num.coeffs,
            self.den.coeffs,
        )


_RF_ZERO = object.__new__(RatFn)
_RF_ZERO.num = _UP_ZERO
_RF_ZERO.den = _UP_ONE
_RF_ONE = object.__new__(RatFn)
_RF_ONE.num = _UP_ONE
_RF_ONE.den = _UP_ONE
_RF_N = object.__new__(RatFn)
_RF_N.num = _UP_X
_RF_N.den = _UP_ONE


_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with the B_1 = -1/2 convention, memoized.

    Computed from the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
    The cache only grows and entries are immutable, so concurrent readers
    are safe; the lock serializes extension.
    """
    if m < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if m < len(_bernoulli_cache):
        return _bernoulli_cache[m]
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= m:
            k = len(_bernoulli_cache)
            s = Fraction(0)
            for j in range(k):
                s += comb(k + 1, j) * _bernoulli_cache[j]
            _bernoulli_cache.append(-s / (k + 1))
    return _bernoulli_cache[m]


_power_sum_cache: dict[int, UPoly] = {}
_power_sum_lock = threading.Lock()


def power_sum_poly(m: int) -> UPoly:
    """The polynomial in n equal to sum_{k=0}^{n-1} k**m (Faulhaber).

    Uses (1/(m+1)) sum_j C(m+1, j) B_j n^(m+1-j), which with B_1 = -1/2
    needs no sign patch.
    """
    if m < 0:
        raise ValueError("power must be >= 0")
    p = _power_sum_cache.get(m)
    if p is not None:
        return p
    coeffs = [Fraction(0)] * (m + 2)
    for j in range(m + 1):
        coeffs[m + 1 - j] = Fraction(comb(m + 1, j), m + 1) * bernoulli(j)
    p = UPoly(coeffs)
    with _power_sum_lock:
        _power_sum_cache[m] = p
    return p
