"""Partial-fraction decomposition of the summand and polynomial-part summation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .analysis import LinearFactor
from .bipoly import BiRat, KPoly
from .errors import UnsupportedDenominator
from .poly import RatFn, power_sum_poly


@dataclass(frozen=True)
class AtomicFraction:
    """beta(n) / (k - alpha(n))**t."""

    alpha: RatFn
    t: int
    beta: RatFn


@dataclass(frozen=True)
class PFD:
    """Polynomial part plus atomic fractions; recombines to the summand exactly."""

    poly_part: KPoly
    fractions: tuple[AtomicFraction, ...]


def _merge_fractions(items: list[AtomicFraction]) -> tuple[AtomicFraction, ...]:
    acc: dict[tuple[RatFn, int], RatFn] = {}
    for f in items:
        key = (f.alpha, f.t)
        acc[key] = acc.get(key, RatFn.zero()) + f.beta
    out = [AtomicFraction(a, t, b) for (a, t), b in acc.items() if not b.is_zero]
    out.sort(key=lambda f: (f.alpha.sort_key(), -f.t))
    return tuple(out)


def make_pfd(poly_part: KPoly, fractions: list[AtomicFraction]) -> PFD:
    return PFD(poly_part, _merge_fractions(fractions))


def _taylor_coeffs(num: KPoly, den: KPoly, alpha: RatFn, order: int) -> list[RatFn]:
    # first `order` series coefficients of num/den around k = alpha
    shift = KPoly((alpha, RatFn.one()))
    ns = num.compose(shift).coeffs[:order]
    ds = den.compose(shift).coeffs[:order]
    ns = list(ns) + [RatFn.zero()] * (order - len(ns))
    ds = list(ds) + [RatFn.zero()] * (order - len(ds))
    inv0 = RatFn.one() / ds[0]
    inv = [inv0] + [RatFn.zero()] * (order - 1)
    for i in range(1, order):
        s = RatFn.zero()
        for j in range(1, i + 1):
            if not ds[j].is_zero and not inv[i - j].is_zero:
                s = s + ds[j] * inv[i - j]
        inv[i] = -inv0 * s
    out = [RatFn.zero()] * order
    for i in range(order):
        s = RatFn.zero()
        for j in range(i + 1):
            if not ns[j].is_zero and not inv[i - j].is_zero:
                s = s + ns[j] * inv[i - j]
        out[i] = s
    return out


def decompose(R: BiRat, factors: list[LinearFactor]) -> PFD:
    """Split R into polynomial part plus atomic fractions over the factors.

    Coefficients come from the Taylor expansion of R*(k-alpha)**d around
    k = alpha, all in exact arithmetic.  Raises UnsupportedDenominator when
    the factors do not exhaust the denominator.
    """
    den = R.den
    if sum(f.multiplicity for f in factors) != den.degree:
        raise UnsupportedDenominator("denominator has non-linear remainder in k")
    poly_part, rest = R.num.divmod(den)
    fractions: list[AtomicFraction] = []
    if not rest.is_zero:
        for f in factors:
            other = den
            for _ in range(f.multiplicity):
                other = other.div_linear(f.alpha)[0]
            coeffs = _taylor_coeffs(rest, other, f.alpha, f.multiplicity)
            for j, beta in enumerate(coeffs):
                if not beta.is_zero:
                    fractions.append(AtomicFraction(f.alpha, f.multiplicity - j, beta))
    return make_pfd(poly_part, fractions)


def faulhaber_sum(P: KPoly) -> RatFn:
    """sum_{k=0}^{n-1} P(k, n) as an exact rational function of n."""
    total = RatFn.zero()
    for m, c in enumerate(P.coeffs):
        if not c.is_zero:
            total = total + c * RatFn(power_sum_poly(m))
    return total


def pfd_to_birat(p: PFD) -> BiRat:
    """Recombine a PFD into a single summand (for verification)."""
    total = BiRat(p.poly_part)
    for f in p.fractions:
        lin = BiRat(KPoly((-f.alpha, RatFn.one())))
        total = total + BiRat.const(f.beta) / lin**f.t
    return total
