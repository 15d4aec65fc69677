"""Denominator analysis: roots in Q(n), their asymptotics, and slowness.

Root extraction works from one integer specialization of n: rational roots
of the specialized polynomial seed a Newton iteration that lifts each one
to a power series in (n - n0), a Pade step reconstructs a rational-function
candidate, and only candidates passing exact division survive.  Degree
bounds for the reconstruction come from the cleared coefficients, Gauss
style.  Seeds that happen to degenerate are retried, and every returned
factor is certified by the division check, so the recombination identity
holds unconditionally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .bipoly import KPoly
from .errors import DegenerateInput
from .poly import RatFn, UPoly, poly_lcm
from .ratroots import cauchy_root_bound, rational_roots


@dataclass(frozen=True)
class LinearFactor:
    """A factor (k - alpha(n))**multiplicity of the denominator."""

    alpha: RatFn
    multiplicity: int


@dataclass(frozen=True)
class Asymptotics:
    """alpha(n) ~ c * n**epsilon; epsilon is None for the zero function."""

    epsilon: Optional[int]
    c: Fraction


class SlownessClass(Enum):
    SLOW = "slow"
    REFLECT_SLOW = "reflect_slow"
    FAST = "fast"


def asymptotics_of(alpha: RatFn) -> Asymptotics:
    """Exact leading behaviour of a rational function of n."""
    if alpha.is_zero:
        return Asymptotics(None, Fraction(0))
    return Asymptotics(alpha.num.degree - alpha.den.degree, alpha.num.lc / alpha.den.lc)


def _is_slow(alpha: RatFn) -> bool:
    eps = asymptotics_of(alpha).epsilon
    return eps is None or eps <= 0


def classify(alpha: RatFn) -> SlownessClass:
    """SLOW for epsilon < 1; REFLECT_SLOW when n-1-alpha is slow; else FAST."""
    if _is_slow(alpha):
        return SlownessClass.SLOW
    if _is_slow(RatFn.n() - alpha - 1):
        return SlownessClass.REFLECT_SLOW
    return SlownessClass.FAST


# ---------------------------------------------------------------------------
# truncated power series over Q (dense Fraction lists of fixed length)


def _s_trim(a: list[Fraction], L: int) -> list[Fraction]:
    out = a[:L]
    out.extend([Fraction(0)] * (L - len(out)))
    return out


def _s_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    return [x + y for x, y in zip(a, b)]


def _s_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    return [x - y for x, y in zip(a, b)]


def _s_mul(a: list[Fraction], b: list[Fraction], L: int) -> list[Fraction]:
    out = [Fraction(0)] * L
    for i, ai in enumerate(a):
        if ai and i < L:
            for j, bj in enumerate(b):
                if i + j >= L:
                    break
                if bj:
                    out[i + j] += ai * bj
    return out


def _s_inv(a: list[Fraction], L: int) -> list[Fraction]:
    # inverse of a unit series (a[0] != 0)
    inv0 = 1 / a[0]
    out = [inv0] + [Fraction(0)] * (L - 1)
    for i in range(1, L):
        s = Fraction(0)
        for j in range(1, i + 1):
            if j < len(a) and a[j] and out[i - j]:
                s += a[j] * out[i - j]
        out[i] = -inv0 * s
    return out


def _coeff_series(c: RatFn, n0: int, L: int) -> list[Fraction]:
    # c(n0 + x) as a series in x
    u = _s_trim(list(c.num.compose_affine(1, n0).coeffs), L)
    v = _s_trim(list(c.den.compose_affine(1, n0).coeffs), L)
    return _s_mul(u, _s_inv(v, L), L)


def _series_eval_poly(cs: list[list[Fraction]], a: list[Fraction], L: int) -> list[Fraction]:
    # Horner in k with series coefficients
    acc = [Fraction(0)] * L
    for c in reversed(cs):
        acc = _s_add(_s_mul(acc, a, L), _s_trim(c, L))
    return acc


def _pade(series: list[Fraction], bound: int) -> Optional[tuple[UPoly, UPoly]]:
    # [bound/bound] reconstruction from 2*bound+1 terms via extended Euclid
    N = 2 * bound + 1
    if len(series) < N:
        return None
    r0 = UPoly([Fraction(0)] * N + [Fraction(1)])
    r1 = UPoly(series[:N])
    t0, t1 = UPoly.zero(), UPoly.one()
    while r1.degree > bound:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    if r1.is_zero and t1.is_zero:
        return None
    if t1.is_zero or t1.evaluate(0) == 0 or t1.degree > bound:
        return None
    return r1, t1


def _lift_root(F: KPoly, n0: int, r: Fraction, bound: int) -> Optional[RatFn]:
    """Newton-lift the simple specialized root r of F(., n0) and reconstruct.

    Tries small degree bounds first and escalates to the Gauss bound; the
    caller verifies any candidate by exact division, so this only has to
    produce the right answer when the root really lies in Q(n).
    """
    bounds = []
    b = 2
    while b < bound:
        bounds.append(b)
        b *= 3
    bounds.append(max(bound, 1))
    dF = F.derivative()
    for b in bounds:
        L = 2 * b + 1
        cs = [_coeff_series(c, n0, L) for c in F.coeffs]
        dcs = [_coeff_series(c, n0, L) for c in dF.coeffs]
        a = [r] + [Fraction(0)] * (L - 1)
        prec = 1
        while prec < L:
            prec = min(2 * prec, L)
            fa = _series_eval_poly(cs, a, prec)
            dfa = _series_eval_poly(dcs, a, prec)
            if dfa[0] == 0:
                return None
            a = _s_trim(_s_sub(_s_trim(a, prec), _s_mul(fa, _s_inv(dfa, prec), prec)), L)
        rec = _pade(a, b)
        if rec is None:
            continue
        u, v = rec
        cand = RatFn(u.compose_affine(1, -n0), v.compose_affine(1, -n0))
        if cand.den.evaluate(n0) != 0 and cand.evaluate(n0) == r:
            return cand
    return None


def _degree_bound(P: KPoly) -> int:
    # Gauss bound: cleared coefficients' n-degrees bound root num/den degrees
    dens = [c.den for c in P.coeffs]
    D = UPoly.one()
    for q in dens:
        D = poly_lcm(D, q)
    best = 0
    for c in P.coeffs:
        if not c.is_zero:
            best = max(best, (c.num * (D // c.den)).degree)
    return max(best, 1)


def _seed_ok(P: KPoly, n0: int) -> bool:
    for c in P.coeffs:
        if c.den.evaluate(n0) == 0:
            return False
    return P.lc.num.evaluate(n0) != 0


def _extract_at_seed(P: KPoly, n0: int, bound: int) -> tuple[list[tuple[RatFn, int]], KPoly]:
    found: list[tuple[RatFn, int]] = []
    progress = True
    while progress and P.degree > 0:
        progress = False
        spec = P.specialize_n(n0)
        if spec.degree != P.degree:
            break
        for r, m_obs in rational_roots(spec):
            alpha = None
            for m_try in range(m_obs, 0, -1):
                # alpha of true multiplicity m is a simple root of the
                # (m-1)-th k-derivative, which seeds the Newton lift
                F = P
                for _ in range(m_try - 1):
                    F = F.derivative()
                fs = F.specialize_n(n0)
                if fs.evaluate(r) != 0 or fs.derivative().evaluate(r) == 0:
                    continue
                alpha = _lift_root(F, n0, r, bound)
                if alpha is not None:
                    break
            if alpha is None:
                continue
            mult = 0
            T = P
            while True:
                quo, rem = T.div_linear(alpha)
                if rem.is_zero:
                    T = quo
                    mult += 1
                else:
                    break
            if mult:
                found.append((alpha, mult))
                P = T
                progress = True
                break
    return found, P


def k_linear_roots(Q: KPoly) -> tuple[list[LinearFactor], KPoly]:
    """Factor Q over Q(n) as remainder * prod (k - alpha_s)**d_s, exactly.

    The remainder is the rootless (over Q(n)) part; every factor is
    certified by exact division.
    """
    if Q.is_zero:
        raise DegenerateInput("cannot factor the zero polynomial")
    unit = Q.lc
    P = Q.monic()
    pairs: list[tuple[RatFn, int]] = []
    # zero roots come straight off the trailing coefficients
    m0 = 0
    while P.degree > 0 and P.coeffs[0].is_zero:
        P = KPoly(P.coeffs[1:])
        m0 += 1
    if m0:
        pairs.append((RatFn.zero(), m0))
    if P.degree > 0:
        bound = _degree_bound(P)
        seeds_tried = 0
        n0 = 2
        while P.degree > 0 and seeds_tried < 4:
            while not _seed_ok(P, n0):
                n0 += 1
            got, P = _extract_at_seed(P, n0, bound)
            pairs.extend(got)
            if not got:
                seeds_tried += 1
            n0 += 1
    merged: dict[RatFn, int] = {}
    for alpha, m in pairs:
        merged[alpha] = merged.get(alpha, 0) + m
    factors = [LinearFactor(a, m) for a, m in merged.items()]
    factors.sort(key=lambda f: (f.multiplicity, f.alpha.sort_key()))
    remainder = P * unit
    return factors, remainder


# ---------------------------------------------------------------------------
# singularity analysis: when does a root land in the summation range?


def eventual_sign(f: RatFn) -> tuple[int, int]:
    """(sign, bound): sign of f(n) for every integer n >= bound."""
    if f.is_zero:
        return 0, 1
    bound = max(
        int(cauchy_root_bound(f.num)) + 1,
        int(cauchy_root_bound(f.den)) + 1,
        1,
    )
    sign = 1 if f.num.lc > 0 else -1
    return sign, bound


def _scan_hits(alpha: RatFn, bound: int) -> set[int]:
    hits: set[int] = set()
    for n0 in range(1, bound + 1):
        if alpha.den.evaluate(n0) == 0:
            continue
        val = alpha.evaluate(n0)
        if val.denominator == 1 and 0 <= val <= n0 - 1:
            hits.add(n0)
    return hits


def root_hits(alpha: RatFn) -> Optional[tuple[set[int], int]]:
    """Integers n with alpha(n) in {0, ..., n-1}, or None when persistent.

    Returns (hits, bound) with all hits <= bound and provably none beyond,
    or None when the root lands in the summation range for infinitely many
    n (the sum is then undefined arbitrarily far out).
    """
    if alpha.is_zero:
        return None
    s_a, b_a = eventual_sign(alpha)
    s_w, b_w = eventual_sign(RatFn.n() - alpha - 1)
    bound = max(b_a, b_w, 2)
    if s_a < 0 or s_w < 0:
        return _scan_hits(alpha, bound), bound
    # alpha eventually sits inside [0, n-1]; integrality decides
    whole, rem = alpha.num.divmod(alpha.den)
    lcm_den = math.lcm(*(c.denominator for c in whole.coeffs)) if not whole.is_zero else 1
    residue_fracs = {whole.evaluate(rho) % 1 for rho in range(lcm_den)}
    if rem.is_zero:
        if any(f == 0 for f in residue_fracs):
            return None
        return _scan_hits(alpha, bound), bound
    threshold = min((Fraction(1) if f == 0 else min(f, 1 - f)) for f in residue_fracs)
    a_minus = threshold * alpha.den - rem
    a_plus = threshold * alpha.den + rem
    bound = max(
        bound,
        int(cauchy_root_bound(alpha.den)) + 1,
        int(cauchy_root_bound(a_minus)) + 1,
        int(cauchy_root_bound(a_plus)) + 1,
    )
    return _scan_hits(alpha, bound), bound
