"""Exact rational-root extraction for univariate polynomials over Q.

Divisor enumeration after clearing denominators, with the classical
P(1)/P(-1) divisibility filters and a Cauchy bound so candidate lists stay
short.  Divisors come from a Miller-Rabin / Pollard-rho factorizer, which is
plenty for the coefficient sizes this engine meets.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import UPoly

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic for n < 3.3e24 with these bases
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        x = y = 2
        c = seed
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    ds.sort()
    return ds


def cauchy_root_bound(p: UPoly) -> Fraction:
    """1 + max |c_i / lc|: every real root lies in (-bound, bound)."""
    if p.is_zero:
        raise ValueError("root bound of zero polynomial")
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lc


def clear_to_integers(p: UPoly) -> list[int]:
    """Primitive integer coefficient list of a nonzero p (content removed)."""
    if p.is_zero:
        raise ValueError("cannot clear zero polynomial")
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*(abs(c) for c in ints))
    return [c // g for c in ints]


def rational_roots(p: UPoly) -> list[tuple[Fraction, int]]:
    """All rational roots of p with multiplicities, sorted ascending.

    Zero roots are stripped first; the rest come from divisor enumeration of
    the cleared trailing/leading coefficients pruned by the Cauchy bound and
    the (p - q) | P(1), (p + q) | P(-1) tests, each verified exactly.
    """
    if p.is_zero:
        raise ValueError("rational roots of zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    v = 0
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        v += 1
    if v:
        roots.append((Fraction(0), v))
    work = UPoly(coeffs)
    if work.degree < 1:
        return roots
    ints = clear_to_integers(work)
    c0, cd = abs(ints[0]), abs(ints[-1])
    p1 = sum(ints)
    pm1 = sum(c if i % 2 == 0 else -c for i, c in enumerate(ints))
    bound = cauchy_root_bound(work)
    found: list[Fraction] = []
    for q in divisors(cd):
        for pn in divisors(c0):
            if math.gcd(pn, q) != 1:
                continue
            if Fraction(pn, q) >= bound:
                break  # divisors ascend, larger pn only grow
            for sign in (1, -1):
                # (p - q) | P(1) and (p + q) | P(-1) for any root p/q
                d1 = sign * pn - q
                if d1 == 0:
                    if p1 != 0:
                        continue
                elif p1 % d1 != 0:
                    continue
                d2 = sign * pn + q
                if d2 == 0:
                    if pm1 != 0:
                        continue
                elif pm1 % d2 != 0:
                    continue
                cand = Fraction(sign * pn, q)
                if work.evaluate(cand) == 0:
                    found.append(cand)
    for cand in found:
        mult = 0
        lin = UPoly((-cand, 1))
        while True:
            quo, rem = work.divmod(lin)
            if not rem.is_zero:
                break
            work = quo
            mult += 1
        if mult:
            roots.append((cand, mult))
    roots.sort(key=lambda t: t[0])
    return roots


def integer_roots(p: UPoly) -> list[int]:
    """Integer roots of p (without multiplicity)."""
    return [int(r) for r, _ in rational_roots(p) if r.denominator == 1]
