"""The rationality decision engine.

The sum of each atomic fraction beta/(k-alpha)**t is written as a difference
of normalized polygamma values, psi terms are grouped into affine classes
(arguments related by arg' = beta*arg + sigma with positive rational beta),
each class is reduced with the multiplication and shift identities, and the
sum is rational exactly when every surviving psi coefficient and every
prime-log coefficient cancels.  Negative dilations are never merged: the
only cross-sign identity valid at integers is the range reflection, and
that is applied beforehand, per atomic fraction, whenever it turns a root
with leading term ~n into a slow one.

Verdict semantics: a nonzero residual is a certified NOT_RATIONAL only when
every root of the denominator is slow (directly or after reflection);
otherwise the engine answers UNKNOWN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .analysis import (
    LinearFactor,
    SlownessClass,
    classify,
    k_linear_roots,
    root_hits,
)
from .bipoly import BiRat, KPoly
from .errors import ConstantBase, DegenerateInput, NegativeDilation
from .pfd import AtomicFraction, decompose, faulhaber_sum, make_pfd
from .poly import RatFn, UPoly
from .ratroots import factorize, integer_roots


@dataclass(frozen=True)
class PGTerm:
    """coef(n) * psi^(order)(arg(n)) with the normalized polygamma."""

    coef: RatFn
    order: int
    arg: RatFn


@dataclass(frozen=True)
class LogTerm:
    """coef(n) * log(prime); logs live on the prime basis."""

    prime: int
    coef: RatFn


@dataclass(frozen=True)
class PGExpr:
    """rational_part + sum of PGTerms + sum of LogTerms."""

    rational_part: RatFn
    pg_terms: tuple[PGTerm, ...]
    log_terms: tuple[LogTerm, ...]

    @property
    def is_rational(self) -> bool:
        return not self.pg_terms and not self.log_terms

    def __add__(self, other: "PGExpr") -> "PGExpr":
        return make_pgexpr(
            self.rational_part + other.rational_part,
            self.pg_terms + other.pg_terms,
            self.log_terms + other.log_terms,
        )

    def __neg__(self) -> "PGExpr":
        return PGExpr(
            -self.rational_part,
            tuple(PGTerm(-t.coef, t.order, t.arg) for t in self.pg_terms),
            tuple(LogTerm(t.prime, -t.coef) for t in self.log_terms),
        )

    def scaled(self, c: RatFn) -> "PGExpr":
        if c.is_zero:
            return make_pgexpr()
        return PGExpr(
            self.rational_part * c,
            tuple(PGTerm(t.coef * c, t.order, t.arg) for t in self.pg_terms),
            tuple(LogTerm(t.prime, t.coef * c) for t in self.log_terms),
        )


def make_pgexpr(
    rational: RatFn | int = 0,
    terms: Sequence[PGTerm] = (),
    logs: Sequence[LogTerm] = (),
) -> PGExpr:
    """Canonical PGExpr: merged (order, arg) keys, merged primes, zero-free."""
    if isinstance(rational, int):
        rational = RatFn.const(rational)
    acc: dict[tuple[int, RatFn], RatFn] = {}
    for t in terms:
        key = (t.order, t.arg)
        acc[key] = acc.get(key, RatFn.zero()) + t.coef
    merged = [PGTerm(c, o, a) for (o, a), c in acc.items() if not c.is_zero]
    merged.sort(key=lambda t: t.arg.sort_key(), reverse=True)
    merged.sort(key=lambda t: t.order)
    lacc: dict[int, RatFn] = {}
    for lt in logs:
        lacc[lt.prime] = lacc.get(lt.prime, RatFn.zero()) + lt.coef
    lmerged = [LogTerm(p, c) for p, c in sorted(lacc.items()) if not c.is_zero]
    return PGExpr(rational, tuple(merged), tuple(lmerged))


class Status(Enum):
    RATIONAL = "rational"
    NOT_RATIONAL = "not_rational"
    UNKNOWN = "unknown"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class Verdict:
    status: Status
    closed_form: Optional[RatFn] = None
    valid_from: Optional[int] = None
    residual: Optional[PGExpr] = None
    reason: Optional[str] = None


# ---------------------------------------------------------------------------
# rewrite rules


def atomic_to_polygamma(a: AtomicFraction) -> PGExpr:
    """sum_{k<n} beta/(k-alpha)**t = beta*(psi^(t-1)(n-alpha) - psi^(t-1)(-alpha))."""
    n = RatFn.n()
    return make_pgexpr(
        0,
        (
            PGTerm(a.beta, a.t - 1, n - a.alpha),
            PGTerm(-a.beta, a.t - 1, -a.alpha),
        ),
    )


def shift_reduce(term: PGTerm, j: int) -> PGExpr:
    """Rewrite coef*psi^(t)(g) with argument shifted down (or up) by j.

    psi^(t)(g) = psi^(t)(g - j) + sum_{l=1}^{j} (g - l)^-(t+1) for j >= 0,
    and the mirrored subtraction for j < 0.  Value-preserving wherever both
    sides are defined.
    """
    g, t, coef = term.arg, term.order, term.coef
    rational = RatFn.zero()
    if j >= 0:
        for l in range(1, j + 1):
            rational = rational + coef * (g - l) ** (-(t + 1))
        new_arg = g - j
    else:
        for l in range(0, -j):
            rational = rational - coef * (g + l) ** (-(t + 1))
        new_arg = g - j
    return make_pgexpr(rational, (PGTerm(coef, t, new_arg),))


def multiplication_expand(term: PGTerm, m: int) -> PGExpr:
    """Expand coef*psi^(t)(m*w) over the residues of the argument lattice.

    psi^(t)(m*w) = [t == 0]*log m + m^-(t+1) * sum_r psi^(t)(w + r/m), with
    log m carried on the prime basis.
    """
    if m < 2:
        raise ValueError("dilation must be >= 2")
    w = term.arg * Fraction(1, m)
    scale = Fraction(1, m ** (term.order + 1))
    terms = [
        PGTerm(term.coef * scale, term.order, w + Fraction(r, m)) for r in range(m)
    ]
    logs = []
    if term.order == 0:
        logs = [LogTerm(p, e * term.coef) for p, e in sorted(factorize(m).items())]
    return make_pgexpr(0, terms, logs)


def affine_relate(g1: RatFn, g2: RatFn) -> Optional[tuple[Fraction, Fraction]]:
    """Constants (beta != 0, sigma) with g2 = beta*g1 + sigma, if they exist."""
    if g1.is_constant:
        raise ConstantBase("affine base must be non-constant")
    d2 = g2.derivative()
    if d2.is_zero:
        return None
    q = d2 / g1.derivative()
    if not q.is_constant:
        return None
    beta = q.constant_value()
    rest = g2 - g1 * beta
    if not rest.is_constant:
        return None
    return beta, rest.constant_value()


@dataclass(frozen=True)
class AffineClass:
    """Same-order terms whose arguments are base-relative: arg = beta*base + sigma."""

    order: int
    base: RatFn
    members: tuple[tuple[PGTerm, Fraction, Fraction], ...]


def _relate(base: RatFn, arg: RatFn) -> Optional[tuple[Fraction, Fraction]]:
    if base.is_constant and arg.is_constant:
        return Fraction(1), arg.constant_value() - base.constant_value()
    if base.is_constant or arg.is_constant:
        return None
    rel = affine_relate(base, arg)
    if rel is None or rel[0] <= 0:
        return None
    return rel


def _base_key(arg: RatFn):
    return (max(arg.num.degree, arg.den.degree),) + arg.sort_key()


def partition_classes(terms: Sequence[PGTerm]) -> list[AffineClass]:
    """Maximal positive-dilation affine classes of equal-order terms.

    Positive affine relatedness is an equivalence, so greedy grouping
    against one representative per class is canonical.  Terms related only
    with a negative dilation land in separate classes.
    """
    by_order: dict[int, list[PGTerm]] = {}
    for t in terms:
        by_order.setdefault(t.order, []).append(t)
    out: list[AffineClass] = []
    for order in sorted(by_order):
        groups: list[list[PGTerm]] = []
        for term in by_order[order]:
            for g in groups:
                if _relate(g[0].arg, term.arg) is not None:
                    g.append(term)
                    break
            else:
                groups.append([term])
        for g in groups:
            base = min((t.arg for t in g), key=_base_key)
            members = []
            for t in g:
                rel = _relate(base, t.arg)
                assert rel is not None
                members.append((t, rel[0], rel[1]))
            members.sort(key=lambda m: m[0].arg.sort_key())
            out.append(AffineClass(order, base, tuple(members)))
    return out


def normalize_class(cls: AffineClass) -> PGExpr:
    """Reduce one affine class with the multiplication and shift identities.

    All members become psi terms at w + c for w = base/lcm(denominators of
    the dilations); terms whose constants agree mod 1 telescope onto the
    minimal constant, their shift corrections accumulate into the rational
    part, and only pairwise incommensurable arguments survive.
    """
    for _, beta, _ in cls.members:
        if beta <= 0:
            raise NegativeDilation(f"dilation {beta} is not positive")
    qstar = math.lcm(*(beta.denominator for _, beta, _ in cls.members))
    w = cls.base * Fraction(1, qstar)
    w_const = w.constant_value() if w.is_constant else None
    expanded_terms: list[PGTerm] = []
    logs: list[LogTerm] = []
    for term, beta, sigma in cls.members:
        m = beta * qstar
        assert m.denominator == 1
        m = int(m)
        if m == 1:
            expanded_terms.append(PGTerm(term.coef, term.order, w + sigma))
        else:
            piece = multiplication_expand(term, m)
            expanded_terms.extend(piece.pg_terms)
            logs.extend(piece.log_terms)
    buckets: dict[tuple, list[tuple[PGTerm, Fraction]]] = {}
    for t in expanded_terms:
        c = (t.arg - w).constant_value()
        key: tuple = (c % 1,)
        if w_const is not None and (w_const + c).denominator == 1:
            # never telescope across the pole at zero
            key = (c % 1, w_const + c >= 1)
        buckets.setdefault(key, []).append((t, c))
    rational = RatFn.zero()
    survivors: list[PGTerm] = []
    for bucket in buckets.values():
        c_min = min(c for _, c in bucket)
        for t, c in bucket:
            j = c - c_min
            assert j.denominator == 1
            piece = shift_reduce(t, int(j))
            rational = rational + piece.rational_part
            survivors.extend(piece.pg_terms)
    return make_pgexpr(rational, survivors, logs)


# ---------------------------------------------------------------------------
# the decision pipeline


class _Unsupported(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _trace(trace: Optional[list], stage: str, **payload) -> None:
    if trace is not None:
        trace.append({"stage": stage, **payload})


def _analyze(R: BiRat, trace: Optional[list] = None):
    factors, remainder = k_linear_roots(R.den)
    _trace(trace, "factor", factors=factors, remainder=remainder)
    if remainder.degree > 0:
        raise _Unsupported("non-rational roots in k")
    for f in factors:
        if root_hits(f.alpha) is None:
            raise _Unsupported("persistent singularity")
    classes = {f.alpha: classify(f.alpha) for f in factors}
    _trace(trace, "classify", classes=list(classes.items()))
    pfd = decompose(R, factors)
    _trace(trace, "decompose", poly_part=pfd.poly_part, fractions=pfd.fractions)
    n = RatFn.n()
    processed: list[AtomicFraction] = []
    reflected = False
    for frac in pfd.fractions:
        if classes[frac.alpha] is SlownessClass.REFLECT_SLOW:
            sign = -1 if frac.t % 2 else 1
            processed.append(AtomicFraction(n - frac.alpha - 1, frac.t, frac.beta * sign))
            reflected = True
        else:
            processed.append(frac)
    merged = make_pfd(pfd.poly_part, processed)
    if reflected:
        _trace(trace, "reflect", fractions=merged.fractions)
    incomplete = any(c is SlownessClass.FAST for c in classes.values())
    return factors, merged, incomplete


def _combine(pfd_processed, trace: Optional[list] = None) -> PGExpr:
    poly_sum = faulhaber_sum(pfd_processed.poly_part)
    _trace(trace, "faulhaber", poly_sum=poly_sum)
    expr = make_pgexpr(poly_sum)
    for frac in pfd_processed.fractions:
        expr = expr + atomic_to_polygamma(frac)
    _trace(trace, "polygamma", expr=expr)
    classes = partition_classes(expr.pg_terms)
    _trace(trace, "classes", classes=classes)
    total = make_pgexpr(expr.rational_part, (), expr.log_terms)
    for cls in classes:
        piece = normalize_class(cls)
        _trace(trace, "normalize", base=cls.base, order=cls.order, piece=piece)
        total = total + piece
    _trace(trace, "combine", expr=total)
    return total


def summand_to_pgexpr(R: BiRat, trace: Optional[list] = None) -> PGExpr:
    """The fully normalized polygamma form of sum_{k=0}^{n-1} R(k, n)."""
    _, pfd_processed, _ = _analyze(R, trace)
    return _combine(pfd_processed, trace)


def n_min_bound(
    roots: Sequence[LinearFactor],
    closed_form: RatFn,
    extra_denominators: Sequence[UPoly] = (),
) -> Optional[int]:
    """Least N from which no root meets {0..n-1} and no denominator vanishes.

    Returns None when some root is in the summation range for infinitely
    many n (persistent singularity).
    """
    bad: set[int] = set()
    for f in roots:
        res = root_hits(f.alpha)
        if res is None:
            return None
        bad |= res[0]
    dens = [closed_form.den] + [f.alpha.den for f in roots] + list(extra_denominators)
    for q in dens:
        if q.degree > 0:
            bad |= {r for r in integer_roots(q) if r >= 1}
    return max(bad, default=0) + 1


def _input_denominators(R: BiRat) -> list[UPoly]:
    out = []
    for c in R.num.coeffs + R.den.coeffs:
        if c.den.degree > 0:
            out.append(c.den)
    return out


def decide(R: BiRat, trace: Optional[list] = None) -> Verdict:
    """Decide whether sum_{k=0}^{n-1} R(k, n) is a rational function of n."""
    try:
        factors, pfd_processed, incomplete = _analyze(R, trace)
    except _Unsupported as e:
        _trace(trace, "verdict", status=Status.UNSUPPORTED, reason=e.reason)
        return Verdict(Status.UNSUPPORTED, reason=e.reason)
    total = _combine(pfd_processed, trace)
    if total.is_rational:
        extra = _input_denominators(R)
        for frac in pfd_processed.fractions:
            if frac.beta.den.degree > 0:
                extra.append(frac.beta.den)
            if frac.alpha.den.degree > 0:
                extra.append(frac.alpha.den)
        nmin = n_min_bound(factors, total.rational_part, extra)
        if nmin is None:
            _trace(trace, "verdict", status=Status.UNSUPPORTED, reason="persistent singularity")
            return Verdict(Status.UNSUPPORTED, reason="persistent singularity")
        _trace(trace, "verdict", status=Status.RATIONAL, closed_form=total.rational_part, valid_from=nmin)
        return Verdict(Status.RATIONAL, closed_form=total.rational_part, valid_from=nmin)
    if not incomplete:
        _trace(trace, "verdict", status=Status.NOT_RATIONAL)
        return Verdict(Status.NOT_RATIONAL, residual=total)
    _trace(trace, "verdict", status=Status.UNKNOWN)
    return Verdict(Status.UNKNOWN, residual=total)
