"""Sum-preserving rearrangements of the summand: reflection, m-section, split."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiRat
from .errors import DegenerateInput
from .poly import RatFn


@dataclass(frozen=True)
class SectionedSummand:
    """Residue-class pieces: sum_{k<mN} R(k, mN) = sum_r sum_{j<N} parts[r](j, N)."""

    parts: tuple[BiRat, ...]
    modulus: int


def reflect_full(R: BiRat) -> BiRat:
    """R(n-1-k, n): reverses the summation order, so the sum is unchanged."""
    return R.reflect()


def m_section(R: BiRat, m: int) -> SectionedSummand:
    """Split by residues of k mod m; the outer variable becomes n/m."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    parts = tuple(
        R.subs_n_affine(m, 0).subs_k_affine(Fraction(m), RatFn.const(r)) for r in range(m)
    )
    return SectionedSummand(parts, m)


def split_at(R: BiRat, m: int) -> tuple[list[RatFn], BiRat]:
    """Peel off the first m+1 terms: head[i] = R(i, n), tail = R(k+m+1, n)."""
    if m < 0:
        raise ValueError("split index must be >= 0")
    head: list[RatFn] = []
    for i in range(m + 1):
        dv = R.den.eval_at(RatFn.const(i))
        if dv.is_zero:
            raise DegenerateInput(f"term k = {i} is identically singular")
        head.append(R.num.eval_at(RatFn.const(i)) / dv)
    tail = R.subs_k_affine(Fraction(1), RatFn.const(m + 1))
    return head, tail
