"""Diagonal and weak point property thresholds for ind-varieties of divisors."""

from dataclasses import dataclass
from typing import Optional

from services.ind_divisors.degrees import (
    DivisorClassIndex,
    QuotIndex,
    Slope,
    _check_int,
    _check_rank,
    quot_degree,
    slope,
)


def wpp_threshold(r: int, k: int) -> int:
    """
    Least effective degree d_0 with d_0 > k.

    For deg(D) >= d_0 the constituent Q^{r,-rk}(D) = Quot^{r(deg D - k)}
    has positive degree divisible by r.
    """
    _check_rank(r)
    _check_int(k, "k")
    return max(k + 1, 0)


def dp_threshold(n: int) -> int:
    """Least effective degree d_1 > n; beyond it Q^{1,-n}(D) is Sym^{deg D - n}(C)."""
    _check_int(n, "n")
    return max(n + 1, 0)


def wpp_hypothesis(r: int, d: int) -> bool:
    """Quot^d of O_C^r has the weak point property when d > 0 and r | d."""
    _check_rank(r)
    _check_int(d, "d")
    return d > 0 and d % r == 0


def dp_hypothesis(d: int) -> bool:
    """Sym^d(C) has the diagonal property for every positive d."""
    _check_int(d, "d")
    return d > 0


@dataclass(frozen=True)
class Constituent:
    """Q^{r,n}(D) with its DP and WPP flags."""

    quot: QuotIndex
    deg_d: int
    is_symmetric_product: bool
    has_dp: bool
    has_wpp: bool


def constituent(r: int, n: int, deg_d: int) -> Constituent:
    d = quot_degree(r, n, deg_d)
    has_dp = r == 1 and dp_hypothesis(d)
    return Constituent(
        quot=QuotIndex(r, d),
        deg_d=deg_d,
        # Quot^d(O_C) = Sym^d(C)
        is_symmetric_product=r == 1 and d > 0,
        has_dp=has_dp,
        has_wpp=has_dp or wpp_hypothesis(r, d),
    )


@dataclass(frozen=True)
class IndVarietyProperties:
    """
    DP/WPP conclusions for the ind-variety of (r, n)-divisors, i.e. Q^{r,-n}.

    None means the property is undecided.
    """

    rank: int
    degree: int
    slope: Slope
    wpp_threshold: Optional[int]
    dp_threshold: Optional[int]
    has_wpp: Optional[bool]
    has_dp: Optional[bool]
    first_constituent: Optional[Constituent]


def ind_variety_properties(r: int, n: int) -> IndVarietyProperties:
    """
    Thresholds past which every constituent has the weak point or diagonal property.

    Integral slope n = rk gives WPP from degree wpp_threshold(r, k) on;
    rank one gives DP from degree dp_threshold(n) on.
    """
    s = slope(DivisorClassIndex(r, n))
    wpp_from = wpp_threshold(r, s.numerator) if s.is_integral else None
    dp_from = dp_threshold(n) if r == 1 else None
    start = dp_from if dp_from is not None else wpp_from
    return IndVarietyProperties(
        rank=r,
        degree=n,
        slope=s,
        wpp_threshold=wpp_from,
        dp_threshold=dp_from,
        has_wpp=True if s.is_integral else None,
        has_dp=True if r == 1 else None,
        first_constituent=constituent(r, -n, start) if start is not None else None,
    )
