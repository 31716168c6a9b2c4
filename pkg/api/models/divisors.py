"""Models for higher rank divisor bookkeeping."""

from typing import Optional

from pydantic import BaseModel

from services.ind_divisors import Constituent, IndVarietyProperties, Slope


class SlopeResponse(BaseModel):
    rank: int
    degree: int
    numerator: int
    denominator: int
    integral: bool

    @classmethod
    def from_domain(cls, rank: int, degree: int, s: Slope) -> "SlopeResponse":
        return cls(
            rank=rank,
            degree=degree,
            numerator=s.numerator,
            denominator=s.denominator,
            integral=s.is_integral,
        )


class ConstituentModel(BaseModel):
    """Q^{r,n}(D) for one divisor degree."""
    rank: int
    deg_d: int
    torsion_degree: int
    is_symmetric_product: bool
    has_dp: bool
    has_wpp: bool

    @classmethod
    def from_domain(cls, c: Constituent) -> "ConstituentModel":
        return cls(
            rank=c.quot.rank,
            deg_d=c.deg_d,
            torsion_degree=c.quot.degree,
            is_symmetric_product=c.is_symmetric_product,
            has_dp=c.has_dp,
            has_wpp=c.has_wpp,
        )


class ThresholdsResponse(BaseModel):
    """DP/WPP conclusions for the ind-variety of (r, n)-divisors."""
    rank: int
    degree: int
    slope: str
    integral: bool
    wpp_threshold: Optional[int] = None
    dp_threshold: Optional[int] = None
    has_wpp: Optional[bool] = None
    has_dp: Optional[bool] = None
    first_constituent: Optional[ConstituentModel] = None

    @classmethod
    def from_domain(cls, props: IndVarietyProperties) -> "ThresholdsResponse":
        first = props.first_constituent
        return cls(
            rank=props.rank,
            degree=props.degree,
            slope=str(props.slope),
            integral=props.slope.is_integral,
            wpp_threshold=props.wpp_threshold,
            dp_threshold=props.dp_threshold,
            has_wpp=props.has_wpp,
            has_dp=props.has_dp,
            first_constituent=ConstituentModel.from_domain(first) if first else None,
        )


class QuotDegreeResponse(BaseModel):
    rank: int
    degree: int
    deg_d: int
    constituent: ConstituentModel
