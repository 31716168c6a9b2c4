"""Degree bookkeeping for higher rank divisors and their ind-varieties."""

from .degrees import (
    DivisorClassIndex,
    QuotIndex,
    Slope,
    StructureMapDegrees,
    quasi_iso_degree,
    quot_degree,
    slope,
    structure_map_degrees,
)
from .thresholds import (
    Constituent,
    IndVarietyProperties,
    constituent,
    dp_hypothesis,
    dp_threshold,
    ind_variety_properties,
    wpp_hypothesis,
    wpp_threshold,
)

__all__ = [
    'DivisorClassIndex',
    'QuotIndex',
    'Slope',
    'StructureMapDegrees',
    'quasi_iso_degree',
    'quot_degree',
    'slope',
    'structure_map_degrees',
    'Constituent',
    'IndVarietyProperties',
    'constituent',
    'dp_hypothesis',
    'dp_threshold',
    'ind_variety_properties',
    'wpp_hypothesis',
    'wpp_threshold',
]
