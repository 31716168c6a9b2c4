"""Poincare polynomials of symmetric products, multi symmetric products and multiprojective spaces."""

from .polynomial import PoincarePolynomial, binomial, poly_mul, poly_pow
from .betti import (
    CurveClass,
    composition_coefficient,
    euler_characteristic,
    macdonald_betti,
    multi_sym_poincare,
    multiproj_poincare,
    projective_bundle_poincare,
    projective_poincare,
    sym_poincare,
)

__all__ = [
    'PoincarePolynomial',
    'binomial',
    'poly_mul',
    'poly_pow',
    'CurveClass',
    'composition_coefficient',
    'euler_characteristic',
    'macdonald_betti',
    'multi_sym_poincare',
    'multiproj_poincare',
    'projective_bundle_poincare',
    'projective_poincare',
    'sym_poincare',
]
