"""Computational services: partitions, Poincare polynomials, certificates, divisor bookkeeping."""
