"""Yokonuma-Hecke toolkit - exact computation in affine Yokonuma-Hecke algebras."""
