"""Exact computations with affine symmetric groups of type A."""
