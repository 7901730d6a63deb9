"""Circulant graphs and their parameterized families."""

from src.circulant.graph import CirculantGraph, SimpleGraph, disjoint_union, make_circulant

__all__ = ["CirculantGraph", "SimpleGraph", "disjoint_union", "make_circulant"]
