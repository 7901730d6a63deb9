"""Simplicial complexes on bit-vector vertex sets."""
