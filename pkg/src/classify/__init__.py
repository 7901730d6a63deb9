"""Deciders for the Serre, Cohen-Macaulay, Buchsbaum and shellability hierarchy."""

from src.classify.report import ClassifyOptions, classify_complex, classify_graph

__all__ = ["ClassifyOptions", "classify_complex", "classify_graph"]
