"""Exact graph invariants for squares of graphs and König-Egerváry structure."""

__version__ = "0.1.0"
