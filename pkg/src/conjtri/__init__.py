"""Toolkit for planar graphs with vertex degrees 2 and 4: construction,
derived graphs, exact colorings, pair-color algebra, and abstract digraph
censuses."""

__version__ = "0.1.0"
