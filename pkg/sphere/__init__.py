"""Exact counting of circles and higher-order Voronoi decompositions for dots on the sphere."""

__version__ = "1.0.0"
