"""Exact cohomology, Ext tables and mutation data for homogeneous bundles."""

__version__ = "0.1.0"
