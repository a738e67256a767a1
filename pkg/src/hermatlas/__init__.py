"""Symmetric spaces uniformizing fixed loci of finite abelian actions on the Siegel space."""

__version__ = "0.1.0"
