"""Combinatorics and F2 homological algebra for monopole web and foam Floer theory."""

__version__ = "0.1.0"
