"""Executable finite-approximation toolkit for finitely presented semigroups:
parametric string rewriting with confluence checking, finite-semigroup
analysis, constructive local approximations, and bounded embedding search."""

__version__ = "0.1.0"
