"""Exponent-pair calculus and a numerical zeta laboratory for short-interval
universality."""

__version__ = "0.1.0"
