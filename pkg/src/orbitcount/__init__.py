"""Orbit counting toolkit: weighted heights, quartic invariants and 2-Selmer statistics."""

__version__ = "0.1.0"
