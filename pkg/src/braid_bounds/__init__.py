"""Crossing-number bounds for closed braids, with the invariants and searches that certify them."""

__version__ = "0.1.0"
