"""Exact arithmetic in the Bolza quaternion order over Q(sqrt2), its finite quotients, and congruence covers."""

__version__ = "0.1.0"
