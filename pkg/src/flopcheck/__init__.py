"""Exact verification engine for the stratified Mukai flop on G(2, n)."""

__version__ = "0.1.0"
