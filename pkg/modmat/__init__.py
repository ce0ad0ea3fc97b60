"""Exact realizations of the matroid T_n: point chains, cusp configurations and q-expansions."""

__version__ = "1.0.0"
__author__ = "flare"
