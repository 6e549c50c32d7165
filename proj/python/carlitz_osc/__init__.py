"""Exact Carlitz-basis ladder calculus over F_q((x))."""

try:
    from ._carlitz_osc import Context, suites
except ImportError:  # in-tree builds put the module next to this package
    from _carlitz_osc import Context, suites

__all__ = ["Context", "suites"]
