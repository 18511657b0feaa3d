"""Edge colorings avoiding triangle color patterns: counting, cluster graphs, LPs, certificates."""

__version__ = "0.1.0"
