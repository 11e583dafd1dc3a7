"""Closed subsets of root systems up to Weyl-group conjugacy."""
from __future__ import annotations

__version__ = "0.1.0"
