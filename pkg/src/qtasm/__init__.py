"""Exact square-ice models for quarter-turn symmetric alternating-sign matrices."""

__version__ = "0.1.0"
