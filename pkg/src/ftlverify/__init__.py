"""Verification of mathematical texts written in a ForTheL-like language."""

__version__ = "0.1.0"
