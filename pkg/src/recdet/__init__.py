"""Exact determinant identities for polynomial sequences defined by
three-term recurrences."""

__version__ = "0.1.0"
