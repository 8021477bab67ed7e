"""Exact-arithmetic engine for weak crossed products of algebras."""

__version__ = "0.1.0"
