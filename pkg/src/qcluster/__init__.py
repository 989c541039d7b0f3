"""Exact-arithmetic engine for quantum cluster algebras of acyclic ice quivers."""

__version__ = "0.1.0"
