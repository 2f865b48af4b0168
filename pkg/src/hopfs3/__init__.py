"""Exact symbolic verification of the 72-dimensional Hopf algebra family
with dual-S3 coradical: construction, Hopf-axiom certificates, and
parameter classification."""

__version__ = "0.1.0"
