"""Exact verification of Tutte's chromatic identities via the chromatic and
Temperley-Lieb algebras.  No floating point anywhere."""

__version__ = "0.1.0"
