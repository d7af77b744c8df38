"""Exact computations around spin representations of quantized orthogonal
algebras, the commuting operators on spinor tensor powers, and the
centralizer duality with nonstandard orthogonal coideal algebras."""

__version__ = "0.1.0"
