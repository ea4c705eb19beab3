"""Exact symmetric-function kernel: the derivation D, chain-rule plethysm, Chern shadows."""

__version__ = "0.1.0"
