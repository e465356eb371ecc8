"""Genus-2 function fields and fibrations in characteristic 2."""

__version__ = "0.1.0"
