"""Groebner bases of eventually symmetric grevlex series and enumeration of
generic initial ideals of ideals generated by forms of fixed degrees."""

__version__ = "0.1.0"
