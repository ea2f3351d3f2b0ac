"""Exact rational arithmetic layer: polynomials, operators, series carriers."""
