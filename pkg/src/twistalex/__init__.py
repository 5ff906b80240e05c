"""Twisted Alexander polynomials of knots for metabelian SL(2) representations."""
