"""Demazure atoms, key polynomials and the tools around them."""
