#!/usr/bin/env python3
"""Walkthrough: exact arithmetic in the path algebra."""

from fractions import Fraction

from leavitt import AlgebraContext, PrimeField, enumerate_basis, growth_profile, parse_expression
from leavitt.fixtures import g_line, g_loop, g_rose2, g_toeplitz

# A context fixes the graph, the scalar field (exact rationals by default),
# and one "special" outgoing edge per regular vertex that orients the
# normal form.
loop = AlgebraContext(g_loop())
c, cs, v = loop.edge("c"), loop.ghost("c"), loop.vertex("v")

# Ghost edges contract against real edges ...
print("c* c =", cs * c)
# ... and at a regular vertex the real/ghost pairs sum to the vertex, which
# for a single loop collapses cc* all the way down:
print("c c* =", c * cs)

# Elements are canonical: equality is equality of normal term maps.
print("cc* == v:", c * cs == v)

# The same expressions through the text grammar ('*' is the ghost mark,
# '.' multiplies, a leading rational scales):
print(parse_expression("c*.c", loop), "|", parse_expression("2/3 v", loop))

# Mixed sums keep exact coefficients and split by degree |p| - |q|.
el = v + c.scale(Fraction(5, 3)) + (cs * cs).scale(-2)
print("element:", el)
print("degrees:", {d: str(x) for d, x in el.degree_components().items()})

# Products in a clock are orthogonal across different hands.
clock = AlgebraContext(g_toeplitz())
print("e* c e:", clock.ghost("e") * clock.edge("c") * clock.edge("e"))

# The normal monomials of bounded total length are a basis; for the line
# graph on n vertices there are exactly n^2 of them (the matrix ring).
for n in (2, 3, 4, 5):
    print(f"line-{n} basis size:", len(enumerate_basis(g_line(n), 2 * n)))

# Growth profiles: dimension of words of length <= n.  A single loop grows
# linearly (Laurent polynomials), a line graph stops (a matrix ring), two
# loops at one vertex explode (free-like growth).
print("loop growth:", growth_profile(g_loop(), 10))
print("line growth:", growth_profile(g_line(3), 8))
print("rose growth:", growth_profile(g_rose2(), 8))

# Any prime field works in place of the rationals.
mod5 = AlgebraContext(g_loop(), PrimeField(5))
print("5v over GF(5):", mod5.vertex("v").scale(5))
