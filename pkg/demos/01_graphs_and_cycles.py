#!/usr/bin/env python3
"""Walkthrough: building graphs, classifying vertices, enumerating cycles."""

from leavitt import (
    Edge,
    Graph,
    classify_vertex,
    condition_K,
    condition_L,
    enumerate_cycles,
    graph_to_json,
    line_points,
    tree,
)
from leavitt.fixtures import g_clock_omega, g_line, g_loop, g_rose2, g_toeplitz

# A graph is a set of vertex ids plus edge bundles; a bundle with mult=k is
# k parallel edges addressed id[0]..id[k-1], and mult="omega" is infinitely
# many.  The Toeplitz graph: a loop c at v1 and an exit edge e to a sink.
toe = g_toeplitz()
print(graph_to_json(toe))

for v in toe.vertices:
    print(v, "->", classify_vertex(toe, v))

# An infinite emitter comes from an omega bundle.
print("clock hub:", classify_vertex(g_clock_omega(), "u"))

# Simple cycles come back canonically rotated (smallest edge address first),
# parallel edges counted separately.
print("rose cycles:", [c.edges for c in enumerate_cycles(g_rose2())])
two = Graph(["a"], [Edge("b", "a", "a", 2)])
print("double loop:", [c.edges for c in enumerate_cycles(two)])

# The tree of a vertex is its forward closure, kept as a complete subgraph.
t = tree(toe, "v1")
print("tree(v1):", sorted(t.vertices), [e.id for e in t.induced_edges])

# A line point sees neither a bifurcation nor a cycle below it; these
# vertices generate the socle of the path algebra.
for g, name in ((g_line(3), "line"), (toe, "toeplitz"), (g_rose2(), "rose")):
    print(f"line points of {name}:", sorted(line_points(g)))

# Condition L: every cycle has an exit.  Condition K: every vertex on a
# closed path bases at least two distinct simple closed paths.
for g, name in ((g_loop(), "loop"), (toe, "toeplitz"), (g_rose2(), "rose")):
    print(f"{name}: L={condition_L(g)} K={condition_K(g)}")
