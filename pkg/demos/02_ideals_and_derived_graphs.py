#!/usr/bin/env python3
"""Walkthrough: hereditary saturated sets and the graphs they induce."""

from leavitt import (
    Edge,
    breaking_vertices,
    enumerate_hs_sets,
    graph_to_json,
    hedgehog,
    hereditary_closure,
    quotient,
    saturated_closure,
    subalgebra_graph,
)
from leavitt.fixtures import (
    add_edges,
    g_clock_omega,
    g_line,
    g_loop_chain_with_sink,
    g_rose2,
    g_toeplitz,
)

line = g_line(3)

# Hereditary = closed under moving forward; saturated = a regular vertex all
# of whose edges land inside must itself be inside.  Closures alternate the
# two rules to a fixed point.
print("forward closure of {v1}:", sorted(hereditary_closure(line, ["v1"])))
print("saturated closure of {v3}:", sorted(saturated_closure(line, ["v3"]).vertices))

# The full lattice of hereditary saturated sets, by brute force.
tower = g_loop_chain_with_sink(2)
print("hs sets:", [sorted(h.vertices) for h in enumerate_hs_sets(tower)])

# Breaking vertices: infinite emitters with finitely many (but some) edges
# escaping the set.  They acquire primed sink copies in the quotient.
gw = add_edges(g_clock_omega(), Edge("z0", "u", "z"))
print("breaking for {w}:", sorted(breaking_vertices(gw, ["w"])))
print("quotient by ({w}, {}):", graph_to_json(quotient(gw, ["w"])))

# A graded ideal is itself a path algebra; its graph glues one new vertex
# per path entering the set.  A cycle pumping into the set makes the path
# family infinite, so the build truncates and says so.
res = hedgehog(line, ["v3"])
print("ideal graph of {v3}: complete =", res.complete)
print("  ", graph_to_json(res.graph))
res = hedgehog(g_toeplitz(), ["v2"], depth_bound=4)
print("ideal graph of {v2} in toeplitz: complete =", res.complete)
print("  entering paths:", sorted(p.edges for _, p in res.path_vertices))

# A finite set of edges spans a subalgebra isomorphic to the path algebra of
# a small derived graph whose vertices are the chosen edges.
print("edge-set graph of {g,h}:", graph_to_json(subalgebra_graph(g_rose2(), ["g", "h"])))
print("edge-set graph of {e1}:", graph_to_json(subalgebra_graph(line, ["e1"])))
