#!/usr/bin/env python3
"""Walkthrough: structure verdicts, filtrations, and corner reports."""

import json
import random

from leavitt import (
    corner_report,
    cycle_poset,
    decide_fp,
    decide_gk,
    disjoint_cycles_criterion,
    fp_filtration,
    gk_filtration,
)
from leavitt.fixtures import (
    g_clock_omega,
    g_line,
    g_loop,
    g_loop_chain,
    g_loop_chain_with_sink,
    g_rose2,
    g_toeplitz,
    random_cyclic_graph,
)

# Cycles are pre-ordered by reachability: c >= c' when a path leads from c
# to c'.  Antisymmetry of this relation is the hinge of everything below.
cp = cycle_poset(g_loop_chain(3))
print("chain of loops: antisymmetric =", cp.antisymmetric, "longest chain =", cp.longest_chain)
print("two loops at one vertex:", cycle_poset(g_rose2()).antisymmetric)

# Are all simple modules finitely presented?  The verdict carries its reason.
for g, name in (
    (g_rose2(), "rose"),
    (g_loop_chain_with_sink(3), "loop tower"),
    (g_clock_omega(), "infinite clock"),
    (g_line(3), "line"),
):
    v = decide_fp(g)
    print(f"fp({name}) = {v.all_finitely_presented}  {v.codes()}")

# Polynomially bounded growth: equivalent to disjoint cycles; the longest
# chain d gives the lower growth exponent 2d - 1.
for g, name in ((g_loop_chain(3), "3 loops"), (g_rose2(), "rose"), (g_line(3), "line")):
    v = decide_gk(g)
    print(f"gk({name}) = finite:{v.finite} d:{v.longest_chain} bound:{v.lower_bound}")

# On finite graphs the full condition checker collapses to one sentence:
# no vertex lies on two distinct cycles.  Check exact agreement at random.
rng = random.Random(0)
agree = all(
    decide_fp(g).all_finitely_presented == disjoint_cycles_criterion(g)
    for g in (random_cyclic_graph(rng) for _ in range(50))
)
print("random cross-validation:", agree)

# Filtrations realize the verdicts constructively: the socle first, then one
# exitless cycle per layer (a matrix ring over Laurent polynomials whose
# size counts the paths entering the cycle at its base).
print("fp filtration of the loop tower:")
print(json.dumps(fp_filtration(g_loop_chain_with_sink(2)).to_obj(), indent=2))
print("gk filtration of the toeplitz graph:")
print(json.dumps(gk_filtration(g_toeplitz()).to_obj(), indent=2))

# Corners: the subalgebra compressed at one vertex mirrors its tree.
for g, v, name in (
    (g_toeplitz(), "v2", "toeplitz sink"),
    (g_loop(), "v", "bare loop"),
    (g_rose2(), "v", "rose"),
):
    r = corner_report(g, v)
    print(f"corner at {name}:", ", ".join(r.ring_labels) or "(no labels)")
