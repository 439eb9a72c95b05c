#!/usr/bin/env python3
"""Walkthrough: acting on the simple modules of infinite paths and emitters."""

from leavitt import (
    AlgebraContext,
    Edge,
    Path,
    bifurcation_data,
    canonical_cycle,
    chen_act,
    chen_basis_element,
    generated_stream,
    periodic_stream,
    singleton_vector,
    stream_prefix,
    sv_act,
)
from leavitt.fixtures import add_edges, g_clock_omega, g_loop, g_rose2

# The tail-equivalence class of an infinite path carries a simple module.
# A basis element is a finite prefix glued onto a tail of one fixed stream.
loop = AlgebraContext(g_loop())
st = periodic_stream(loop.graph, ["c"])
q = singleton_vector(loop, chen_basis_element(loop.graph, st))
print("c* . q:", chen_act(loop, loop.ghost("c"), q) == q)
print("v  . q:", chen_act(loop, loop.vertex("v"), q) == q)

# Two distinct cycles through one vertex generate the irrational stream
# g h g^2 h^2 ...; no tail of it is periodic.
rose = AlgebraContext(g_rose2())
gh = generated_stream(rose.graph, canonical_cycle(rose.graph, ["g"]), canonical_cycle(rose.graph, ["h"]))
print("stream head:", stream_prefix(gh, 12))

# Every position along it is a bifurcation, and each contributes kernel
# generators (the ghost detours) plus a matching path idempotent.
kd = bifurcation_data(rose, gh, 6)
print("bifurcating positions:", kd.bifurcating_integers)
print("generator at 1:", [str(x) for x in kd.generators_at(1)])
print("idempotent at 3:", kd.mu_at(3))

# The generators annihilate the stream, and peel off against the idempotents
# one index at a time - the direct-sum bookkeeping of the kernel.
p0 = singleton_vector(rose, chen_basis_element(rose.graph, gh))
print("generators kill the stream:", all(
    not chen_act(rose, x, p0) for n in kd.bifurcating_integers for x in kd.generators_at(n)
))
print("g1 mu_1 == g1:", kd.generators_at(1)[0] * kd.mu_at(1) == kd.generators_at(1)[0])
print("g1 mu_4 == 0:", (kd.generators_at(1)[0] * kd.mu_at(4)).is_zero)

# An infinite emitter u carries its own simple module on the finite paths
# ending at u; there every ghost edge kills the bare vertex.
gw = AlgebraContext(add_edges(g_clock_omega(), Edge("d", "z", "u")))
u = singleton_vector(gw, Path("u"))
print("d . u:", [(k.edges, str(c)) for k, c in sv_act(gw, "u", gw.edge("d"), u).items()])
print("b[9]* . u:", sv_act(gw, "u", gw.ghost("b[9]"), u))
print("(b[9] b[9]*) . u:", sv_act(gw, "u", gw.edge("b[9]") * gw.ghost("b[9]"), u))
