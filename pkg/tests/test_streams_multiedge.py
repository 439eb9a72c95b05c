"""Interleaved streams built from cycles longer than one edge."""

from __future__ import annotations

from leavitt import (
    AlgebraContext,
    Edge,
    Graph,
    bifurcation_data,
    canonical_cycle,
    chen_act,
    chen_basis_element,
    generated_stream,
    singleton_vector,
    stream_prefix,
)


def _figure_eight() -> Graph:
    # two 2-cycles through the middle vertex m
    return Graph(
        ["a", "b", "m"],
        [
            Edge("e1", "m", "a"),
            Edge("e2", "a", "m"),
            Edge("f1", "m", "b"),
            Edge("f2", "b", "m"),
        ],
    )


def _stream(g):
    first = canonical_cycle(g, ["e1", "e2"])
    second = canonical_cycle(g, ["f1", "f2"])
    return generated_stream(g, first, second, base="m")


def test_pattern_interleaves_whole_cycles():
    g = _figure_eight()
    st = _stream(g)
    assert stream_prefix(st, 12) == (
        "e1", "e2", "f1", "f2", "e1", "e2", "e1", "e2", "f1", "f2", "f1", "f2",
    )


def test_bifurcations_only_at_the_shared_vertex():
    g = _figure_eight()
    ctx = AlgebraContext(g)
    kd = bifurcation_data(ctx, _stream(g), 8)
    assert kd.bifurcating_integers == (1, 3, 5, 7)
    # at position 3 the stream takes f1, so the lone detour is e1, giving the
    # generator e1* (e2)* (e1)* as a ghost path
    gens = kd.generators_at(3)
    assert [str(x) for x in gens] == ["e1*.e2*.e1*"]
    # each generator annihilates the stream and peels against its idempotent
    p0 = singleton_vector(ctx, chen_basis_element(g, _stream(g)))
    for n in kd.bifurcating_integers:
        for gen in kd.generators_at(n):
            assert chen_act(ctx, gen, p0) == {}
    for i in kd.bifurcating_integers:
        for k in kd.bifurcating_integers:
            if i > k:
                continue
            for gen in kd.generators_at(i):
                prod = gen * kd.mu_at(k)
                assert (prod == gen) if i == k else prod.is_zero


def test_action_walks_the_stream():
    g = _figure_eight()
    ctx = AlgebraContext(g)
    st = _stream(g)
    b0 = chen_basis_element(g, st)
    vec = singleton_vector(ctx, b0)
    one_in = chen_act(ctx, ctx.ghost("e1"), vec)
    assert list(one_in) == [chen_basis_element(g, st, tail_index=1)]
    back = chen_act(ctx, ctx.edge("e1"), one_in)
    assert back == vec
    # a wrong ghost at the second position kills the vector
    assert chen_act(ctx, ctx.ghost("f2"), one_in) == {}
