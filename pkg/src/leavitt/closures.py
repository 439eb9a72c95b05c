"""Hereditary saturated vertex sets and the graph constructions derived from
them: quotient graphs, hedgehog graphs for graded ideals, and the subalgebra
graph spanned by a finite edge set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotSupportedError, ResourceCapError
from .graph import (
    OMEGA,
    Edge,
    Graph,
    Path,
    classify_vertex,
    is_regular,
    make_path,
    path_range,
    vertices_on_closed_paths,
)

MAX_VERTICES_HS_DEFAULT = 20


@dataclass(frozen=True)
class HSSet:
    """A hereditary saturated vertex set with its generating seed."""

    vertices: frozenset[str]
    generated_from: frozenset[str]

    def __contains__(self, v: str) -> bool:
        return v in self.vertices

    def __iter__(self):
        return iter(sorted(self.vertices))

    def __len__(self):
        return len(self.vertices)

    def sort_key(self):
        return (len(self.vertices), tuple(sorted(self.vertices)))


def _as_vertex_set(x) -> frozenset[str]:
    if isinstance(x, HSSet):
        return x.vertices
    return frozenset(x)


def hereditary_closure(g: Graph, seed: Iterable[str]) -> frozenset[str]:
    """Smallest forward-closed superset of ``seed``."""
    seed = list(seed)
    if not seed:
        return frozenset()
    return g.reachable(seed)


def saturated_closure(g: Graph, seed: Iterable[str]) -> HSSet:
    """Smallest hereditary saturated superset of ``seed``.

    Saturation repeatedly adds any regular vertex all of whose edge ranges
    already lie in the set; this preserves hereditariness, so one hereditary
    pass followed by a saturation fixpoint reaches the closure.
    """
    seed_set = frozenset(g.require_vertex(v) for v in seed)
    closed = set(hereditary_closure(g, seed_set))
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v in closed or not is_regular(g, v):
                continue
            if all(e.dst in closed for e in g.out_bundles(v)):
                closed.add(v)
                changed = True
    return HSSet(frozenset(closed), seed_set)


def is_hereditary(g: Graph, vs: Iterable[str]) -> bool:
    vset = _as_vertex_set(vs)
    return all(e.dst in vset for e in g.edges if e.src in vset)


def is_saturated(g: Graph, vs: Iterable[str]) -> bool:
    vset = _as_vertex_set(vs)
    for v in g.vertices:
        if v in vset or not is_regular(g, v):
            continue
        if all(e.dst in vset for e in g.out_bundles(v)):
            return False
    return True


def enumerate_hs_sets(g: Graph, max_vertices: int = MAX_VERTICES_HS_DEFAULT) -> list[HSSet]:
    """All hereditary saturated subsets (including the empty and full sets).

    Brute force over all subsets; exact for desk-scale graphs.
    """
    vs = g.vertices
    if len(vs) > max_vertices:
        raise ResourceCapError(
            f"{len(vs)} vertices exceeds the subset-enumeration cap {max_vertices}"
        )
    out = []
    for mask in range(1 << len(vs)):
        subset = frozenset(v for i, v in enumerate(vs) if mask >> i & 1)
        if is_hereditary(g, subset) and is_saturated(g, subset):
            out.append(HSSet(subset, subset))
    return sorted(out, key=HSSet.sort_key)


def breaking_vertices(g: Graph, h: Iterable[str]) -> frozenset[str]:
    """Infinite emitters with finitely many, but at least one, edges into the
    complement of ``h``."""
    hset = _as_vertex_set(h)
    out = set()
    for v in g.vertices:
        if not g.is_infinite_emitter(v):
            continue
        count = 0
        infinite = False
        for e in g.out_bundles(v):
            if e.dst in hset:
                continue
            if e.mult is OMEGA:
                infinite = True
                break
            count += e.mult
        if not infinite and 0 < count:
            out.add(v)
    return frozenset(out)


def _validate_hs(g: Graph, h: Iterable[str]) -> frozenset[str]:
    hset = frozenset(g.require_vertex(v) for v in _as_vertex_set(h))
    if not is_hereditary(g, hset):
        raise NotSupportedError("vertex set is not hereditary")
    if not is_saturated(g, hset):
        raise NotSupportedError("vertex set is not saturated")
    return hset


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def quotient(g: Graph, h: Iterable[str], s: Iterable[str] = ()) -> Graph:
    """The quotient graph of ``g`` by the hereditary saturated set ``h`` and a
    subset ``s`` of its breaking vertices.

    Vertices are E0 \\ H plus a fresh sink u' for every breaking vertex u not
    in S.  Edges into H disappear; every edge into such a u gains a primed
    copy ending at u'.
    """
    hset = _validate_hs(g, h)
    sset = frozenset(s)
    bh = breaking_vertices(g, hset)
    if not sset <= bh:
        raise NotSupportedError("s must be a subset of the breaking vertices of h")
    keep = [v for v in g.vertices if v not in hset]
    taken = set(keep) | {e.id for e in g.edges}
    primed = {u: _fresh(u + "'", taken) for u in sorted(bh - sset)}
    edges = []
    for e in g.edges:
        if e.dst in hset:
            continue
        edges.append(e)
        if e.dst in primed:
            edges.append(Edge(_fresh(e.id + "'", taken), e.src, primed[e.dst], e.mult))
    return Graph(keep + sorted(primed.values()), edges)


# ---------------------------------------------------------------------------
# Hedgehog graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HedgehogResult:
    """The graph realizing a graded ideal, with truncation metadata.

    ``complete`` is True when the defining path sets are finite and fully
    materialized; otherwise the graph contains exactly the qualifying paths of
    length <= ``depth_bound``.  ``path_vertices`` maps the freshly created
    vertex ids back to the paths they stand for.
    """

    graph: Graph
    complete: bool
    depth_bound: int
    path_vertices: tuple[tuple[str, Path], ...]


def _relevant_vertices(g: Graph, h: frozenset[str], targets: frozenset[str]) -> frozenset[str]:
    """Vertices outside ``h`` from which ``targets`` can be reached without
    passing through ``h`` on the way."""
    relevant = set(targets - h)
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            if e.src in h or e.src in relevant:
                continue
            if e.dst in targets or e.dst in relevant:
                relevant.add(e.src)
                changed = True
    return frozenset(relevant)


def _entering_paths_finite(g: Graph, h: frozenset[str], targets: frozenset[str]) -> bool:
    """Whether finitely many paths start outside ``h`` and end in ``targets``.

    Infinite exactly when a cycle outside ``h``, or an infinite bundle with
    source outside ``h``, can feed ``targets`` without entering ``h`` first.
    """
    relevant = _relevant_vertices(g, h, targets)
    on_cycle = vertices_on_closed_paths(g)
    if relevant & on_cycle:
        return False
    for e in g.edges:
        if e.mult is OMEGA and e.src not in h and (e.dst in targets or e.dst in relevant):
            return False
    return True


def _enumerate_entering_paths(
    g: Graph,
    h: frozenset[str],
    s: frozenset[str],
    depth_bound: int,
    complete: bool,
) -> tuple[list[Path], list[Path]]:
    """Qualifying paths: (into h with interior outside h) and (ending in s).

    When the sets are infinite only paths of length <= depth_bound are
    produced, and an infinite bundle contributes its index-0 representative.
    """
    targets = h | s
    relevant = _relevant_vertices(g, h, targets)
    f1: list[Path] = []
    f2: list[Path] = []

    def concrete(e: Edge) -> list[str]:
        if e.mult is OMEGA:
            return [f"{e.id}[0]"]
        if e.mult == 1:
            return [e.id]
        return [f"{e.id}[{i}]" for i in range(e.mult)]

    def extend(prefix: list[str], at: str, depth: int) -> None:
        if not complete and depth >= depth_bound:
            return
        for e in g.out_bundles(at):
            if e.dst not in targets and e.dst not in relevant:
                continue
            for addr in concrete(e):
                chain = prefix + [addr]
                if e.dst in h:
                    f1.append(make_path(g, chain))
                else:
                    if e.dst in s:
                        f2.append(make_path(g, chain))
                    extend(chain, e.dst, depth + 1)

    for v in sorted(relevant):
        extend([], v, 0)
    return f1, f2


def hedgehog(
    g: Graph,
    h: Iterable[str],
    s: Iterable[str] = (),
    depth_bound: int = 8,
) -> HedgehogResult:
    """Build the graph whose Leavitt path algebra realizes the graded ideal
    generated by ``h`` (and the breaking-vertex idempotents for ``s``).

    New vertices stand for the paths entering ``h`` (and, for non-empty
    ``s``, the paths ending at ``s``); each carries one edge to the range of
    its path.  If infinitely many such paths exist the result is truncated at
    ``depth_bound`` and flagged incomplete.
    """
    if depth_bound < 1:
        raise NotSupportedError("depth_bound must be >= 1")
    hset = frozenset(g.require_vertex(v) for v in _as_vertex_set(h))
    if not is_hereditary(g, hset):
        raise NotSupportedError("vertex set is not hereditary")
    sset = frozenset(s)
    if not sset <= breaking_vertices(g, hset):
        raise NotSupportedError("s must be a subset of the breaking vertices of h")

    complete = _entering_paths_finite(g, hset, hset | sset)
    f1, f2 = _enumerate_entering_paths(g, hset, sset, depth_bound, complete)

    base_vertices = sorted(hset | sset)
    edges: list[Edge] = []
    for e in g.edges:
        if e.src in hset or (e.src in sset and e.dst in hset):
            edges.append(e)

    taken = set(base_vertices) | {e.id for e in edges}
    vertices = list(base_vertices)
    mapping: list[tuple[str, Path]] = []
    for p in sorted(set(f1 + f2), key=Path.sort_key):
        vid = _fresh("~".join(p.edges), taken)
        vertices.append(vid)
        mapping.append((vid, p))
        edges.append(Edge(_fresh("~" + vid, taken), vid, path_range(g, p)))

    return HedgehogResult(Graph(vertices, edges), complete, depth_bound, tuple(mapping))


# ---------------------------------------------------------------------------
# Subalgebra graph from a finite edge set
# ---------------------------------------------------------------------------


def subalgebra_graph(g: Graph, addresses: Iterable[str]) -> Graph:
    """The finite graph whose Leavitt path algebra embeds as the subalgebra
    spanned by the given concrete edges.

    Vertices are the chosen edges, the vertices that are ranges and sources of
    chosen edges but still emit an unchosen edge, and the ranges that are not
    sources.  There is an edge (e, y) whenever e ends where y starts (a vertex
    y starts at itself).
    """
    f = sorted(set(addresses))
    for a in f:
        g.resolve(a)
    fset = set(f)
    rf = {g.dst_of(a) for a in f}
    sf = {g.src_of(a) for a in f}
    emits_other = set()
    for v in rf & sf:
        for e in g.out_bundles(v):
            if e.mult is OMEGA:
                emits_other.add(v)
                break
            if any(addr not in fset for addr in _bundle_addrs(e)):
                emits_other.add(v)
                break
    middle = sorted((rf & sf) & emits_other)
    terminal = sorted(rf - sf)

    taken: set[str] = set()
    vid_of_edge = {a: _fresh(a, taken) for a in f}
    vid_of_vertex = {v: _fresh(v, taken) for v in middle + terminal}

    starts: list[tuple[str, str]] = [(g.src_of(a), vid_of_edge[a]) for a in f]
    starts += [(v, vid_of_vertex[v]) for v in middle + terminal]

    edges = []
    for a in f:
        for start_vertex, vid in starts:
            if g.dst_of(a) == start_vertex:
                edges.append(Edge(_fresh(f"({a},{vid})", taken), vid_of_edge[a], vid))
    return Graph(list(vid_of_edge.values()) + list(vid_of_vertex.values()), edges)


def _bundle_addrs(e: Edge) -> list[str]:
    if e.mult == 1:
        return [e.id]
    return [f"{e.id}[{i}]" for i in range(e.mult)]
