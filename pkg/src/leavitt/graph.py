"""Directed graph model with path/cycle/tree machinery and vertex classification.

Vertices are opaque string ids.  Parallel edges are modelled as bundles: an
edge record with multiplicity ``k`` stands for the k concrete edges
``id[0] .. id[k-1]``, and multiplicity ``OMEGA`` for countably many concrete
edges ``id[0], id[1], ...``.  A multiplicity-1 bundle is addressed by its bare
id.  All values are immutable after construction and every operation here is
a pure function.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    InfinitelyManyCyclesError,
    NotSupportedError,
    ResourceCapError,
    SchemaError,
    UnknownEdgeError,
    UnknownVertexError,
)

MAX_CYCLES_DEFAULT = 100_000


class _Omega:
    """Sentinel for a countably infinite edge multiplicity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "omega"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

Mult = Union[int, _Omega]

_ADDRESS_RE = re.compile(r"^(.*?)\[(\d+)\]$")


@dataclass(frozen=True)
class Edge:
    """An edge bundle: ``mult`` parallel edges from ``src`` to ``dst``."""

    id: str
    src: str
    dst: str
    mult: Mult = 1


class Graph:
    """A finite directed graph with multiplicity-labelled edge bundles."""

    __slots__ = ("vertices", "edges", "_out", "_in", "_by_id", "_succ", "_pred")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge | tuple]):
        vs = tuple(sorted(vertices))
        if len(set(vs)) != len(vs):
            raise SchemaError("duplicate vertex ids")
        norm = []
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            if not (e.mult is OMEGA or (isinstance(e.mult, int) and e.mult >= 1)):
                raise SchemaError(f"edge {e.id!r}: multiplicity must be a positive integer or omega")
            norm.append(e)
        es = tuple(sorted(norm, key=lambda e: e.id))
        ids = [e.id for e in es]
        if len(set(ids)) != len(ids):
            raise SchemaError("duplicate edge ids")
        if set(ids) & set(vs):
            raise SchemaError("vertex and edge ids must be distinct")
        vset = set(vs)
        for e in es:
            if e.src not in vset or e.dst not in vset:
                raise SchemaError(f"edge {e.id!r} has undeclared endpoint")
        self.vertices = vs
        self.edges = es
        out: dict[str, list[Edge]] = {v: [] for v in vs}
        inc: dict[str, list[Edge]] = {v: [] for v in vs}
        for e in es:
            out[e.src].append(e)
            inc[e.dst].append(e)
        self._out = {v: tuple(bs) for v, bs in out.items()}
        self._in = {v: tuple(bs) for v, bs in inc.items()}
        self._by_id = {e.id: e for e in es}
        self._succ = {v: tuple(sorted({e.dst for e in bs})) for v, bs in out.items()}
        self._pred = {v: tuple(sorted({e.src for e in bs})) for v, bs in inc.items()}

    def __setattr__(self, name, value):
        if hasattr(self, "_by_id") and name in self.__slots__ and hasattr(self, name):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edge bundles)"

    # -- vertex/edge lookups -------------------------------------------------

    def require_vertex(self, v: str) -> str:
        if v not in self._out:
            raise UnknownVertexError(f"unknown vertex {v!r}")
        return v

    def bundle(self, edge_id: str) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownEdgeError(f"unknown edge id {edge_id!r}") from None

    def out_bundles(self, v: str) -> tuple[Edge, ...]:
        self.require_vertex(v)
        return self._out[v]

    def in_bundles(self, v: str) -> tuple[Edge, ...]:
        self.require_vertex(v)
        return self._in[v]

    def successors(self, v: str) -> tuple[str, ...]:
        self.require_vertex(v)
        return self._succ[v]

    def out_degree(self, v: str) -> Mult:
        """Number of concrete edges emitted by ``v`` (``OMEGA`` if infinite)."""
        total = 0
        for e in self.out_bundles(v):
            if e.mult is OMEGA:
                return OMEGA
            total += e.mult
        return total

    def is_infinite_emitter(self, v: str) -> bool:
        return self.out_degree(v) is OMEGA

    def is_row_finite(self) -> bool:
        return all(e.mult is not OMEGA for e in self.edges)

    # -- concrete edge addresses ----------------------------------------------

    def resolve(self, address: str) -> Edge:
        """Resolve a concrete edge address (``e`` or ``b[i]``) to its bundle.

        A declared id always wins over the indexed interpretation, so ids
        containing brackets stay addressable.
        """
        e = self._by_id.get(address)
        if e is not None:
            if e.mult is OMEGA or e.mult > 1:
                raise UnknownEdgeError(f"{address!r} is a bundle; use an indexed address")
            return e
        m = _ADDRESS_RE.match(address)
        if m:
            e = self.bundle(m.group(1))
            idx = int(m.group(2))
            if e.mult is OMEGA:
                return e
            if e.mult == 1:
                raise UnknownEdgeError(f"{address!r}: edge {e.id!r} is not a bundle")
            if idx >= e.mult:
                raise UnknownEdgeError(f"{address!r}: index out of range (mult {e.mult})")
            return e
        raise UnknownEdgeError(f"unknown edge address {address!r}")

    def src_of(self, address: str) -> str:
        return self.resolve(address).src

    def dst_of(self, address: str) -> str:
        return self.resolve(address).dst

    def concrete_out(self, v: str) -> tuple[str, ...]:
        """All concrete outgoing edge addresses of ``v``; fails on infinite emitters."""
        addrs: list[str] = []
        for e in self.out_bundles(v):
            if e.mult is OMEGA:
                raise NotSupportedError(f"vertex {v!r} emits infinitely many edges")
            addrs.extend(_addresses(e))
        return tuple(sorted(addrs))

    # -- reachability ----------------------------------------------------------

    def reachable(self, start: Iterable[str]) -> frozenset[str]:
        seen = set()
        todo = [self.require_vertex(v) for v in start]
        while todo:
            v = todo.pop()
            if v in seen:
                continue
            seen.add(v)
            todo.extend(w for w in self._succ[v] if w not in seen)
        return frozenset(seen)


def _addresses(e: Edge) -> list[str]:
    if e.mult is OMEGA:
        raise NotSupportedError(f"bundle {e.id!r} has infinitely many edges")
    if e.mult == 1:
        return [e.id]
    return [f"{e.id}[{i}]" for i in range(e.mult)]


def bundle_addresses(g: Graph, edge_id: str, limit: int | None = None) -> list[str]:
    """Concrete addresses of one bundle; ``limit`` truncates an infinite bundle."""
    e = g.bundle(edge_id)
    if e.mult is OMEGA:
        if limit is None:
            raise NotSupportedError(f"bundle {edge_id!r} has infinitely many edges")
        return [f"{edge_id}[{i}]" for i in range(limit)]
    return _addresses(e)


# ---------------------------------------------------------------------------
# Paths and cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Path:
    """A finite path: ``base`` vertex plus a chain of concrete edge addresses.

    A length-0 path is a vertex.
    """

    base: str
    edges: tuple[str, ...] = ()

    def __len__(self):
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    def sort_key(self):
        return (len(self.edges), self.edges, self.base)


def make_path(g: Graph, edges: Sequence[str], base: str | None = None) -> Path:
    """Build a validated path from concrete edge addresses (vertex path if empty)."""
    if not edges:
        if base is None:
            raise NotSupportedError("a length-0 path needs a base vertex")
        return Path(g.require_vertex(base), ())
    at = g.src_of(edges[0])
    if base is not None and base != at:
        raise NotSupportedError(f"path base {base!r} is not the source of {edges[0]!r}")
    for a in edges:
        e = g.resolve(a)
        if e.src != at:
            raise NotSupportedError(f"edges {edges!r} do not form a chain at {a!r}")
        at = e.dst
    return Path(g.src_of(edges[0]), tuple(edges))


def path_range(g: Graph, p: Path) -> str:
    return g.dst_of(p.edges[-1]) if p.edges else p.base


def path_vertices(g: Graph, p: Path) -> list[str]:
    """The vertex itinerary of ``p`` (length + 1 entries)."""
    out = [p.base]
    for a in p.edges:
        out.append(g.dst_of(a))
    return out


def concat(g: Graph, p: Path, q: Path) -> Path:
    if path_range(g, p) != q.base:
        raise NotSupportedError("paths do not compose")
    return Path(p.base, p.edges + q.edges)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle in canonical rotation (smallest edge address first)."""

    edges: tuple[str, ...]

    def __len__(self):
        return len(self.edges)

    def sort_key(self):
        return (len(self.edges), self.edges)


def canonical_cycle(g: Graph, edges: Sequence[str]) -> Cycle:
    """Canonicalize a closed simple edge sequence into a :class:`Cycle`."""
    p = make_path(g, list(edges))
    if path_range(g, p) != p.base:
        raise NotSupportedError("edge sequence is not closed")
    srcs = [g.src_of(a) for a in edges]
    if len(set(srcs)) != len(srcs):
        raise NotSupportedError("closed path is not a simple cycle")
    k = min(range(len(edges)), key=lambda i: edges[i])
    rotated = tuple(edges[k:]) + tuple(edges[:k])
    return Cycle(rotated)


def cycle_base(g: Graph, c: Cycle) -> str:
    return g.src_of(c.edges[0])


def cycle_vertices(g: Graph, c: Cycle) -> frozenset[str]:
    return frozenset(g.src_of(a) for a in c.edges)


def cycle_has_exit(g: Graph, c: Cycle) -> bool:
    """A cycle visits each of its vertices once, so an exit exists exactly
    when some cycle vertex emits more than one concrete edge."""
    for v in cycle_vertices(g, c):
        d = g.out_degree(v)
        if d is OMEGA or d >= 2:
            return True
    return False


# ---------------------------------------------------------------------------
# Vertex classification
# ---------------------------------------------------------------------------

SINK = "sink"
REGULAR = "regular"
INFINITE_EMITTER = "infinite_emitter"


@dataclass(frozen=True)
class VertexClass:
    kind: str
    out_degree: int | None = None


def classify_vertex(g: Graph, v: str) -> VertexClass:
    """Classify ``v`` as a sink, a regular vertex, or an infinite emitter."""
    d = g.out_degree(g.require_vertex(v))
    if d is OMEGA:
        return VertexClass(INFINITE_EMITTER)
    if d == 0:
        return VertexClass(SINK)
    return VertexClass(REGULAR, d)


def is_regular(g: Graph, v: str) -> bool:
    return classify_vertex(g, v).kind == REGULAR


# ---------------------------------------------------------------------------
# Trees, line points, cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeView:
    """The forward reachability closure of a vertex with its induced edges."""

    root: str
    vertices: frozenset[str]
    induced_edges: tuple[Edge, ...]

    def as_graph(self) -> Graph:
        return Graph(self.vertices, self.induced_edges)


def tree(g: Graph, v: str) -> TreeView:
    """All vertices reachable from ``v``, as a complete subgraph."""
    verts = g.reachable([v])
    induced = tuple(e for e in g.edges if e.src in verts)
    return TreeView(v, verts, induced)


def vertices_on_closed_paths(g: Graph) -> frozenset[str]:
    """Vertices that lie on at least one closed path."""
    out = set()
    for v in g.vertices:
        succ = g.successors(v)
        if succ and v in g.reachable(succ):
            out.add(v)
    return frozenset(out)


def line_points(g: Graph) -> frozenset[str]:
    """Vertices whose tree contains no bifurcation and no cycle.

    An infinite bundle counts as a bifurcation.
    """
    on_cycle = vertices_on_closed_paths(g)

    def bad(w: str) -> bool:
        d = g.out_degree(w)
        return w in on_cycle or d is OMEGA or d >= 2

    bad_set = {w for w in g.vertices if bad(w)}
    return frozenset(v for v in g.vertices if not (g.reachable([v]) & bad_set))


def enumerate_cycles(g: Graph, max_cycles: int = MAX_CYCLES_DEFAULT) -> list[Cycle]:
    """All simple cycles, canonicalized, in a deterministic order.

    Bundles of multiplicity k contribute k parallel edges (hence k distinct
    cycles per vertex itinerary and slot).  An infinite bundle on a closed
    vertex itinerary makes the cycle set infinite and raises
    :class:`InfinitelyManyCyclesError`.
    """
    order = {v: i for i, v in enumerate(g.vertices)}
    found: set[Cycle] = set()

    def expand(steps: list[tuple[str, str]]) -> None:
        # one concrete-address choice per step; multiplicities multiply out
        choices: list[list[str]] = []
        for u, w in steps:
            addrs: list[str] = []
            for e in g.out_bundles(u):
                if e.dst != w:
                    continue
                if e.mult is OMEGA:
                    raise InfinitelyManyCyclesError(
                        f"infinite bundle {e.id!r} lies on a closed path"
                    )
                addrs.extend(_addresses(e))
            choices.append(sorted(addrs))
        combos = [[]]
        for addrs in choices:
            combos = [c + [a] for c in combos for a in addrs]
            if len(found) + len(combos) > max_cycles:
                raise ResourceCapError(f"more than {max_cycles} simple cycles")
        for combo in combos:
            found.add(canonical_cycle(g, combo))
            if len(found) > max_cycles:
                raise ResourceCapError(f"more than {max_cycles} simple cycles")

    def walk(root: str, v: str, visited: set[str], steps: list[tuple[str, str]]) -> None:
        for w in g.successors(v):
            if w == root:
                expand(steps + [(v, w)])
            elif order[w] > order[root] and w not in visited:
                visited.add(w)
                walk(root, w, visited, steps + [(v, w)])
                visited.remove(w)

    for root in g.vertices:
        walk(root, root, {root}, [])
    return sorted(found, key=Cycle.sort_key)


def condition_L(g: Graph, max_cycles: int = MAX_CYCLES_DEFAULT) -> bool:
    """Every simple cycle has an exit."""
    return all(cycle_has_exit(g, c) for c in enumerate_cycles(g, max_cycles))


def condition_K(g: Graph, max_cycles: int = MAX_CYCLES_DEFAULT) -> bool:
    """Every vertex on a simple closed path is the base of at least two
    distinct simple closed paths.

    A simple closed path based at v is a first-return path: it touches v only
    at its two ends, with no constraint on the other vertices.
    """
    cyclic: set[str] = set()
    for c in enumerate_cycles(g, max_cycles):
        cyclic.update(cycle_vertices(g, c))
    return all(_two_first_returns(g, v) for v in sorted(cyclic))


def _two_first_returns(g: Graph, v: str) -> bool:
    # R = vertices (other than v) lying on some v -> v walk avoiding v inside
    fwd = set()
    todo = [w for w in g.successors(v)]
    while todo:
        w = todo.pop()
        if w in fwd or w == v:
            continue
        fwd.add(w)
        todo.extend(g.successors(w))
    bwd = set()
    todo = [e.src for e in g.in_bundles(v)]
    while todo:
        w = todo.pop()
        if w in bwd or w == v:
            continue
        bwd.add(w)
        todo.extend(e.src for e in g.in_bundles(w))
    r = fwd & bwd

    # a closed path inside R can be pumped: infinitely many first returns
    for w in r:
        seen: set[str] = set()
        todo = [x for x in g.successors(w) if x in r]
        while todo:
            x = todo.pop()
            if x == w:
                return True
            if x in seen or x not in r:
                continue
            seen.add(x)
            todo.extend(y for y in g.successors(x) if y in r)

    # otherwise R induces a DAG: count v -> v paths exactly, capped at 2
    memo: dict[str, int] = {}

    def ways(w: str) -> int:
        # number of paths from w to v staying in R until the final step
        if w in memo:
            return memo[w]
        total = 0
        for e in g.out_bundles(w):
            m = 2 if e.mult is OMEGA else e.mult
            if e.dst == v:
                total += m
            elif e.dst in r:
                total += m * ways(e.dst)
            if total >= 2:
                break
        memo[w] = min(total, 2)
        return memo[w]

    count = 0
    for e in g.out_bundles(v):
        m = 2 if e.mult is OMEGA else e.mult
        if e.dst == v:
            count += m
        elif e.dst in r:
            count += m * ways(e.dst)
        if count >= 2:
            return True
    return count >= 2


# ---------------------------------------------------------------------------
# JSON schema
# ---------------------------------------------------------------------------


def graph_to_obj(g: Graph) -> dict:
    """Serialize to the canonical JSON schema (multiplicity 1 is omitted)."""
    edges = []
    for e in g.edges:
        d: dict = {"id": e.id, "src": e.src, "dst": e.dst}
        if e.mult is OMEGA:
            d["mult"] = "omega"
        elif e.mult != 1:
            d["mult"] = e.mult
        edges.append(d)
    return {"vertices": list(g.vertices), "edges": edges}


def graph_from_obj(obj) -> Graph:
    """Validate a JSON object against the graph schema and build the graph."""
    if not isinstance(obj, dict):
        raise SchemaError("graph document must be a JSON object")
    extra = set(obj) - {"vertices", "edges"}
    if extra:
        raise SchemaError(f"unexpected keys: {sorted(extra)}")
    verts = obj.get("vertices")
    edges = obj.get("edges", [])
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise SchemaError('"vertices" must be a list of strings')
    if not isinstance(edges, list):
        raise SchemaError('"edges" must be a list')
    built = []
    for item in edges:
        if not isinstance(item, dict):
            raise SchemaError("each edge must be an object")
        extra = set(item) - {"id", "src", "dst", "mult"}
        if extra:
            raise SchemaError(f"edge has unexpected keys: {sorted(extra)}")
        try:
            eid, src, dst = item["id"], item["src"], item["dst"]
        except KeyError as k:
            raise SchemaError(f"edge missing key {k}") from None
        if not all(isinstance(x, str) for x in (eid, src, dst)):
            raise SchemaError("edge id/src/dst must be strings")
        mult = item.get("mult", 1)
        if mult == "omega":
            mult = OMEGA
        elif not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            raise SchemaError(f"edge {eid!r}: mult must be a positive integer or \"omega\"")
        built.append(Edge(eid, src, dst, mult))
    return Graph(verts, built)


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_obj(g), sort_keys=True)


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from None
    return graph_from_obj(obj)
