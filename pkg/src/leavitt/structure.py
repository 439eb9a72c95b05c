"""Decision procedures over the cycle structure of a graph.

The pre-order on cycles (c >= c' when a path runs from c to c') governs both
questions answered here: whether every irreducible representation of the path
algebra is finitely presented, and whether the algebra's growth is
polynomially bounded.  Filtration builders produce the witnessing chains of
hereditary saturated sets with a layer descriptor per step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .closures import HSSet, enumerate_hs_sets, quotient, saturated_closure
from .errors import NotSupportedError, ResourceCapError
from .graph import (
    MAX_CYCLES_DEFAULT,
    OMEGA,
    Cycle,
    Graph,
    condition_K,
    condition_L,
    cycle_base,
    cycle_has_exit,
    cycle_vertices,
    enumerate_cycles,
    line_points,
    tree,
    vertices_on_closed_paths,
)

# reason codes for finite-presentation verdicts
NOT_ROW_FINITE = "NOT_ROW_FINITE"
GEQ_NOT_ANTISYMMETRIC = "GEQ_NOT_ANTISYMMETRIC"
COND_2C_FAIL = "COND_2C_FAIL"
COND_2D_FAIL = "COND_2D_FAIL"
ACYCLIC_SOCLE_FAIL = "ACYCLIC_SOCLE_FAIL"
OK_ACYCLIC = "OK_ACYCLIC"
OK_CYCLIC = "OK_CYCLIC"


# ---------------------------------------------------------------------------
# Cycle poset
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclePoset:
    """All simple cycles with the reachability pre-order ``>=``.

    ``longest_chain`` counts the cycles in a maximal strictly descending
    chain; it is None when the pre-order fails antisymmetry (strict chains
    then have no maximum) and 0 for an acyclic graph.
    """

    cycles: tuple[Cycle, ...]
    geq: tuple[tuple[bool, ...], ...]
    antisymmetric: bool
    longest_chain: int | None
    minimal_cycles: tuple[Cycle, ...]
    no_exit_cycles: tuple[Cycle, ...]

    def index(self, c: Cycle) -> int:
        return self.cycles.index(c)

    def holds(self, c: Cycle, d: Cycle) -> bool:
        return self.geq[self.index(c)][self.index(d)]


def cycle_poset(g: Graph, max_cycles: int = MAX_CYCLES_DEFAULT) -> CyclePoset:
    cycles = tuple(enumerate_cycles(g, max_cycles))
    reach = {v: g.reachable([v]) for v in g.vertices}
    vsets = [cycle_vertices(g, c) for c in cycles]
    n = len(cycles)
    geq = tuple(
        tuple(bool(set().union(*(reach[v] for v in vsets[i])) & vsets[j]) for j in range(n))
        for i in range(n)
    )
    antisymmetric = all(
        not (geq[i][j] and geq[j][i]) for i in range(n) for j in range(n) if i != j
    )
    minimal = tuple(
        cycles[i]
        for i in range(n)
        if not any(geq[i][j] and not geq[j][i] for j in range(n) if j != i)
    )
    no_exit = tuple(c for c in cycles if not cycle_has_exit(g, c))
    longest: int | None
    if not antisymmetric:
        longest = None
    elif n == 0:
        longest = 0
    else:
        memo: dict[int, int] = {}

        def depth(i: int) -> int:
            if i in memo:
                return memo[i]
            below = [depth(j) for j in range(n) if j != i and geq[i][j]]
            memo[i] = 1 + max(below, default=0)
            return memo[i]

        longest = max(depth(i) for i in range(n))
    return CyclePoset(cycles, geq, antisymmetric, longest, minimal, no_exit)


# ---------------------------------------------------------------------------
# Finite-presentation verdict
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FpVerdict:
    all_finitely_presented: bool
    reasons: tuple[dict, ...]
    notes: tuple[str, ...] = ()

    def codes(self) -> tuple[str, ...]:
        return tuple(r["code"] for r in self.reasons)

    def to_obj(self) -> dict:
        return {
            "allFinitelyPresented": self.all_finitely_presented,
            "reasons": list(self.reasons),
            "notes": list(self.notes),
        }


def decide_fp(
    g: Graph,
    max_cycles: int = MAX_CYCLES_DEFAULT,
    max_vertices_hs: int = 20,
) -> FpVerdict:
    """Decide whether every simple one-sided module over the path algebra is
    finitely presented.

    Not-row-finite graphs fail outright.  Acyclic graphs pass exactly when
    the whole vertex set is the saturated closure of the line points.  Cyclic
    graphs need an antisymmetric cycle pre-order and, for every proper
    hereditary saturated set containing all line points, a quotient with a
    cycle without exits and no line points.
    """
    for e in g.edges:
        if e.mult is OMEGA:
            return FpVerdict(
                False, ({"code": NOT_ROW_FINITE, "witness": e.id},)
            )
    lp = line_points(g)
    cycles = enumerate_cycles(g, max_cycles)
    if not cycles:
        closure = saturated_closure(g, lp)
        if closure.vertices == frozenset(g.vertices):
            return FpVerdict(True, ({"code": OK_ACYCLIC, "witness": None},))
        missing = sorted(set(g.vertices) - closure.vertices)
        return FpVerdict(
            False, ({"code": ACYCLIC_SOCLE_FAIL, "witness": missing},)
        )

    cp = cycle_poset(g, max_cycles)
    notes = (
        "the cycle pre-order on a finite graph is artinian once antisymmetric",
        "every infinite path in a finite graph eventually winds around a cycle "
        "or reaches a line point, so the infinite-path condition holds",
    )
    if not cp.antisymmetric:
        witness = None
        for i, c in enumerate(cp.cycles):
            for j, d in enumerate(cp.cycles):
                if i != j and cp.geq[i][j] and cp.geq[j][i]:
                    witness = [list(c.edges), list(d.edges)]
                    break
            if witness:
                break
        return FpVerdict(
            False, ({"code": GEQ_NOT_ANTISYMMETRIC, "witness": witness},), notes
        )

    full = frozenset(g.vertices)
    for h in enumerate_hs_sets(g, max_vertices_hs):
        if h.vertices == full or not lp <= h.vertices:
            continue
        q = quotient(g, h.vertices)
        q_cycles = enumerate_cycles(q, max_cycles)
        has_no_exit = any(not cycle_has_exit(q, c) for c in q_cycles)
        q_lp = line_points(q)
        if not has_no_exit or q_lp:
            return FpVerdict(
                False,
                (
                    {
                        "code": COND_2D_FAIL,
                        "witness": {
                            "h": sorted(h.vertices),
                            "quotientHasNoExitCycle": has_no_exit,
                            "quotientLinePoints": sorted(q_lp),
                        },
                    },
                ),
                notes,
            )
    return FpVerdict(True, ({"code": OK_CYCLIC, "witness": None},), notes)


def disjoint_cycles_criterion(g: Graph, max_cycles: int = MAX_CYCLES_DEFAULT) -> bool:
    """No vertex lies on two distinct cycles (the finite-graph criterion)."""
    seen: set[str] = set()
    for c in enumerate_cycles(g, max_cycles):
        vs = cycle_vertices(g, c)
        if vs & seen:
            return False
        seen |= vs
    return True


# ---------------------------------------------------------------------------
# Growth verdict
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GkVerdict:
    finite: bool
    longest_chain: int | None
    lower_bound: int | None
    witness: object = None
    notes: tuple[str, ...] = ()

    def to_obj(self) -> dict:
        return {
            "finite": self.finite,
            "longestChain": self.longest_chain,
            "lowerBound": self.lower_bound,
            "witness": self.witness,
            "notes": list(self.notes),
        }


def decide_gk(g: Graph, max_cycles: int = MAX_CYCLES_DEFAULT) -> GkVerdict:
    """Growth is polynomially bounded iff distinct cycles never meet, i.e.
    the cycle pre-order is antisymmetric; the longest chain d gives the lower
    bound 2d - 1 for the growth exponent (0 when acyclic)."""
    notes = ()
    if not g.is_row_finite():
        notes = ("graph has infinite bundles; verdict covers the listed structure only",)
    cp = cycle_poset(g, max_cycles)
    if not cp.antisymmetric:
        witness = None
        for i, c in enumerate(cp.cycles):
            for j, d in enumerate(cp.cycles):
                if i != j and cp.geq[i][j] and cp.geq[j][i]:
                    witness = [list(c.edges), list(d.edges)]
                    break
            if witness:
                break
        return GkVerdict(False, None, None, witness, notes)
    d = cp.longest_chain or 0
    return GkVerdict(True, d, 2 * d - 1 if d > 0 else 0, None, notes)


# ---------------------------------------------------------------------------
# Filtrations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SocleLayer:
    vertices: frozenset[str]

    def to_obj(self) -> dict:
        return {"kind": "socle", "vertices": sorted(self.vertices)}


@dataclass(frozen=True)
class VnrLayer:
    """Layer generated by acyclic vertices (a von Neumann regular ideal)."""

    vertices: frozenset[str]

    def to_obj(self) -> dict:
        return {"kind": "vnr", "vertices": sorted(self.vertices)}


@dataclass(frozen=True)
class LaurentMatrixLayer:
    """Layer generated by a cycle without exits: a matrix ring over Laurent
    polynomials, of size ``index_cardinality`` (OMEGA when another cycle
    feeds the base)."""

    cycle: Cycle
    index_cardinality: Union[int, object]

    def to_obj(self) -> dict:
        card = "omega" if self.index_cardinality is OMEGA else self.index_cardinality
        return {
            "kind": "laurentMatrix",
            "cycle": list(self.cycle.edges),
            "indexCardinality": card,
        }


@dataclass(frozen=True)
class MixedLayer:
    """Direct sum of an acyclic-vertex part and no-exit-cycle parts."""

    vnr_vertices: frozenset[str]
    laurent: tuple[LaurentMatrixLayer, ...]

    def to_obj(self) -> dict:
        return {
            "kind": "mixed",
            "vnr": sorted(self.vnr_vertices),
            "laurent": [l.to_obj() for l in self.laurent],
        }


Layer = Union[SocleLayer, VnrLayer, LaurentMatrixLayer, MixedLayer]


@dataclass(frozen=True)
class Filtration:
    chain: tuple[HSSet, ...]
    layers: tuple[Layer, ...]

    def to_obj(self) -> dict:
        return {
            "chain": [sorted(h.vertices) for h in self.chain],
            "layers": [layer.to_obj() for layer in self.layers],
        }


def laurent_index_cardinality(g: Graph, c: Cycle) -> Union[int, object]:
    """Size of the matrix ring realized by the ideal of a no-exit cycle.

    Counts the paths ending at the cycle's canonical base that touch the base
    only at their end (the length-0 path included); the count is OMEGA as
    soon as a cycle other than ``c`` reaches the base.
    """
    base = cycle_base(g, c)
    # paths visiting base once = paths ending at base avoiding base's out-edges
    on_cycle_sans_base: set[str] = set()
    for v in g.vertices:
        if v == base:
            continue
        seen: set[str] = set()
        todo = [e.dst for e in g.out_bundles(v) if e.src != base and e.dst != base]
        while todo:
            w = todo.pop()
            if w == v:
                on_cycle_sans_base.add(v)
                break
            if w in seen or w == base:
                continue
            seen.add(w)
            todo.extend(e.dst for e in g.out_bundles(w))
        # note: edges out of base are unusable, so walks through base stop there
    reaches_base = {base}
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            if e.src != base and e.src not in reaches_base and e.dst in reaches_base:
                reaches_base.add(e.src)
                changed = True
    if on_cycle_sans_base & reaches_base:
        return OMEGA

    memo: dict[str, Union[int, object]] = {base: 1}

    def count_from(v: str) -> Union[int, object]:
        if v in memo:
            return memo[v]
        total = 0
        for e in g.out_bundles(v):
            if e.dst not in reaches_base:
                continue
            sub = 1 if e.dst == base else count_from(e.dst)
            if e.mult is OMEGA or sub is OMEGA:
                total = OMEGA
                break
            total += e.mult * sub
        memo[v] = total
        return total

    total: Union[int, object] = 1  # the length-0 path at the base
    for v in sorted(reaches_base - {base}):
        sub = count_from(v)
        if sub is OMEGA:
            return OMEGA
        total += sub
    return total


def fp_filtration(
    g: Graph,
    max_cycles: int = MAX_CYCLES_DEFAULT,
    max_vertices_hs: int = 20,
) -> Filtration:
    """The ascending chain of hereditary saturated sets witnessing the
    finite-presentation property: the socle closure first, then one cycle
    without exits per step (lexicographically least in the current quotient).
    """
    verdict = decide_fp(g, max_cycles, max_vertices_hs)
    if not verdict.all_finitely_presented:
        raise NotSupportedError(
            f"not every simple module is finitely presented: {verdict.codes()}"
        )
    full = frozenset(g.vertices)
    h = saturated_closure(g, line_points(g))
    chain = [h]
    layers: list[Layer] = [SocleLayer(h.vertices)]
    while h.vertices != full:
        q = quotient(g, h.vertices)
        no_exit = [c for c in enumerate_cycles(q, max_cycles) if not cycle_has_exit(q, c)]
        c = min(no_exit, key=Cycle.sort_key)
        card = laurent_index_cardinality(q, c)
        h = saturated_closure(g, h.vertices | cycle_vertices(q, c))
        chain.append(h)
        layers.append(LaurentMatrixLayer(c, card))
    return Filtration(tuple(chain), tuple(layers))


def _acyclic_vertices(g: Graph) -> frozenset[str]:
    on_cycle = vertices_on_closed_paths(g)
    return frozenset(v for v in g.vertices if not (g.reachable([v]) & on_cycle))


def gk_filtration(g: Graph, max_cycles: int = MAX_CYCLES_DEFAULT) -> Filtration:
    """The finite chain of hereditary saturated sets witnessing polynomially
    bounded growth: first the closure of the exit targets of minimal cycles,
    then, per step, all acyclic vertices and all no-exit cycles of the
    current quotient.
    """
    verdict = decide_gk(g, max_cycles)
    if not verdict.finite:
        raise NotSupportedError("growth is not polynomially bounded")
    if not g.is_row_finite():
        raise NotSupportedError("filtrations require a row-finite graph")
    full = frozenset(g.vertices)
    cp = cycle_poset(g, max_cycles)
    exit_targets: set[str] = set()
    for c in cp.minimal_cycles:
        cvs = cycle_vertices(g, c)
        on_cycle = set(c.edges)
        for v in cvs:
            for addr in g.concrete_out(v):
                if addr not in on_cycle:
                    exit_targets.add(g.dst_of(addr))
    h = saturated_closure(g, exit_targets)
    chain: list[HSSet] = []
    layers: list[Layer] = []
    if h.vertices:
        chain.append(h)
        layers.append(VnrLayer(h.vertices))
    while h.vertices != full:
        q = quotient(g, h.vertices)
        acyclic = _acyclic_vertices(q)
        no_exit = sorted(
            (c for c in enumerate_cycles(q, max_cycles) if not cycle_has_exit(q, c)),
            key=Cycle.sort_key,
        )
        added = set(acyclic)
        for c in no_exit:
            added |= cycle_vertices(q, c)
        laurent = tuple(LaurentMatrixLayer(c, laurent_index_cardinality(q, c)) for c in no_exit)
        if acyclic and laurent:
            layer: Layer = MixedLayer(acyclic, laurent)
        elif laurent and len(laurent) == 1:
            layer = laurent[0]
        elif laurent:
            layer = MixedLayer(frozenset(), laurent)
        else:
            layer = VnrLayer(acyclic)
        h = saturated_closure(g, h.vertices | added)
        chain.append(h)
        layers.append(layer)
    if not chain:
        # graph with no vertices at all
        chain = [saturated_closure(g, ())]
        layers = [VnrLayer(frozenset())]
    return Filtration(tuple(chain), tuple(layers))


# ---------------------------------------------------------------------------
# Corner report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CornerReport:
    """Graph-side predicates of a vertex's tree and the ring-theoretic labels
    they certify for the corner of the algebra at that vertex."""

    vertex: str
    is_line_point: bool
    no_exit_cycle_tree: bool
    acyclic: bool
    condition_l: bool
    condition_k: bool

    @property
    def ring_labels(self) -> tuple[str, ...]:
        labels = []
        if self.is_line_point:
            labels.append("corner is the scalar field")
        if self.no_exit_cycle_tree:
            labels.append("corner is the Laurent polynomial ring")
        if self.acyclic:
            labels.append("von Neumann regular")
        if self.condition_l:
            labels.append("Zorn")
        if self.condition_k:
            labels.append("weakly regular")
        return tuple(labels)

    def to_obj(self) -> dict:
        return {
            "vertex": self.vertex,
            "flags": {
                "isLinePoint": self.is_line_point,
                "noExitCycleTree": self.no_exit_cycle_tree,
                "acyclic": self.acyclic,
                "conditionL": self.condition_l,
                "conditionK": self.condition_k,
            },
            "ringLabels": list(self.ring_labels),
        }


def corner_report(g: Graph, v: str, max_cycles: int = MAX_CYCLES_DEFAULT) -> CornerReport:
    """Evaluate the tree of ``v`` as a complete subgraph and emit the ring
    labels its properties certify."""
    t = tree(g, g.require_vertex(v)).as_graph()
    on_cycle = vertices_on_closed_paths(t)
    acyclic = not on_cycle
    is_lp = v in line_points(g)
    no_exit_tree = _tree_is_no_exit_cycle(t, v)
    cond_l = condition_L(t, max_cycles)
    cond_k = condition_K(t, max_cycles)
    return CornerReport(v, is_lp, no_exit_tree, acyclic, cond_l, cond_k)


def _tree_is_no_exit_cycle(t: Graph, v: str) -> bool:
    # the tree is a single cycle without exits iff every vertex emits exactly
    # one edge and the unique walk from v returns to v through all vertices
    for w in t.vertices:
        if t.out_degree(w) != 1:
            return False
    seen = []
    at = v
    while True:
        seen.append(at)
        (e,) = t.out_bundles(at)
        at = e.dst
        if at == v:
            break
        if at in seen:
            return False
    return len(seen) == len(t.vertices)
