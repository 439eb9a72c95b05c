"""Simple-module actions over infinite paths and infinite emitters.

Module vectors are plain dicts from basis elements to nonzero scalars.  For a
tail-equivalence class of infinite paths the basis elements are described by a
finite prefix glued onto a tail of one fixed stream; for an infinite emitter v
the basis elements are the finite paths ending at v.  Monomials act ghost
part first: p q* sends a basis element b to p applied to (q* applied to b).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import AlgebraContext, AlgebraElement, Monomial
from .errors import ContextMismatchError, NotSupportedError, ResourceCapError
from .graph import (
    OMEGA,
    Cycle,
    Graph,
    Path,
    cycle_base,
    make_path,
    path_range,
)


# ---------------------------------------------------------------------------
# Infinite path descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicPath:
    """prefix . period . period . ...; edges are concrete addresses.

    Stored in canonical form: the period is primitive (not a repetition of a
    shorter closed path) and the prefix cannot be absorbed into a rotation of
    the period.  The stream is rational exactly when the prefix is empty.
    """

    prefix: Path
    period: Path

    def edge_at(self, n: int) -> str:
        lp = len(self.prefix.edges)
        if n <= lp:
            return self.prefix.edges[n - 1]
        return self.period.edges[(n - lp - 1) % len(self.period.edges)]

    def source(self) -> str:
        return self.prefix.base if self.prefix.edges else self.period.base

    @property
    def is_rational(self) -> bool:
        return not self.prefix.edges


@dataclass(frozen=True)
class GeneratedStream:
    """The irrational stream g h g^2 h^2 g^3 h^3 ... of two distinct cycles
    sharing a base vertex; ``g`` and ``h`` are rotated to start at the base."""

    g: tuple[str, ...]
    h: tuple[str, ...]

    def edge_at(self, n: int) -> str:
        pos = n
        rep = 1
        while True:
            block = rep * len(self.g)
            if pos <= block:
                return self.g[(pos - 1) % len(self.g)]
            pos -= block
            block = rep * len(self.h)
            if pos <= block:
                return self.h[(pos - 1) % len(self.h)]
            pos -= block
            rep += 1

    @property
    def is_rational(self) -> bool:
        return False


StreamDescriptor = Union[PeriodicPath, GeneratedStream]


def periodic_stream(g: Graph, period_edges, prefix_edges=()) -> PeriodicPath:
    period = make_path(g, list(period_edges))
    if path_range(g, period) != period.base:
        raise NotSupportedError("period must be a closed path")
    if prefix_edges:
        prefix = make_path(g, list(prefix_edges))
        if path_range(g, prefix) != period.base:
            raise NotSupportedError("prefix must end at the source of the period")
    else:
        prefix = Path(period.base)
    # primitivize the period
    per = list(period.edges)
    for d in range(1, len(per) + 1):
        if len(per) % d == 0 and per == per[:d] * (len(per) // d):
            per = per[:d]
            break
    # absorb an absorbable prefix tail, rotating the period along
    pre = list(prefix.edges)
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = [per[-1]] + per[:-1]
    per_path = make_path(g, per)
    pre_path = make_path(g, pre) if pre else Path(per_path.base)
    return PeriodicPath(pre_path, per_path)


def generated_stream(g: Graph, first: Cycle, second: Cycle, base: str | None = None) -> GeneratedStream:
    """Interleaved stream of two distinct cycles through a shared base vertex."""
    if first == second:
        raise NotSupportedError("the two cycles must be distinct")
    verts1 = {g.src_of(a): i for i, a in enumerate(first.edges)}
    verts2 = {g.src_of(a): i for i, a in enumerate(second.edges)}
    shared = sorted(set(verts1) & set(verts2))
    if not shared:
        raise NotSupportedError("the two cycles share no vertex")
    if base is None:
        base = shared[0]
    elif base not in shared:
        raise NotSupportedError(f"{base!r} is not a common vertex of the two cycles")
    e1 = first.edges[verts1[base]:] + first.edges[: verts1[base]]
    e2 = second.edges[verts2[base]:] + second.edges[: verts2[base]]
    return GeneratedStream(e1, e2)


def stream_source(g: Graph, stream: StreamDescriptor) -> str:
    if isinstance(stream, PeriodicPath):
        return stream.source()
    return g.src_of(stream.g[0])


def stream_vertex_after(g: Graph, stream: StreamDescriptor, n: int) -> str:
    """The vertex where the tail past position n starts."""
    if n == 0:
        return stream_source(g, stream)
    return g.dst_of(stream.edge_at(n))


def stream_prefix(stream: StreamDescriptor, n: int) -> tuple[str, ...]:
    """The first n edge addresses of the stream."""
    return tuple(stream.edge_at(i) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# Basis elements of the infinite-path module
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChenBasisElement:
    """``prefix . tail_index``-th tail of the stream, in canonical form.

    Canonical means the prefix cannot be folded back into the stream (its
    last edge differs from the stream edge at ``tail_index``) and, for a
    periodic stream, the tail index is reduced modulo the period.
    """

    stream: StreamDescriptor
    prefix: Path
    tail_index: int


def chen_basis_element(
    g: Graph, stream: StreamDescriptor, prefix: Path | None = None, tail_index: int = 0
) -> ChenBasisElement:
    if tail_index < 0:
        raise NotSupportedError("tail index must be >= 0")
    if prefix is None:
        prefix = Path(stream_vertex_after(g, stream, tail_index))
    if path_range(g, prefix) != stream_vertex_after(g, stream, tail_index):
        raise NotSupportedError("prefix does not chain onto the stream tail")
    edges = list(prefix.edges)
    n = tail_index
    periodic = isinstance(stream, PeriodicPath)
    while True:
        if periodic:
            lp = len(stream.prefix.edges)
            ell = len(stream.period.edges)
            if n >= lp:
                n = lp + (n - lp) % ell
        if edges and n >= 1 and edges[-1] == stream.edge_at(n):
            edges.pop()
            n -= 1
            continue
        # a prefix may wrap backwards around the period: tail(n) = tail(n+ell)
        if periodic and edges and n >= lp and edges[-1] == stream.edge_at(n + ell):
            edges.pop()
            n += ell - 1
            continue
        break
    base = g.src_of(edges[0]) if edges else stream_vertex_after(g, stream, n)
    return ChenBasisElement(stream, Path(base, tuple(edges)), n)


def element_source(g: Graph, b: ChenBasisElement) -> str:
    return b.prefix.base


def _strip_front(g: Graph, b: ChenBasisElement, q: Path) -> ChenBasisElement | None:
    """Remove the path q from the front of b, or None if b does not start with q."""
    if not q.edges:
        return b if q.base == b.prefix.base else None
    pe = b.prefix.edges
    for i, addr in enumerate(q.edges):
        have = pe[i] if i < len(pe) else b.stream.edge_at(b.tail_index + i - len(pe) + 1)
        if have != addr:
            return None
    k = len(q.edges)
    if k <= len(pe):
        rest = pe[k:]
        base = g.src_of(rest[0]) if rest else stream_vertex_after(g, b.stream, b.tail_index)
        return chen_basis_element(g, b.stream, Path(base, rest), b.tail_index)
    return chen_basis_element(g, b.stream, None, b.tail_index + (k - len(pe)))


def _prepend(g: Graph, b: ChenBasisElement, p: Path) -> ChenBasisElement | None:
    if path_range(g, p) != b.prefix.base:
        return None
    return chen_basis_element(
        g, b.stream, Path(p.base, p.edges + b.prefix.edges), b.tail_index
    )


# ---------------------------------------------------------------------------
# Module vectors and actions
# ---------------------------------------------------------------------------


def _accumulate(field, vec: dict, key, coeff) -> None:
    new = field.add(vec.get(key, field.zero), coeff)
    if new == field.zero:
        vec.pop(key, None)
    else:
        vec[key] = new


def _check_ctx(ctx: AlgebraContext, x: AlgebraElement) -> None:
    if x.ctx != ctx:
        raise ContextMismatchError("element belongs to a different algebra context")


def chen_act(ctx: AlgebraContext, x: AlgebraElement, vec: dict) -> dict:
    """Act with x on a vector over infinite-path basis elements.

    Rules, extended linearly: a vertex fixes the paths it sources and kills
    the rest; an edge prepends when it chains; a ghost edge removes the first
    edge when it matches and kills the rest.
    """
    _check_ctx(ctx, x)
    g = ctx.graph
    field = ctx.field
    out: dict[ChenBasisElement, object] = {}
    for m, c in x.terms.items():
        for b, w in vec.items():
            t = _strip_front(g, b, m.q)
            if t is None:
                continue
            t = _prepend(g, t, m.p)
            if t is None:
                continue
            _accumulate(field, out, t, field.mul(c, w))
    return out


def sv_act(ctx: AlgebraContext, v: str, x: AlgebraElement, vec: dict) -> dict:
    """Act with x on a vector over the finite paths ending at the infinite
    emitter ``v``; ghost edges additionally kill the length-0 path."""
    g = ctx.graph
    if not g.is_infinite_emitter(g.require_vertex(v)):
        raise NotSupportedError(f"{v!r} is not an infinite emitter")
    _check_ctx(ctx, x)
    field = ctx.field
    out: dict[Path, object] = {}
    for m, c in x.terms.items():
        for b, w in vec.items():
            if path_range(g, b) != v:
                raise NotSupportedError(f"basis path does not end at {v!r}")
            t = _sv_mono(g, m, b)
            if t is None:
                continue
            _accumulate(field, out, t, field.mul(c, w))
    return out


def _sv_mono(g: Graph, m: Monomial, b: Path) -> Path | None:
    q = m.q
    if len(q.edges) > len(b.edges):
        return None  # a ghost edge eventually meets the bare vertex: zero
    if not q.edges:
        if q.base != b.base:
            return None
        t = b
    else:
        if b.edges[: len(q.edges)] != q.edges:
            return None
        rest = b.edges[len(q.edges):]
        base = g.src_of(rest[0]) if rest else path_range(g, b)
        t = Path(base, rest)
    p = m.p
    if path_range(g, p) != t.base:
        return None
    return Path(p.base, p.edges + t.edges)


def singleton_vector(ctx: AlgebraContext, key, coeff=1) -> dict:
    return {key: ctx.field.coerce(coeff)}


# ---------------------------------------------------------------------------
# Bifurcation kernel data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelData:
    """Bifurcating positions along a stream with the kernel generators they
    contribute and the matching path idempotents."""

    bifurcating_integers: tuple[int, ...]
    generators: tuple[tuple[int, tuple[AlgebraElement, ...]], ...]
    mu: tuple[tuple[int, AlgebraElement], ...]

    def generators_at(self, n: int) -> tuple[AlgebraElement, ...]:
        return dict(self.generators)[n]

    def mu_at(self, n: int) -> AlgebraElement:
        return dict(self.mu)[n]


def bifurcation_data(ctx: AlgebraContext, stream: StreamDescriptor, depth: int) -> KernelData:
    """Scan the first ``depth`` edges of the stream for bifurcations.

    At each bifurcating position n the off-stream edges f at the source of the
    n-th edge give generators f* (prefix of length n-1)*, and the idempotent
    mu_n is (prefix of length n-1)(prefix of length n-1)*.
    """
    g = ctx.graph
    if depth < 1:
        raise NotSupportedError("depth must be >= 1")
    integers = []
    gens = []
    mus = []
    for n in range(1, depth + 1):
        addr = stream.edge_at(n)
        vn = g.src_of(addr)
        d = g.out_degree(vn)
        if d is OMEGA:
            raise ResourceCapError(
                f"vertex {vn!r} emits infinitely many edges; generator list is infinite"
            )
        if d < 2:
            continue
        integers.append(n)
        head = stream_prefix(stream, n - 1)
        head_path = (
            make_path(g, list(head)) if head else Path(stream_source(g, stream))
        )
        gen_list = []
        for f in g.concrete_out(vn):
            if f == addr:
                continue
            q = Path(head_path.base, head_path.edges + (f,))
            gen_list.append(ctx.monomial(Path(g.dst_of(f)), q))
        gens.append((n, tuple(gen_list)))
        mus.append((n, ctx.monomial(head_path, head_path)))
    return KernelData(tuple(integers), tuple(gens), tuple(mus))


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def stream_to_obj(stream: StreamDescriptor) -> dict:
    if isinstance(stream, PeriodicPath):
        return {
            "kind": "periodic",
            "prefix": list(stream.prefix.edges),
            "period": list(stream.period.edges),
        }
    return {"kind": "ghstream", "g": " ".join(stream.g), "h": " ".join(stream.h)}


def stream_from_obj(g: Graph, obj) -> StreamDescriptor:
    from .graph import canonical_cycle

    if not isinstance(obj, dict) or "kind" not in obj:
        raise NotSupportedError("stream descriptor must be an object with a \"kind\"")
    if obj["kind"] == "periodic":
        return periodic_stream(g, obj.get("period", []), obj.get("prefix", []))
    if obj["kind"] == "ghstream":
        first = canonical_cycle(g, str(obj["g"]).replace(",", " ").split())
        second = canonical_cycle(g, str(obj["h"]).replace(",", " ").split())
        return generated_stream(g, first, second)
    raise NotSupportedError(f"unknown stream kind {obj['kind']!r}")
