"""Exact symbolic Leavitt path algebra.

Elements are finite linear combinations of monomials p q* (p, q paths with a
common range) over an exact field: arbitrary-precision rationals by default,
or a prime field GF(p).  Products contract ghost-against-real path prefixes
(e*e = r(e), e*f = 0) and are then rewritten to a canonical normal form that
eliminates, at every regular vertex, the pair gamma gamma* of a chosen
"special" outgoing edge: p gamma (q gamma)* becomes p q* minus the sibling
terms (p f)(q f)*.  Each rewrite strictly shortens the only reducible branch,
so normalization terminates; two elements are equal iff their normal term
maps are equal.  No reduction is ever applied at sinks or infinite emitters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ContextMismatchError, NotSupportedError, ResourceCapError
from .graph import (
    OMEGA,
    Graph,
    Path,
    is_regular,
    make_path,
    path_range,
)

MAX_BASIS_DEFAULT = 1_000_000


# ---------------------------------------------------------------------------
# Exact scalar fields
# ---------------------------------------------------------------------------


class Rationals:
    """Exact rational scalars backed by :class:`fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise NotSupportedError(f"cannot coerce {x!r} to a rational scalar")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def invert(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The prime field GF(p); scalars are ints reduced mod p."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise NotSupportedError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            if "/" in x:
                num, den = x.split("/", 1)
                return self.mul(int(num) % self.p, self.invert(int(den) % self.p))
            return int(x) % self.p
        if isinstance(x, Fraction):
            return self.mul(x.numerator % self.p, self.invert(x.denominator % self.p))
        raise NotSupportedError(f"cannot coerce {x!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def invert(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def format(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


Field = Union[Rationals, PrimeField]
RATIONALS = Rationals()


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """The product p q* of a real path and a ghost path with common range."""

    p: Path
    q: Path

    @property
    def degree(self) -> int:
        return len(self.p.edges) - len(self.q.edges)

    @property
    def total_length(self) -> int:
        return len(self.p.edges) + len(self.q.edges)

    def sort_key(self):
        return (self.degree, self.p.edges, self.p.base, self.q.edges, self.q.base)

    def __str__(self):
        parts = [".".join(self.p.edges)] if self.p.edges else []
        if self.q.edges:
            parts.append(".".join(a + "*" for a in reversed(self.q.edges)))
        if not parts:
            return self.p.base
        return ".".join(parts)


def _drop_last(p: Path, source: str) -> Path:
    return Path(p.base if len(p.edges) > 1 else source, p.edges[:-1])


def _extend(p: Path, addr: str) -> Path:
    return Path(p.base, p.edges + (addr,))


# ---------------------------------------------------------------------------
# Algebra context and elements
# ---------------------------------------------------------------------------


class AlgebraContext:
    """A graph together with a scalar field and a special-edge choice.

    The special edge of each regular vertex fixes the direction of the
    canonical normal form; by default it is the lexicographically smallest
    outgoing concrete edge address.
    """

    def __init__(
        self,
        graph: Graph,
        field: Field = RATIONALS,
        special_edges: Mapping[str, str] | None = None,
    ):
        self.graph = graph
        self.field = field
        special = {}
        for v in graph.vertices:
            if is_regular(graph, v):
                special[v] = min(graph.concrete_out(v))
        if special_edges is not None:
            for v, addr in special_edges.items():
                if v not in special:
                    raise NotSupportedError(f"{v!r} is not a regular vertex")
                if graph.src_of(addr) != v:
                    raise NotSupportedError(f"{addr!r} does not leave {v!r}")
                special[v] = addr
        self.special = special

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraContext)
            and self.graph == other.graph
            and self.field == other.field
            and self.special == other.special
        )

    def __hash__(self):
        return hash((self.graph, self.field, tuple(sorted(self.special.items()))))

    # -- element factories --------------------------------------------------

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def vertex(self, v: str) -> "AlgebraElement":
        self.graph.require_vertex(v)
        p = Path(v)
        return AlgebraElement(self, {Monomial(p, p): self.field.one})

    def edge(self, address: str) -> "AlgebraElement":
        e = self.graph.resolve(address)
        m = Monomial(Path(e.src, (address,)), Path(e.dst))
        return AlgebraElement(self, {m: self.field.one})

    def ghost(self, address: str) -> "AlgebraElement":
        e = self.graph.resolve(address)
        m = Monomial(Path(e.dst), Path(e.src, (address,)))
        return AlgebraElement(self, {m: self.field.one})

    def monomial(self, p: Path, q: Path, coeff=1) -> "AlgebraElement":
        """The element p q* (normalized); p and q must share their range."""
        if path_range(self.graph, p) != path_range(self.graph, q):
            raise NotSupportedError("p and q must have a common range")
        terms: dict[Monomial, object] = {}
        _normalize(self, p, q, self.field.coerce(coeff), terms)
        return AlgebraElement(self, _strip_zeros(self, terms))

    def path_element(self, edges: Iterable[str], base: str | None = None) -> "AlgebraElement":
        p = make_path(self.graph, list(edges), base)
        return AlgebraElement(
            self, {Monomial(p, Path(path_range(self.graph, p))): self.field.one}
        )

    def scalar(self, value) -> object:
        return self.field.coerce(value)


def _strip_zeros(ctx: AlgebraContext, terms: dict) -> dict:
    zero = ctx.field.zero
    return {m: c for m, c in terms.items() if c != zero}


def _normalize(ctx: AlgebraContext, p: Path, q: Path, coeff, out: dict, rng: random.Random | None = None) -> None:
    """Accumulate the normal form of coeff * p q* into ``out``.

    The reducible branch loses two edges per step, and every sibling branch is
    already normal at its junction, so the work list shrinks steadily.  With
    ``rng`` the processing order is randomized; the accumulated term map does
    not depend on it.
    """
    field = ctx.field
    work = [(p, q, coeff)]
    while work:
        if rng is None:
            p, q, c = work.pop()
        else:
            p, q, c = work.pop(rng.randrange(len(work)))
        if p.edges and q.edges and p.edges[-1] == q.edges[-1]:
            addr = p.edges[-1]
            w = ctx.graph.src_of(addr)
            if ctx.special.get(w) == addr:
                p2, q2 = _drop_last(p, w), _drop_last(q, w)
                work.append((p2, q2, c))
                nc = field.neg(c)
                for f in ctx.graph.concrete_out(w):
                    if f != addr:
                        work.append((_extend(p2, f), _extend(q2, f), nc))
                continue
        m = Monomial(p, q)
        out[m] = field.add(out.get(m, field.zero), c)


def normalize_monomial(
    ctx: AlgebraContext, p: Path, q: Path, coeff=1, rng: random.Random | None = None
) -> "AlgebraElement":
    """Normal form of coeff * p q*, optionally with a randomized rewrite order."""
    terms: dict[Monomial, object] = {}
    _normalize(ctx, p, q, ctx.field.coerce(coeff), terms, rng)
    return AlgebraElement(ctx, _strip_zeros(ctx, terms))


class AlgebraElement:
    """A canonical finite linear combination of normal monomials."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Mapping[Monomial, object]):
        self.ctx = ctx
        self.terms = dict(terms)

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        one = self.ctx.field.one
        for m in sorted(self.terms, key=Monomial.sort_key):
            c = self.terms[m]
            coeff = "" if c == one else f"{self.ctx.field.format(c)} "
            bits.append(f"{coeff}{m}")
        return " + ".join(bits)

    def __repr__(self):
        return f"<{self}>"

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "AlgebraElement") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError("operands belong to different algebra contexts")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        field = self.ctx.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = field.add(terms.get(m, field.zero), c)
        return AlgebraElement(self.ctx, _strip_zeros(self.ctx, terms))

    def __neg__(self) -> "AlgebraElement":
        field = self.ctx.field
        return AlgebraElement(self.ctx, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, value) -> "AlgebraElement":
        field = self.ctx.field
        s = field.coerce(value)
        if s == field.zero:
            return self.ctx.zero()
        return AlgebraElement(self.ctx, {m: field.mul(s, c) for m, c in self.terms.items()})

    def __rmul__(self, value) -> "AlgebraElement":
        return self.scale(value)

    def __mul__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        ctx = self.ctx
        field = ctx.field
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                contracted = _contract(ctx, m1, m2)
                if contracted is None:
                    continue
                _normalize(ctx, contracted[0], contracted[1], field.mul(c1, c2), out)
        return AlgebraElement(ctx, _strip_zeros(ctx, out))

    # -- grading & serialization -------------------------------------------------

    def degree_components(self) -> dict[int, "AlgebraElement"]:
        """Partition of the terms by monomial degree |p| - |q|."""
        buckets: dict[int, dict[Monomial, object]] = {}
        for m, c in self.terms.items():
            buckets.setdefault(m.degree, {})[m] = c
        return {d: AlgebraElement(self.ctx, t) for d, t in sorted(buckets.items())}

    def to_obj(self) -> list[dict]:
        out = []
        for m in sorted(self.terms, key=Monomial.sort_key):
            item = {
                "p": list(m.p.edges),
                "q": list(m.q.edges),
                "coeff": self.ctx.field.format(self.terms[m]),
            }
            if not m.p.edges and not m.q.edges:
                item["v"] = m.p.base
            out.append(item)
        return out


def element_from_obj(ctx: AlgebraContext, obj) -> AlgebraElement:
    """Rebuild an element from its serialized term list."""
    total = ctx.zero()
    for item in obj:
        p_edges, q_edges = item["p"], item["q"]
        if not p_edges and not q_edges:
            p = Path(ctx.graph.require_vertex(item["v"]))
            q = p
        else:
            p = make_path(ctx.graph, p_edges) if p_edges else None
            q = make_path(ctx.graph, q_edges) if q_edges else None
            if p is None:
                p = Path(path_range(ctx.graph, q))
            if q is None:
                q = Path(path_range(ctx.graph, p))
        total = total + ctx.monomial(p, q, ctx.field.coerce(item["coeff"]))
    return total


def _contract(ctx: AlgebraContext, m1: Monomial, m2: Monomial):
    """CK-1 contraction of (p1 q1*)(p2 q2*) into a single monomial, or None."""
    a, b = m1.q, m2.p
    if a.base != b.base:
        return None
    la, lb = len(a.edges), len(b.edges)
    n = min(la, lb)
    if a.edges[:n] != b.edges[:n]:
        return None
    if la <= lb:
        rest = b.edges[la:]
        return Path(m1.p.base, m1.p.edges + rest), m2.q
    rest = a.edges[lb:]
    return m1.p, Path(m2.q.base, m2.q.edges + rest)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a + b


def degree_components(a: AlgebraElement) -> dict[int, AlgebraElement]:
    return a.degree_components()


# ---------------------------------------------------------------------------
# Normal-form basis enumeration and growth
# ---------------------------------------------------------------------------


def _as_context(g) -> AlgebraContext:
    return g if isinstance(g, AlgebraContext) else AlgebraContext(g)


def is_normal(ctx: AlgebraContext, m: Monomial) -> bool:
    if not (m.p.edges and m.q.edges):
        return True
    if m.p.edges[-1] != m.q.edges[-1]:
        return True
    addr = m.p.edges[-1]
    return ctx.special.get(ctx.graph.src_of(addr)) != addr


def _paths_by_length(ctx: AlgebraContext, max_len: int, cap: int) -> dict[str, list[list[Path]]]:
    """paths[v][l] = all paths of length l ending at v; fails on infinite emitters."""
    g = ctx.graph
    for e in g.edges:
        if e.mult is OMEGA:
            raise ResourceCapError(
                f"bundle {e.id!r} is infinite; path enumeration is unbounded"
            )
    by_range: dict[str, list[list[Path]]] = {v: [[Path(v)]] for v in g.vertices}
    frontier = {v: [Path(v)] for v in g.vertices}
    total = len(g.vertices)
    for _ in range(max_len):
        nxt: dict[str, list[Path]] = {v: [] for v in g.vertices}
        for v, paths in frontier.items():
            for addr in g.concrete_out(v):
                dst = g.dst_of(addr)
                for p in paths:
                    nxt[dst].append(Path(p.base, p.edges + (addr,)))
                    total += 1
                    if total > cap:
                        raise ResourceCapError(f"more than {cap} paths enumerated")
        for v, paths in nxt.items():
            by_range[v].append(paths)
        frontier = nxt
        if not any(nxt.values()):
            for v in g.vertices:
                while len(by_range[v]) <= max_len:
                    by_range[v].append([])
            break
    for v in g.vertices:
        while len(by_range[v]) <= max_len:
            by_range[v].append([])
    return by_range


def enumerate_basis(
    g, max_total_length: int, max_basis: int = MAX_BASIS_DEFAULT
) -> list[Monomial]:
    """All normal monomials p q* with |p| + |q| <= ``max_total_length``.

    For an acyclic graph this is the full finite basis once the bound reaches
    twice the longest path length.
    """
    ctx = _as_context(g)
    by_range = _paths_by_length(ctx, max_total_length, max_basis)
    out: list[Monomial] = []
    for v in ctx.graph.vertices:
        lengths = by_range[v]
        for lp in range(len(lengths)):
            for lq in range(len(lengths)):
                if lp + lq > max_total_length:
                    continue
                for p in lengths[lp]:
                    for q in lengths[lq]:
                        m = Monomial(p, q)
                        if is_normal(ctx, m):
                            out.append(m)
                            if len(out) > max_basis:
                                raise ResourceCapError(
                                    f"basis exceeds the cap {max_basis}"
                                )
    return sorted(out, key=Monomial.sort_key)


def growth_profile(g, n_max: int, max_basis: int = MAX_BASIS_DEFAULT) -> list[int]:
    """dim V_n for n = 0..n_max, where V_n is spanned by all products of at
    most n vertex/edge/ghost generators.

    Rewriting never lengthens a word, so dim V_n equals the number of normal
    monomials with |p| + |q| <= n; it is counted here without materializing
    the pairs.
    """
    ctx = _as_context(g)
    by_range = _paths_by_length(ctx, n_max, max_basis)
    g_ = ctx.graph
    counts = {v: [len(lst) for lst in by_range[v]] for v in g_.vertices}
    # special_in[v] = special edges with range v (at most one per source vertex)
    special_in: dict[str, list[str]] = {v: [] for v in g_.vertices}
    for w, addr in ctx.special.items():
        special_in[g_.dst_of(addr)].append(addr)

    per_total = [0] * (n_max + 1)
    for v in g_.vertices:
        cv = counts[v]
        for a in range(n_max + 1):
            for b in range(n_max + 1 - a):
                pairs = cv[a] * cv[b]
                if a >= 1 and b >= 1:
                    for addr in special_in[v]:
                        w = g_.src_of(addr)
                        pairs -= counts[w][a - 1] * counts[w][b - 1]
                per_total[a + b] += pairs
    dims = []
    acc = 0
    for n in range(n_max + 1):
        acc += per_total[n]
        dims.append(acc)
    return dims
