"""Immutable unitrivalent multigraphs, their F2 cycle space, and cutting.

Cycles are plain int bitmasks over the canonical edge index (order of
appearance in the edge list), which makes the F2 vector space structure just
xor.  Loops and parallel edges are first-class: a loop contributes 2 to its
vertex's degree and 2 to the local count of cycle-support endpoints.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BoundaryMismatch, CutLeafEdge, DegreeError, ZeroCycle

Edge = tuple[str, str, str]  # (edge-id, endpoint-a, endpoint-b)

ON_CYCLE = "on-cycle"
EXTERNAL = "external"
INTERNAL = "internal"
OFF = "off"


@dataclass(frozen=True)
class Graph:
    """A validated unitrivalent multigraph with labeled boundary vertices."""

    edges: tuple[Edge, ...]
    boundary_vertices: tuple[str, ...]
    _index: dict[str, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {eid: i for i, (eid, _, _) in enumerate(self.edges)}
        )

    # -- basic accessors -------------------------------------------------

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(eid for eid, _, _ in self.edges)

    def edge_index(self, eid: str) -> int:
        return self._index[eid]

    def endpoints(self, eid: str) -> tuple[str, str]:
        _, a, b = self.edges[self._index[eid]]
        return a, b

    @property
    def vertices(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for _, a, b in self.edges:
            seen.setdefault(a)
            seen.setdefault(b)
        for v in self.boundary_vertices:
            seen.setdefault(v)
        return tuple(seen)

    def degree(self, v: str) -> int:
        d = 0
        for _, a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def incident_edges(self, v: str) -> tuple[int, ...]:
        """Canonical indices of edges at v; a loop appears twice."""
        out = []
        for i, (_, a, b) in enumerate(self.edges):
            if a == v:
                out.append(i)
            if b == v:
                out.append(i)
        return tuple(out)

    @property
    def trivalent_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.degree(v) == 3)

    # -- components and genus --------------------------------------------

    def components(self) -> list[set[str]]:
        """Connected components as vertex sets (isolated vertices included)."""
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for _, a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        comps: list[set[str]] = []
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    @property
    def genus(self) -> int:
        """First Betti number: E - V + #components."""
        return self.n_edges - len(self.vertices) + len(self.components())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- cycle space -----------------------------------------------------

    def cycle_basis(self) -> list[int]:
        """Fundamental cycles of the spanning forest grown in ascending
        canonical edge order, as bitmasks."""
        parent: dict[str, Optional[tuple[str, int]]] = {}

        def root(v: str) -> str:
            while parent.get(v) is not None:
                v = parent[v][0]  # type: ignore[index]
            return v

        for v in self.vertices:
            parent[v] = None
        tree: set[int] = set()
        basis: list[int] = []
        for i, (_, a, b) in enumerate(self.edges):
            ra, rb = root(a), root(b)
            if ra != rb:
                # attach ra's tree below b's side
                self._reroot(parent, a)
                parent[a] = (b, i)
                tree.add(i)
            else:
                basis.append(self._fundamental_cycle(parent, i))
        return basis

    def _reroot(self, parent, v: str) -> None:
        chain = []
        u = v
        while parent[u] is not None:
            chain.append((u, parent[u]))
            u = parent[u][0]
        for u, (p, i) in reversed(chain):
            parent[p] = (u, i)
            parent[u] = None

    def _fundamental_cycle(self, parent, i: int) -> int:
        _, a, b = self.edges[i]
        if a == b:
            return 1 << i
        path_a = self._tree_path(parent, a)
        path_b = self._tree_path(parent, b)
        mask = 1 << i
        for j in path_a.symmetric_difference(path_b):
            mask |= 1 << j
        return mask

    def _tree_path(self, parent, v: str) -> set[int]:
        out: set[int] = set()
        while parent[v] is not None:
            p, i = parent[v]
            out.add(i)
            v = p
        return out

    def is_cycle(self, mask: int) -> bool:
        """Even number of support endpoints at every vertex."""
        for v in self.vertices:
            cnt = sum(1 for i in self.incident_edges(v) if mask >> i & 1)
            if cnt % 2:
                return False
        return True

    def all_cycles(self) -> list[int]:
        """All 2^g elements of H1, sorted ascending as bitmasks."""
        elems = {0}
        for b in self.cycle_basis():
            elems |= {e ^ b for e in elems}
        return sorted(elems)

    def support_edge_ids(self, mask: int) -> list[str]:
        return [eid for i, (eid, _, _) in enumerate(self.edges) if mask >> i & 1]

    def cycle_from_edge_ids(self, ids: Iterable[str]) -> int:
        mask = 0
        for eid in ids:
            mask |= 1 << self.edge_index(eid)
        return mask

    def vertex_on_cycle(self, v: str, mask: int) -> bool:
        return any(mask >> i & 1 for i in self.incident_edges(v))

    # -- edge classification ---------------------------------------------

    def classify_edge(self, cycle: int, eid: str) -> str:
        if cycle == 0:
            raise ZeroCycle("edge classification is undefined for the zero cycle")
        i = self.edge_index(eid)
        if cycle >> i & 1:
            return ON_CYCLE
        a, b = self.endpoints(eid)
        on_a = self.vertex_on_cycle(a, cycle)
        on_b = self.vertex_on_cycle(b, cycle)
        if on_a and on_b:
            # a leg can never be internal; its univalent endpoint is off the
            # cycle anyway, so this branch only fires for trivalent endpoints
            return INTERNAL
        if on_a or on_b:
            return EXTERNAL
        return OFF

    def external_edges(self, cycle: int) -> list[str]:
        return [
            eid for eid in self.edge_ids if self.classify_edge(cycle, eid) == EXTERNAL
        ]

    def internal_cut_edges(self, cycle: int) -> list[str]:
        """Edges classified external or internal for the cycle."""
        return [
            eid
            for eid in self.edge_ids
            if self.classify_edge(cycle, eid) in (EXTERNAL, INTERNAL)
        ]

    def cuttable_edges(self) -> list[str]:
        """Edges with both endpoints trivalent (cuttable in a decomposition)."""
        out = []
        for eid, a, b in self.edges:
            if self.degree(a) == 3 and self.degree(b) == 3:
                out.append(eid)
        return out


def validate_graph(
    edges: Sequence[tuple[str, str, str]], boundary: Sequence[str]
) -> Graph:
    """Check degrees and boundary declarations, returning an immutable Graph."""
    ids = [e[0] for e in edges]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate edge ids in {ids}")
    g = Graph(tuple(edges), tuple(boundary))
    declared = set(boundary)
    if len(declared) != len(boundary):
        raise BoundaryMismatch("duplicate boundary vertex")
    for v in g.vertices:
        d = g.degree(v)
        if d not in (1, 3):
            raise DegreeError(f"vertex {v!r} has degree {d}")
        if d == 1 and v not in declared:
            raise BoundaryMismatch(f"degree-1 vertex {v!r} not declared as boundary")
        if d == 3 and v in declared:
            raise BoundaryMismatch(f"boundary vertex {v!r} has degree 3")
    for v in declared:
        if v not in g.vertices:
            raise BoundaryMismatch(f"boundary vertex {v!r} not in graph")
    _check_counts(g)
    return g


def _check_counts(g: Graph) -> None:
    # E = 3g-3+2n and T = 2g-2+n hold for connected unitrivalent graphs;
    # warn instead of failing so degenerate glue products stay usable
    for comp in g.components():
        edges = [
            i for i, (_, a, b) in enumerate(g.edges) if a in comp or b in comp
        ]
        verts = comp
        n = sum(1 for v in verts if g.degree(v) == 1)
        t = sum(1 for v in verts if g.degree(v) == 3)
        gc = len(edges) - len(verts) + 1
        if len(edges) != 3 * gc - 3 + 2 * n or t != 2 * gc - 2 + n:
            warnings.warn(
                f"edge/vertex count identity fails on component {sorted(verts)}",
                stacklevel=3,
            )


# -- text format ----------------------------------------------------------


def parse_graph(text: str) -> tuple[Graph, dict[str, int]]:
    """Parse the line-oriented graph format.

    ``edge <id> <a> <b>`` declares an edge (order of appearance fixes the
    canonical index); ``boundary <vertex> <doubled-weight>`` declares a
    univalent vertex and its doubled boundary weight.
    """
    edges: list[Edge] = []
    boundary: list[str] = []
    weights: dict[str, int] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "edge" and len(parts) == 4:
            edges.append((parts[1], parts[2], parts[3]))
        elif parts[0] == "boundary" and len(parts) == 3:
            boundary.append(parts[1])
            weights[parts[1]] = int(parts[2])
        else:
            raise ValueError(f"bad graph line: {raw!r}")
    return validate_graph(edges, boundary), weights


def format_graph(g: Graph, boundary_weights: dict[str, int]) -> str:
    lines = [f"edge {eid} {a} {b}" for eid, a, b in g.edges]
    lines += [
        f"boundary {v} {boundary_weights.get(v, 0)}" for v in g.boundary_vertices
    ]
    return "\n".join(lines) + "\n"


# -- cutting --------------------------------------------------------------


@dataclass(frozen=True)
class CutResult:
    """Outcome of cutting a set of internal edges.

    Each cut edge ``f`` with endpoints (a, b) is replaced by two legs
    ``f:1`` at a and ``f:2`` at b, ending at fresh univalent vertices
    ``f:w1`` and ``f:w2``.  ``pairing`` records, per cut edge, the two new
    boundary vertices so weights can later be assigned consistently.
    """

    graph: Graph  # the whole cut graph (possibly disconnected)
    cut: tuple[str, ...]  # cut edge ids in canonical order
    pairing: dict[str, tuple[str, str]]  # origin edge -> (new vertex, new vertex)

    def component_subgraphs(self) -> list[Graph]:
        out = []
        for comp in self.graph.components():
            edges = tuple(
                e for e in self.graph.edges if e[1] in comp or e[2] in comp
            )
            bdry = tuple(
                v for v in self.graph.boundary_vertices if v in comp
            )
            out.append(Graph(edges, bdry))
        return out


def cut_edges(g: Graph, cut: Iterable[str], allow_leaf: bool = False) -> CutResult:
    """Cut the given edges, replacing each by a paired pair of legs.

    Cutting an edge at a univalent vertex leaves a degenerate single-edge
    component and is refused unless allow_leaf is set (cycle isolation
    needs it for external leg edges).
    """
    cut_set = set(cut)
    ordered = tuple(eid for eid in g.edge_ids if eid in cut_set)
    unknown = cut_set - set(g.edge_ids)
    if unknown:
        raise KeyError(f"unknown edges: {sorted(unknown)}")
    new_edges: list[Edge] = []
    new_boundary = list(g.boundary_vertices)
    pairing: dict[str, tuple[str, str]] = {}
    for eid, a, b in g.edges:
        if eid not in cut_set:
            new_edges.append((eid, a, b))
            continue
        if not allow_leaf and (g.degree(a) == 1 or g.degree(b) == 1):
            raise CutLeafEdge(f"edge {eid!r} is incident to a univalent vertex")
        wa, wb = f"{eid}:w1", f"{eid}:w2"
        new_edges.append((f"{eid}:1", a, wa))
        new_edges.append((f"{eid}:2", b, wb))
        new_boundary += [wa, wb]
        pairing[eid] = (wa, wb)
    return CutResult(Graph(tuple(new_edges), tuple(new_boundary)), ordered, pairing)


def isolate_cycle(g: Graph, cycle: int) -> tuple[list[Graph], list[Graph], CutResult]:
    """Cut all cycle-external and cycle-internal edges.

    Returns (components containing support edges, remaining components,
    the underlying CutResult).
    """
    if cycle == 0:
        raise ZeroCycle("cannot isolate the zero cycle")
    res = cut_edges(g, g.internal_cut_edges(cycle), allow_leaf=True)
    support = set(g.support_edge_ids(cycle))
    with_cycle, without = [], []
    for sub in res.component_subgraphs():
        if support & set(sub.edge_ids):
            with_cycle.append(sub)
        else:
            without.append(sub)
    return with_cycle, without, res


def recognize_gamma_n(g: Graph) -> Optional[tuple[int, int]]:
    """Return (n, generator cycle) when g is connected with Betti number 1."""
    if g.n_edges == 0 or not g.is_connected() or g.genus != 1:
        return None
    basis = g.cycle_basis()
    return len(g.boundary_vertices), basis[0]


def glue(cut_result: CutResult) -> Graph:
    """Reglue a cut graph along its pairing, restoring the original edges."""
    g = cut_result.graph
    edges: list[Edge] = []
    restored: dict[str, list[str]] = {}
    drop_boundary = set()
    for eid, a, b in g.edges:
        base, _, suffix = eid.rpartition(":")
        if suffix in ("1", "2") and base in cut_result.pairing:
            # the non-fresh endpoint of each half is the original endpoint
            w1, w2 = cut_result.pairing[base]
            keep = a if b in (w1, w2) else b
            restored.setdefault(base, []).append(keep)
            drop_boundary.update((w1, w2))
        else:
            edges.append((eid, a, b))
    for base, ends in restored.items():
        edges.append((base, ends[0], ends[1]))
    boundary = tuple(v for v in g.boundary_vertices if v not in drop_boundary)
    return Graph(tuple(edges), boundary)


def canonical_form(g: Graph) -> tuple:
    """Relabeling-invariant form used to compare cut/glue round-trips."""
    order = {v: i for i, v in enumerate(sorted(g.vertices))}
    edges = sorted(
        (eid, tuple(sorted((order[a], order[b]))))
        for eid, a, b in g.edges
    )
    return tuple(edges), tuple(sorted(order[v] for v in g.boundary_vertices))
