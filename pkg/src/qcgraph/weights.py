"""Level-k admissibility, enumeration, the homology flip action, and orbits.

Weights are stored doubled (value = 2*j), so all arithmetic stays integral.
A WeightVector is a plain tuple of doubled integers in canonical edge order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import RangeError
from .f2 import f2_in_span, f2_reduce
from .graph import Graph

WeightVector = tuple[int, ...]


def _triple_ok(a: int, b: int, c: int, k: int) -> bool:
    """Quantum Clebsch-Gordan condition on a doubled triple."""
    s = a + b + c
    return s % 2 == 0 and abs(a - b) <= c <= a + b and s <= 2 * k


def _vertex_triples(graph: Graph) -> list[tuple[int, int, int]]:
    """Incident edge-index triples at trivalent vertices; loops repeated."""
    triples = []
    for v in graph.trivalent_vertices:
        inc = graph.incident_edges(v)
        assert len(inc) == 3
        triples.append(inc)
    return triples


def check_admissible(
    graph: Graph, k: int, w: WeightVector, boundary: dict[str, int]
) -> bool:
    """True iff w matches the boundary weights and every trivalent vertex
    satisfies the level-k condition."""
    if len(w) != graph.n_edges:
        raise RangeError(f"expected {graph.n_edges} entries, got {len(w)}")
    for x in w:
        if not 0 <= x <= k:
            raise RangeError(f"doubled weight {x} outside [0, {k}]")
    for v in graph.boundary_vertices:
        (i,) = set(graph.incident_edges(v))
        if w[i] != boundary[v]:
            return False
    for i1, i2, i3 in _vertex_triples(graph):
        if not _triple_ok(w[i1], w[i2], w[i3], k):
            return False
    return True


def enumerate_admissible(
    graph: Graph, k: int, boundary: dict[str, int]
) -> list[WeightVector]:
    """All admissible weights in lexicographic order.

    Backtracks over edges in canonical order, checking each trivalent vertex
    as soon as all of its edges are assigned.  The raw product filter
    (enumerate_admissible_bruteforce) is kept as the test oracle.
    """
    n = graph.n_edges
    if n == 0:
        return [()]
    for v, x in boundary.items():
        if not 0 <= x <= k:
            raise RangeError(f"boundary weight {x} outside [0, {k}]")
    fixed: dict[int, int] = {}
    for v in graph.boundary_vertices:
        (i,) = set(graph.incident_edges(v))
        if i in fixed and fixed[i] != boundary[v]:
            return []  # single edge with two univalent ends, conflicting labels
        fixed[i] = boundary[v]
    triples = _vertex_triples(graph)
    # vertex checks fire at the highest edge index they involve
    checks_at: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for t in triples:
        checks_at[max(t)].append(t)

    out: list[WeightVector] = []
    w = [0] * n

    def rec(i: int) -> None:
        if i == n:
            out.append(tuple(w))
            return
        values = (fixed[i],) if i in fixed else range(k + 1)
        for x in values:
            w[i] = x
            if all(_triple_ok(w[a], w[b], w[c], k) for a, b, c in checks_at[i]):
                rec(i + 1)

    rec(0)
    return out


def enumerate_admissible_bruteforce(
    graph: Graph, k: int, boundary: dict[str, int]
) -> list[WeightVector]:
    """Raw product filter; oracle for enumerate_admissible."""
    return [
        w
        for w in product(range(k + 1), repeat=graph.n_edges)
        if check_admissible(graph, k, w, boundary)
    ]


def act(cycle: int, w: WeightVector, k: int) -> WeightVector:
    """Flip doubled[l] -> k - doubled[l] on the support of the cycle."""
    return tuple(k - x if cycle >> i & 1 else x for i, x in enumerate(w))


def stabilizer_of(graph: Graph, w: WeightVector, k: int) -> list[int]:
    """All cycles fixing w, i.e. with doubled weight k/2 on their support."""
    return [lam for lam in graph.all_cycles() if act(lam, w, k) == w]


@dataclass(frozen=True)
class Orbit:
    """An H1-orbit of admissible weights with its stabilizer subgroup."""

    representative: WeightVector  # lexicographic minimum
    members: frozenset[WeightVector]
    stabilizer_basis: tuple[int, ...]

    @property
    def stabilizer(self) -> list[int]:
        elems = {0}
        for b in self.stabilizer_basis:
            elems |= {e ^ b for e in elems}
        return sorted(elems)

    @property
    def stabilizer_dim(self) -> int:
        return len(self.stabilizer_basis)


def orbits(graph: Graph, k: int, boundary: dict[str, int]) -> list[Orbit]:
    """Partition of the admissible set into homology orbits, ordered by
    representative."""
    weights = enumerate_admissible(graph, k, boundary)
    cycles = graph.all_cycles()
    seen: set[WeightVector] = set()
    out: list[Orbit] = []
    for w in weights:
        if w in seen:
            continue
        members = {act(lam, w, k) for lam in cycles}
        seen |= members
        rep = min(members)
        stab = f2_reduce([lam for lam in cycles if act(lam, rep, k) == rep])
        out.append(Orbit(rep, frozenset(members), tuple(stab)))
    return out
