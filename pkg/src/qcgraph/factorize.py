"""Cutting graphs, restricting cocycles along the cut, equivalence under
factorization, functoriality, and the characterization of external classes.

A decomposition cuts a set of internal edges and groups the resulting
components into two parts.  Admissible weights decompose as a disjoint
union over the cut-edge weights j'' of products of the parts' weight sets,
and cocycles restrict to the first part once a complementary weight on the
second part is fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .cohomology import (
    CocycleTable,
    cohomology_invariant,
)
from .errors import CapExceeded, WeightMismatch
from .external import construct_external_cocycle, standard_gamma_n_cocycle
from .graph import CutResult, Graph, cut_edges, isolate_cycle
from .represent import reps_isomorphic
from .weights import WeightVector, enumerate_admissible

Jpp = tuple[int, ...]  # doubled weights on the cut edges, in cut order


@dataclass(frozen=True)
class Decomposition:
    """A cut of the graph with its components grouped into two parts."""

    graph: Graph
    cut_result: CutResult
    part1: Graph
    part2: Graph

    @property
    def cut(self) -> tuple[str, ...]:
        return self.cut_result.cut

    def leg_origin(self, eid: str) -> Optional[str]:
        base, _, suffix = eid.rpartition(":")
        if suffix in ("1", "2") and base in self.cut_result.pairing:
            return base
        return None

    def part_boundary(
        self, part: Graph, boundary: dict[str, int], jpp: Jpp
    ) -> dict[str, int]:
        """Boundary weights for a part: inherited entries plus j'' on the
        new legs."""
        jpp_of = dict(zip(self.cut, jpp))
        out: dict[str, int] = {}
        for v in part.boundary_vertices:
            if v in boundary:
                out[v] = boundary[v]
            else:
                for eid, a, b in part.edges:
                    origin = self.leg_origin(eid)
                    if origin is not None and v in (a, b):
                        out[v] = jpp_of[origin]
                        break
                else:
                    raise WeightMismatch(f"no weight for boundary vertex {v!r}")
        return out

    def to_original_cycle(self, part: Graph, mask: int) -> int:
        """Transport a cycle of a part to the original graph (the inclusion
        on homology)."""
        out = 0
        for i, (eid, _, _) in enumerate(part.edges):
            if mask >> i & 1:
                if self.leg_origin(eid) is not None:
                    raise ValueError("a leg cannot lie on a cycle")
                out |= 1 << self.graph.edge_index(eid)
        return out

    def glue_weights(self, w1: WeightVector, w2: WeightVector, jpp: Jpp) -> WeightVector:
        """Recombine part weights into a weight of the original graph."""
        jpp_of = dict(zip(self.cut, jpp))
        values: dict[str, int] = dict(jpp_of)
        for part, w in ((self.part1, w1), (self.part2, w2)):
            for i, (eid, _, _) in enumerate(part.edges):
                origin = self.leg_origin(eid)
                if origin is None:
                    values[eid] = w[i]
                elif w[i] != jpp_of[origin]:
                    raise WeightMismatch(
                        f"leg {eid!r} carries {w[i]}, expected {jpp_of[origin]}"
                    )
        return tuple(values[eid] for eid in self.graph.edge_ids)


def make_decomposition(
    graph: Graph, cut: set[str] | list[str], side1: set[int]
) -> Decomposition:
    """Cut the given edges and put the components with indices in side1
    (by the cut graph's component order) into part 1."""
    res = cut_edges(graph, cut)
    subs = res.component_subgraphs()
    part1 = _merge(res.graph, [s for i, s in enumerate(subs) if i in side1])
    part2 = _merge(res.graph, [s for i, s in enumerate(subs) if i not in side1])
    return Decomposition(graph, res, part1, part2)


def _merge(whole: Graph, subs: list[Graph]) -> Graph:
    """Union of component subgraphs, keeping the cut graph's edge order."""
    ids = {eid for s in subs for eid in s.edge_ids}
    verts = {v for s in subs for v in s.boundary_vertices}
    edges = tuple(e for e in whole.edges if e[0] in ids)
    bdry = tuple(v for v in whole.boundary_vertices if v in verts)
    return Graph(edges, bdry)


def all_decompositions(
    graph: Graph, cap: int = 4096
) -> Iterator[Decomposition]:
    """All (cut subset, bipartition) decompositions, cap-bounded."""
    cuttable = graph.cuttable_edges()
    total = 0
    for r in range(len(cuttable) + 1):
        from itertools import combinations

        for cut in combinations(cuttable, r):
            res = cut_edges(graph, cut)
            ncomp = len(res.graph.components())
            total += 1 << ncomp
            if total > cap:
                raise CapExceeded(f"decomposition enumeration beyond cap {cap}")
            for side_bits in range(1 << ncomp):
                side1 = {i for i in range(ncomp) if side_bits >> i & 1}
                yield make_decomposition(graph, set(cut), side1)


def jpp_values(k: int, dec: Decomposition) -> Iterator[Jpp]:
    return product(range(k + 1), repeat=len(dec.cut))


def decompose_weights(
    graph: Graph, k: int, boundary: dict[str, int], dec: Decomposition
) -> dict[Jpp, tuple[list[WeightVector], list[WeightVector]]]:
    """Per cut-edge weight assignment, the admissible sets of both parts."""
    out = {}
    for jpp in jpp_values(k, dec):
        b1 = dec.part_boundary(dec.part1, boundary, jpp)
        b2 = dec.part_boundary(dec.part2, boundary, jpp)
        out[jpp] = (
            enumerate_admissible(dec.part1, k, b1),
            enumerate_admissible(dec.part2, k, b2),
        )
    return out


def restrict_cocycle(
    t: CocycleTable, dec: Decomposition, jpp: Jpp, fixed: WeightVector
) -> CocycleTable:
    """Restriction to part 1 with the part-2 weight held fixed.

    Entry at (cycle of part 1, weight of part 1) is the original table's
    value at the transported cycle and the glued weight.
    """
    part1 = dec.part1
    b1 = dec.part_boundary(part1, t.boundary, jpp)
    basis = tuple(part1.cycle_basis())
    weights = tuple(enumerate_admissible(part1, t.k, b1))
    table = {}
    for b in basis:
        lam = dec.to_original_cycle(part1, b)
        for w in weights:
            glued = dec.glue_weights(w, fixed, jpp)
            table[(b, w)] = t.value(glued, lam)
    return CocycleTable(part1, t.k, b1, basis, weights, table)


def _restriction_contexts(
    t: CocycleTable, dec: Decomposition
) -> Iterator[tuple[Jpp, WeightVector]]:
    for jpp in jpp_values(t.k, dec):
        b2 = dec.part_boundary(dec.part2, t.boundary, jpp)
        for fixed in enumerate_admissible(dec.part2, t.k, b2):
            yield jpp, fixed


def equivalent_under_factorization(
    t1: CocycleTable, t2: CocycleTable, cap: int = 4096
) -> bool:
    """Restrictions induce isomorphic representations for every cut,
    bipartition, and fixed complementary weight."""
    for dec in all_decompositions(t1.graph, cap):
        if dec.part1.n_edges == 0:
            continue
        for jpp, fixed in _restriction_contexts(t1, dec):
            r1 = restrict_cocycle(t1, dec, jpp, fixed)
            r2 = restrict_cocycle(t2, dec, jpp, fixed)
            if not reps_isomorphic(r1, r2):
                return False
    return True


def verify_functoriality(
    graph: Graph, k: int, boundary: dict[str, int], cap: int = 4096
) -> bool:
    """The external class restricts to the external class of part 1, for
    every decomposition and fixed complementary weight."""
    ext = construct_external_cocycle(graph, k, boundary)
    for dec in all_decompositions(graph, cap):
        if dec.part1.n_edges == 0:
            continue
        for jpp in jpp_values(k, dec):
            b2 = dec.part_boundary(dec.part2, boundary, jpp)
            fixed_set = enumerate_admissible(dec.part2, k, b2)
            if not fixed_set:
                continue
            b1 = dec.part_boundary(dec.part1, boundary, jpp)
            target_inv = cohomology_invariant(
                construct_external_cocycle(dec.part1, k, b1)
            )
            for fixed in fixed_set:
                restricted = restrict_cocycle(ext, dec, jpp, fixed)
                if cohomology_invariant(restricted) != target_inv:
                    return False
    return True


def gamma_piece_witness(
    t: CocycleTable, cap: int = 4096
) -> Optional[tuple[int, Jpp, WeightVector]]:
    """First witness where some restriction of t to an isolated Betti-1
    piece is not cohomologous to that piece's standard cocycle; None if all
    restrictions match."""
    graph, k = t.graph, t.k
    count = 0
    for lam in graph.all_cycles():
        if lam == 0:
            continue
        with_cycle, without, res = isolate_cycle(graph, lam)
        pieces = with_cycle
        all_subs = res.component_subgraphs()
        for piece in pieces:
            others = [s for s in all_subs if set(s.edge_ids) != set(piece.edge_ids)]
            dec = Decomposition(graph, res, piece, _merge(res.graph, others))
            for jpp, fixed in _restriction_contexts(t, dec):
                count += 1
                if count > cap:
                    raise CapExceeded(f"piece enumeration beyond cap {cap}")
                b1 = dec.part_boundary(piece, t.boundary, jpp)
                restricted = restrict_cocycle(t, dec, jpp, fixed)
                standard = standard_gamma_n_cocycle(piece, k, b1)
                if cohomology_invariant(restricted) != cohomology_invariant(
                    standard
                ):
                    return lam, jpp, fixed
    return None


def verify_characterization(
    graph: Graph, k: int, boundary: dict[str, int], cap: int = 4096
) -> bool:
    """The external class matches the standard class on every isolated
    Betti-1 piece, and any class differing from it fails that test."""
    from .circle import MINUS_ONE, ONE
    from .cohomology import cocycle_from_characters, CohomologyInvariant
    from .external import external_characters

    ext = construct_external_cocycle(graph, k, boundary)
    if gamma_piece_witness(ext, cap) is not None:
        return False
    ext_inv = external_characters(graph, k, boundary)
    # every distinct class must be detected by some piece restriction
    for mutated in _mutated_invariants(ext_inv):
        t = cocycle_from_characters(graph, k, boundary, mutated)
        if gamma_piece_witness(t, cap) is None:
            return False
    return True


def _mutated_invariants(inv) -> Iterator:
    """Invariants differing from inv by one sign on one stabilizer basis
    element of one orbit."""
    from .circle import MINUS_ONE
    from .cohomology import CohomologyInvariant
    from .f2 import F2Span

    d = inv.as_dict()
    for rep, chars in d.items():
        nonzero = [lam for lam in chars if lam != 0]
        basis = F2Span(sorted(nonzero)).basis()
        for b in basis:
            mutated = {r: dict(c) for r, c in d.items()}
            span = F2Span(basis)
            for lam in chars:
                combo = span.solve(lam)
                if combo is not None and any(
                    combo >> i & 1 and basis[i] == b for i in range(len(basis))
                ):
                    mutated[rep][lam] = chars[lam] * MINUS_ONE
            yield CohomologyInvariant.from_dict(mutated)
