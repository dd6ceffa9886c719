"""Weight decomposition along cuts, cocycle restriction, functoriality and
the characterization of the external class."""

import pytest

from qcgraph.circle import MINUS_ONE, ONE
from qcgraph.cohomology import (
    CocycleTable,
    cobounding_chain,
    coboundary_of,
    cohomology_invariant,
    is_coboundary,
    is_twisted_cocycle,
)
from qcgraph.errors import CapExceeded, WeightMismatch
from qcgraph.external import construct_external_cocycle, standard_gamma_n_cocycle
from qcgraph.factorize import (
    all_decompositions,
    decompose_weights,
    equivalent_under_factorization,
    gamma_piece_witness,
    make_decomposition,
    restrict_cocycle,
    verify_characterization,
    verify_functoriality,
)
from qcgraph.weights import enumerate_admissible
from suitegraphs import dumbbell, gamma1, theta, zero_boundary


class TestDecomposeWeights:
    def test_dumbbell_bridge_count_identity(self):
        g, k = dumbbell(), 4
        dec = make_decomposition(g, {"c"}, {0})
        table = decompose_weights(g, k, {}, dec)
        total = sum(len(w1) * len(w2) for w1, w2 in table.values())
        assert total == len(enumerate_admissible(g, k, {}))

    def test_glue_recovers_weights(self):
        g, k = dumbbell(), 4
        dec = make_decomposition(g, {"c"}, {0})
        whole = set(enumerate_admissible(g, k, {}))
        glued = set()
        for jpp, (ws1, ws2) in decompose_weights(g, k, {}, dec).items():
            for w1 in ws1:
                for w2 in ws2:
                    glued.add(dec.glue_weights(w1, w2, jpp))
        assert glued == whole

    def test_theta_full_cut(self):
        g, k = theta(), 2
        dec = make_decomposition(g, {"e1", "e2", "e3"}, {0})
        table = decompose_weights(g, k, {}, dec)
        total = sum(len(w1) * len(w2) for w1, w2 in table.values())
        assert total == len(enumerate_admissible(g, k, {}))

    def test_empty_cut(self):
        g = theta()
        dec = make_decomposition(g, set(), {0})
        table = decompose_weights(g, 2, {}, dec)
        (ws1, ws2) = table[()]
        assert ws1 == enumerate_admissible(g, 2, {})
        assert ws2 == [()]

    def test_glue_rejects_mismatched_leg(self):
        g = dumbbell()
        dec = make_decomposition(g, {"c"}, {0})
        (w1s, w2s) = decompose_weights(g, 4, {}, dec)[(2,)]
        bad = next(w for w in decompose_weights(g, 4, {}, dec)[(0,)][1])
        with pytest.raises(WeightMismatch):
            dec.glue_weights(w1s[0], bad, (2,))


class TestRestriction:
    def test_dumbbell_restriction_is_standard(self):
        g = dumbbell()
        ext = construct_external_cocycle(g, 4, {})
        dec = make_decomposition(g, {"c"}, {0})
        r = restrict_cocycle(ext, dec, (2,), (2, 2))
        assert is_twisted_cocycle(r)
        part = dec.part1
        lam = 1 << part.edge_index("a" if "a" in part.edge_ids else "b")
        assert r.value((2, 2), lam) == MINUS_ONE
        std = standard_gamma_n_cocycle(part, 4, r.boundary)
        assert cohomology_invariant(r) == cohomology_invariant(std)

    def test_restriction_is_cochain_map(self):
        # restricting a coboundary gives a coboundary
        g = dumbbell()
        c = {w: MINUS_ONE if w == (2, 2, 2) else ONE
             for w in enumerate_admissible(g, 4, {})}
        dc = coboundary_of(g, 4, {}, c)
        dec = make_decomposition(g, {"c"}, {0})
        for jpp in [(0,), (2,), (4,)]:
            for fixed in decompose_weights(g, 4, {}, dec)[jpp][1]:
                r = restrict_cocycle(dc, dec, jpp, fixed)
                assert is_twisted_cocycle(r)
                assert is_coboundary(r)

    def test_restriction_multiplicative(self):
        g = theta()
        t1 = construct_external_cocycle(g, 2, {})
        c = {w: MINUS_ONE if w[0] == 1 else ONE
             for w in enumerate_admissible(g, 2, {})}
        t2 = coboundary_of(g, 2, {}, c)
        dec = make_decomposition(g, {"e3"}, {0})
        jpp, fixed = (0,), ()
        r12 = restrict_cocycle(t1 * t2, dec, jpp, fixed)
        r1 = restrict_cocycle(t1, dec, jpp, fixed)
        r2 = restrict_cocycle(t2, dec, jpp, fixed)
        assert r12.table == (r1 * r2).table


class TestEquivalence:
    def test_cohomologous_cocycles_equivalent(self):
        g = theta()
        t = construct_external_cocycle(g, 2, {})
        c = {w: MINUS_ONE if sum(w) % 4 else ONE
             for w in enumerate_admissible(g, 2, {})}
        t2 = t * coboundary_of(g, 2, {}, c)
        assert equivalent_under_factorization(t, t2)

    def test_distinct_classes_not_equivalent(self):
        g = dumbbell()
        t = construct_external_cocycle(g, 4, {})
        assert not equivalent_under_factorization(t, CocycleTable.trivial(g, 4, {}))

    def test_cap(self):
        g = theta()
        t = CocycleTable.trivial(g, 2, {})
        with pytest.raises(CapExceeded):
            equivalent_under_factorization(t, t, cap=2)


class TestFunctoriality:
    @pytest.mark.parametrize("make,k", [
        (dumbbell, 2), (dumbbell, 4), (theta, 2), (gamma1, 4),
    ])
    def test_external_class_restricts_to_external_class(self, make, k):
        g = make()
        assert verify_functoriality(g, k, zero_boundary(g))


class TestCharacterization:
    def test_external_class_passes_witness(self):
        g = dumbbell()
        ext = construct_external_cocycle(g, 4, {})
        assert gamma_piece_witness(ext) is None

    def test_trivial_class_caught(self):
        g = dumbbell()
        witness = gamma_piece_witness(CocycleTable.trivial(g, 4, {}))
        assert witness is not None
        lam, jpp, fixed = witness
        assert lam != 0

    @pytest.mark.parametrize("make,k", [(dumbbell, 4), (theta, 2)])
    def test_full_characterization(self, make, k):
        g = make()
        assert verify_characterization(g, k, zero_boundary(g))
