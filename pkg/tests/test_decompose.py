"""Decomposition and mesh tests.

The mesh conditions are checked against the blunt alternative on small
block profiles: compose the table naively and run the quandle axioms on
it.  Acceptance runs the large randomized version; here the profile
(2,2,2) family with per-generator assignments into S_2 is exhausted
(4^6 matrices), which covers both conditions' failure modes.
"""

from __future__ import annotations

import itertools
import random

import pytest

from quandles.augment import GammaHom, canonical_hom, trivial_hom
from quandles.decompose import (
    Condition1ViolationError,
    Condition2ViolationError,
    DiagonalNotCanonicalError,
    Mesh,
    MeshError,
    _composed_table,
    decompose,
    decomposition_tree,
    disjoint_union,
    is_valid_mesh,
    semidisjoint_union,
    validate_mesh,
)
from quandles.perm import Permutation
from quandles.quandle import Quandle, is_quandle_table, trivial_quandle


def perm(*cycles, degree):
    return Permutation.from_cycles(degree, *cycles)


def hom(source, target, *image_tuples):
    return GammaHom(source, target, tuple(Permutation(t) for t in image_tuples))


class TestValidateMesh:
    def test_single_block_canonical(self, t3):
        mesh = validate_mesh([t3], [[None]])
        assert mesh.homs[0][0].assignment == tuple(t3.symmetries())
        assert semidisjoint_union(mesh) == t3

    def test_trivial_off_diagonal_always_valid(self, t3, q3):
        for blocks in ([t3, trivial_quandle(1)], [q3, t3], [trivial_quandle(2)] * 2):
            homs = [
                [None if i == j else trivial_hom(blocks[i], blocks[j])
                 for j in range(len(blocks))]
                for i in range(len(blocks))
            ]
            assert is_valid_mesh(blocks, homs)

    def test_two_orbit_construction(self, q3):
        t2, t1 = trivial_quandle(2), trivial_quandle(1)
        homs = [
            [None, hom(t2, t1, (0,), (0,))],
            [hom(t1, t2, (1, 0)), None],
        ]
        mesh = validate_mesh([t2, t1], homs)
        assert semidisjoint_union(mesh) == q3

    def test_condition_1_failure_with_least_witness(self):
        t2 = trivial_quandle(2)
        swap_then_id = [hom(t2, t2, (1, 0), (0, 1))]
        homs = [
            [None, swap_then_id[0]],
            [hom(t2, t2, (1, 0), (0, 1)), None],
        ]
        with pytest.raises(Condition1ViolationError) as info:
            validate_mesh([t2, t2], homs)
        assert info.value.witness == (0, 1, 0, 0, 0)

    def test_diagonal_not_canonical(self, t3):
        homs = [[trivial_hom(t3, t3)]]
        with pytest.raises(DiagonalNotCanonicalError) as info:
            validate_mesh([t3], homs)
        assert info.value.i == 0

    def test_shape_errors(self, t3):
        with pytest.raises(ValueError):
            validate_mesh([], [])
        with pytest.raises(ValueError):
            validate_mesh([t3], [[None, None]])
        with pytest.raises(ValueError):
            validate_mesh([t3, t3], [[None, None], [None, None]])

    def test_wrong_source_rejected(self, t3, q3):
        stray = trivial_hom(q3, t3)
        with pytest.raises(ValueError):
            validate_mesh([t3, t3], [[None, stray], [trivial_hom(t3, t3), None]])

    def test_exhaustive_2_2_2_matches_naive_axiom_check(self):
        t2 = trivial_quandle(2)
        blocks = [t2, t2, t2]
        diagonal = canonical_hom(t2)
        choices = [
            (Permutation((0, 1)), Permutation((0, 1))),
            (Permutation((0, 1)), Permutation((1, 0))),
            (Permutation((1, 0)), Permutation((0, 1))),
            (Permutation((1, 0)), Permutation((1, 0))),
        ]
        slots = [(i, j) for i in range(3) for j in range(3) if i != j]
        accepted = rejected_1 = rejected_2 = 0
        for picks in itertools.product(range(4), repeat=6):
            homs = [[diagonal if i == j else None for j in range(3)] for i in range(3)]
            for (i, j), pick in zip(slots, picks):
                homs[i][j] = GammaHom(t2, t2, choices[pick])
            naive_ok = is_quandle_table(_composed_table(blocks, homs))
            try:
                validate_mesh(blocks, homs)
                mesh_ok = True
                accepted += 1
            except Condition1ViolationError:
                mesh_ok = False
                rejected_1 += 1
            except Condition2ViolationError:
                mesh_ok = False
                rejected_2 += 1
            assert mesh_ok == naive_ok, f"disagreement at picks {picks}"
        assert accepted and rejected_1 and rejected_2

    def test_randomized_profile_3_2(self, censuses):
        rng = random.Random(57)
        order3 = censuses.brute(3).tables
        t2 = trivial_quandle(2)
        disagreements = 0
        for _ in range(120):
            b3 = order3[rng.randrange(len(order3))]
            blocks = [b3, t2]
            homs = [
                [canonical_hom(b3), _random_hom(rng, b3, t2)],
                [_random_hom(rng, t2, b3), canonical_hom(t2)],
            ]
            naive_ok = is_quandle_table(_composed_table(blocks, homs))
            if is_valid_mesh(blocks, homs) != naive_ok:
                disagreements += 1
        assert disagreements == 0


def _random_hom(rng, source, target):
    degree = target.order
    images = []
    for _ in range(source.order):
        values = list(range(degree))
        rng.shuffle(values)
        images.append(Permutation(tuple(values)))
    return GammaHom(source, target, tuple(images))


class TestSemidisjointUnion:
    def test_block_layout_is_contiguous(self, t3):
        q = disjoint_union([t3, trivial_quandle(1)])
        assert q.order == 4
        assert q.table[3][3] == 3
        assert q.subquandle([0, 1, 2]) == t3

    def test_revalidates_hand_built_mesh(self, t3):
        bad = Mesh((t3,), ((trivial_hom(t3, t3),),))
        with pytest.raises(MeshError):
            semidisjoint_union(bad)

    def test_disjoint_union_examples(self, t3):
        assert disjoint_union([t3]) == t3
        assert disjoint_union([trivial_quandle(1)] * 2) == trivial_quandle(2)
        double = disjoint_union([t3, t3])
        assert double.order == 6
        assert double.orbits() == [(0, 1, 2), (3, 4, 5)]


class TestDecompose:
    def test_trivial_2(self):
        dec = decompose(trivial_quandle(2))
        assert [b.order for b in dec.blocks] == [1, 1]
        assert all(
            p.is_identity()
            for i, row in enumerate(dec.mesh.homs)
            for j, h in enumerate(row)
            for p in h.assignment
        )

    def test_two_orbit_example(self, q3):
        dec = decompose(q3)
        assert [b.table for b in dec.blocks] == [((0, 0), (1, 1)), ((0,),)]
        assert dec.mesh.homs[1][0].assignment == (perm((0, 1), degree=2),)
        assert dec.layout == ((0, 0), (0, 1), (1, 0))

    def test_connected_yields_single_block(self, t3):
        dec = decompose(t3)
        assert len(dec.blocks) == 1
        assert dec.blocks[0] == t3

    def test_blocks_are_orbit_subquandles(self, censuses):
        for n in range(2, 5):
            for q in censuses.brute(n).tables:
                dec = decompose(q)
                orbits = q.orbits()
                assert len(dec.blocks) == len(orbits)
                for block, orbit in zip(dec.blocks, orbits):
                    assert block == q.subquandle(orbit)

    def test_round_trip_bit_exact(self, censuses):
        for n in range(2, 5):
            for q in censuses.brute(n).tables:
                assert decompose(q).reassemble() == q

    def test_round_trip_with_scattered_orbits(self, q3):
        scattered = q3.relabel(perm((1, 2), degree=3))
        assert scattered.orbits() == [(0, 2), (1,)]
        dec = decompose(scattered)
        assert dec.layout == ((0, 0), (1, 0), (0, 1))
        assert dec.reassemble() == scattered

    def test_redecomposition_is_identical(self, censuses):
        for q in censuses.brute(4).tables:
            dec = decompose(q)
            assert decompose(dec.reassemble()) == dec


class TestDecompositionTree:
    def test_connected_is_leaf(self, t3):
        tree = decomposition_tree(t3)
        assert tree.is_leaf()
        assert tree.depth() == 0
        assert tree.leaves() == [t3]
        assert tree.replay() == t3

    def test_trivial_3_depth_one(self):
        tree = decomposition_tree(trivial_quandle(3))
        assert tree.depth() == 1
        assert [leaf.order for leaf in tree.leaves()] == [1, 1, 1]

    def test_two_orbit_depth_two(self, q3):
        # the {0,1} orbit block is a trivial 2, disconnected on its own
        tree = decomposition_tree(q3)
        assert tree.depth() == 2
        assert all(leaf.is_connected() for leaf in tree.leaves())
        assert tree.replay() == q3

    def test_replay_reproduces_census(self, censuses):
        for n in range(1, 5):
            for q in censuses.brute(n).tables:
                assert decomposition_tree(q).replay() == q
