"""Orbit decomposition and the semidisjoint-union composition of quandles.

A mesh is a list of block quandles plus a matrix of generator-assignment
homs, homs[i][j] taking generators of block i's augmentation group to
automorphisms of block j.  Diagonal entries are forced to the canonical
assignment (each generator to its own symmetry).  A valid mesh composes to
a quandle on the concatenated blocks:

    x > y  =  x acted on by homs[i][j](|y|),   for x in block j, y in block i.

Validity is two cross-block coherence conditions on top of per-entry hom
validity; they are exactly what the composed table needs to satisfy the
quandle axioms, and semidisjoint_union asserts that equivalence on every
call.  In the other direction, decompose splits any quandle into its inner
orbits and reads the homs off the symmetry columns; composing the result
reproduces the input table bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .augment import GammaHom, canonical_hom, check_gamma_hom, trivial_hom
from .perm import Permutation
from .quandle import Quandle

__all__ = [
    "Mesh",
    "Decomposition",
    "DecompositionTree",
    "MeshError",
    "DiagonalNotCanonicalError",
    "Condition1ViolationError",
    "Condition2ViolationError",
    "validate_mesh",
    "is_valid_mesh",
    "semidisjoint_union",
    "disjoint_union",
    "decompose",
    "decomposition_tree",
]


class MeshError(ValueError):
    """The blocks-and-homs data does not compose to a quandle."""


class DiagonalNotCanonicalError(MeshError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"diagonal hom {i} must send each generator to its own symmetry")


class Condition1ViolationError(MeshError):
    """Cross-block action fails to commute with the in-block operation."""

    def __init__(self, i: int, j: int, x: int, y: int, z: int):
        self.witness = (i, j, x, y, z)
        self.i, self.j, self.x, self.y, self.z = i, j, x, y, z
        super().__init__(
            f"blocks ({i}, {j}): acting on {x} by outside point {y} does not "
            f"distribute over {x} > {z}"
        )


class Condition2ViolationError(MeshError):
    """Actions from two different outside blocks fail to braid correctly."""

    def __init__(self, i: int, j: int, k: int, x: int, y: int, z: int):
        self.witness = (i, j, k, x, y, z)
        self.i, self.j, self.k, self.x, self.y, self.z = i, j, k, x, y, z
        super().__init__(
            f"blocks ({i}, {j}, {k}): actions of outside points {y} and {z} "
            f"on {x} do not interchange"
        )


@dataclass(frozen=True)
class Mesh:
    """Validated blocks plus hom matrix; build through validate_mesh."""

    blocks: tuple[Quandle, ...]
    homs: tuple[tuple[GammaHom, ...], ...]

    @property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for b in self.blocks[:-1]:
            out.append(out[-1] + b.order)
        return tuple(out)

    @property
    def order(self) -> int:
        return sum(b.order for b in self.blocks)


def validate_mesh(
    blocks: Sequence[Quandle],
    homs: Sequence[Sequence[GammaHom | None]],
) -> Mesh:
    """Check everything a mesh must satisfy; raise the first failure.

    homs[i][j] must take generators of blocks[i] to automorphisms of
    blocks[j].  Diagonal entries may be None, in which case the canonical
    assignment is filled in; a provided diagonal is checked against it.
    Violations are reported with their least witness tuple in scan order.
    """
    blocks = tuple(blocks)
    if not blocks:
        raise ValueError("a mesh needs at least one block")
    k = len(blocks)
    if len(homs) != k or any(len(row) != k for row in homs):
        raise ValueError(f"hom matrix must be {k}x{k}")

    filled: list[list[GammaHom]] = []
    for i in range(k):
        row: list[GammaHom] = []
        for j in range(k):
            entry = homs[i][j]
            if entry is None:
                if i != j:
                    raise ValueError(f"off-diagonal hom ({i}, {j}) may not be omitted")
                entry = canonical_hom(blocks[i])
            if entry.source != blocks[i]:
                raise ValueError(f"hom ({i}, {j}) source is not block {i}")
            if entry.target_order != blocks[j].order:
                raise ValueError(f"hom ({i}, {j}) images have degree != order of block {j}")
            if entry.target != blocks[j]:
                entry = GammaHom(blocks[i], blocks[j], entry.assignment)
            row.append(entry)
        filled.append(row)

    for i in range(k):
        if filled[i][i].assignment != tuple(blocks[i].symmetries()):
            raise DiagonalNotCanonicalError(i)
    for i in range(k):
        for j in range(k):
            check_gamma_hom(filled[i][j])

    # Condition 1: for x, z in block i and y in block j, the outside action
    # of y on x > z matches acting on x and z separately.
    for i, j in itertools.product(range(k), repeat=2):
        if i == j:
            continue
        ti = blocks[i].table
        a_ji = filled[j][i]  # action of block-j points on block i
        a_ij = filled[i][j]  # action of block-i points on block j
        for x, y, z in itertools.product(
            range(blocks[i].order), range(blocks[j].order), range(blocks[i].order)
        ):
            lhs = ti[a_ji.assignment[y](x)][z]
            rhs = a_ji.assignment[a_ij.assignment[z](y)](ti[x][z])
            if lhs != rhs:
                raise Condition1ViolationError(i, j, x, y, z)

    # Condition 2: for x in block i, y in block j, z in block k2, the two
    # outside actions interchange after z adjusts y.
    for i, j, k2 in itertools.permutations(range(k), 3):
        a_ji = filled[j][i]
        a_ki = filled[k2][i]
        a_kj = filled[k2][j]
        for x, y, z in itertools.product(
            range(blocks[i].order), range(blocks[j].order), range(blocks[k2].order)
        ):
            lhs = a_ki.assignment[z](a_ji.assignment[y](x))
            rhs = a_ji.assignment[a_kj.assignment[z](y)](a_ki.assignment[z](x))
            if lhs != rhs:
                raise Condition2ViolationError(i, j, k2, x, y, z)

    return Mesh(blocks, tuple(tuple(row) for row in filled))


def is_valid_mesh(blocks: Sequence[Quandle], homs: Sequence[Sequence[GammaHom | None]]) -> bool:
    try:
        validate_mesh(blocks, homs)
    except ValueError:
        return False
    return True


def semidisjoint_union(mesh: Mesh) -> Quandle:
    """Compose a mesh into the quandle on its concatenated blocks.

    Block i occupies global points offset_i .. offset_i + order_i - 1.  The
    mesh conditions are re-checked first (Mesh is a plain dataclass, so a
    hand-built instance gets no free pass), and the composed table is run
    through full quandle validation, which a valid mesh always passes.
    """
    validate_mesh(mesh.blocks, mesh.homs)
    table = _composed_table(mesh.blocks, mesh.homs)
    return Quandle(table)


def _composed_table(
    blocks: Sequence[Quandle], homs: Sequence[Sequence[GammaHom]]
) -> tuple[tuple[int, ...], ...]:
    """The raw composed table; does not require the mesh to be valid."""
    offsets = [0]
    for b in blocks[:-1]:
        offsets.append(offsets[-1] + b.order)
    n = sum(b.order for b in blocks)
    table = [[0] * n for _ in range(n)]
    for j, bj in enumerate(blocks):
        for i, bi in enumerate(blocks):
            hom = homs[i][j]
            for xl in range(bj.order):
                for yl in range(bi.order):
                    table[offsets[j] + xl][offsets[i] + yl] = offsets[j] + hom.assignment[yl](xl)
    return tuple(tuple(row) for row in table)


def disjoint_union(blocks: Sequence[Quandle]) -> Quandle:
    """Semidisjoint union with all off-diagonal homs trivial."""
    blocks = tuple(blocks)
    homs = [
        [None if i == j else trivial_hom(blocks[i], blocks[j]) for j in range(len(blocks))]
        for i in range(len(blocks))
    ]
    return semidisjoint_union(validate_mesh(blocks, homs))


@dataclass(frozen=True)
class Decomposition:
    """A quandle expressed as the semidisjoint union of its inner orbits.

    layout[g] = (block index, local index) places each original point; the
    blocks are the orbits in order of least element, each sorted.
    """

    mesh: Mesh
    layout: tuple[tuple[int, int], ...]

    @property
    def blocks(self) -> tuple[Quandle, ...]:
        return self.mesh.blocks

    def global_order(self) -> tuple[int, ...]:
        """Original labels in composed order: orbit 0 ascending, then orbit 1, ..."""
        pairs = sorted(range(len(self.layout)), key=lambda g: self.layout[g])
        return tuple(pairs)

    def reassemble(self) -> Quandle:
        """Compose the mesh and restore the original labels."""
        composed = semidisjoint_union(self.mesh)
        return composed.relabel(Permutation(self.global_order()))


def decompose(q: Quandle) -> Decomposition:
    """Split q into its inner-orbit blocks and the homs the blocks induce.

    Each block is the subquandle on one orbit; hom (i, j) sends a generator
    y of block i to the restriction of q's symmetry at y to block j, in
    local labels.  reassemble() returns a quandle equal to q.
    """
    orbits = q.orbits()
    blocks = tuple(q.subquandle(orbit) for orbit in orbits)
    local = {g: (bi, li) for bi, orbit in enumerate(orbits) for li, g in enumerate(orbit)}
    homs: list[list[GammaHom | None]] = []
    for i, orbit_i in enumerate(orbits):
        row: list[GammaHom | None] = []
        for j, orbit_j in enumerate(orbits):
            if i == j:
                row.append(None)
                continue
            assignment = []
            for y in orbit_i:
                images = tuple(local[q.table[x][y]][1] for x in orbit_j)
                assignment.append(Permutation(images))
            row.append(GammaHom(blocks[i], blocks[j], tuple(assignment)))
        homs.append(row)
    mesh = validate_mesh(blocks, homs)
    layout = tuple(local[g] for g in range(q.order))
    dec = Decomposition(mesh, layout)
    assert dec.reassemble() == q
    return dec


@dataclass(frozen=True)
class DecompositionTree:
    """Iterated decomposition down to connected leaves.

    A leaf (connected quandle) has decomposition None and no children;
    otherwise children[b] refines block b of the decomposition, taken as a
    standalone quandle under its own inner group.
    """

    quandle: Quandle
    decomposition: Decomposition | None
    children: tuple["DecompositionTree", ...]

    def is_leaf(self) -> bool:
        return self.decomposition is None

    def depth(self) -> int:
        if self.is_leaf():
            return 0
        return 1 + max(child.depth() for child in self.children)

    def leaves(self) -> list[Quandle]:
        if self.is_leaf():
            return [self.quandle]
        return [leaf for child in self.children for leaf in child.leaves()]

    def replay(self) -> Quandle:
        """Rebuild the quandle bottom-up from the leaves."""
        if self.decomposition is None:
            return self.quandle
        rebuilt = [child.replay() for child in self.children]
        assert tuple(rebuilt) == self.decomposition.blocks
        return self.decomposition.reassemble()


def decomposition_tree(q: Quandle) -> DecompositionTree:
    """Decompose recursively until every leaf is connected.

    Terminates because a disconnected quandle has at least two orbits, so
    block orders strictly decrease.
    """
    if q.is_connected():
        return DecompositionTree(q, None, ())
    dec = decompose(q)
    children = tuple(decomposition_tree(block) for block in dec.blocks)
    tree = DecompositionTree(q, dec, children)
    assert all(leaf.is_connected() for leaf in tree.leaves())
    return tree
