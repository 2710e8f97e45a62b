"""Connected quandles from group data: construction, realization, enumeration.

A connected quandle of order n is equivalent to a triple (G, H, z): a
transitive G <= S_n, the stabilizer H of the point 0, and a central element
z of H whose n conjugates by coset representatives generate G.  The quandle
lives on the right cosets of H, which biject with points via g -> g(0):

    i > j  =  (reps_i * reps_j^-1 * z * reps_j)(0)  =  conj_j(i).

realize extracts the triple from a connected quandle (z is the symmetry at
0); coset_quandle rebuilds the table.  The enumerator walks all transitive
subgroup classes of S_n, all central z of the stabilizer, keeps the triples
that generate, and dedupes the resulting quandles by canonical form.  Its
output is cross-checked against the brute-force search in the oracle
module, which shares no code with this construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._parallel import map_ordered
from .config import resolve_bound
from .perm import PermGroup, Permutation, generate_group, transitive_subgroups_up_to_conjugacy
from .quandle import Quandle

__all__ = [
    "ConnectedSeed",
    "CensusEntry",
    "GenerationFailureError",
    "NotConnectedError",
    "check_generation",
    "coset_quandle",
    "realize",
    "enumerate_connected",
]


class GenerationFailureError(ValueError):
    """The conjugates of z do not generate the candidate group."""


class NotConnectedError(ValueError):
    """realize needs a connected quandle."""


@dataclass(frozen=True)
class ConnectedSeed:
    """(group, stabilizer of 0, central z, coset representatives).

    reps[k] is the least group element sending 0 to k, so reps[0] is the
    identity and reps indexes the right cosets of the stabilizer.
    """

    group: PermGroup
    stabilizer: PermGroup
    z: Permutation
    reps: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        n = self.group.degree
        if len(self.group) != len(self.stabilizer) * n:
            raise ValueError("stabilizer index does not equal the degree")
        if self.z not in self.stabilizer:
            raise ValueError("z must lie in the stabilizer")
        if any(self.z * h != h * self.z for h in self.stabilizer.generators):
            raise ValueError("z must be central in the stabilizer")
        if len(self.reps) != n or any(r(0) != k for k, r in enumerate(self.reps)):
            raise ValueError("reps[k] must send 0 to k, one per coset")

    @property
    def order(self) -> int:
        return self.group.degree


def seed_from_group(group: PermGroup, z: Permutation) -> ConnectedSeed:
    """Seed for a transitive group and a central stabilizer element."""
    if not group.is_transitive():
        raise ValueError("group must be transitive")
    stab = group.stabilizer(0)
    reps = _coset_reps(group)
    return ConnectedSeed(group, stab, z, reps)


def _coset_reps(group: PermGroup) -> tuple[Permutation, ...]:
    reps: dict[int, Permutation] = {}
    for g in group.elements:  # sorted, so first hit is least
        k = g(0)
        if k not in reps:
            reps[k] = g
    return tuple(reps[k] for k in range(group.degree))


def _conjugates(seed: ConnectedSeed) -> list[Permutation]:
    return [seed.z.conjugated_by(r) for r in seed.reps]


def check_generation(seed: ConnectedSeed) -> bool:
    """True iff the rep-conjugates of z generate exactly the seed group."""
    generated = generate_group(_conjugates(seed), seed.order)
    assert generated.is_subgroup_of(seed.group)
    return len(generated) == len(seed.group)


def coset_quandle(seed: ConnectedSeed) -> Quandle:
    """The connected quandle the seed defines on coset indices.

    Requires check_generation; the constructed table always passes full
    axiom validation and is connected (both verified here, not assumed).
    """
    if not check_generation(seed):
        raise GenerationFailureError(
            "conjugates of z generate a proper subgroup; no connected quandle arises"
        )
    conj = _conjugates(seed)
    n = seed.order
    # Well-definedness: replacing reps[j] by h * reps[j] for h in the
    # stabilizer must not change conj[j]; z central makes this automatic.
    for j in (0, n - 1):
        for h in seed.stabilizer.generators:
            assert seed.z.conjugated_by(h * seed.reps[j]) == conj[j]
    table = tuple(tuple(conj[j](i) for j in range(n)) for i in range(n))
    q = Quandle(table)
    assert q.is_connected()
    return q


def realize(q: Quandle) -> ConnectedSeed:
    """The (group, stabilizer, z, reps) triple underlying a connected quandle.

    The group is the inner group, z the symmetry at 0.  Feeding the result
    back through coset_quandle reproduces q exactly, not just up to
    isomorphism, because the coset of g is determined by g(0).
    """
    if not q.is_connected():
        raise NotConnectedError(f"quandle has {len(q.orbits())} orbits, needs exactly 1")
    group = q.inner_group()
    seed = seed_from_group(group, q.symmetry(0))
    return seed


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class of connected quandles and the seed that produced it."""

    quandle: Quandle
    seed: ConnectedSeed
    inner_order: int


def _skip_by_structure(group: PermGroup) -> bool:
    """Candidate groups no connected quandle of order > 1 can have as Inn.

    Inn of a connected quandle of order n > 1 is nonabelian, is the full
    symmetric group only for n = 3, and is the alternating group only for
    n = 4.  Skipping these candidates never changes the census (tested by
    running with filters off).
    """
    n = group.degree
    if n <= 1:
        return False
    if group.is_abelian():
        return True
    if len(group) == math.factorial(n) and n != 3:
        return True
    if n != 4 and 2 * len(group) == math.factorial(n) and all(g.is_even() for g in group):
        return True
    return False


def enumerate_connected(
    n: int, *, use_filters: bool = True, jobs: int = 1
) -> list[CensusEntry]:
    """All connected quandles of order n up to isomorphism, one entry each.

    Walks every transitive subgroup class of S_n and every central element
    of the point stabilizer; seeds that pass the generation test yield
    quandles, deduped by canonical form.  Entries are sorted by canonical
    table, so the output is deterministic and independent of jobs.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    bound = resolve_bound(6)
    if n > bound:
        raise ValueError(f"order {n} exceeds the configured bound {bound}")

    seeds: list[ConnectedSeed] = []
    for group in transitive_subgroups_up_to_conjugacy(n):
        if use_filters and _skip_by_structure(group):
            continue
        stab = group.stabilizer(0)
        reps = _coset_reps(group)
        for z in stab.center():
            seeds.append(ConnectedSeed(group, stab, z, reps))

    def attempt(seed: ConnectedSeed) -> CensusEntry | None:
        if not check_generation(seed):
            return None
        q = coset_quandle(seed)
        return CensusEntry(q.canonical_form(), seed, len(seed.group))

    produced = map_ordered(attempt, seeds, jobs=jobs)
    by_class: dict[Quandle, CensusEntry] = {}
    for entry in produced:
        if entry is not None and entry.quandle not in by_class:
            by_class[entry.quandle] = entry
    return sorted(by_class.values(), key=lambda e: e.quandle.table)
