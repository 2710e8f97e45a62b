"""Homomorphisms out of a quandle's augmentation group, as generator images.

The augmentation group of a quandle Q is generated by one symbol |x| per
element, subject to the relations |x > y| = |y|^-1 |x| |y|.  A homomorphism
out of it is pinned down by where the generators go, so this module never
builds the group itself: a GammaHom is just the assignment x -> image
permutation, validated against the relations.  When the hom targets a
quandle (the only case the decomposition machinery uses), every image must
additionally be an automorphism of that target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import Permutation
from .quandle import Quandle

__all__ = [
    "GammaHom",
    "HomError",
    "RelationViolationError",
    "NotAnAutomorphismError",
    "validate_gamma_hom",
    "canonical_hom",
    "trivial_hom",
    "evaluate",
]


class HomError(ValueError):
    """A generator assignment that is not a homomorphism into Aut(target)."""


class RelationViolationError(HomError):
    """assignment[x > y] != assignment[y]^-1 * assignment[x] * assignment[y]."""

    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(
            f"images of generators {x} and {y} break the conjugation relation "
            f"at {x} > {y}"
        )


class NotAnAutomorphismError(HomError):
    """The image of generator x does not preserve the target table."""

    def __init__(self, x: int):
        self.x = x
        super().__init__(f"image of generator {x} is not an automorphism of the target")


@dataclass(frozen=True)
class GammaHom:
    """Generator assignment x -> assignment[x], one permutation per source point.

    target is the quandle the images act on; None means only the relation
    invariant is meaningful (no automorphism constraint).  Construct through
    validate_gamma_hom unless the data is known-good.
    """

    source: Quandle
    target: Quandle | None
    assignment: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != self.source.order:
            raise ValueError(
                f"assignment length {len(self.assignment)} != source order {self.source.order}"
            )
        degrees = {p.degree for p in self.assignment}
        if len(degrees) != 1:
            raise ValueError("assigned permutations have mixed degrees")
        if self.target is not None and self.target.order != self.target_order:
            raise ValueError(
                f"assignment degree {self.target_order} != target order {self.target.order}"
            )

    @property
    def source_order(self) -> int:
        return self.source.order

    @property
    def target_order(self) -> int:
        return self.assignment[0].degree

    def __call__(self, x: int) -> Permutation:
        return self.assignment[x]

    def is_valid(self) -> bool:
        try:
            check_gamma_hom(self)
        except HomError:
            return False
        return True


def check_gamma_hom(hom: GammaHom) -> None:
    """Raise the first violation in scan order: relations (x, y), then images."""
    table = hom.source.table
    n = hom.source.order
    for x in range(n):
        for y in range(n):
            if hom.assignment[table[x][y]] != hom.assignment[x].conjugated_by(hom.assignment[y]):
                raise RelationViolationError(x, y)
    if hom.target is not None:
        for x in range(n):
            if not hom.target.is_automorphism(hom.assignment[x]):
                raise NotAnAutomorphismError(x)


def validate_gamma_hom(
    source: Quandle, target: Quandle | None, assignment: Sequence[Permutation]
) -> GammaHom:
    """Build and fully validate a GammaHom; raises HomError subclasses."""
    hom = GammaHom(source, target, tuple(assignment))
    check_gamma_hom(hom)
    return hom


def canonical_hom(q: Quandle) -> GammaHom:
    """The hom from q's own augmentation group sending each generator to its symmetry."""
    return validate_gamma_hom(q, q, tuple(q.symmetries()))


def trivial_hom(source: Quandle, target: Quandle) -> GammaHom:
    """All generators to the identity; valid for any source and target."""
    identity = Permutation.identity(target.order)
    return GammaHom(source, target, tuple(identity for _ in range(source.order)))


def evaluate(hom: GammaHom, word: Sequence[tuple[int, int]]) -> Permutation:
    """Image of a word in the generators, e.g. [(x, 1), (y, -1)] for |x||y|^-1.

    Factors multiply left-to-right; the empty word maps to the identity.
    """
    result = Permutation.identity(hom.target_order)
    for point, exponent in word:
        if not 0 <= point < hom.source_order:
            raise ValueError(f"generator {point} out of range for source order {hom.source_order}")
        result = result * hom.assignment[point] ** exponent
    return result
