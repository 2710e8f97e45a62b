"""Finite quandles as operation tables, with axiom checking and isomorphism.

A quandle of order n is stored as an n x n table of ints where
``table[x][y]`` is the result of acting on x by y (written x > y below).
The three axioms:

  1. idempotence:         x > x == x
  2. right invertibility: for each y, the map x -> x > y is a bijection
  3. self-distributivity: (a > b) > c == (a > c) > (b > c)

The map x -> x > y (column y read down the rows) is the symmetry at y; axiom
2 says each symmetry is a permutation and axiom 3 says symmetries conjugate
each other the way their base points act.  The group generated by all
symmetries is the inner group; its orbits partition the quandle, and the
quandle is connected when there is one orbit.

Canonical forms and automorphism groups relabel by all of S_n at once in
numpy, which keeps order 6 censuses (tens of thousands of tables) cheap.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .config import HARD_MAX_ORDER
from .perm import PermGroup, Permutation, generate_group

__all__ = [
    "Quandle",
    "AxiomViolation",
    "IdempotenceViolation",
    "InvertibilityViolation",
    "DistributivityViolation",
    "RangeViolation",
    "axiom_violations",
    "is_quandle_table",
    "trivial_quandle",
    "dihedral_quandle",
]


@dataclass(frozen=True)
class AxiomViolation:
    """Base class; subclasses pinpoint the first offending cell or column."""

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class RangeViolation(AxiomViolation):
    row: int
    col: int
    value: object

    def describe(self) -> str:
        return f"entry at ({self.row}, {self.col}) is {self.value!r}, not a point of the quandle"


@dataclass(frozen=True)
class IdempotenceViolation(AxiomViolation):
    point: int

    def describe(self) -> str:
        return f"{self.point} acted on by itself moves away from itself"


@dataclass(frozen=True)
class InvertibilityViolation(AxiomViolation):
    column: int

    def describe(self) -> str:
        return f"acting by {self.column} is not a bijection"


@dataclass(frozen=True)
class DistributivityViolation(AxiomViolation):
    a: int
    b: int
    c: int

    def describe(self) -> str:
        return (
            f"(({self.a} > {self.b}) > {self.c}) != (({self.a} > {self.c}) > ({self.b} > {self.c}))"
        )


def axiom_violations(table: Sequence[Sequence[int]]) -> list[AxiomViolation]:
    """Every axiom failure in the table, in a fixed scan order.

    Range errors are reported first; structural axioms are only checked on
    in-range tables so the checks cannot raise.
    """
    n = len(table)
    violations: list[AxiomViolation] = []
    for x, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {x} has length {len(row)}, expected {n}")
        for y, value in enumerate(row):
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                violations.append(RangeViolation(x, y, value))
            elif not 0 <= value < n:
                violations.append(RangeViolation(x, y, int(value)))
    if violations:
        return violations
    for x in range(n):
        if table[x][x] != x:
            violations.append(IdempotenceViolation(x))
    for y in range(n):
        if len({table[x][y] for x in range(n)}) != n:
            violations.append(InvertibilityViolation(y))
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[table[a][c]][table[b][c]]:
            violations.append(DistributivityViolation(a, b, c))
    return violations


def is_quandle_table(table: Sequence[Sequence[int]]) -> bool:
    return not axiom_violations(table)


class Quandle:
    """Immutable finite quandle over points 0..n-1.

    The constructor validates all three axioms and raises ValueError naming
    the first violation; use axiom_violations directly to collect all of
    them from a raw table.
    """

    __slots__ = ("table", "_cache")

    def __init__(self, table: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        if not rows:
            raise ValueError("a quandle needs at least one point")
        bad = axiom_violations(rows)
        if bad:
            raise ValueError(f"not a quandle: {bad[0].describe()}")
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Quandle instances are immutable")

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        """x > y."""
        return self.table[x][y]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quandle):
            return NotImplemented
        return self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"Quandle(order={self.order})"

    # -- symmetries and the inner group ------------------------------------

    def symmetry(self, y: int) -> Permutation:
        """The permutation x -> x > y."""
        return Permutation(tuple(self.table[x][y] for x in range(self.order)))

    def symmetries(self) -> list[Permutation]:
        return [self.symmetry(y) for y in range(self.order)]

    def inner_group(self) -> PermGroup:
        """Group generated by all symmetries."""
        if "inner" not in self._cache:
            self._cache["inner"] = generate_group(self.symmetries(), self.order)
        return self._cache["inner"]

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits of the inner group, each sorted, ordered by least point."""
        if "orbits" not in self._cache:
            inner = self.inner_group()
            seen: set[int] = set()
            out = []
            for x in range(self.order):
                if x in seen:
                    continue
                orbit = inner.orbit(x)
                seen.update(orbit)
                out.append(orbit)
            self._cache["orbits"] = out
        return list(self._cache["orbits"])

    def is_connected(self) -> bool:
        return len(self.orbits()) == 1

    def is_trivial(self) -> bool:
        """Every symmetry is the identity."""
        return all(self.table[x][y] == x for x in range(self.order) for y in range(self.order))

    # -- relabeling, isomorphism, automorphisms ----------------------------

    def relabel(self, sigma: Permutation) -> "Quandle":
        """The isomorphic quandle with x renamed to sigma(x).

        The new table satisfies new[sigma(x)][sigma(y)] = sigma(old[x][y]).
        """
        if sigma.degree != self.order:
            raise ValueError(f"permutation degree {sigma.degree} != order {self.order}")
        inv = sigma.inverse()
        n = self.order
        return Quandle(
            tuple(
                tuple(sigma(self.table[inv(x)][inv(y)]) for y in range(n)) for x in range(n)
            )
        )

    def subquandle(self, points: Sequence[int]) -> "Quandle":
        """Induced quandle on a closed point set, relabeled to 0..k-1 in order."""
        pts = sorted(set(int(p) for p in points))
        index = {p: k for k, p in enumerate(pts)}
        for x in pts:
            for y in pts:
                if self.table[x][y] not in index:
                    raise ValueError(f"{x} > {y} leaves the point set")
        return Quandle(tuple(tuple(index[self.table[x][y]] for y in pts) for x in pts))

    def is_automorphism(self, sigma: Permutation) -> bool:
        if sigma.degree != self.order:
            return False
        t = self.table
        return all(
            sigma(t[x][y]) == t[sigma(x)][sigma(y)]
            for x in range(self.order)
            for y in range(self.order)
        )

    def automorphism_group(self) -> PermGroup:
        """All relabelings fixing the table, found by exhaustive vectorized scan."""
        if "aut" not in self._cache:
            flat, perms = _relabelings_flat(self.table)
            target = np.array(self.table, dtype=np.int8).reshape(-1)
            hits = np.flatnonzero((flat == target).all(axis=1))
            auts = [Permutation(tuple(int(v) for v in perms[h])) for h in hits]
            group = PermGroup.from_elements(auts, self.order)
            assert self.inner_group().is_subgroup_of(group)
            self._cache["aut"] = group
        return self._cache["aut"]

    def canonical_form(self) -> "Quandle":
        """Least table among all relabelings; equal iff isomorphic."""
        if "canon" not in self._cache:
            self._cache["canon"] = Quandle(_canonical_table(self.table))
        return self._cache["canon"]

    def is_isomorphic(self, other: "Quandle") -> bool:
        if self.order != other.order:
            return False
        return self.canonical_form() == other.canonical_form()

    def find_isomorphism(self, other: "Quandle") -> Permutation | None:
        """Lexicographically least sigma with other == self.relabel(sigma), or None.

        Backtracking over point images, pruned by matching each point's
        invariants (cycle type of its symmetry, orbit size).
        """
        if self.order != other.order:
            return None
        n = self.order

        def signature(q: "Quandle", x: int) -> tuple:
            orbit_sizes = {p: len(orb) for orb in q.orbits() for p in orb}
            return (q.symmetry(x).cycle_type(), orbit_sizes[x], q.table[x][x] == x)

        sig_self = [signature(self, x) for x in range(n)]
        sig_other = [signature(other, x) for x in range(n)]
        if sorted(sig_self) != sorted(sig_other):
            return None
        assignment: list[int] = []
        used = [False] * n

        def consistent(x: int, image: int) -> bool:
            # Check every constraint whose points are all assigned; the rest
            # are deferred to the leaf verification.
            for y in range(x + 1):
                img_y = image if y == x else assignment[y]
                t = self.table[x][y]
                if t <= x and other.table[image][img_y] != (image if t == x else assignment[t]):
                    return False
                t = self.table[y][x]
                if t <= x and other.table[img_y][image] != (image if t == x else assignment[t]):
                    return False
            return True

        def extend(x: int) -> Permutation | None:
            if x == n:
                sigma = Permutation(tuple(assignment))
                return sigma if self.relabel(sigma) == other else None
            for image in range(n):
                if used[image] or sig_self[x] != sig_other[image]:
                    continue
                if not consistent(x, image):
                    continue
                assignment.append(image)
                used[image] = True
                found = extend(x + 1)
                if found is not None:
                    return found
                assignment.pop()
                used[image] = False
            return None

        return extend(0)


# ---------------------------------------------------------------------------
# Vectorized relabeling kernel, shared by canonical forms and automorphisms.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _relabel_basis(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(perms, inverses) for all of S_n as int8 arrays, lexicographic order."""
    if n > HARD_MAX_ORDER:
        raise ValueError(f"order {n} exceeds the hard bound {HARD_MAX_ORDER}")
    size = math.factorial(n)
    flat = itertools.chain.from_iterable(itertools.permutations(range(n)))
    perms = np.fromiter(flat, dtype=np.int8, count=size * n).reshape(size, n)
    return perms, np.argsort(perms, axis=1).astype(np.int8)


def _relabelings_flat(table: tuple[tuple[int, ...], ...]) -> tuple[np.ndarray, np.ndarray]:
    """All n! relabeled tables, flattened to rows of length n*n.

    Row p holds the table of relabel(perms[p]) in row-major order.
    """
    n = len(table)
    perms, invs = _relabel_basis(n)
    t = np.array(table, dtype=np.int8)
    mid = t[invs[:, :, None], invs[:, None, :]]
    relabeled = perms[np.arange(len(perms))[:, None, None], mid]
    return relabeled.reshape(len(perms), n * n), perms


def _canonical_table(table: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    flat, _ = _relabelings_flat(table)
    n = len(table)
    live = np.arange(flat.shape[0])
    for col in range(n * n):
        values = flat[live, col]
        live = live[values == values.min()]
        if live.size == 1:
            break
    best = flat[live[0]].reshape(n, n)
    return tuple(tuple(int(v) for v in row) for row in best)


def trivial_quandle(n: int) -> Quandle:
    """Order n with x > y = x for all x, y."""
    return Quandle(tuple(tuple(x for _ in range(n)) for x in range(n)))


def dihedral_quandle(n: int) -> Quandle:
    """Reflections of a regular n-gon: x > y = (2y - x) mod n."""
    if n < 1:
        raise ValueError("order must be at least 1")
    return Quandle(tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n)))
