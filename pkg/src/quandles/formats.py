"""Reading and writing the JSON interchange objects.

Writers always emit JSON through canonical_json, which fixes key order and
spacing so equal values serialize to equal bytes.  Quandle readers also
accept a plain text grid (first line the order, then the table rows) for
hand-authored fixtures.  Reader errors are FormatError; mathematical
invalidity (a well-formed table that breaks an axiom) is not checked here.
"""

from __future__ import annotations

import json
from typing import Any

from .augment import GammaHom
from .decompose import Decomposition, DecompositionTree, Mesh, validate_mesh
from .enumeration import CensusEntry
from .perm import PermGroup, Permutation, generate_group
from .quandle import Quandle

__all__ = [
    "FormatError",
    "canonical_json",
    "perm_to_obj",
    "perm_from_obj",
    "group_to_obj",
    "group_from_obj",
    "quandle_to_obj",
    "table_from_obj",
    "parse_quandle_text",
    "hom_to_obj",
    "hom_from_obj",
    "mesh_to_obj",
    "mesh_from_obj",
    "decomposition_to_obj",
    "tree_to_obj",
    "census_entry_to_obj",
]


class FormatError(ValueError):
    """Input does not parse into the expected shape."""


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FormatError(message)


def perm_to_obj(p: Permutation) -> list[int]:
    return list(p.images)


def perm_from_obj(obj: Any) -> Permutation:
    _require(isinstance(obj, list) and all(isinstance(v, int) for v in obj),
             "permutation must be a list of ints")
    try:
        return Permutation(tuple(obj))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def group_to_obj(g: PermGroup) -> dict:
    return {"degree": g.degree, "generators": [perm_to_obj(p) for p in g.generators]}


def group_from_obj(obj: Any) -> PermGroup:
    _require(isinstance(obj, dict), "group must be an object")
    _require(isinstance(obj.get("degree"), int), "group needs an integer 'degree'")
    _require(isinstance(obj.get("generators"), list), "group needs a 'generators' list")
    gens = [perm_from_obj(item) for item in obj["generators"]]
    try:
        return generate_group(gens, obj["degree"])
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def quandle_to_obj(q: Quandle) -> dict:
    return {"order": q.order, "table": [list(row) for row in q.table]}


def table_from_obj(obj: Any) -> list[list[int]]:
    """Shape-check {"order": n, "table": [[...]]} into a raw table.

    Axioms are NOT checked; callers decide whether a violation is an error
    or a reportable result.
    """
    _require(isinstance(obj, dict), "quandle must be an object")
    order = obj.get("order")
    table = obj.get("table")
    _require(isinstance(order, int) and order >= 1, "quandle needs an integer 'order' >= 1")
    _require(isinstance(table, list) and len(table) == order,
             "'table' must be a list of 'order' rows")
    rows = []
    for row in table:
        _require(isinstance(row, list) and len(row) == order,
                 "every table row must be a list of 'order' ints")
        _require(all(isinstance(v, int) and not isinstance(v, bool) for v in row),
                 "table entries must be ints")
        rows.append([int(v) for v in row])
    return rows


def parse_quandle_text(text: str) -> list[list[int]]:
    """Raw table from JSON or the plain grid format, shape-checked only."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc}") from None
        return table_from_obj(obj)
    tokens = stripped.split()
    _require(bool(tokens), "empty input")
    _require(tokens[0].lstrip("-").isdigit(), "grid input must start with the order")
    order = int(tokens[0])
    _require(order >= 1, "order must be >= 1")
    _require(len(tokens) == 1 + order * order,
             f"grid input needs {order * order} entries after the order")
    _require(all(t.lstrip("-").isdigit() for t in tokens[1:]), "grid entries must be ints")
    values = [int(t) for t in tokens[1:]]
    return [values[r * order : (r + 1) * order] for r in range(order)]


def hom_to_obj(hom: GammaHom) -> dict:
    return {
        "source_order": hom.source_order,
        "target_order": hom.target_order,
        "assignment": [perm_to_obj(p) for p in hom.assignment],
    }


def hom_from_obj(obj: Any, source: Quandle, target: Quandle) -> GammaHom:
    _require(isinstance(obj, dict), "hom must be an object")
    _require(obj.get("source_order") == source.order,
             f"hom source_order must be {source.order}")
    _require(obj.get("target_order") == target.order,
             f"hom target_order must be {target.order}")
    assignment = obj.get("assignment")
    _require(isinstance(assignment, list) and len(assignment) == source.order,
             "hom needs an 'assignment' list, one permutation per source point")
    perms = [perm_from_obj(item) for item in assignment]
    _require(all(p.degree == target.order for p in perms),
             "assigned permutations must have the target's degree")
    return GammaHom(source, target, tuple(perms))


def mesh_to_obj(mesh: Mesh) -> dict:
    k = len(mesh.blocks)
    return {
        "blocks": [quandle_to_obj(b) for b in mesh.blocks],
        "homs": [
            [None if i == j else hom_to_obj(mesh.homs[i][j]) for j in range(k)]
            for i in range(k)
        ],
    }


def mesh_from_obj(obj: Any) -> Mesh:
    """Parse and fully validate a mesh; diagonal entries may be null."""
    _require(isinstance(obj, dict), "mesh must be an object")
    blocks_obj = obj.get("blocks")
    homs_obj = obj.get("homs")
    _require(isinstance(blocks_obj, list) and blocks_obj, "mesh needs a nonempty 'blocks' list")
    blocks = []
    for item in blocks_obj:
        table = table_from_obj(item)
        try:
            blocks.append(Quandle(table))
        except ValueError as exc:
            raise FormatError(f"mesh block is not a quandle: {exc}") from None
    k = len(blocks)
    _require(isinstance(homs_obj, list) and len(homs_obj) == k
             and all(isinstance(row, list) and len(row) == k for row in homs_obj),
             "mesh needs a 'homs' matrix matching the block count")
    homs: list[list[GammaHom | None]] = []
    for i in range(k):
        row: list[GammaHom | None] = []
        for j in range(k):
            entry = homs_obj[i][j]
            if entry is None:
                _require(i == j, "only diagonal homs may be null")
                row.append(None)
            else:
                row.append(hom_from_obj(entry, blocks[i], blocks[j]))
        homs.append(row)
    return validate_mesh(blocks, homs)


def decomposition_to_obj(dec: Decomposition) -> dict:
    obj = mesh_to_obj(dec.mesh)
    obj["layout"] = [list(pair) for pair in dec.layout]
    return obj


def layout_from_obj(obj: Any, order: int) -> tuple[tuple[int, int], ...]:
    _require(isinstance(obj, list) and len(obj) == order,
             "'layout' must list a (block, local) pair per point")
    pairs = []
    for item in obj:
        _require(isinstance(item, list) and len(item) == 2
                 and all(isinstance(v, int) for v in item),
                 "layout entries must be [block, local] int pairs")
        pairs.append((item[0], item[1]))
    return tuple(pairs)


def tree_to_obj(tree: DecompositionTree) -> dict:
    if tree.is_leaf():
        return {"connected": True, "quandle": quandle_to_obj(tree.quandle)}
    assert tree.decomposition is not None
    return {
        "connected": False,
        "quandle": quandle_to_obj(tree.quandle),
        "mesh": decomposition_to_obj(tree.decomposition),
        "children": [tree_to_obj(child) for child in tree.children],
    }


def census_entry_to_obj(entry: CensusEntry) -> dict:
    return {
        "quandle": quandle_to_obj(entry.quandle),
        "inner_order": entry.inner_order,
        "seed": {
            "group_order": len(entry.seed.group),
            "stabilizer_order": len(entry.seed.stabilizer),
            "z": perm_to_obj(entry.seed.z),
        },
    }
