"""Command-line interface.

Exit codes separate three failure kinds: 2 for usage errors (bad flags,
bounds exceeded), 3 for input files that do not parse into the expected
shape, and 1 for well-formed inputs whose mathematical answer is negative
(axiom violations, non-isomorphic pairs, census mismatches).  All output is
deterministic: equal inputs produce equal bytes regardless of --jobs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .augment import HomError
from .config import resolve_bound
from .decompose import MeshError, decompose, decomposition_tree, semidisjoint_union
from .enumeration import enumerate_connected
from .oracle import enumerate_all
from .perm import Permutation
from .quandle import Quandle, axiom_violations

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3


def _read_table(path: str) -> list[list[int]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise formats.FormatError(f"cannot read {path}: {exc}") from None
    return formats.parse_quandle_text(text)


def _read_quandle(path: str) -> Quandle:
    """Parse and axiom-check; ValueError (not FormatError) means invalid math."""
    table = _read_table(path)
    return Quandle(table)


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _cmd_validate(args: argparse.Namespace) -> int:
    table = _read_table(args.file)
    violations = axiom_violations(table)
    if not violations:
        _emit(f"valid quandle of order {len(table)}\n")
        return EXIT_OK
    for v in violations:
        _emit(f"violation: {v.describe()}\n")
    return EXIT_NEGATIVE


def _cmd_info(args: argparse.Namespace) -> int:
    q = _read_quandle(args.file)
    orbits = " ".join("{" + ",".join(map(str, orbit)) + "}" for orbit in q.orbits())
    _emit(f"order: {q.order}\n")
    _emit(f"orbits: {orbits}\n")
    _emit(f"connected: {'true' if q.is_connected() else 'false'}\n")
    _emit(f"inner order: {len(q.inner_group())}\n")
    _emit(f"automorphism order: {len(q.automorphism_group())}\n")
    return EXIT_OK


def _cmd_iso(args: argparse.Namespace) -> int:
    a = _read_quandle(args.first)
    b = _read_quandle(args.second)
    witness = a.find_isomorphism(b)
    if witness is None:
        _emit("non-isomorphic\n")
        return EXIT_NEGATIVE
    _emit(formats.canonical_json(formats.perm_to_obj(witness)))
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    q = _read_quandle(args.file)
    if getattr(args, "tree", False):
        obj = formats.tree_to_obj(decomposition_tree(q))
    else:
        obj = formats.decomposition_to_obj(decompose(q))
    _emit(formats.canonical_json(obj))
    return EXIT_OK


def _cmd_tree(args: argparse.Namespace) -> int:
    q = _read_quandle(args.file)
    _emit(formats.canonical_json(formats.tree_to_obj(decomposition_tree(q))))
    return EXIT_OK


def _cmd_compose(args: argparse.Namespace) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise formats.FormatError(f"cannot read {args.file}: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise formats.FormatError(f"bad JSON: {exc}") from None
    mesh = formats.mesh_from_obj(obj)
    q = semidisjoint_union(mesh)
    if isinstance(obj, dict) and obj.get("layout") is not None:
        layout = formats.layout_from_obj(obj["layout"], q.order)
        expected = [
            (bi, li) for bi, block in enumerate(mesh.blocks) for li in range(block.order)
        ]
        if sorted(layout) != expected:
            raise formats.FormatError("layout does not match the mesh block sizes")
        # positions[composed index] = original label carrying that (block, local)
        positions = sorted(range(q.order), key=lambda g: layout[g])
        q = q.relabel(Permutation(tuple(positions)))
    _emit(formats.canonical_json(formats.quandle_to_obj(q)))
    return EXIT_OK


def _entries_for_enumerate(args: argparse.Namespace) -> list[dict]:
    if args.method == "structure":
        entries = enumerate_connected(args.order, use_filters=not args.no_filters,
                                      jobs=args.jobs)
        return [formats.census_entry_to_obj(e) for e in entries]
    census = enumerate_all(args.order, jobs=args.jobs)
    out = []
    for q, flag in zip(census.tables, census.connected_flags):
        if args.connected and not flag:
            continue
        out.append({"quandle": formats.quandle_to_obj(q), "connected": flag})
    return out


def _cmd_enumerate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.method is None:
        args.method = "structure" if args.connected else "brute"
    if args.method == "structure" and not args.connected:
        parser.error("--method structure requires --connected")
    _check_bound(args.order, parser)
    entries = _entries_for_enumerate(args)
    payload = formats.canonical_json(entries)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        target = out_dir / f"order-{args.order}.json"
        target.write_text(payload)
        _emit(f"wrote {target} ({len(entries)} entries)\n")
    else:
        _emit(payload)
    return EXIT_OK


def _cmd_census(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    _check_bound(args.order, parser)
    census = enumerate_all(args.order, jobs=args.jobs)
    connected = census.connected()
    _emit(
        f"order {args.order}: {len(census)} classes, "
        f"{len(connected)} connected (brute force)\n"
    )
    for q in connected:
        _emit("connected class: " + formats.canonical_json(formats.quandle_to_obj(q)))
    if not args.check:
        return EXIT_OK
    entries = enumerate_connected(args.order, jobs=args.jobs)
    _emit(f"order {args.order}: {len(entries)} connected classes (coset construction)\n")
    brute = [q.table for q in connected]
    structural = [e.quandle.table for e in entries]
    if brute == structural:
        _emit("census check: MATCH\n")
        return EXIT_OK
    _emit("census check: MISMATCH\n")
    return EXIT_NEGATIVE


def _check_bound(order: int, parser: argparse.ArgumentParser) -> None:
    try:
        bound = resolve_bound(6)
    except ValueError as exc:
        parser.error(str(exc))
    if not 1 <= order <= bound:
        parser.error(f"--order must be in 1..{bound}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandles",
        description="Finite quandles: validation, decomposition, enumeration.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check the quandle axioms on a table file")
    p.add_argument("file")

    p = sub.add_parser("info", help="order, orbits, connectedness, group sizes")
    p.add_argument("file")

    p = sub.add_parser("iso", help="find an isomorphism between two quandles")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("decompose", help="orbit decomposition as a mesh")
    p.add_argument("file")
    p.add_argument("--tree", action="store_true",
                   help="recurse until every leaf is connected")

    p = sub.add_parser("tree", help="full decomposition tree (same as decompose --tree)")
    p.add_argument("file")

    p = sub.add_parser("compose", help="build the quandle a mesh file describes")
    p.add_argument("file")

    p = sub.add_parser("enumerate", help="enumerate quandles of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--connected", action="store_true",
                   help="restrict to connected quandles")
    p.add_argument("--method", choices=["structure", "brute"],
                   help="structure (default with --connected) or brute force")
    p.add_argument("--no-filters", action="store_true",
                   help="disable the group-theoretic pruning filters")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="directory for order-N.json instead of stdout")

    p = sub.add_parser("census", help="brute-force census, optionally cross-checked")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="compare against the coset-construction enumeration")
    p.add_argument("--jobs", type=int, default=1)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "validate": _cmd_validate,
        "info": _cmd_info,
        "iso": _cmd_iso,
        "decompose": _cmd_decompose,
        "tree": _cmd_tree,
        "compose": _cmd_compose,
    }
    try:
        if args.verb in handlers:
            return handlers[args.verb](args)
        if args.verb == "enumerate":
            return _cmd_enumerate(args, parser)
        return _cmd_census(args, parser)
    except formats.FormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    except (MeshError, HomError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NEGATIVE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
