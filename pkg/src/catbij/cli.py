"""Command line front end.

Verbs: enumerate, convert, verify, render, chains, lattice.  Enumeration
streams one JSON document per line in canonical order.  Conversion routes
everything through the binary tree hub.  Exit codes: 0 success, 1 usage or
input error, 2 verification failure.

Documented feasibility bounds: n <= 12 for trees, paths, diagrams and
permutations; n <= 8 for torsion; n <= 9 for chain counting.
"""

import argparse
import json
import sys

from . import baseball, dyck, render, serialize, tamari, torsion, verify
from .bookshelf import bookshelf, inverse_bookshelf
from .core import (
    BinaryTree,
    YoungDiagram,
    enumerate_dyck,
    enumerate_perms213,
    enumerate_trees,
    enumerate_young,
    to_paren,
)
from .errors import CatbijError

FAMILIES = ("tree", "dyck", "young", "perm213", "torsion")

_MAX_N = {"tree": 12, "dyck": 12, "young": 12, "perm213": 12, "torsion": 8}


def _die(msg, code=1):
    print(f"error: {msg}", file=sys.stderr)
    return code


def _to_tree(family: str, text: str) -> BinaryTree:
    if family == "tree":
        return serialize.deserialize_tree(text)
    if family == "dyck":
        return dyck.dyck_to_tree(serialize.deserialize_dyck(text))
    if family == "young":
        y = serialize.deserialize_young(text)
        return inverse_bookshelf(y, y.n)
    if family == "perm213":
        return baseball.perm_to_tree(serialize.deserialize_perm(text))
    if family == "torsion":
        tp = serialize.deserialize_torsion(text)
        return torsion.torsion_to_tree(tp.torsion, tp.n)
    raise ValueError(f"unknown family {family!r}")


def _from_tree(family: str, t: BinaryTree, fmt: str) -> str:
    if family == "tree":
        return to_paren(t) if fmt == "paren" else serialize.serialize_tree(t)
    if family == "dyck":
        return serialize.serialize_dyck(dyck.tree_to_dyck(t))
    if family == "young":
        return serialize.serialize_young(bookshelf(t))
    if family == "perm213":
        return serialize.serialize_perm(baseball.tree_to_perm(t))
    if family == "torsion":
        return serialize.serialize_torsion(torsion.tree_to_torsion(t))
    raise ValueError(f"unknown family {family!r}")


def _read_input(args) -> str:
    if args.input is not None:
        return args.input
    return sys.stdin.read()


def cmd_enumerate(args) -> int:
    family = args.family
    if family not in FAMILIES:
        return _die(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    n = args.n
    if n is None:
        return _die("enumerate needs --n")
    if n < 0 or n > _MAX_N[family]:
        return _die(f"n={n} out of bounds for {family} (0..{_MAX_N[family]})")
    # each family streams in its own canonical order
    if family == "tree":
        for t in enumerate_trees(n):
            print(_from_tree("tree", t, args.format))
    elif family == "dyck":
        for w in enumerate_dyck(n):
            print(json.dumps(w))
    elif family == "young":
        for rows in enumerate_young(n):
            print(serialize.serialize_young(YoungDiagram(rows, n)))
    elif family == "perm213":
        for p in enumerate_perms213(n):
            print(serialize.serialize_perm(p))
    else:
        for pair in torsion.enumerate_torsion(n):
            print(serialize.serialize_torsion(pair))
    return 0


def cmd_convert(args) -> int:
    if args.source not in FAMILIES or args.target not in FAMILIES:
        return _die(f"families must come from {', '.join(FAMILIES)}")
    try:
        t = _to_tree(args.source, _read_input(args))
        print(_from_tree(args.target, t, args.format))
    except CatbijError as exc:
        return _die(exc)
    return 0


def cmd_verify(args) -> int:
    if args.suite not in verify.SUITES:
        return _die(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)}")
    report = verify.run_suite(args.suite, args.n_max)
    print(json.dumps(report, indent=2))
    return 0 if report["passed"] else 2


def cmd_render(args) -> int:
    text = None
    if args.family != "lattice":
        text = _read_input(args)
    try:
        if args.family == "lattice":
            if args.n is None:
                return _die("render lattice needs --n")
            p = tamari.build_lattice(args.n)
            out = render.render_lattice_dot(p)
        elif args.family == "young" and args.backend == "ascii":
            out = render.render_young_ascii(serialize.deserialize_young(text))
        elif args.family == "tree" and args.backend == "ascii":
            out = render.render_tree_ascii(serialize.deserialize_tree(text))
        elif args.family == "torsion" and args.backend == "svg":
            tp = serialize.deserialize_torsion(text)
            out = render.render_torsion_svg(tp, tp.n)
        elif args.family == "tree" and args.backend == "svg":
            out = render.render_wire_svg(serialize.deserialize_tree(text))
        else:
            return _die(f"no {args.backend!r} backend for family {args.family!r}")
    except CatbijError as exc:
        return _die(exc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
            if not out.endswith("\n"):
                fh.write("\n")
    else:
        print(out)
    return 0


def cmd_chains(args) -> int:
    if args.n is None or not (1 <= args.n <= 9):
        return _die("chains needs --n in 1..9")
    print(tamari.count_maximal_chains(args.n))
    return 0


def cmd_lattice(args) -> int:
    if args.n is None or not (1 <= args.n <= 8):
        return _die("lattice needs --n in 1..8")
    p = tamari.build_lattice(args.n)
    doc = {
        "n": args.n,
        "nodes": [to_paren(t) for t in p.nodes],
        "covers": sorted([to_paren(l), to_paren(u)] for (l, u) in p.covers),
    }
    print(json.dumps(doc))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="catbij",
        description="Catalan families, their bijections, and the Tamari lattice.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream all objects of one family")
    p.add_argument("family")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("json", "paren"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("convert", help="convert a document between families")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--input", help="document text (default: stdin)")
    p.add_argument("--format", choices=("json", "paren"), default="json")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite")
    p.add_argument("--n-max", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw an object")
    p.add_argument("family", help="tree, young, torsion or lattice")
    p.add_argument("--backend", choices=("ascii", "svg", "dot"), default="ascii")
    p.add_argument("--input", help="document text (default: stdin)")
    p.add_argument("--n", type=int, help="size, for lattice rendering")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("chains", help="count maximal chains of the Tamari lattice")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("lattice", help="emit the Tamari lattice as JSON")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_lattice)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CatbijError as exc:
        return _die(exc)


if __name__ == "__main__":
    sys.exit(main())
