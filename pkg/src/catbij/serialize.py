"""JSON documents for every object family.

Schemas:
    tree            "(•(••))" paren string, or nested pair arrays with [] for a leaf
    dyck            "UURR..." step string
    young           {"n": int, "rows": [int, ...]}
    gapped          {"n": int, "boxes": [[row, col], ...]}
    interval        [a, b]
    torsion pair    {"n": int, "torsion": [[a, b], ...], "free": [[a, b], ...]}
    permutation     [int, ...]

Malformed documents raise MalformedDocumentError; documents that parse but
break a type invariant raise InvariantError (or a subclass).  serialize and
deserialize are mutually inverse on every valid object.
"""

import json

from .core import (
    LEAF,
    BinaryTree,
    DyckPath,
    GappedYoungDiagram,
    Interval,
    InvariantError,
    Node,
    NotAPermutationError,
    TorsionPair,
    YoungDiagram,
    from_paren,
    is_213_avoiding,
    is_permutation,
    to_paren,
)
from .errors import MalformedDocumentError
from .torsion import perp_left, perp_right


def _load(text):
    try:
        return json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise MalformedDocumentError(f"not valid JSON: {exc}") from exc


# -- trees ------------------------------------------------------------------

def serialize_tree(t: BinaryTree) -> str:
    return json.dumps(to_paren(t), ensure_ascii=False)


def _tree_from_lists(doc):
    if doc == [] or doc is None:
        return LEAF
    if isinstance(doc, list) and len(doc) == 2:
        return Node(_tree_from_lists(doc[0]), _tree_from_lists(doc[1]))
    raise MalformedDocumentError(f"bad tree node {doc!r}; expected [] or [left, right]")


def deserialize_tree(text: str) -> BinaryTree:
    doc = _load(text)
    if isinstance(doc, str):
        return from_paren(doc)
    if isinstance(doc, list) or doc is None:
        return _tree_from_lists(doc)
    raise MalformedDocumentError(f"tree document must be a string or array, got {doc!r}")


# -- Dyck paths -------------------------------------------------------------

def serialize_dyck(p: DyckPath) -> str:
    return json.dumps(p.steps)


def deserialize_dyck(text: str) -> DyckPath:
    doc = _load(text)
    if not isinstance(doc, str):
        raise MalformedDocumentError(f"dyck document must be a string, got {doc!r}")
    return DyckPath(doc)


# -- Young diagrams ---------------------------------------------------------

def serialize_young(y: YoungDiagram) -> str:
    return json.dumps({"n": y.n, "rows": list(y.rows)})


def deserialize_young(text: str) -> YoungDiagram:
    doc = _load(text)
    if (
        not isinstance(doc, dict)
        or not isinstance(doc.get("n"), int)
        or not isinstance(doc.get("rows"), list)
    ):
        raise MalformedDocumentError(f'young document must be {{"n", "rows"}}, got {doc!r}')
    return YoungDiagram(tuple(doc["rows"]), doc["n"])


# -- gapped Young diagrams --------------------------------------------------

def serialize_gapped(g: GappedYoungDiagram) -> str:
    return json.dumps({"n": g.n, "boxes": sorted(list(b) for b in g.boxes)})


def deserialize_gapped(text: str) -> GappedYoungDiagram:
    doc = _load(text)
    if (
        not isinstance(doc, dict)
        or not isinstance(doc.get("n"), int)
        or not isinstance(doc.get("boxes"), list)
    ):
        raise MalformedDocumentError(f'gapped document must be {{"n", "boxes"}}, got {doc!r}')
    boxes = set()
    for cell in doc["boxes"]:
        if not (isinstance(cell, list) and len(cell) == 2):
            raise MalformedDocumentError(f"bad cell {cell!r}; expected [row, col]")
        boxes.add((cell[0], cell[1]))
    return GappedYoungDiagram(frozenset(boxes), doc["n"])


# -- intervals and torsion pairs --------------------------------------------

def serialize_interval(x: Interval) -> str:
    return json.dumps([x.a, x.b])


def _interval_from(doc):
    if not (isinstance(doc, list) and len(doc) == 2 and all(isinstance(v, int) for v in doc)):
        raise MalformedDocumentError(f"bad interval {doc!r}; expected [a, b]")
    return Interval(doc[0], doc[1])


def deserialize_interval(text: str) -> Interval:
    return _interval_from(_load(text))


def serialize_torsion(tp: TorsionPair) -> str:
    return json.dumps(
        {
            "n": tp.n,
            "torsion": sorted([x.a, x.b] for x in tp.torsion),
            "free": sorted([x.a, x.b] for x in tp.free),
        }
    )


def deserialize_torsion(text: str) -> TorsionPair:
    doc = _load(text)
    if (
        not isinstance(doc, dict)
        or not isinstance(doc.get("n"), int)
        or not isinstance(doc.get("torsion"), list)
        or not isinstance(doc.get("free"), list)
    ):
        raise MalformedDocumentError(
            f'torsion document must be {{"n", "torsion", "free"}}, got {doc!r}'
        )
    n = doc["n"]
    tors = frozenset(_interval_from(v) for v in doc["torsion"])
    free = frozenset(_interval_from(v) for v in doc["free"])
    pair = TorsionPair(tors, free, n)
    # both perpendicularity clauses must hold, not just disjointness
    if perp_right(tors, n) != free or perp_left(free, n) != tors:
        raise InvariantError("document is not a torsion pair (perpendicularity fails)")
    return pair


# -- permutations -----------------------------------------------------------

def serialize_perm(p) -> str:
    return json.dumps(list(p))


def deserialize_perm(text: str) -> tuple:
    doc = _load(text)
    if not (isinstance(doc, list) and all(isinstance(v, int) for v in doc)):
        raise MalformedDocumentError(f"permutation document must be [int, ...], got {doc!r}")
    p = tuple(doc)
    if not is_permutation(p):
        raise NotAPermutationError(f"{p!r} is not a permutation of 1..{len(p)}")
    if not is_213_avoiding(p):
        raise InvariantError(f"{p!r} contains a 213 pattern")
    return p
