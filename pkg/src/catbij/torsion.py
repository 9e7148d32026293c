"""Ball structures, Hom tests, torsion classes and their tree bijection.

The ambient-n triangle carries one ball per interval [a, b] with
1 <= a <= b <= n - 1; the simple balls [a, a] form the bottom row and
[1, n-1] is the apex.  Hom([a,b], [c,d]) is nonzero exactly when
a <= c <= b <= d, the interval form of the rectangle-in-zig-zag test; the
tests calibrate it against the five worked Hom examples.

For a tree, the balls sitting on descending edges form the torsion class and
the balls on ascending edges the torsion-free class: a left child spanning
leaves i..j contributes torsion balls [i+1, j] .. [j, j], a right child
spanning i..j contributes free balls [i, i] .. [i, j-1].  Balls over neither
edge kind belong to neither class.

Seed sweeps run over every subset of the triangle (2^15 subsets at n = 6), so
the generation and closure cores work on bitmasks with per-ambient cached
tables; the public functions convert at the boundary.
"""

from dataclasses import dataclass
from functools import lru_cache

from .bookshelf import tree_from_profile
from .core import (
    LEAF,
    BinaryTree,
    GappedYoungDiagram,
    Interval,
    InvariantError,
    Node,
    TorsionPair,
    leaf_spans,
    size,
)


def all_balls(n: int) -> frozenset:
    """Every ball of the ambient-n triangle; (n-1)n/2 of them."""
    if n < 0:
        raise InvariantError("ambient must be >= 0")
    return frozenset(Interval(a, b) for a in range(1, n) for b in range(a, n))


def hom_nonzero(x: Interval, y: Interval, n: int) -> bool:
    x.check_ambient(n)
    y.check_ambient(n)
    return x.a <= y.a <= x.b <= y.b


def perp_right(objs, n: int) -> frozenset:
    """Balls receiving no nonzero Hom from any member of objs."""
    objs = list(objs)
    return frozenset(
        y for y in all_balls(n) if not any(hom_nonzero(x, y, n) for x in objs)
    )


def perp_left(objs, n: int) -> frozenset:
    """Balls sending no nonzero Hom to any member of objs."""
    objs = list(objs)
    return frozenset(
        x for x in all_balls(n) if not any(hom_nonzero(x, y, n) for y in objs)
    )


# ---------------------------------------------------------------------------
# Bitmask engine
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _engine(n: int):
    balls = tuple(sorted(all_balls(n)))
    index = {x: i for i, x in enumerate(balls)}
    m = len(balls)
    full = (1 << m) - 1
    hom_from = [0] * m
    hom_to = [0] * m
    for i, x in enumerate(balls):
        for j, y in enumerate(balls):
            if x.a <= y.a <= x.b <= y.b:
                hom_from[i] |= 1 << j
                hom_to[j] |= 1 << i
    # quotient closure: everything reachable by repeated lower-right steps
    quot = [0] * m
    for i, x in enumerate(balls):
        for a in range(x.a, x.b + 1):
            quot[i] |= 1 << index[Interval(a, x.b)]
    # extension table: (i, j, top, bottom) with bottom == -1 for the virtual
    # ball one line below the bottom row
    ext = []
    for i, x in enumerate(balls):
        for j, y in enumerate(balls):
            if x.a < y.a and x.b < y.b and y.a <= x.b + 1:
                top = index[Interval(x.a, y.b)]
                bottom = index[Interval(y.a, x.b)] if y.a <= x.b else -1
                ext.append((1 << i | 1 << j, 1 << top, bottom))
    return balls, index, full, hom_from, hom_to, quot, tuple(ext)


def _to_mask(objs, n, index):
    mask = 0
    for x in objs:
        x.check_ambient(n)
        mask |= 1 << index[x]
    return mask


def _to_set(mask, balls):
    return frozenset(x for i, x in enumerate(balls) if mask >> i & 1)


def _generate_mask(seed_mask, n):
    _, _, full, hom_from, hom_to, _, _ = _engine(n)
    hit = 0
    rest = seed_mask
    while rest:
        low = rest & -rest
        hit |= hom_from[low.bit_length() - 1]
        rest ^= low
    free = full & ~hit
    hit = 0
    rest = free
    while rest:
        low = rest & -rest
        hit |= hom_to[low.bit_length() - 1]
        rest ^= low
    return full & ~hit, free


def torsion_generate(seed, n: int) -> TorsionPair:
    """Smallest torsion pair whose torsion class contains the seed."""
    balls, index, *_ = _engine(n)
    tors, free = _generate_mask(_to_mask(seed, n, index), n)
    return TorsionPair(_to_set(tors, balls), _to_set(free, balls), n)


def is_torsion_class(objs, n: int) -> bool:
    balls, index, *_ = _engine(n)
    mask = _to_mask(objs, n, index)
    return _generate_mask(mask, n)[0] == mask


def _complete_mask(seed_mask, n):
    _, _, _, _, _, quot, ext = _engine(n)
    mask = seed_mask
    while True:
        grown = mask
        rest = mask
        while rest:
            low = rest & -rest
            grown |= quot[low.bit_length() - 1]
            rest ^= low
        for pair, top, bottom in ext:
            if grown & pair == pair and not grown & top:
                if bottom < 0 or grown >> bottom & 1:
                    grown |= top
        if grown == mask:
            return mask
        mask = grown


def complete_torsion_hu(seed, n: int) -> frozenset:
    """Close a seed under lower-right propagation and rectangle extensions.

    Lower-right of [a, b] is [a+1, b].  Two members [a, b] and [c, d] with
    a < c and b < d span a rectangle whose bottom corner [c, b] must already
    be a member, or be the virtual ball one line below the bottom row
    (c == b + 1); rectangles dipping two or more lines below are rejected.
    A valid rectangle contributes its top corner [a, d].
    """
    balls, index, *_ = _engine(n)
    return _to_set(_complete_mask(_to_mask(seed, n, index), n), balls)


# ---------------------------------------------------------------------------
# Trees <-> torsion classes
# ---------------------------------------------------------------------------

def tree_to_torsion(t: BinaryTree) -> TorsionPair:
    n = size(t)
    if n < 1:
        raise InvariantError("torsion pairs need a tree of size >= 1")
    tors, free = set(), set()
    for (i, j, kind) in leaf_spans(t):
        if kind == "left":
            tors.update(Interval(a, j) for a in range(i + 1, j + 1))
        elif kind == "right":
            free.update(Interval(i, b) for b in range(i, j))
    return TorsionPair(frozenset(tors), frozenset(free), n)


def _bmin_profile(objs):
    prof = {}
    for x in objs:
        prof[x.a] = min(prof.get(x.a, x.b), x.b)
    return prof


def torsion_to_tree(objs, n: int) -> BinaryTree:
    """The unique size-n tree whose descending edges carry exactly objs.

    Descending edges go under every member ball, then the leftover leaves are
    linked with ascending edges.  Each distinct right endpoint b yields one
    left-child span (min a - 1, b); everything else is forced.
    """
    objs = frozenset(objs)
    if not is_torsion_class(objs, n):
        raise InvariantError("input set is not a torsion class")
    covers = {}
    for x in objs:
        covers[x.b] = min(covers.get(x.b, x.a), x.a)
    spans = {(a - 1, b) for b, a in covers.items()}

    def build(i, j):
        if i == j:
            return LEAF
        ends = [e for (s, e) in spans if s == i and e < j]
        m = max(ends) if ends else i
        left = build(i, m) if m > i else LEAF
        return Node(left, build(m + 1, j))

    return build(0, n)


def enumerate_torsion(n: int) -> list:
    """All torsion pairs of the ambient-n triangle, in tree-canonical order."""
    from .core import enumerate_trees

    if n == 0:
        return [TorsionPair(frozenset(), frozenset(), 0)]
    return [tree_to_torsion(t) for t in enumerate_trees(n)]


def torsion_to_gapped_young(objs, n: int) -> GappedYoungDiagram:
    """Boxes on the lowest member of each ascending column and every ball
    above it; ball [a, b] occupies the tilted cell (n - b, a - 1)."""
    objs = frozenset(objs)
    if not is_torsion_class(objs, n):
        raise InvariantError("input set is not a torsion class")
    cells = set()
    for a, bmin in _bmin_profile(objs).items():
        cells.update((n - b, a - 1) for b in range(bmin, n))
    return GappedYoungDiagram(frozenset(cells), n)


# ---------------------------------------------------------------------------
# Recursive rectangle decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RectangleSplit:
    """One step of the recursive rectangle decomposition.

    skipped counts leading ball columns with no member.  The rectangle spans
    columns skipped+1 .. skipped+width, reaching from the simple ball at its
    bottom corner up to the apex column.  left keeps its original labels;
    right is relabeled to its own smaller triangle.
    """

    skipped: int
    width: int
    rectangle: frozenset
    left: frozenset
    right: frozenset


def decompose_rectangle(objs, n: int) -> RectangleSplit:
    """Split a torsion class around the largest apex rectangle whose bottom
    corner is a member simple ball."""
    objs = frozenset(objs)
    if not is_torsion_class(objs, n):
        raise InvariantError("input set is not a torsion class")
    if not objs:
        return RectangleSplit(0, 0, frozenset(), frozenset(), frozenset())
    prof = _bmin_profile(objs)
    s = 0
    while (s + 1) not in prof:
        s += 1
    best = None
    for k in range(1, n - s):
        if Interval(s + k, s + k) not in objs:
            continue
        if any(prof.get(s + a, n) > s + k for a in range(1, k + 1)):
            continue
        boxes = k * (n - s - k)
        if best is None or boxes > best[1]:
            best = (k, boxes)
    k = best[0]
    rect = frozenset(
        Interval(a, b) for a in range(s + 1, s + k + 1) for b in range(s + k, n)
    )
    left = frozenset(x for x in objs if x.b <= s + k - 1)
    right = frozenset(
        Interval(x.a - s - k, x.b - s - k) for x in objs if x.a >= s + k + 1
    )
    return RectangleSplit(s, k, rect, left, right)


def recompose_rectangle(split: RectangleSplit, n: int) -> frozenset:
    """Inverse of decompose_rectangle, via the column-minimum profile."""
    if split.width == 0:
        return frozenset()
    s, k = split.skipped, split.width
    prof = {}
    for a in range(1, k + 1):
        xs = [x.b for x in split.left if x.a == s + a]
        prof[s + a] = min(xs) if xs else s + k
    for a, bmin in _bmin_profile(split.right).items():
        prof[a + s + k] = bmin + s + k
    heights = [n - prof[c + 1] if (c + 1) in prof else 0 for c in range(n)]
    return tree_to_torsion(tree_from_profile(heights)).torsion
