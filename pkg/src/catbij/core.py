"""Catalan object families: types, validators, enumerators, coordinates.

Every family here is counted by the Catalan numbers.  Full binary trees are
the pivot object; the other families (Dyck paths, staircase Young diagrams,
gapped Young diagrams, torsion pairs on interval balls, 213-avoiding
permutations) are converted through them by the sibling modules.

Trees are drawn root at the top, left child down-left, right child down-right,
with every edge stretched so that all leaves sit on the bottom level.  In that
drawing an internal node whose subtree spans leaves i..j (0-indexed, left to
right) of a size-n tree sits at coordinate (n - j, i), where the first entry
counts steps along the left root axis and the second along the right.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence, Union

from .errors import AmbientMismatchError, InvariantError, NotAPermutationError


# ---------------------------------------------------------------------------
# Binary trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    def __repr__(self):
        return "Leaf"


@dataclass(frozen=True)
class Node:
    left: "BinaryTree"
    right: "BinaryTree"

    def __repr__(self):
        return f"Node({self.left!r}, {self.right!r})"


BinaryTree = Union[Leaf, Node]

LEAF = Leaf()


def is_leaf(t: BinaryTree) -> bool:
    return isinstance(t, Leaf)


def size(t: BinaryTree) -> int:
    """Number of internal nodes; a tree of size n has n + 1 leaves."""
    total = 0
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Node):
            total += 1
            stack.append(u.left)
            stack.append(u.right)
    return total


def leaf_count(t: BinaryTree) -> int:
    return size(t) + 1


def to_paren(t: BinaryTree) -> str:
    """Magma notation: a bullet per leaf, (XY) per internal node."""
    if is_leaf(t):
        return "•"
    return "(" + to_paren(t.left) + to_paren(t.right) + ")"


def from_paren(text: str) -> BinaryTree:
    """Parse magma notation.  Whitespace is ignored; '.' and '*' also mean leaf."""
    toks = [c for c in text if not c.isspace()]
    pos = 0

    def parse() -> BinaryTree:
        nonlocal pos
        if pos >= len(toks):
            raise InvariantError("unexpected end of parenthesization")
        c = toks[pos]
        if c in ("•", ".", "*"):
            pos += 1
            return LEAF
        if c != "(":
            raise InvariantError(f"unexpected character {c!r} in parenthesization")
        pos += 1
        left = parse()
        right = parse()
        if pos >= len(toks) or toks[pos] != ")":
            raise InvariantError("unbalanced parenthesization")
        pos += 1
        return Node(left, right)

    out = parse()
    if pos != len(toks):
        raise InvariantError("trailing characters after parenthesization")
    return out


def left_comb(n: int) -> BinaryTree:
    t: BinaryTree = LEAF
    for _ in range(n):
        t = Node(t, LEAF)
    return t


def right_comb(n: int) -> BinaryTree:
    t: BinaryTree = LEAF
    for _ in range(n):
        t = Node(LEAF, t)
    return t


def leaf_spans(t: BinaryTree):
    """(first leaf, last leaf, kind) for every internal node of t.

    kind is 'root', 'left' or 'right' according to how the node hangs off its
    parent.  Leaves are numbered 0..size(t) left to right.  The spans drive
    shelves, torsion balls and ball classification alike.
    """
    out = []

    def go(node, i, kind):
        if is_leaf(node):
            return i
        m = go(node.left, i, "left")
        j = go(node.right, m + 1, "right")
        out.append((i, j, kind))
        return j

    go(t, 0, "root")
    return out


def node_coordinates(t: BinaryTree) -> dict:
    """Coordinates of the stretched drawing, keyed by node path.

    Paths are strings over {'L','R'} from the root ('' is the root).  The root
    is (0, 0); a descent toward the left child raises the first coordinate, a
    descent to the right raises the second, and leaf edges are stretched so
    that every leaf lands on level n + 1 (level of (x, y) is x + y + 1).
    """
    n = size(t)
    coords = {}

    def go(node, path, i):
        if is_leaf(node):
            coords[path] = TreeCoordinate(n - i, i)
            return i
        m = go(node.left, path + "L", i)
        j = go(node.right, path + "R", m + 1)
        coords[path] = TreeCoordinate(n - j, i)
        return j

    go(t, "", 0)
    return coords


def covered_points(t: BinaryTree):
    """All lattice points the stretched drawing passes through."""
    coords = node_coordinates(t)
    pts = set()
    for path, c in coords.items():
        pts.add((c.x, c.y))
        if path:
            p = coords[path[:-1]]
            if path[-1] == "L":
                pts.update((x, p.y) for x in range(p.x, c.x + 1))
            else:
                pts.update((p.x, y) for y in range(p.y, c.y + 1))
    return pts


@dataclass(frozen=True, order=True)
class TreeCoordinate:
    x: int
    y: int

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise InvariantError(f"negative tree coordinate ({self.x}, {self.y})")

    @property
    def level(self) -> int:
        return self.x + self.y + 1


# ---------------------------------------------------------------------------
# Catalan numbers and enumerators
# ---------------------------------------------------------------------------

def catalan(n: int) -> int:
    """The n-th Catalan number, binom(2n, n) / (n + 1), exact."""
    if n < 0:
        raise InvariantError("catalan is defined for n >= 0")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple:
    """All full binary trees with n internal nodes, canonical order.

    Canonical order: split sizes (i, n-1-i) with i ascending, then the left
    subtree varying slowest.  Subtrees are shared between entries.
    """
    if n < 0:
        raise InvariantError("tree size must be >= 0")
    if n == 0:
        return (LEAF,)
    out = []
    for i in range(n):
        for l in enumerate_trees(i):
            for r in enumerate_trees(n - 1 - i):
                out.append(Node(l, r))
    return tuple(out)


def enumerate_dyck(n: int) -> list:
    """All Dyck words of semilength n, lexicographic with U before R."""
    out = []

    def rec(prefix, ups, downs):
        if ups == 0 and downs == 0:
            out.append(prefix)
            return
        if ups > 0:
            rec(prefix + "U", ups - 1, downs)
        if downs > ups:
            rec(prefix + "R", ups, downs - 1)

    rec("", n, n)
    return out


def enumerate_young(n: int) -> list:
    """All staircase partitions for ambient n, sorted lexicographically."""
    out = [()]

    def rec(prefix, row, maxlen):
        for l in range(1, maxlen + 1):
            if l + row > n:
                continue
            cand = prefix + (l,)
            out.append(cand)
            rec(cand, row + 1, l)

    if n > 0:
        rec((), 1, n - 1)
    return sorted(set(out))


def enumerate_perms213(n: int) -> list:
    """All 213-avoiding permutations of 1..n in lexicographic order.

    Generated recursively from the minimum-split structure (everything after
    the minimum is smaller than everything before it), so no factorial-size
    filtering is involved.
    """
    @lru_cache(maxsize=None)
    def gen(m):
        if m == 0:
            return ((),)
        out = []
        for lx in range(m):          # lx terms follow the minimum
            ly = m - 1 - lx
            for px in gen(lx):
                left = tuple(v + 1 for v in px)
                for py in gen(ly):
                    out.append(tuple(v + lx + 1 for v in py) + (1,) + left)
        return tuple(out)

    return sorted(gen(n))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def is_213_avoiding(p: Sequence[int]) -> bool:
    """True iff no i < j < k has p[j] < p[i] < p[k].

    Quadratic scan over (i, j) descents with a suffix maximum standing in for
    the k; proven equivalent to the cubic definition by exhaustive test for
    n <= 8.
    """
    if not is_permutation(p):
        raise NotAPermutationError(f"{tuple(p)!r} is not a permutation of 1..{len(p)}")
    p = tuple(p)
    m = len(p)
    suffmax = [0] * (m + 1)
    for t in range(m - 1, -1, -1):
        suffmax[t] = max(p[t], suffmax[t + 1])
    for j in range(m):
        tail = suffmax[j + 1]
        for i in range(j):
            if p[j] < p[i] < tail:
                return False
    return True


# ---------------------------------------------------------------------------
# Dyck paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DyckPath:
    """A staircase walk of n up-steps (U) and n right-steps (R), never below
    the diagonal, stored from (0, 0)."""

    steps: str

    def __post_init__(self):
        ups = downs = 0
        for c in self.steps:
            if c == "U":
                ups += 1
            elif c == "R":
                downs += 1
                if downs > ups:
                    raise InvariantError(f"path {self.steps!r} dips below the diagonal")
            else:
                raise InvariantError(f"bad step {c!r}; expected 'U' or 'R'")
        if ups != downs:
            raise InvariantError(f"path {self.steps!r} has {ups} ups but {downs} rights")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2


# ---------------------------------------------------------------------------
# Young diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YoungDiagram:
    """Weakly decreasing rows inside the staircase for ambient n.

    The staircase bound is rows[i] + (i + 1) <= n for every row, so the
    maximal shape is (n-1, n-2, ..., 1).
    """

    rows: tuple
    n: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.n < 0:
            raise InvariantError("ambient must be >= 0")
        prev = None
        for i, r in enumerate(self.rows):
            if not isinstance(r, int) or r <= 0:
                raise InvariantError(f"row lengths must be positive integers, got {r!r}")
            if prev is not None and r > prev:
                raise InvariantError(f"rows {self.rows} are not weakly decreasing")
            if r + i + 1 > self.n:
                raise InvariantError(
                    f"row {i + 1} of length {r} breaks the staircase bound for ambient {self.n}"
                )
            prev = r

    def conjugate(self) -> tuple:
        """Column lengths, longest first."""
        if not self.rows:
            return ()
        return tuple(
            sum(1 for r in self.rows if r > c) for c in range(self.rows[0])
        )

    def cell_count(self) -> int:
        return sum(self.rows)


def staircase_ok(rows: Sequence[int], n: int) -> bool:
    return all(r + i + 1 <= n for i, r in enumerate(rows))


# ---------------------------------------------------------------------------
# Gapped Young diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GappedYoungDiagram:
    """Cells of the tilted diagram before gap elimination.

    Cells live at (row, col) with row >= 1 counted downward from the ceiling
    and col >= 0 rightward; the full triangle satisfies row + col <= n - 1.
    Only those bounds are checked here.  Whether the cells really form a
    bookshelf image (each column one run anchored at the ceiling) is decided
    by push_gaps and the round trips, per the gap rule.
    """

    boxes: frozenset
    n: int

    def __post_init__(self):
        cells = set()
        for r, c in self.boxes:
            if not (isinstance(r, int) and isinstance(c, int)):
                raise InvariantError(f"cell ({r!r}, {c!r}) is not an integer pair")
            if r < 1 or c < 0 or r + c > self.n - 1:
                raise InvariantError(
                    f"cell ({r}, {c}) outside the ambient-{self.n} triangle"
                )
            cells.add((r, c))
        object.__setattr__(self, "boxes", frozenset(cells))

    def column_heights(self) -> list:
        """Cells per column, index 0..n-1."""
        h = [0] * max(self.n, 0)
        for (r, c) in self.boxes:
            h[c] = max(h[c], r)
        return h

    def columns_anchored(self) -> bool:
        """True iff every occupied column is one run starting at row 1."""
        cols = {}
        for (r, c) in self.boxes:
            cols.setdefault(c, set()).add(r)
        return all(rs == set(range(1, max(rs) + 1)) for rs in cols.values())

    def cell_count(self) -> int:
        return len(self.boxes)


# ---------------------------------------------------------------------------
# Intervals and torsion pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Interval:
    """A ball of the triangular structure: the interval [a, b], 1 <= a <= b."""

    a: int
    b: int

    def __post_init__(self):
        if not (1 <= self.a <= self.b):
            raise InvariantError(f"bad interval [{self.a}, {self.b}]")

    def check_ambient(self, n: int):
        if self.b > n - 1:
            raise AmbientMismatchError(f"[{self.a}, {self.b}] outside ambient {n}")


@dataclass(frozen=True)
class TorsionPair:
    """Torsion class and torsion-free class on the ambient-n ball triangle.

    The two sets are disjoint but in general do not partition the triangle:
    balls above neither edge kind of the corresponding tree belong to neither
    class.  Mutual perpendicularity is revalidated on deserialization.
    """

    torsion: frozenset
    free: frozenset
    n: int

    def __post_init__(self):
        object.__setattr__(self, "torsion", frozenset(self.torsion))
        object.__setattr__(self, "free", frozenset(self.free))
        for x in self.torsion | self.free:
            x.check_ambient(self.n)
        if self.torsion & self.free:
            raise InvariantError("torsion and torsion-free classes intersect")
