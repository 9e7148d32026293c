"""The direct tree <-> Young diagram bijection via shelves.

A shelf is a maximal descending branch of the stretched drawing other than
the ceiling (the rightmost root-to-leaf descent).  Each internal node that is
a left child and spans leaves i..j of a size-n tree owns one shelf: row n - j,
columns i..j, length j - i.  Boxes are stacked above every shelf repeatedly
until they hit the ceiling or a shelf above, so the cells over a single shelf
form a rectangle and each occupied column of the tilted frame is one run
anchored at row 1.  Pushing every row of cells flush left kills the gaps and
leaves an ordinary staircase partition.

The column-height profile (cells per column, in column order) determines the
tree exactly: a profile splits as [left part + sY + 1] ++ [0] ++ [right part]
around the root's gap column.  On partitions that recursion reads as

    rows(Node(X, Y)) = [rows(Y) padded to size(Y) entries, each + size(X)]
                        ++ [size(X)] ++ rows(X)

which is what inverse_bookshelf inverts.  A nonzero split exists exactly when
some row is tight against the staircase (rows[t-1] + t == n), so the search
below is small; it backtracks only on genuinely ambiguous tight rows.
"""

from dataclasses import dataclass

from .core import (
    LEAF,
    BinaryTree,
    GappedYoungDiagram,
    InvariantError,
    Node,
    TreeCoordinate,
    YoungDiagram,
    leaf_spans,
    right_comb,
    size,
    staircase_ok,
)


@dataclass(frozen=True)
class Shelf:
    """A maximal descending branch segment, excluding the ceiling."""

    start: TreeCoordinate
    end: TreeCoordinate

    def __post_init__(self):
        if self.start.x != self.end.x or self.end.y <= self.start.y:
            raise InvariantError(f"degenerate shelf {self.start} .. {self.end}")

    @property
    def row(self) -> int:
        return self.start.x

    @property
    def length(self) -> int:
        return self.end.y - self.start.y


def shelves(t: BinaryTree) -> list:
    """All shelves of t, top to bottom.  At most one shelf per row."""
    n = size(t)
    out = [
        Shelf(TreeCoordinate(n - j, i), TreeCoordinate(n - j, j))
        for (i, j, kind) in leaf_spans(t)
        if kind == "left"
    ]
    return sorted(out, key=lambda s: s.row)


def column_profile(t: BinaryTree) -> list:
    """Stacked cell height over each of the n tilted columns."""
    n = size(t)
    heights = [0] * n
    for s in shelves(t):
        for c in range(s.start.y, s.end.y):
            heights[c] = max(heights[c], s.row)
    return heights


def bookshelf_gapped(t: BinaryTree) -> GappedYoungDiagram:
    n = size(t)
    profile = column_profile(t)
    cells = frozenset(
        (row, c) for c, h in enumerate(profile) for row in range(1, h + 1)
    )
    return GappedYoungDiagram(cells, n)


def push_gaps(g: GappedYoungDiagram) -> YoungDiagram:
    """Left-justify every row of cells.  Errors if the result is not a partition."""
    counts = {}
    for (row, _) in g.boxes:
        counts[row] = counts.get(row, 0) + 1
    rows = []
    for row in range(1, g.n + 1):
        rows.append(counts.get(row, 0))
    while rows and rows[-1] == 0:
        rows.pop()
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)) or 0 in rows:
        raise InvariantError(
            f"pushing yields non-monotone rows {tuple(rows)}; not a bookshelf image"
        )
    return YoungDiagram(tuple(rows), g.n)


def bookshelf(t: BinaryTree) -> YoungDiagram:
    return push_gaps(bookshelf_gapped(t))


def min_tree_size(y: YoungDiagram) -> int:
    """Leaf count of the smallest tree fitting y, by the closed formula.

    k is the multiplicity of the tallest column and equals the last row
    length; the empty diagram degenerates to a single leaf.
    """
    if not y.rows:
        return 1
    lam1 = y.rows[0]
    mult_rows = sum(1 for r in y.rows if r == lam1)
    tallest = len(y.rows)
    mult_cols = y.rows[-1]
    return max(tallest + mult_cols + 1, lam1 + mult_rows + 1)


def tree_from_profile(profile) -> BinaryTree:
    """Rebuild the tree whose column_profile equals the given sequence."""
    profile = list(profile)
    if not profile:
        return LEAF
    if 0 not in profile:
        raise InvariantError(f"profile {profile} has no gap column")
    g = profile.index(0)
    sy = len(profile) - 1 - g
    left_part = [h - (sy + 1) for h in profile[:g]]
    if any(h < 0 for h in left_part):
        raise InvariantError(f"profile {profile} is not a bookshelf image")
    return Node(tree_from_profile(left_part), tree_from_profile(profile[g + 1 :]))


def inverse_bookshelf(y: YoungDiagram, n: int) -> BinaryTree:
    """The unique size-n tree with bookshelf(t) == y.

    Follows the recursive gap-insertion scheme: a tight row (rows[t-1] + t
    == n) marks the column block belonging to the left subtree, otherwise the
    whole diagram belongs to the right subtree of a root with a bare left
    leaf.  Stopping conditions are the empty diagram (right comb) and size 0.
    """
    rows = tuple(y.rows)
    if not staircase_ok(rows, n):
        raise InvariantError(
            f"{rows} violates the staircase bound for ambient {n} (ambient too small)"
        )
    t = _inverse(rows, n)
    if t is None:
        raise InvariantError(f"no size-{n} tree maps to {rows}")
    return t


def _inverse(rows, n):
    if n == 0:
        return LEAF if not rows else None
    if not rows:
        return right_comb(n)
    if staircase_ok(rows, n - 1):
        sub = _inverse(rows, n - 1)
        if sub is not None:
            return Node(LEAF, sub)
    for t in range(1, len(rows) + 1):
        if rows[t - 1] + t != n:
            continue
        sx = rows[t - 1]
        sy = n - 1 - sx
        if t - 1 > sy:
            continue
        ypart = tuple(r - sx for r in rows[: t - 1] if r - sx > 0)
        xpart = rows[t:]
        if not (staircase_ok(ypart, sy) and staircase_ok(xpart, sx)):
            continue
        left = _inverse(xpart, sx)
        if left is None:
            continue
        right = _inverse(ypart, sy)
        if right is None:
            continue
        return Node(left, right)
    return None
