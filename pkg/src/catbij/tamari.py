"""The Tamari lattice on size-n trees.

Covering moves one step up by a single right rotation, rewriting some
(uv)w into u(vw); the left comb sits at the bottom and the right comb at the
top.  The order is not graded for n >= 3, so maximal chains are counted by
path enumeration over the Hasse diagram, never by rank.
"""

from dataclasses import dataclass

from .core import BinaryTree, InvariantError, Node, enumerate_trees, is_leaf, size


def covers_of(t: BinaryTree) -> list:
    """Trees one right rotation above t, in rotation-site order."""
    out = []
    if is_leaf(t):
        return out
    x, y = t.left, t.right
    if not is_leaf(x):
        out.append(Node(x.left, Node(x.right, y)))
    out.extend(Node(c, y) for c in covers_of(x))
    out.extend(Node(x, c) for c in covers_of(y))
    return out


@dataclass(frozen=True)
class TamariPoset:
    nodes: tuple
    covers: frozenset  # (lower, upper) tree pairs

    @property
    def n(self) -> int:
        return size(self.nodes[0])

    def upper_covers(self, t):
        return [u for (l, u) in self.covers if l == t]

    def bottom(self):
        uppers = {u for (_, u) in self.covers}
        roots = [t for t in self.nodes if t not in uppers]
        if len(roots) != 1:
            raise InvariantError(f"{len(roots)} minimal elements; expected 1")
        return roots[0]

    def top(self):
        lowers = {l for (l, _) in self.covers}
        tops = [t for t in self.nodes if t not in lowers]
        if len(tops) != 1:
            raise InvariantError(f"{len(tops)} maximal elements; expected 1")
        return tops[0]


def build_lattice(n: int) -> TamariPoset:
    if n < 1:
        raise InvariantError("the Tamari lattice needs n >= 1")
    nodes = enumerate_trees(n)
    covers = frozenset((t, u) for t in nodes for u in covers_of(t))
    return TamariPoset(nodes, covers)


def _leq_matrix(p: TamariPoset):
    idx = {t: i for i, t in enumerate(p.nodes)}
    m = len(p.nodes)
    up = [[] for _ in range(m)]
    for (l, u) in p.covers:
        up[idx[l]].append(idx[u])
    leq = [0] * m  # bit j set in leq[i] iff nodes[i] <= nodes[j]
    done = [False] * m

    def fill(i):
        if done[i]:
            return
        mask = 1 << i
        for j in up[i]:
            fill(j)
            mask |= leq[j]
        leq[i] = mask
        done[i] = True

    for i in range(m):
        fill(i)
    return idx, leq


def is_lattice(p: TamariPoset) -> bool:
    """Every pair of nodes has a unique join and a unique meet."""
    idx, leq = _leq_matrix(p)
    m = len(p.nodes)
    geq = [0] * m
    for i in range(m):
        mask = leq[i]
        j = 0
        while mask:
            if mask & 1:
                geq[j] |= 1 << i
            mask >>= 1
            j += 1
    for i in range(m):
        for j in range(i + 1, m):
            if not _unique_bound(leq[i] & leq[j], leq) or not _unique_bound(
                geq[i] & geq[j], geq
            ):
                return False
    return True


def _unique_bound(candidates, order_masks):
    # the set of common bounds must contain one element below/above the rest
    rest = candidates
    while rest:
        low = rest & -rest
        k = low.bit_length() - 1
        if order_masks[k] & candidates == candidates:
            return True
        rest ^= low
    return False


def count_maximal_chains(n: int) -> int:
    """Bottom-to-top paths in the Hasse diagram, memoized exact count."""
    p = build_lattice(n)
    top = p.top()
    up = {}
    for (l, u) in p.covers:
        up.setdefault(l, []).append(u)

    memo = {}

    def paths(t):
        if t == top:
            return 1
        if t not in memo:
            memo[t] = sum(paths(u) for u in up.get(t, ()))
        return memo[t]

    return paths(p.bottom())


def verify_order_reversing(n: int) -> bool:
    """Each cover strictly shrinks the torsion class."""
    from .torsion import tree_to_torsion

    for t in enumerate_trees(n):
        low = tree_to_torsion(t).torsion
        for u in covers_of(t):
            high = tree_to_torsion(u).torsion
            if not high < low:
                return False
    return True
