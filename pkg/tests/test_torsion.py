"""Hom calibration, torsion generation and closure, and the tree bijection.

The frozen sets below are worked ball-triangle cases: the labeled n = 6
triangle, a three-step generation example on ten balls, two closure
examples, and a rectangle decomposition example.
"""

import itertools

import pytest

from catbij import (
    AmbientMismatchError,
    Interval,
    InvariantError,
    LEAF,
    Node,
    all_balls,
    catalan,
    complete_torsion_hu,
    decompose_rectangle,
    enumerate_torsion,
    enumerate_trees,
    from_paren,
    hom_nonzero,
    is_torsion_class,
    left_comb,
    perp_left,
    perp_right,
    recompose_rectangle,
    right_comb,
    torsion_generate,
    torsion_to_gapped_young,
    torsion_to_tree,
    tree_to_torsion,
    bookshelf_gapped,
)


def I(a, b):
    return Interval(a, b)


def iset(*pairs):
    return frozenset(I(a, b) for (a, b) in pairs)


# labeled balls of the n = 6 triangle
S1, S2, S3, S4, S5 = I(1, 1), I(2, 2), I(3, 3), I(4, 4), I(5, 5)
X1, X2, X3, X4 = I(1, 2), I(2, 3), I(3, 4), I(4, 5)
Y1, Y2, Y3 = I(1, 3), I(2, 4), I(3, 5)
Z1, Z2 = I(1, 4), I(2, 5)
W = I(1, 5)


def test_all_balls_counts():
    assert all_balls(2) == iset((1, 1))
    assert len(all_balls(6)) == 15
    assert len(all_balls(4)) == 6
    for n in range(1, 9):
        assert len(all_balls(n)) == (n - 1) * n // 2


def test_hom_calibration_five_examples():
    n = 6
    assert hom_nonzero(X1, Z2, n)
    for x in all_balls(n):
        assert hom_nonzero(x, x, n)
    assert not hom_nonzero(X1, Y3, n)
    assert not hom_nonzero(Y2, Y1, n)
    assert not hom_nonzero(X2, W, n)


def test_hom_antisymmetric_on_distinct_balls():
    for n in range(1, 9):
        for x in all_balls(n):
            for y in all_balls(n):
                if x != y:
                    assert not (hom_nonzero(x, y, n) and hom_nonzero(y, x, n))


def test_hom_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        hom_nonzero(I(1, 5), I(1, 1), 4)


def test_labeled_torsion_pair_validates():
    tors = frozenset({S1, S3, S5})
    free = frozenset({S2, X2, Y2, Z2, S4, X4})
    assert perp_right(tors, 6) == free
    assert perp_left(free, 6) == tors
    assert is_torsion_class(tors, 6)
    assert torsion_generate(tors, 6).free == free


def test_torsion_class_extremes():
    for n in range(1, 7):
        assert is_torsion_class(frozenset(), n)
        assert is_torsion_class(all_balls(n), n)


def test_quotient_gap_is_not_a_class():
    assert not is_torsion_class(iset((1, 2)), 4)  # missing its quotient [2,2]


def test_generate_empty_seed():
    pair = torsion_generate(frozenset(), 5)
    assert pair.torsion == frozenset()
    assert pair.free == all_balls(5)


def test_generate_three_step_example():
    # seed: a side ball and two corner simples on the ten-ball triangle
    pair = torsion_generate(iset((2, 4), (1, 1), (4, 4)), 5)
    assert pair.free == iset((2, 3), (2, 2), (3, 3))
    assert pair.torsion == iset((1, 4), (2, 4), (3, 4), (1, 1), (4, 4))


def test_complete_small_example():
    # two seeds on the six-ball triangle close to five balls; the corner
    # simple under nothing stays out
    got = complete_torsion_hu(iset((1, 2), (1, 3)), 4)
    assert got == iset((1, 2), (1, 3), (2, 2), (2, 3), (3, 3))
    assert is_torsion_class(got, 4)


def test_complete_extension_example():
    # the ten-ball example where one extension fires and the rectangle two
    # lines below the bottom is rejected
    got = complete_torsion_hu(iset((1, 2), (2, 4)), 5)
    assert got == iset((1, 2), (2, 2), (2, 4), (3, 4), (4, 4), (1, 4))
    assert I(1, 4) in got  # the extension ball
    # the rejected rectangle would have added nothing new anyway; check the
    # pair [2,2], [4,4] does not force [2,4] by itself
    alone = complete_torsion_hu(iset((2, 2), (4, 4)), 5)
    assert alone == iset((2, 2), (4, 4))


def test_complete_equals_generate_all_seeds():
    for n in range(1, 6):
        balls = sorted(all_balls(n))
        for r in range(len(balls) + 1):
            for seed in itertools.combinations(balls, r):
                assert (
                    complete_torsion_hu(seed, n)
                    == torsion_generate(seed, n).torsion
                )


def test_tree_to_torsion_extremes():
    for n in range(2, 7):
        pair = tree_to_torsion(right_comb(n))
        assert pair.torsion == frozenset()
        assert pair.free == all_balls(n)
        pair = tree_to_torsion(left_comb(n))
        assert pair.torsion == all_balls(n)
        assert pair.free == frozenset()


def test_tree_to_torsion_small():
    pair = tree_to_torsion(from_paren("((..).)"))
    assert pair.torsion == iset((1, 1))
    assert torsion_generate(iset((1, 1)), 2).torsion == pair.torsion


def test_geometric_correspondence_five_leaves():
    # five-leaf case: one torsion ball, three free, two in neither class
    t = Node(Node(LEAF, LEAF), Node(LEAF, Node(LEAF, LEAF)))
    pair = tree_to_torsion(t)
    assert pair.torsion == iset((1, 1))
    assert pair.free == iset((2, 2), (2, 3), (3, 3))
    blanks = all_balls(4) - pair.torsion - pair.free
    assert blanks == iset((1, 2), (1, 3))


def test_trees_give_torsion_pairs():
    for n in range(1, 8):
        for t in enumerate_trees(n):
            pair = tree_to_torsion(t)
            assert perp_right(pair.torsion, n) == pair.free
            assert perp_left(pair.free, n) == pair.torsion


def test_tree_torsion_bijection():
    for n in range(1, 8):
        seen = set()
        for t in enumerate_trees(n):
            g = tree_to_torsion(t).torsion
            assert g not in seen
            seen.add(g)
            assert torsion_to_tree(g, n) == t
        assert len(seen) == catalan(n)


def test_enumerate_torsion_matches_brute_force():
    for n in range(1, 6):
        brute = set()
        balls = sorted(all_balls(n))
        for r in range(len(balls) + 1):
            for sub in itertools.combinations(balls, r):
                if is_torsion_class(frozenset(sub), n):
                    brute.add(frozenset(sub))
        assert {p.torsion for p in enumerate_torsion(n)} == brute
        assert len(brute) == catalan(n)


def test_enumerate_torsion_14_classes_at_n4():
    assert len(enumerate_torsion(4)) == 14


def test_torsion_to_tree_extremes():
    for n in range(1, 7):
        assert torsion_to_tree(frozenset(), n) == right_comb(n)
        assert torsion_to_tree(all_balls(n), n) == left_comb(n)


def test_torsion_to_tree_rejects_non_classes():
    with pytest.raises(InvariantError):
        torsion_to_tree(iset((1, 2)), 4)


def test_gapped_young_small_example():
    # complete six-ball class: boxes on the five member balls
    g = torsion_to_gapped_young(
        iset((1, 2), (1, 3), (2, 2), (2, 3), (3, 3)), 4
    )
    assert g.boxes == frozenset({(2, 0), (1, 0), (2, 1), (1, 1), (1, 2)})


def test_gapped_young_larger_example():
    # the ten-ball worked class covers eight balls with boxes, including the
    # two blanks above the column minima
    g = torsion_to_gapped_young(
        iset((1, 2), (2, 2), (2, 4), (3, 4), (4, 4), (1, 4)), 5
    )
    assert g.cell_count() == 8
    # ball [1,3] carries a box though it is not a member
    assert (5 - 3, 0) in g.boxes


def test_gapped_young_empty():
    assert torsion_to_gapped_young(frozenset(), 5).boxes == frozenset()


def test_gapped_frame_coherence():
    for n in range(1, 8):
        for t in enumerate_trees(n):
            g = tree_to_torsion(t).torsion
            assert torsion_to_gapped_young(g, n) == bookshelf_gapped(t)


def test_decompose_singleton():
    split = decompose_rectangle(iset((1, 1)), 2)
    assert split.rectangle == iset((1, 1))
    assert split.left == frozenset() and split.right == frozenset()


def test_decompose_worked_example():
    g = iset((1, 1), (1, 2), (2, 2), (2, 4), (3, 4), (4, 4), (1, 4))
    split = decompose_rectangle(g, 5)
    assert split.width == 2 and split.skipped == 0
    assert split.rectangle == iset(
        (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4)
    )
    assert split.left == iset((1, 1))
    assert split.right == iset((1, 2), (2, 2))
    # the right part splits again, into two empty base cases
    sub = decompose_rectangle(split.right, 3)
    assert sub.skipped == 0 and sub.width == 2
    assert sub.rectangle == split.right
    assert sub.left == frozenset() and sub.right == frozenset()


def test_decompose_recompose_round_trip():
    for n in range(1, 7):
        for t in enumerate_trees(n):
            g = tree_to_torsion(t).torsion
            split = decompose_rectangle(g, n)
            assert recompose_rectangle(split, n) == g
            # parts are torsion classes of their own triangles
            k = split.skipped + split.width
            assert is_torsion_class(split.left, max(k, 1))
            assert is_torsion_class(split.right, max(n - k, 1))
