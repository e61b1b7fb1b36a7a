"""Diagram parsing, vertex classification and the two statistics."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossnest.diagrams import (
    Arc,
    ColouredPermutation,
    ColouredSetPartition,
    JointHistogram,
    Permutation,
    VertexKind,
    arc_end_vertices,
    arc_start_vertices,
    arcs_of,
    closers,
    cr,
    cr_ne,
    enhanced_arcs,
    is_ncn,
    max_crossing,
    max_crossing_exhaustive,
    max_nesting,
    max_nesting_exhaustive,
    ne,
    openers,
    parse_diagram,
    vertex_kind,
)


def test_permutation_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])
    with pytest.raises(ValueError):
        Permutation([0, 1])
    with pytest.raises(ValueError):
        Permutation([2, 3])


def test_permutation_round_trip():
    p = Permutation.from_text("4 5 3 6 2 1")
    assert p.to_text() == "4 5 3 6 2 1"
    assert p.image(1) == 4
    assert p.preimage(4) == 1


def test_coloured_permutation_defaults_to_one_colour():
    cp = ColouredPermutation([2, 1])
    assert cp.colours == (1, 1)
    assert cp.num_colours == 1


def test_coloured_permutation_text_round_trip():
    text = "4 5 3 6 2 1 / 1 2 1 2 2 2"
    cp = ColouredPermutation.from_text(text)
    assert cp.to_text() == text
    assert cp.num_colours == 2


def test_colour_word_length_must_match():
    with pytest.raises(ValueError):
        ColouredPermutation([2, 1], [1])


def test_set_partition_blocks_canonicalised():
    sp = ColouredSetPartition([[4, 5], [2], [6, 3, 1]])
    assert sp.to_text() == "{1,3,6},{2},{4,5} / 1 1 1"
    assert len(sp) == 6


def test_set_partition_must_cover_ground_set():
    with pytest.raises(ValueError):
        ColouredSetPartition([[1, 2], [4]])
    with pytest.raises(ValueError):
        ColouredSetPartition([[1, 2], [2, 3]])


def test_parse_diagram_dispatches_on_brace():
    assert isinstance(parse_diagram("{1,2},{3}"), ColouredSetPartition)
    assert isinstance(parse_diagram("2 1 3"), ColouredPermutation)


# --- vertex kinds -----------------------------------------------------------

KINDS_453621 = [
    VertexKind.OPENER,
    VertexKind.OPENER,
    VertexKind.FIXED_POINT,
    VertexKind.UPPER_TRANSITORY,
    VertexKind.CLOSER,
    VertexKind.CLOSER,
]


def test_vertex_kinds_of_worked_permutation():
    p = Permutation([4, 5, 3, 6, 2, 1])
    assert [vertex_kind(p, i) for i in range(1, 7)] == KINDS_453621
    assert openers(p) == frozenset({1, 2})
    assert closers(p) == frozenset({5, 6})


def test_lower_transitory_kind():
    # 3 1 2: vertex 2 is entered from above (1 <- sigma) and leaves below
    p = Permutation([3, 1, 2])
    assert vertex_kind(p, 2) == VertexKind.LOWER_TRANSITORY


def test_arcs_of_worked_permutation():
    upper, lower = arcs_of(ColouredPermutation([4, 5, 3, 6, 2, 1], [1, 2, 1, 2, 2, 2]))
    assert {(a.pair, a.colour) for a in upper} == {
        ((1, 4), 1),
        ((2, 5), 2),
        ((3, 3), 1),
        ((4, 6), 2),
    }
    assert {(a.pair, a.colour) for a in lower} == {((2, 5), 2), ((1, 6), 2)}


def test_arc_validation():
    with pytest.raises(ValueError):
        Arc(3, 2, "upper")
    with pytest.raises(ValueError):
        Arc(2, 2, "lower")
    with pytest.raises(ValueError):
        Arc(1, 2, "sideways")


def test_enhanced_arcs_add_loops_at_singletons():
    sp = ColouredSetPartition([[1, 3], [2]])
    pairs = sorted(a.pair for a in enhanced_arcs(sp))
    assert pairs == [(1, 3), (2, 2)]


def test_enhanced_arcs_refuse_coloured_singletons():
    sp = ColouredSetPartition([[1, 3], [2]], [2], num_colours=2)
    with pytest.raises(ValueError):
        enhanced_arcs(sp)


# --- crossing / nesting numbers --------------------------------------------


def test_chain_not_pairwise():
    # pairwise-crossing arcs, but no 3 arcs mutually cross
    pairs = [(1, 3), (2, 5), (4, 7)]
    assert max_crossing(pairs) == 2
    assert max_nesting([(1, 6), (2, 5), (3, 4)]) == 3


def test_enhanced_crossing_shares_endpoint():
    # plain: not a 2-crossing; enhanced: a_2 = b_1 is allowed
    assert max_crossing([(1, 2), (2, 3)]) == 1
    assert max_crossing([(1, 2), (2, 3)], enhanced=True) == 2


def test_enhanced_nesting_with_loop():
    assert max_nesting([(1, 3), (2, 2)], enhanced=True) == 2
    with pytest.raises(ValueError):
        max_nesting([(1, 3), (2, 2)])  # loops need the enhanced reading


def test_empty_diagram_statistics():
    assert cr_ne(ColouredPermutation([])) == (0, 0)
    assert cr_ne(ColouredSetPartition([])) == (0, 0)


def test_identity_has_unit_statistics():
    assert cr_ne(Permutation([1, 2, 3])) == (1, 1)


def test_worked_permutation_statistics():
    cp = ColouredPermutation.from_text("4 5 3 6 2 1 / 1 2 1 2 2 2")
    assert cr(cp) == 2
    assert ne(cp) == 2


def test_statistics_split_by_colour():
    # all arcs one colour: (1,4),(2,5),(4,6) is an enhanced 3-crossing,
    # which the 2-colouring above breaks apart
    cp = ColouredPermutation([4, 5, 3, 6, 2, 1])
    assert cr(cp) == 3
    assert ne(cp) == 2


def test_is_ncn():
    assert not is_ncn(ColouredPermutation([2, 3, 1]), 2, 2)
    assert is_ncn(ColouredPermutation([3, 1, 2]), 2, 2)
    with pytest.raises(ValueError):
        is_ncn(ColouredPermutation([1]), 1, 2)


pair_lists = st.lists(
    st.tuples(st.integers(1, 12), st.integers(1, 12)).map(
        lambda ab: (min(ab), max(ab))
    ),
    max_size=6,
    unique_by=lambda p: p,
)


@given(pair_lists, st.booleans())
@settings(max_examples=200)
def test_crossing_matches_exhaustive(pairs, enhanced):
    loops_ok = enhanced or all(a != b for a, b in pairs)
    if not loops_ok:
        pairs = [p for p in pairs if p[0] != p[1]]
    assert max_crossing(pairs, enhanced) == max_crossing_exhaustive(pairs, enhanced)


@given(pair_lists, st.booleans())
@settings(max_examples=200)
def test_nesting_matches_exhaustive(pairs, enhanced):
    if not enhanced:
        pairs = [p for p in pairs if p[0] != p[1]]
    assert max_nesting(pairs, enhanced) == max_nesting_exhaustive(pairs, enhanced)


@given(
    st.permutations(list(range(1, 6))),
    st.lists(st.integers(1, 3), min_size=5, max_size=5),
    st.permutations([1, 2, 3]),
)
@settings(max_examples=100)
def test_colour_relabelling_preserves_statistics(word, cols, relabel):
    """cr and ne are maxima over colour classes, so renaming colours is
    invisible to them."""
    cp = ColouredPermutation(word, cols, num_colours=3)
    renamed = ColouredPermutation(
        word, [relabel[c - 1] for c in cols], num_colours=3
    )
    assert cr_ne(renamed) == cr_ne(cp)


def _mirror_partition(sp: ColouredSetPartition) -> ColouredSetPartition:
    n = len(sp)
    blocks = [[n + 1 - v for v in block] for block in sp.blocks]
    coloured = sorted(
        ((n + 1 - b, n + 1 - a), arc.colour)
        for arc, (a, b) in ((arc, arc.pair) for arc in sp.arcs())
    )
    return ColouredSetPartition(
        blocks, [c for _, c in coloured], sp.num_colours
    )


@given(st.integers(0, 7), st.data())
@settings(max_examples=100)
def test_mirror_preserves_partition_statistics(n, data):
    """Reflecting a partition diagram left-to-right maps k-crossings to
    k-crossings and k-nestings to k-nestings."""
    rgs = [0]
    for i in range(1, n):
        rgs.append(data.draw(st.integers(0, max(rgs) + 1)))
    blocks: dict[int, list[int]] = {}
    for v, b in enumerate(rgs[:n], start=1):
        blocks.setdefault(b, []).append(v)
    narcs = sum(len(b) - 1 for b in blocks.values())
    cols = [data.draw(st.integers(1, 2)) for _ in range(narcs)]
    sp = ColouredSetPartition(list(blocks.values()), cols, num_colours=2)
    assert cr_ne(_mirror_partition(sp)) == cr_ne(sp)


def test_arc_start_end_sets():
    sp = ColouredSetPartition([[1, 3, 6], [2], [4, 5]])
    assert arc_start_vertices(sp.arcs()) == frozenset({1, 3, 4})
    assert arc_end_vertices(sp.arcs()) == frozenset({3, 5, 6})


def test_joint_histogram_symmetry_helpers():
    h = JointHistogram()
    h.add((1, 2))
    h.add((2, 1))
    h.add((1, 1), 3)
    assert h.total() == 5
    assert h.is_symmetric()
    assert h.rows() == [(1, 1, 3), (1, 2, 1), (2, 1, 1)]
    h.add((3, 1))
    assert not h.is_symmetric()
