import itertools

import pytest

from abalone_solver.canonical import (
    burnside_count,
    canonicalize,
    class_representatives,
    enumerate_classes,
    is_self_negative,
    match_pattern,
    negate,
    options_up_to_isomorphism,
    parse_pattern,
    placements,
    transform,
)
from abalone_solver.geometry import BoardShape, build_board, symmetry_group
from abalone_solver.rules import Color, Constellation, parse_constellation


def test_negate_is_involution(board223):
    for contents in itertools.islice(placements(board223, 3, 3), 0, 500, 7):
        c = Constellation(board223, contents)
        assert negate(negate(c)) == c


def test_negate_swaps_lost_counts(board223, fixtures):
    c = Constellation(board223, fixtures.board("C0").contents, black_lost=1)
    assert negate(c).gray_lost == 1
    assert negate(c).black_lost == 0


def test_self_negative_split(fixtures):
    for i in range(5):
        assert is_self_negative(fixtures.board(f"B{i}"))
    for i in range(5, 14):
        assert not is_self_negative(fixtures.board(f"B{i}"))


def test_canonicalize_constant_on_orbits(board223, fixtures):
    c1 = fixtures.board("C1")
    forms = {canonicalize(transform(c1, s)) for s in symmetry_group(board223)}
    assert len(forms) == 1
    images = {transform(c1, s).cells_string() for s in symmetry_group(board223)}
    assert len(images) == 4  # C1 is fixed by no symmetry but the identity


def test_canonicalize_idempotent(board222):
    for contents in placements(board222, 2, 2):
        c = Constellation(board222, contents)
        form = canonicalize(c)
        again = canonicalize(parse_constellation(f"2,2,2:{form}"))
        assert form == again


def test_canonicalize_with_negation_identifies_negatives(fixtures):
    b11 = fixtures.board("B11")
    assert canonicalize(negate(b11), identify_negation=True) == canonicalize(
        b11, identify_negation=True
    )
    assert canonicalize(negate(b11)) != canonicalize(b11)


def test_option_counts(fixtures, config223):
    c0, c1 = fixtures.board("C0"), fixtures.board("C1")
    assert len(options_up_to_isomorphism(c0, Color.BLACK, config223)) == 4
    assert len(options_up_to_isomorphism(c1, Color.GRAY, config223)) == 7


def test_b0_black_can_reach_b11(fixtures, config222):
    b0 = fixtures.board("B0")
    options = options_up_to_isomorphism(b0, Color.BLACK, config222)
    assert canonicalize(fixtures.board("B11")) in options


@pytest.mark.parametrize(
    "shape,black,gray,neg,expected",
    [
        ((2, 2, 2), 2, 2, False, 23),
        ((2, 2, 3), 3, 3, False, 1080),
        ((2, 2, 3), 3, 3, True, 555),
        ((2, 2, 2), 1, 0, False, 2),
    ],
)
def test_enumeration_counts(shape, black, gray, neg, expected):
    board = build_board(BoardShape(*shape))
    assert enumerate_classes(board, black, gray, neg) == expected
    assert burnside_count(board, black, gray, neg) == expected


def test_burnside_trivial_empty_board():
    for shape in [(2, 2, 2), (2, 3, 3), (1, 2, 2)]:
        board = build_board(BoardShape(*shape))
        assert burnside_count(board, 0, 0) == 1
        assert burnside_count(board, 0, 0, identify_negation=True) == 1


def test_burnside_matches_orbit_enumeration_broadly():
    """Oracle equivalence on every small board and marble mix."""
    shapes = [
        s
        for s in (
            BoardShape(a, b, c)
            for a, b, c in itertools.product(range(1, 4), repeat=3)
        )
        if s.cell_count <= 12
    ]
    for shape in shapes:
        board = build_board(shape)
        for black, gray in [(1, 1), (2, 1), (2, 2), (3, 2)]:
            if black + gray > board.n:
                continue
            for neg in (False, True):
                assert burnside_count(board, black, gray, neg) == enumerate_classes(
                    board, black, gray, neg
                ), (shape, black, gray, neg)


def test_representatives_are_canonical_fixed_points(board222):
    reps = list(class_representatives(board222, 2, 2))
    assert len(reps) == 23
    for rep in reps:
        assert canonicalize(rep) == rep.cells_string()


def test_negate_commutes_with_transform_up_to_isomorphism(board223, fixtures):
    c = fixtures.board("C7")
    for s in symmetry_group(board223):
        a = negate(transform(c, s))
        b = transform(negate(c), s)
        assert canonicalize(a) == canonicalize(b)


def test_neutral_pattern_matches(fixtures):
    neutral = fixtures.patterns["NEUTRAL"]
    assert match_pattern(parse_constellation("2,2,3:GGB.BB...."), neutral)
    assert not match_pattern(fixtures.board("C0"), neutral)
    # The reflected image (gray on h,i; black j,e,f) matches via symmetry.
    mirrored = parse_constellation("2,2,3:....BB.GGB")
    assert match_pattern(mirrored, neutral)


def test_triangle_pattern_matches(fixtures):
    triangle = fixtures.patterns["TRIANGLE"]
    assert match_pattern(parse_constellation("2,2,3:.B..BB...."), triangle)
    # Black on i,e,f is the same triangle through the mirror symmetry.
    assert match_pattern(parse_constellation("2,2,3:....BB..B."), triangle)
    assert not match_pattern(fixtures.board("C0"), triangle)


def test_match_pattern_is_symmetry_invariant(board223, fixtures):
    neutral = fixtures.patterns["NEUTRAL"]
    group = symmetry_group(board223)
    for contents in itertools.islice(placements(board223, 3, 2), 0, 2000, 17):
        c = Constellation(board223, contents)
        results = {match_pattern(transform(c, s), neutral) for s in group}
        assert len(results) == 1


def test_pattern_parse_roundtrip(fixtures):
    p = fixtures.patterns["NEUTRAL"]
    assert parse_pattern(p.notation()) == p
    with pytest.raises(ValueError):
        parse_pattern("2,2,3:GGB?BB???")  # wrong length
