"""Counting marble placements up to board symmetry.

Two independent counters must agree: explicit orbit enumeration (stream
every placement, keep canonical fixed points) and Burnside's lemma over
the symmetry group's cycle structure.  Negation identification also
folds each position onto its color-swapped mirror.
"""

from abalone_solver import BoardShape, build_board, burnside_count, enumerate_classes

rows = [
    ((2, 2, 2), 2, 2, False),
    ((2, 2, 2), 2, 2, True),
    ((2, 2, 3), 3, 3, False),
    ((2, 2, 3), 3, 3, True),
    ((2, 3, 3), 5, 5, False),
]

print(f"{'board':>8} {'marbles':>8} {'negation':>9} {'orbits':>8} {'burnside':>9}")
for sides, black, gray, neg in rows:
    board = build_board(BoardShape(*sides))
    b = burnside_count(board, black, gray, neg)
    if board.n <= 10:  # explicit enumeration is exponential; keep it small
        o = enumerate_classes(board, black, gray, neg)
        assert o == b
        orbit_text = str(o)
    else:
        orbit_text = "-"
    print(
        f"{str(board.shape):>8} {f'{black}+{gray}':>8} {str(neg):>9} "
        f"{orbit_text:>8} {b:>9}"
    )

print()
print("The 10-cell game has 1080 nonisomorphic full-marble boards, or 555")
print("once each board is identified with its color-swapped negative.")
