"""The 7-cell game, solved strongly.

Retrograde analysis labels all 420 states, which classifies all 23
nonisomorphic boards.  The daisy start is a draw; the standard-setup
analog is a first-player win, which is why the daisy is the official
start on this board.
"""

from abalone_solver import BoardShape, Color, apply_move, canonicalize, load_fixtures, negate, solve

fixtures = load_fixtures()
config = fixtures.standard_config(BoardShape(2, 2, 2))
db = solve(config)

print(f"{'board':>6} {'o(C)':>5} {'o(-C)':>6}")
for i in range(14):
    c = fixtures.board(f"B{i}")
    print(
        f"{f'B{i}':>6} {db.outcome_class(c).label:>5} "
        f"{db.outcome_class(negate(c)).label:>6}"
    )

census = db.class_census(2, 2)
print("\ncensus over the 23 classes:", {oc.label: n for oc, n in census.items()})
print("stalemate states in the full space:", db.stalemate_count)

b0 = fixtures.board("B0")
print("\nFrom the standard-setup analog B0, every optimal first move")
print("claims the middle column (the winning structure B11):")
for move, value in db.best_moves(b0, Color.BLACK)[:2]:
    succ = apply_move(b0, move)
    is_b11 = canonicalize(succ) == canonicalize(fixtures.board("B11"))
    print(f"  {move.describe(b0.board):10} -> {value}   reaches B11: {is_b11}")

print("\nEvery value satisfies the win/loss/draw fixpoint:")
print(db.verify_fixpoint())
