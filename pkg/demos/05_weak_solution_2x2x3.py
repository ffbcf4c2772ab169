"""The 10-cell game: a draw under perfect play.

The solved database shows the start is a draw for both movers and
recovers the narrow corridor of safe play: Black's only drawing first
move, Gray's two safe replies, and the looping safe-option structure
that keeps the game alive forever.  It also turns up curiosities the
named outcome classes don't cover, like a mutual zugzwang.
"""

from abalone_solver import (
    BoardShape,
    Color,
    apply_move,
    class_representatives,
    load_fixtures,
    match_pattern,
    solve,
)
from abalone_solver.display import render

fixtures = load_fixtures()
config = fixtures.standard_config(BoardShape(2, 2, 3))
db = solve(config)

c0 = fixtures.board("C0")
print("start:", c0.notation())
print(render(c0))
print("value with black to move:", db.value(c0, Color.BLACK))
print("value with gray to move: ", db.value(c0, Color.GRAY))

print("\nBlack's options from the start (only the safe move draws):")
for move, value in db.best_moves(c0, Color.BLACK):
    succ = apply_move(c0, move)
    tag = " <- the safe move" if value.result.value == "draw" else ""
    print(f"  {move.describe(c0.board):10} -> {value}{tag}")

print("\nControl of the two middle cells decides the game outright unless")
print("the neutral counter-threat is on the board:")
neutral = fixtures.patterns["NEUTRAL"]
e, f = c0.board.label_index("e"), c0.board.label_index("f")
wins = threats = 0
for rep in class_representatives(c0.board, 3, 3):
    if rep.at(e) == 1 and rep.at(f) == 1:
        if match_pattern(rep, neutral):
            threats += 1
        else:
            wins += 1
print(f"  middle-control classes: {wins} outright wins, {threats} neutral threats")

print("\nClasses outside the six named outcomes (full census of 1080):")
for rep in class_representatives(c0.board, 3, 3):
    oc = db.outcome_class(rep)
    if oc.label.startswith("X"):
        vb, vg = db.value(rep, Color.BLACK), db.value(rep, Color.GRAY)
        print(f"  {oc.label:10} {rep.notation()}  (B: {vb}; G: {vg})")
print("the X-PrevWin entry is a mutual zugzwang: whoever moves, loses.")
