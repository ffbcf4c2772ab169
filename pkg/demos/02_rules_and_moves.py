"""Move generation: slides, broadside moves and sumito pushes.

A move shifts 1-3 contiguous marbles.  In-line moves can push a strictly
shorter opposing line; pushing the last opposing marble past the edge
removes it from the game.
"""

from abalone_solver import BoardShape, Color, GameConfig, apply_move, legal_moves, parse_constellation
from abalone_solver.display import render

config = GameConfig(BoardShape(2, 2, 3), 1, parse_constellation("2,2,3:G.BG..BG.B"))

print("Two black marbles push a gray one down the middle column:")
position = parse_constellation("2,2,3:....GBB...")
print(render(position))
push = next(m for m in legal_moves(position, Color.BLACK, config) if m.is_sumito)
print(f"\nthe only sumito: {push.describe(position.board)}")
print(render(apply_move(position, push)))

print("\nOne more step and the gray marble falls off:")
position = parse_constellation("2,2,3:...GBB....")
push = next(m for m in legal_moves(position, Color.BLACK, config) if m.ejects)
after = apply_move(position, push)
print(render(after))
print(f"gray marbles lost: {after.gray_lost}")

print("\nA fork: the black triangle threatens both gray marbles at once,")
print("so gray can rescue at most one of them:")
fork = parse_constellation("2,2,3:.B..BB.G.G")
print(render(fork))
for move in legal_moves(fork, Color.BLACK, config):
    if move.ejects:
        print(f"  winning push: {move.describe(fork.board)}")
