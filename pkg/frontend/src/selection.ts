// Marble-selection rules and the mapping from a selection to clickable
// destination cells.  Selections only ever grow into contiguous lines of
// at most three friendly marbles, so illegal inputs never reach the
// service; destinations come exclusively from the service's move list.

import type { ServedMove } from './api.js'
import { Cell, DIRECTIONS, Direction, areNeighbors, neighborIndex } from './hex.js'

export function lineAxis(cells: Cell[], selected: number[]): Direction | null {
  if (selected.length < 2) return null
  for (const d of DIRECTIONS) {
    if (neighborIndex(cells, selected[0], d) === selected[1]) return d
  }
  return null
}

function sortedAlong(cells: Cell[], selected: number[]): number[] {
  // Order a contiguous selection tail-to-head along its axis.
  return [...selected].sort((i, j) =>
    cells[i].col === cells[j].col ? cells[i].row - cells[j].row : cells[i].col - cells[j].col,
  )
}

/** The selection after clicking a friendly marble; null when the click
 * must be rejected (it would break the 1-3 contiguous-line rule). */
export function toggleSelection(
  cells: Cell[],
  selected: number[],
  cell: number,
): number[] | null {
  if (selected.includes(cell)) {
    const rest = selected.filter((i) => i !== cell)
    if (rest.length <= 1 || areNeighbors(cells, rest[0], rest[1])) return rest
    return [] // removing the middle of a 3-line clears the selection
  }
  if (selected.length === 0) return [cell]
  if (selected.length >= 3) return null
  const line = sortedAlong(cells, [...selected, cell])
  for (let i = 0; i + 1 < line.length; i++) {
    if (!areNeighbors(cells, line[i], line[i + 1])) return null
  }
  if (line.length === 3) {
    // Contiguity alone allows a bend; all three must share one axis.
    const d = DIRECTIONS.find((dir) => neighborIndex(cells, line[0], dir) === line[1])
    if (!d || neighborIndex(cells, line[1], d) !== line[2]) return null
  }
  return line
}

function sameCells(a: string[], b: number[], cells: Cell[]): boolean {
  if (a.length !== b.length) return false
  const labels = new Set(a)
  return b.every((i) => labels.has(cells[i].label))
}

/** Moves from the served list whose source marbles are exactly the
 * current selection, keyed by the board cell that commits them. */
export function moveTargets(
  cells: Cell[],
  selected: number[],
  served: ServedMove[],
): Map<number, ServedMove> {
  const targets = new Map<number, ServedMove>()
  if (selected.length === 0) return targets
  for (const move of served) {
    if (!sameCells(move.cells, selected, cells)) continue
    const dir = move.direction as Direction
    let target: number
    if (move.kind === 'in-line') {
      // The service orders in-line cells tail to head along the motion.
      const head = cells.findIndex((c) => c.label === move.cells[move.cells.length - 1])
      target = neighborIndex(cells, head, dir)
    } else {
      const first = cells.findIndex((c) => c.label === move.cells[0])
      target = neighborIndex(cells, first, dir)
    }
    if (target >= 0) targets.set(target, move)
  }
  return targets
}

/** Cells of opposing marbles that some served move would eject. */
export function threatenedCells(cells: Cell[], served: ServedMove[]): Set<number> {
  const out = new Set<number>()
  for (const move of served) {
    if (!move.ejects) continue
    const dir = move.direction as Direction
    let cur = cells.findIndex((c) => c.label === move.cells[move.cells.length - 1])
    for (let k = 0; k < move.pushed; k++) cur = neighborIndex(cells, cur, dir)
    if (cur >= 0) out.add(cur)
  }
  return out
}
