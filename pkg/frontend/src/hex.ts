// Hex-board presentation math: scan-order cell layout for an (a,b,c)
// hexagon and pixel coordinates for flat-top hex cells.  Indices match
// the service's board notation (columns left to right, bottom to top).

export type Shape = { a: number; b: number; c: number }

export type Cell = {
  index: number
  col: number
  row: number // doubled: same-column neighbors differ by 2
  label: string
}

export const DIRECTIONS = ['U', 'UR', 'DR', 'D', 'DL', 'UL'] as const
export type Direction = (typeof DIRECTIONS)[number]

const STEPS: Record<Direction, [number, number]> = {
  U: [0, 2],
  UR: [1, 1],
  DR: [1, -1],
  D: [0, -2],
  DL: [-1, -1],
  UL: [-1, 1],
}

export function parseShape(text: string): Shape {
  const parts = text.split(',').map(Number)
  if (parts.length !== 3 || parts.some((v) => !Number.isInteger(v) || v < 1)) {
    throw new Error(`bad shape: ${text}`)
  }
  return { a: parts[0], b: parts[1], c: parts[2] }
}

export function boardCells(shape: Shape): Cell[] {
  const { a, b, c } = shape
  const ncols = a + b - 1
  const cells: Cell[] = []
  for (let i = 0; i < ncols; i++) {
    const bottom = -Math.min(i, a - 1) + Math.max(0, i - (a - 1))
    const top = 2 * (c - 1) + Math.min(i, b - 1) - Math.max(0, i - (b - 1))
    for (let r = bottom; r <= top; r += 2) {
      cells.push({ index: cells.length, col: i, row: r, label: '' })
    }
  }
  for (const cell of cells) {
    cell.label = String.fromCharCode(97 + cell.index)
  }
  return cells
}

export function neighborIndex(
  cells: Cell[],
  index: number,
  direction: Direction,
): number {
  const [dc, dr] = STEPS[direction]
  const col = cells[index].col + dc
  const row = cells[index].row + dr
  const hit = cells.find((c) => c.col === col && c.row === row)
  return hit ? hit.index : -1
}

export function areNeighbors(cells: Cell[], i: number, j: number): boolean {
  return DIRECTIONS.some((d) => neighborIndex(cells, i, d) === j)
}

// Pixel geometry for flat-top hexagons of circumradius `size`.
export function cellCenter(cell: Cell, size: number): { x: number; y: number } {
  // Rows grow upward on the board but SVG y grows downward.
  return {
    x: size * 1.5 * cell.col,
    y: -(Math.sqrt(3) / 2) * size * cell.row,
  }
}

export function hexCorners(cx: number, cy: number, size: number): string {
  const pts: string[] = []
  for (let k = 0; k < 6; k++) {
    const angle = (Math.PI / 180) * (60 * k)
    pts.push(`${(cx + size * Math.cos(angle)).toFixed(2)},${(cy + size * Math.sin(angle)).toFixed(2)}`)
  }
  return pts.join(' ')
}

export function parseBoardNotation(notation: string): {
  shape: Shape
  contents: string
} {
  const sep = notation.indexOf(':')
  if (sep < 0) throw new Error(`bad board notation: ${notation}`)
  const shape = parseShape(notation.slice(0, sep))
  const contents = notation.slice(sep + 1)
  const expected = boardCells(shape).length
  if (contents.length !== expected) {
    throw new Error(`expected ${expected} cells, got ${contents.length}`)
  }
  return { shape, contents }
}
