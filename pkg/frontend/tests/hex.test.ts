import { describe, expect, test } from 'vitest'

import {
  DIRECTIONS,
  boardCells,
  cellCenter,
  neighborIndex,
  parseBoardNotation,
  parseShape,
} from '../src/hex.js'

describe('board layout', () => {
  test('2,2,3 has ten cells in three columns', () => {
    const cells = boardCells(parseShape('2,2,3'))
    expect(cells).toHaveLength(10)
    const heights = [0, 1, 2].map((c) => cells.filter((x) => x.col === c).length)
    expect(heights).toEqual([3, 4, 3])
    expect(cells.map((c) => c.label).join('')).toBe('abcdefghij')
  })

  test('scan order is column-major bottom-up', () => {
    const cells = boardCells(parseShape('3,3,3'))
    expect(cells).toHaveLength(19)
    for (let i = 1; i < cells.length; i++) {
      const prev = cells[i - 1]
      const cur = cells[i]
      expect(
        cur.col > prev.col || (cur.col === prev.col && cur.row > prev.row),
      ).toBe(true)
    }
  })

  test('middle cells e and f have six neighbors each', () => {
    const cells = boardCells(parseShape('2,2,3'))
    for (const label of ['e', 'f']) {
      const i = cells.findIndex((c) => c.label === label)
      const nbrs = DIRECTIONS.filter((d) => neighborIndex(cells, i, d) >= 0)
      expect(nbrs).toHaveLength(6)
    }
  })

  test('neighbor relation is symmetric', () => {
    const cells = boardCells(parseShape('2,3,3'))
    const opposite = { U: 'D', UR: 'DL', DR: 'UL', D: 'U', DL: 'UR', UL: 'DR' } as const
    for (const cell of cells) {
      for (const d of DIRECTIONS) {
        const j = neighborIndex(cells, cell.index, d)
        if (j >= 0) {
          expect(neighborIndex(cells, j, opposite[d])).toBe(cell.index)
        }
      }
    }
  })

  test('cell centers are distinct', () => {
    const cells = boardCells(parseShape('3,3,3'))
    const seen = new Set(
      cells.map((c) => {
        const { x, y } = cellCenter(c, 20)
        return `${x.toFixed(3)}|${y.toFixed(3)}`
      }),
    )
    expect(seen.size).toBe(cells.length)
  })

  test('board notation parses and validates length', () => {
    const { contents } = parseBoardNotation('2,2,3:G.BG..BG.B')
    expect(contents).toBe('G.BG..BG.B')
    expect(() => parseBoardNotation('2,2,3:G.B')).toThrow()
    expect(() => parseBoardNotation('nonsense')).toThrow()
  })
})
