// SVG rendering of the board: one polygon per cell in scan order,
// marbles as circles, plus selection / destination / threat overlays.

import type { ServedMove } from './api.js'
import { Cell, cellCenter, hexCorners } from './hex.js'

const SVG_NS = 'http://www.w3.org/2000/svg'
const SIZE = 26

export type CellDecor = {
  selected: boolean
  target?: ServedMove
  threatened: boolean
}

export type BoardCallbacks = {
  onCellClick: (index: number) => void
  onTargetHover: (move: ServedMove | null) => void
}

function valueClass(move: ServedMove, human: string): string {
  if (move.value.result === 'draw') return 'target-draw'
  return move.value.result === `${human}-win` ? 'target-win' : 'target-loss'
}

export function renderBoard(
  svg: SVGSVGElement,
  cells: Cell[],
  contents: string,
  decor: (index: number) => CellDecor,
  human: string,
  oracleMode: boolean,
  callbacks: BoardCallbacks,
): void {
  svg.textContent = ''
  const centers = cells.map((c) => cellCenter(c, SIZE))
  const xs = centers.map((p) => p.x)
  const ys = centers.map((p) => p.y)
  const pad = SIZE * 1.4
  const minX = Math.min(...xs) - pad
  const minY = Math.min(...ys) - pad
  svg.setAttribute(
    'viewBox',
    `${minX} ${minY} ${Math.max(...xs) - minX + pad} ${Math.max(...ys) - minY + pad}`,
  )

  cells.forEach((cell, i) => {
    const { x, y } = centers[i]
    const d = decor(i)
    const group = document.createElementNS(SVG_NS, 'g')
    group.setAttribute('data-cell', cell.label)

    const poly = document.createElementNS(SVG_NS, 'polygon')
    poly.setAttribute('points', hexCorners(x, y, SIZE * 0.96))
    poly.setAttribute('class', 'cell')
    if (d.target) {
      poly.classList.add(oracleMode ? valueClass(d.target, human) : 'target-blind')
    }
    group.appendChild(poly)

    const content = contents[i]
    if (content === 'B' || content === 'G') {
      const marble = document.createElementNS(SVG_NS, 'circle')
      marble.setAttribute('cx', String(x))
      marble.setAttribute('cy', String(y))
      marble.setAttribute('r', String(SIZE * 0.62))
      marble.setAttribute('class', content === 'B' ? 'marble-black' : 'marble-gray')
      if (d.selected) marble.classList.add('selected')
      group.appendChild(marble)
    }

    if (d.threatened) {
      const mark = document.createElementNS(SVG_NS, 'text')
      mark.setAttribute('x', String(x))
      mark.setAttribute('y', String(y - SIZE * 0.7))
      mark.setAttribute('class', 'threat')
      mark.textContent = '!'
      group.appendChild(mark)
    }

    const tag = document.createElementNS(SVG_NS, 'text')
    tag.setAttribute('x', String(x))
    tag.setAttribute('y', String(y + SIZE * 0.16))
    tag.setAttribute('class', 'cell-label')
    tag.textContent = cell.label
    group.appendChild(tag)

    group.addEventListener('click', () => callbacks.onCellClick(i))
    group.addEventListener('mouseenter', () =>
      callbacks.onTargetHover(d.target ?? null),
    )
    group.addEventListener('mouseleave', () => callbacks.onTargetHover(null))
    svg.appendChild(group)
  })
}
