// Page controller: one session at a time, one in-flight request at a time.
// Marbles are picked by clicking them; a move commits by clicking one of
// the highlighted destination cells, which always come from the service's
// own move list.

import { ApiError, OracleClient, ServedMove, SessionState } from './api.js'
import { renderBoard } from './board.js'
import { Cell, boardCells, parseBoardNotation } from './hex.js'
import { moveTargets, threatenedCells, toggleSelection } from './selection.js'

export class App {
  state: SessionState | null = null
  moves: ServedMove[] = []
  selected: number[] = []
  cells: Cell[] = []
  oracleMode = true
  busy = false
  hovered: ServedMove | null = null

  private root: HTMLElement
  private els!: {
    status: HTMLElement
    banner: HTMLElement
    svg: SVGSVGElement
    hover: HTMLElement
    history: HTMLUListElement
    toast: HTMLElement
    newBlack: HTMLButtonElement
    newGray: HTMLButtonElement
    oracle: HTMLInputElement
  }

  constructor(
    root: HTMLElement,
    public client: OracleClient,
  ) {
    this.root = root
    this.buildSkeleton()
  }

  private buildSkeleton(): void {
    this.root.innerHTML = `
      <header>
        <span id="status">loading…</span>
        <label><input type="checkbox" id="oracle" checked> oracle mode</label>
        <button id="new-black">play black</button>
        <button id="new-gray">play gray</button>
      </header>
      <div id="banner" hidden></div>
      <svg id="board"></svg>
      <div id="hover"></div>
      <ul id="history"></ul>
      <div id="toast" hidden></div>
    `
    this.els = {
      status: this.root.querySelector('#status')!,
      banner: this.root.querySelector('#banner')!,
      svg: this.root.querySelector('#board') as unknown as SVGSVGElement,
      hover: this.root.querySelector('#hover')!,
      history: this.root.querySelector('#history')!,
      toast: this.root.querySelector('#toast')!,
      newBlack: this.root.querySelector('#new-black')!,
      newGray: this.root.querySelector('#new-gray')!,
      oracle: this.root.querySelector('#oracle')!,
    }
    this.els.newBlack.addEventListener('click', () => void this.newGame('black'))
    this.els.newGray.addEventListener('click', () => void this.newGame('gray'))
    this.els.oracle.addEventListener('change', () => {
      this.oracleMode = this.els.oracle.checked
      this.render()
    })
  }

  async newGame(color: 'black' | 'gray'): Promise<void> {
    await this.guard(async () => {
      const config = await this.client.config()
      this.state = await this.client.createSession(config.shape, config.k, color)
      this.cells = boardCells(parseBoardNotation(this.state.board).shape)
      this.selected = []
      await this.syncMoves()
    })
    if (this.state && this.state.to_move !== this.state.human) {
      await this.engineTurn()
    }
  }

  private async syncMoves(): Promise<void> {
    if (!this.state) return
    this.moves =
      this.state.status === 'active'
        ? await this.client.getMoves(this.state.session)
        : []
    this.render()
  }

  async engineTurn(): Promise<void> {
    if (!this.state || this.state.status !== 'active') return
    await this.guard(async () => {
      this.state = await this.client.engineMove(this.state!.session)
      this.selected = []
      await this.syncMoves()
    })
  }

  async onCellClick(index: number): Promise<void> {
    if (!this.state || this.busy || this.state.status !== 'active') return
    if (this.state.to_move !== this.state.human) return
    const targets = moveTargets(this.cells, this.selected, this.moves)
    const move = targets.get(index)
    if (move) {
      await this.submitMove(move)
      return
    }
    const contents = parseBoardNotation(this.state.board).contents
    const mine = this.state.human === 'black' ? 'B' : 'G'
    if (contents[index] === mine) {
      const next = toggleSelection(this.cells, this.selected, index)
      if (next === null) {
        this.showToast('pick 1-3 marbles in a straight contiguous line')
        return
      }
      this.selected = next
    } else {
      this.selected = []
    }
    this.render()
  }

  async submitMove(move: ServedMove): Promise<void> {
    await this.guard(async () => {
      this.state = await this.client.postMove(this.state!.session, move.uid)
      this.selected = []
      await this.syncMoves()
    })
    if (this.state && this.state.status === 'active' && this.state.to_move !== this.state.human) {
      await this.engineTurn()
    }
  }

  private async guard(work: () => Promise<void>): Promise<void> {
    if (this.busy) return
    this.busy = true
    try {
      await work()
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        this.showToast(err.message)
        if (this.state) {
          this.state = await this.client.getSession(this.state.session)
          this.selected = []
          await this.syncMoves()
        }
      } else {
        this.showBanner(`service error: ${err instanceof Error ? err.message : err}`)
      }
    } finally {
      this.busy = false
      this.render()
    }
  }

  showToast(message: string): void {
    this.els.toast.textContent = message
    this.els.toast.hidden = false
    setTimeout(() => (this.els.toast.hidden = true), 2500)
  }

  showBanner(message: string): void {
    this.els.banner.textContent = message
    this.els.banner.hidden = false
  }

  render(): void {
    const state = this.state
    if (!state) {
      this.els.status.textContent = 'pick a color to start'
      return
    }
    const { contents } = parseBoardNotation(state.board)
    const showTargets = state.status === 'active' && state.to_move === state.human
    const targets = showTargets
      ? moveTargets(this.cells, this.selected, this.moves)
      : new Map<number, ServedMove>()
    const threats = showTargets
      ? threatenedCells(this.cells, this.moves)
      : new Set<number>()

    this.els.status.textContent =
      `${state.shape} k=${state.k} | ply ${state.ply} | ${state.to_move} to move` +
      (state.outcome_class ? ` | o = ${state.outcome_class}` : '')

    if (state.status === 'active') {
      this.els.banner.hidden = true
    } else if (state.status === 'draw-by-cap') {
      this.showBanner(`draw by ply cap (${state.ply_cap})`)
    } else {
      this.showBanner(`${state.winner} wins`)
    }

    renderBoard(
      this.els.svg,
      this.cells,
      contents,
      (i) => ({
        selected: this.selected.includes(i),
        target: targets.get(i),
        threatened: threats.has(i),
      }),
      state.human,
      this.oracleMode,
      {
        onCellClick: (i) => void this.onCellClick(i),
        onTargetHover: (move) => {
          this.hovered = move
          this.els.hover.textContent =
            move && this.oracleMode
              ? `${move.label} -> ${move.value.result}` +
                (move.value.distance != null ? ` in ${move.value.distance}` : '')
              : move
                ? move.label
                : ''
        },
      },
    )

    this.els.history.textContent = ''
    for (const entry of state.history) {
      const li = document.createElement('li')
      li.textContent = `${entry.ply}. ${entry.color} ${entry.move}`
      this.els.history.appendChild(li)
    }
  }
}

export function mount(root: HTMLElement, client: OracleClient): App {
  const app = new App(root, client)
  app.render()
  return app
}
