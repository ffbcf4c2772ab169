// End-to-end round trip against a live oracle service: a scripted
// browser session plays the safe opening as Black by clicking the board,
// receives the engine's reply, and cross-checks every move list the app
// holds against the service's /moves payload verbatim.

import { spawn, spawnSync, type ChildProcess } from 'node:child_process'
import { mkdtempSync, existsSync } from 'node:fs'
import { tmpdir } from 'node:os'
import { join } from 'node:path'
import { afterAll, beforeAll, describe, expect, test } from 'vitest'

import { OracleClient } from '../src/api.js'
import { mount, type App } from '../src/app.js'

const PORT = 18000 + Math.floor(Math.random() * 4000)
const BASE = `http://127.0.0.1:${PORT}`

// All boards isomorphic to the engine's two safe replies to the safe
// opening (symmetry orbits, frozen from the solved database).
const SAFE_REPLIES = new Set([
  '...BBGGB.G', '...GGBBG.B', 'B.GBBGG...', 'G.BGGBB...',
  '..BGGBBG..', '..GBBGGB..', 'B..BBGG..G', 'G..GGBB..B',
])

let server: ChildProcess | null = null

async function waitForServer(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/config`)
      if (resp.ok) return
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 250))
  }
  throw new Error('service did not come up')
}

async function waitFor(cond: () => boolean, what: string, timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs
  while (Date.now() < deadline) {
    if (cond()) return
    await new Promise((r) => setTimeout(r, 25))
  }
  throw new Error(`timed out waiting for ${what}`)
}

function clickCell(root: HTMLElement, label: string): void {
  const el = root.querySelector(`[data-cell="${label}"]`)
  if (!el) throw new Error(`no cell ${label} rendered`)
  el.dispatchEvent(new Event('click', { bubbles: true }))
}

beforeAll(async () => {
  const dir = mkdtempSync(join(tmpdir(), 'abalone-ui-'))
  const db = join(dir, 'c223.db')
  const solve = spawnSync(
    'python3',
    ['-m', 'abalone_solver.cli', 'solve', '--shape', '2,2,3', '--out', db],
    { encoding: 'utf-8', timeout: 180_000 },
  )
  if (solve.status !== 0 || !existsSync(db)) {
    throw new Error(`solve failed: ${solve.stderr}`)
  }
  server = spawn(
    'python3',
    ['-m', 'abalone_solver.cli', 'serve', '--db', db, '--port', String(PORT)],
    { stdio: 'ignore' },
  )
  await waitForServer(60_000)
}, 240_000)

afterAll(() => {
  server?.kill()
})

describe('scripted session against the live service', () => {
  test('plays the safe opening by clicking, engine answers safely', async () => {
    const client = new OracleClient(BASE)
    const root = document.createElement('div')
    document.body.appendChild(root)
    const app: App = mount(root, client)

    await app.newGame('black')
    await waitFor(() => app.state !== null && app.moves.length > 0, 'session start')
    expect(app.state!.board).toBe('2,2,3:G.BG..BG.B')
    expect(app.state!.outcome_class).toBe('D')

    // The move list the app renders from must be the service's payload,
    // byte for byte.
    const servedAtStart = await client.getMoves(app.state!.session)
    expect(app.moves).toEqual(servedAtStart)

    // Board click 1: pick the marble on j; click 2: its drawing
    // destination f (annotated draw by the oracle overlay).
    clickCell(root, 'j')
    await waitFor(() => app.selected.length === 1, 'marble selected')
    const before = app.state!.ply
    clickCell(root, 'f')
    await waitFor(
      () => app.state!.ply >= before + 2 && !app.busy,
      'human move plus engine reply',
    )

    // Human move recorded, engine replied; the reply holds the draw, so
    // it must be one of the two known safe responses up to isomorphism.
    expect(app.state!.history[0].move).toBe('j>DL')
    expect(app.state!.status).toBe('active')
    const contents = app.state!.board.split(':')[1]
    expect(SAFE_REPLIES.has(contents)).toBe(true)
    expect(app.state!.outcome_class).toBe('D')

    // Back on the human's turn the shown list again matches the service.
    const servedNow = await client.getMoves(app.state!.session)
    expect(app.moves).toEqual(servedNow)
    expect(app.moves.length).toBeGreaterThan(0)
  }, 120_000)

  test('illegal selections never reach the service', async () => {
    const client = new OracleClient(BASE)
    const root = document.createElement('div')
    document.body.appendChild(root)
    const app: App = mount(root, client)
    await app.newGame('black')
    await waitFor(() => app.moves.length > 0, 'session start')

    const ply = app.state!.ply
    // c, g and j are black's marbles but c-g-j is not a straight line;
    // the third click is rejected client-side.
    clickCell(root, 'c')
    clickCell(root, 'g')
    await waitFor(() => app.selected.length === 2, 'two marbles selected')
    clickCell(root, 'j')
    await new Promise((r) => setTimeout(r, 200))
    expect(app.selected.length).toBe(2)
    expect(app.state!.ply).toBe(ply) // nothing was posted
  }, 60_000)

  test('a lost game ends with the winner banner', async () => {
    const client = new OracleClient(BASE)
    const root = document.createElement('div')
    document.body.appendChild(root)
    const app: App = mount(root, client)
    await app.newGame('black')
    await waitFor(() => app.moves.length > 0, 'session start')

    // The human deliberately plays the worst-ranked move every turn; the
    // engine converts within a few plies.
    for (let turn = 0; turn < 15 && app.state!.status === 'active'; turn++) {
      const worst = app.moves[app.moves.length - 1]
      await app.submitMove(worst)
      await waitFor(() => !app.busy, 'engine settled')
    }
    expect(app.state!.status).toBe('gray-win')
    expect(app.state!.winner).toBe('gray')
    const banner = root.querySelector('#banner') as HTMLElement
    expect(banner.hidden).toBe(false)
    expect(banner.textContent).toBe('gray wins')
  }, 120_000)

  test('oracle annotations match the served values', async () => {
    const client = new OracleClient(BASE)
    const root = document.createElement('div')
    document.body.appendChild(root)
    const app: App = mount(root, client)
    await app.newGame('black')
    await waitFor(() => app.moves.length > 0, 'session start')

    clickCell(root, 'j')
    await waitFor(() => app.selected.length === 1, 'marble selected')
    app.render()
    const drawTargets = root.querySelectorAll('.cell.target-draw')
    const lossTargets = root.querySelectorAll('.cell.target-loss')
    // From the start, j has exactly one drawing step and some losing ones.
    expect(drawTargets.length).toBe(1)
    expect(lossTargets.length).toBeGreaterThan(0)
  }, 60_000)
})
