// Typed client for the play service's JSON API.

export type MoveValue = {
  result: 'black-win' | 'gray-win' | 'draw'
  distance: number | null
}

export type ServedMove = {
  uid: string
  cells: string[]
  direction: string
  kind: 'in-line' | 'broadside'
  pushed: number
  ejects: boolean
  label: string
  successor: string
  value: MoveValue
}

export type HistoryEntry = {
  ply: number
  color: string
  move: string
  board: string
}

export type SessionState = {
  session: string
  shape: string
  k: number
  board: string
  to_move: 'black' | 'gray'
  human: 'black' | 'gray'
  ply: number
  ply_cap: number
  status: string
  winner: string | null
  outcome_class: string | null
  history: HistoryEntry[]
}

export type ServiceConfig = {
  shape: string
  k: number
  initial: string
  has_distances: boolean
}

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message)
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(base + path, {
    headers: { 'content-type': 'application/json' },
    ...init,
  })
  if (!resp.ok) {
    let detail = resp.statusText
    try {
      const body = await resp.json()
      if (body && typeof body.detail === 'string') detail = body.detail
    } catch {
      // keep the status text
    }
    throw new ApiError(resp.status, detail)
  }
  return (await resp.json()) as T
}

export class OracleClient {
  constructor(public base: string) {}

  config(): Promise<ServiceConfig> {
    return request(this.base, '/config')
  }

  createSession(shape: string, k: number, human: string): Promise<SessionState> {
    return request(this.base, '/sessions', {
      method: 'POST',
      body: JSON.stringify({ shape, k, human }),
    })
  }

  getSession(id: string): Promise<SessionState> {
    return request(this.base, `/sessions/${id}`)
  }

  getMoves(id: string): Promise<ServedMove[]> {
    return request(this.base, `/sessions/${id}/moves`)
  }

  postMove(id: string, uid: string): Promise<SessionState> {
    return request(this.base, `/sessions/${id}/moves`, {
      method: 'POST',
      body: JSON.stringify({ move: uid }),
    })
  }

  engineMove(id: string): Promise<SessionState> {
    return request(this.base, `/sessions/${id}/engine-move`, {
      method: 'POST',
      body: '{}',
    })
  }
}
