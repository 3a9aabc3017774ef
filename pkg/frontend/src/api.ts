/** Typed client for the puzzle session API. */

export interface GraphJson {
  n: number;
  edges: [number, number][];
  labels?: unknown[];
}

export type Goal = 'point' | { target: GraphJson };

export interface SessionState {
  id: string;
  graph: GraphJson;
  chi: number;
  goal: Goal;
  history_length: number;
  solved: boolean;
}

export type Move =
  | { kind: 'Contract'; v: number }
  | { kind: 'Expand'; attach: number[] }
  | { kind: 'EdgeRefine'; a: number; b: number }
  | { kind: 'EdgeRemove'; a: number; b: number };

/** Server rejection of a move; carries the failed certificate's reason. */
export class MoveRejected extends Error {
  constructor(public reason: string) {
    super(reason);
  }
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class PuzzleApi {
  constructor(private base: string, private fetchFn: typeof fetch = fetch) {}

  private async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const resp = await this.fetchFn(this.base + path, {
      method,
      headers: { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data: unknown = await resp.json();
    if (resp.status === 409) {
      const reason = (data as { reason?: string }).reason ?? 'illegal move';
      throw new MoveRejected(reason);
    }
    if (!resp.ok) {
      const message = (data as { error?: string }).error ?? `HTTP ${resp.status}`;
      throw new ApiError(resp.status, message);
    }
    return data;
  }

  createSession(spec: {
    catalog?: string;
    graph?: GraphJson;
    goal?: 'point' | { catalog: string } | { graph: GraphJson };
  }): Promise<SessionState> {
    return this.request('POST', '/session', spec) as Promise<SessionState>;
  }

  getSession(id: string): Promise<SessionState> {
    return this.request('GET', `/session/${id}`) as Promise<SessionState>;
  }

  async legalMoves(id: string, limit?: number): Promise<Move[]> {
    const query = limit === undefined ? '' : `?limit=${limit}`;
    const data = (await this.request('GET', `/session/${id}/legal-moves${query}`)) as {
      moves: Move[];
    };
    return data.moves;
  }

  /** Throws MoveRejected on a 409; the caller rolls back its optimism. */
  submitMove(id: string, move: Move): Promise<SessionState> {
    return this.request('POST', `/session/${id}/move`, move) as Promise<SessionState>;
  }

  undo(id: string): Promise<SessionState> {
    return this.request('POST', `/session/${id}/undo`) as Promise<SessionState>;
  }

  catalog(): Promise<{ graphs: string[]; complexes: string[] }> {
    return this.request('GET', '/catalog') as Promise<{ graphs: string[]; complexes: string[] }>;
  }
}
