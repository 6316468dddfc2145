// Typed client for the game service. All game logic lives server-side;
// this file only shuttles JSON.

export interface AutomatonDoc {
  states: number;
  alphabet: string[];
  delta: Record<string, number[]>;
}

export interface Analysis {
  n: number;
  k: number;
  synchronizing: boolean;
  reset_length: number | null;
  in_ds: boolean;
  a_automaton: boolean | null;
  definite_degree: number | null;
  weakly_acyclic: boolean;
  commutative: boolean;
  r_trivial: boolean;
  m: number | null;
  height: number | null;
  strategy_verified: boolean | null;
}

export interface Solution {
  winner: 'alice' | 'bob';
  dist: number | null;
  pv: string[];
}

export interface GameState {
  game_id: string;
  automaton_id: string | null;
  tokens: number[];
  turn: 'alice' | 'bob';
  history: string[];
  status: 'ongoing' | 'finished';
  winner: string | null;
  winner_prediction: 'alice' | 'bob' | null;
  human_side: 'alice' | 'bob';
  engine_kind: string;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export class ApiError extends Error {
  constructor(public status: number, public body: ApiErrorBody) {
    super(`${body.code}: ${body.message}`);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, body as ApiErrorBody);
  }
  return body as T;
}

export class Client {
  constructor(public baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, '') + path;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return fetch(this.url(path), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    }).then((r) => unwrap<T>(r));
  }

  private get<T>(path: string): Promise<T> {
    return fetch(this.url(path)).then((r) => unwrap<T>(r));
  }

  createAutomaton(doc: AutomatonDoc): Promise<{ id: string }> {
    return this.post('/automata', doc);
  }

  getAutomaton(id: string): Promise<AutomatonDoc> {
    return this.get(`/automata/${id}`);
  }

  analysis(id: string): Promise<Analysis> {
    return this.get(`/automata/${id}/analysis`);
  }

  solution(id: string): Promise<Solution> {
    return this.get(`/automata/${id}/solution`);
  }

  createGame(req: {
    automaton_id: string;
    human_side: 'alice' | 'bob';
    engine_kind?: string | null;
    seed?: number | null;
  }): Promise<{ game_id: string; position: GameState }> {
    return this.post('/games', req);
  }

  getGame(gameId: string): Promise<GameState> {
    return this.get(`/games/${gameId}`);
  }

  move(gameId: string, letter: string): Promise<GameState> {
    return this.post(`/games/${gameId}/moves`, { letter });
  }
}
