// Typed client for the colgame session API. Every call is one fetch
// round-trip; non-2xx responses become ApiError with the server's message.

export type PlayerSymbol = 'T' | 'F';

export interface HistoryEntry {
  by: PlayerSymbol;
  label: string;
}

export interface StructureNode {
  kind: 'tree' | 'parallel' | 'neg' | 'brec' | 'choice' | 'blind' | 'leaf';
  label: string;
  flavor?: string;        // parallel/choice: conj|disj, brec: rec|corec, blind: all|ex
  chooser?: PlayerSymbol; // choice only
  width?: number;         // blind only
  maxSplits?: number;     // brec only
  nodes?: number;         // tree only
  depth?: number;         // tree only
  winner?: PlayerSymbol;  // leaf only
  children?: StructureNode[];
}

export interface SessionPayload {
  id: string;
  status: 'open' | 'finished';
  winner: PlayerSymbol | null;
  stateLabel: string;
  history: HistoryEntry[];
  legalHumanMoves: string[];
  stopWinnerNow: PlayerSymbol;
  machineWinnable: boolean | null;
  strategyKind: string;
  structure: StructureNode;
}

export interface CreateRequest {
  formula?: string;
  tree?: unknown;
  fixture?: string;
  interp?: unknown;
  budget?: number;
  strategy?: string;
}

export interface FixtureInfo {
  name: string;
  kind: string;
  budget: number | null;
  defaultStrategy: string | null;
  note: string;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let res: Response;
  try {
    res = await fetch(url, init);
  } catch (e) {
    throw new ApiError(0, `server unreachable: ${String(e)}`);
  }
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    const msg = typeof body?.error === 'string' ? body.error : `HTTP ${res.status}`;
    throw new ApiError(res.status, msg);
  }
  return body as T;
}

export class ApiClient {
  constructor(public baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, '') + path;
  }

  createSession(req: CreateRequest): Promise<SessionPayload> {
    return request(this.url('/sessions'), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(req),
    });
  }

  getSession(id: string): Promise<SessionPayload> {
    return request(this.url(`/sessions/${id}`));
  }

  move(id: string, label: string): Promise<SessionPayload> {
    return request(this.url(`/sessions/${id}/moves`), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ label }),
    });
  }

  stop(id: string): Promise<SessionPayload> {
    return request(this.url(`/sessions/${id}/moves`), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ stop: true }),
    });
  }

  deleteSession(id: string): Promise<{ ok: boolean }> {
    return request(this.url(`/sessions/${id}`), { method: 'DELETE' });
  }

  listFixtures(): Promise<FixtureInfo[]> {
    return request(this.url('/fixtures'));
  }
}
