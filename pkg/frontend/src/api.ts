/** Typed fetch wrappers over the JSON API served at the same origin. */

export interface BoardResponse {
  rows: number;
  cols: number;
  seed: number;
  config: string;
  solvable: true;
}

export interface CriterionResponse {
  rows: number;
  cols: number;
  singular: boolean;
  conditions: string[];
}

export interface PressSet {
  bits: string;
  buttons: number[];
}

export interface SolveResponse {
  rows: number;
  cols: number;
  config: string;
  solvable: boolean;
  nullity: number;
  solution_count: number;
  particular: PressSet | null;
  minimal: PressSet | null;
  minimal_weight: number | null;
  certified: boolean;
}

export interface HintResponse {
  rows: number;
  cols: number;
  solvable: boolean;
  hint: number | null;
}

async function getJSON<T>(path: string): Promise<T> {
  const res = await fetch(path);
  if (!res.ok) throw new Error(`GET ${path}: HTTP ${res.status}`);
  return (await res.json()) as T;
}

async function postJSON<T>(path: string, body: unknown): Promise<T> {
  const res = await fetch(path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!res.ok) throw new Error(`POST ${path}: HTTP ${res.status}`);
  return (await res.json()) as T;
}

export function fetchBoard(rows: number, cols: number, seed?: number): Promise<BoardResponse> {
  const extra = seed === undefined ? "" : `&seed=${seed}`;
  return getJSON(`/api/board?rows=${rows}&cols=${cols}${extra}`);
}

export function fetchCriterion(rows: number, cols: number): Promise<CriterionResponse> {
  return getJSON(`/api/criterion?rows=${rows}&cols=${cols}`);
}

export function postSolve(rows: number, cols: number, config: string): Promise<SolveResponse> {
  return postJSON("/api/solve", { rows, cols, config });
}

export function postHint(rows: number, cols: number, config: string): Promise<HintResponse> {
  return postJSON("/api/hint", { rows, cols, config });
}
