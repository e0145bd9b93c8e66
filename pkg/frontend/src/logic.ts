/**
 * Pure board logic, shared by the UI and the tests.
 *
 * A board config is a row-major string of '0'/'1' with button 1 first,
 * exactly the wire format of the JSON API. Clicking button j toggles j
 * and its orthogonal neighbours locally; no server round trip.
 */

export interface Dims {
  rows: number;
  cols: number;
}

export function cellCount(dims: Dims): number {
  return dims.rows * dims.cols;
}

export function darkBoard(dims: Dims): string {
  return "0".repeat(cellCount(dims));
}

export function isDark(config: string): boolean {
  return !config.includes("1");
}

/** 1-based buttons toggled by pressing button j (j itself + neighbours). */
export function toggledButtons(dims: Dims, j: number): number[] {
  const q = cellCount(dims);
  if (!Number.isInteger(j) || j < 1 || j > q) {
    throw new RangeError(`button ${j} out of range 1..${q}`);
  }
  const n = dims.cols;
  const row = Math.floor((j - 1) / n);
  const col = (j - 1) % n;
  const out = [j];
  if (row > 0) out.push(j - n);
  if (row < dims.rows - 1) out.push(j + n);
  if (col > 0) out.push(j - 1);
  if (col < n - 1) out.push(j + 1);
  return out.sort((a, b) => a - b);
}

export function applyClick(dims: Dims, config: string, j: number): string {
  const chars = config.split("");
  for (const b of toggledButtons(dims, j)) {
    chars[b - 1] = chars[b - 1] === "1" ? "0" : "1";
  }
  return chars.join("");
}

export function applyClicks(dims: Dims, config: string, clicks: number[]): string {
  return clicks.reduce((c, j) => applyClick(dims, c, j), config);
}

/**
 * Everything the page shows: the board plus its provenance. The config
 * is always the initial board advanced by the move history, so undoing
 * and fixture replays stay consistent by construction.
 */
export interface UiState {
  dims: Dims;
  initial: string;
  history: number[];
  config: string;
  hint: number | null;
  solutionQueue: number[];
}

export function newState(dims: Dims, initial: string): UiState {
  if (initial.length !== cellCount(dims) || /[^01]/.test(initial)) {
    throw new RangeError("initial board does not fit the grid");
  }
  return { dims, initial, history: [], config: initial, hint: null, solutionQueue: [] };
}

export function clickCell(state: UiState, j: number): UiState {
  const config = applyClick(state.dims, state.config, j);
  return {
    ...state,
    history: [...state.history, j],
    config,
    // a hint is consumed by pressing it; any other press invalidates it
    hint: null,
    solutionQueue:
      state.solutionQueue[0] === j ? state.solutionQueue.slice(1) : [],
  };
}

export function withHint(state: UiState, hint: number | null): UiState {
  return { ...state, hint };
}

export function withSolution(state: UiState, buttons: number[]): UiState {
  return { ...state, solutionQueue: [...buttons] };
}

/** Invariant check used by the tests: history really produces config. */
export function replayIsConsistent(state: UiState): boolean {
  return applyClicks(state.dims, state.initial, state.history) === state.config;
}
