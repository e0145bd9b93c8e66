import { readFileSync } from "node:fs";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import type { HintResponse, SolveResponse } from "../src/api";
import { applyClicks, isDark } from "../src/logic";

interface ApiFixtures {
  worked_hint: { request: BoardBody; response: HintResponse };
  worked_solve: { request: BoardBody; response: SolveResponse };
  unsolvable_hint: { request: BoardBody; response: HintResponse };
  criterion: Record<string, { singular: boolean; conditions: string[] }>;
  solve_cases: { board: BoardBody & { seed: number }; solve: SolveResponse }[];
}

interface BoardBody {
  rows: number;
  cols: number;
  config: string;
}

const fixtures: ApiFixtures = JSON.parse(
  readFileSync(join(__dirname, "fixtures", "api_fixtures.json"), "utf8"),
);

describe("hint responses", () => {
  it("highlights button 3 on the 2x5 worked board", () => {
    expect(fixtures.worked_hint.response.hint).toBe(3);
    expect(fixtures.worked_hint.response.solvable).toBe(true);
  });

  it("reports the unsolvable board instead of hinting", () => {
    expect(fixtures.unsolvable_hint.response.solvable).toBe(false);
    expect(fixtures.unsolvable_hint.response.hint).toBeNull();
  });
});

describe("minimal solutions darken the board", () => {
  it("works on the 2x5 worked board", () => {
    const { request, response } = fixtures.worked_solve;
    expect(response.minimal?.buttons).toEqual([3, 8]);
    const final = applyClicks(
      { rows: request.rows, cols: request.cols },
      request.config,
      response.minimal!.buttons,
    );
    expect(isDark(final)).toBe(true);
  });

  it("works on every captured solvable board", () => {
    expect(fixtures.solve_cases.length).toBeGreaterThanOrEqual(8);
    for (const { board, solve } of fixtures.solve_cases) {
      expect(solve.solvable).toBe(true);
      const final = applyClicks(
        { rows: board.rows, cols: board.cols },
        board.config,
        solve.minimal!.buttons,
      );
      expect(isDark(final), `seed ${board.seed}`).toBe(true);
    }
  });
});

describe("criterion banner data", () => {
  it("flags the singular grids and clears the regular ones", () => {
    expect(fixtures.criterion["2x5"].singular).toBe(true);
    expect(fixtures.criterion["2x5"].conditions).toEqual(["C1"]);
    expect(fixtures.criterion["5x5"].conditions).toEqual(["C1", "C2"]);
    expect(fixtures.criterion["3x3"].singular).toBe(false);
    expect(fixtures.criterion["16x16"].singular).toBe(false);
  });
});
