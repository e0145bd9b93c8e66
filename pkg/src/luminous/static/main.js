import { fetchBoard, fetchCriterion, postHint, postSolve, } from "./api.js";
import { clickCell, darkBoard, isDark, newState, withHint, withSolution, } from "./logic.js";
const gridEl = document.getElementById("grid");
const bannerEl = document.getElementById("banner");
const statusEl = document.getElementById("status");
const toastEl = document.getElementById("toast");
const rowsEl = document.getElementById("rows");
const colsEl = document.getElementById("cols");
const newBtn = document.getElementById("new-board");
const clearBtn = document.getElementById("clear-board");
const hintBtn = document.getElementById("hint");
const revealBtn = document.getElementById("reveal");
const stepBtn = document.getElementById("step");
let state = newState({ rows: 5, cols: 5 }, darkBoard({ rows: 5, cols: 5 }));
let busy = false;
function toast(message) {
    toastEl.textContent = message;
    toastEl.classList.add("visible");
    window.setTimeout(() => toastEl.classList.remove("visible"), 4000);
}
function render() {
    const { rows, cols } = state.dims;
    gridEl.style.gridTemplateColumns = `repeat(${cols}, var(--cell))`;
    gridEl.replaceChildren();
    for (let j = 1; j <= rows * cols; j++) {
        const btn = document.createElement("button");
        btn.className = "cell";
        if (state.config[j - 1] === "1")
            btn.classList.add("lit");
        if (state.hint === j)
            btn.classList.add("hint");
        const queueIndex = state.solutionQueue.indexOf(j);
        if (queueIndex >= 0) {
            btn.classList.add("solution");
            const badge = document.createElement("span");
            badge.className = "badge";
            badge.textContent = String(queueIndex + 1);
            btn.appendChild(badge);
        }
        btn.addEventListener("click", () => {
            state = clickCell(state, j);
            render();
        });
        gridEl.appendChild(btn);
    }
    if (isDark(state.config)) {
        statusEl.textContent =
            state.history.length === 0
                ? "Board is dark. Deal a new one or click cells to light it."
                : `All lights out in ${state.history.length} presses.`;
        statusEl.classList.add("solved");
    }
    else {
        statusEl.textContent = `${state.history.length} presses so far.`;
        statusEl.classList.remove("solved");
    }
}
function grid() {
    const rows = Math.max(1, Math.min(12, Number(rowsEl.value) || 5));
    const cols = Math.max(1, Math.min(12, Number(colsEl.value) || 5));
    rowsEl.value = String(rows);
    colsEl.value = String(cols);
    return { rows, cols };
}
async function updateBanner() {
    const { rows, cols } = grid();
    try {
        const verdict = await fetchCriterion(rows, cols);
        if (verdict.singular) {
            bannerEl.textContent =
                `${rows}x${cols}: singular game matrix (${verdict.conditions.join(", ")});` +
                    " some boards have no solution.";
            bannerEl.className = "banner singular";
        }
        else {
            bannerEl.textContent = `${rows}x${cols}: every board is solvable.`;
            bannerEl.className = "banner regular";
        }
    }
    catch (err) {
        toast(`Could not fetch the singularity verdict: ${err}`);
    }
}
async function dealBoard() {
    if (busy)
        return;
    busy = true;
    try {
        const { rows, cols } = grid();
        const board = await fetchBoard(rows, cols);
        state = newState({ rows, cols }, board.config);
        render();
        await updateBanner();
    }
    catch (err) {
        toast(`Could not fetch a board: ${err}`);
    }
    finally {
        busy = false;
    }
}
async function requestHint() {
    if (busy)
        return;
    busy = true;
    try {
        const { rows, cols } = state.dims;
        const res = await postHint(rows, cols, state.config);
        if (!res.solvable) {
            toast("This board is unsolvable; no press sequence can darken it.");
            state = withHint(state, null);
        }
        else {
            state = withHint(state, res.hint);
            if (res.hint === null)
                toast("Already dark; nothing to press.");
        }
        render();
    }
    catch (err) {
        toast(`Hint request failed: ${err}`);
    }
    finally {
        busy = false;
    }
}
async function revealSolution() {
    if (busy)
        return;
    busy = true;
    try {
        const { rows, cols } = state.dims;
        const res = await postSolve(rows, cols, state.config);
        if (!res.solvable || res.minimal === null) {
            toast("This board is unsolvable.");
        }
        else if (res.minimal.buttons.length === 0) {
            toast("Already dark; the minimal solution is to do nothing.");
        }
        else {
            state = withSolution(state, res.minimal.buttons);
            toast(`Minimal solution: ${res.minimal.buttons.length} presses ` +
                `(${res.solution_count} solutions in total).`);
        }
        render();
    }
    catch (err) {
        toast(`Solve request failed: ${err}`);
    }
    finally {
        busy = false;
    }
}
function stepSolution() {
    const next = state.solutionQueue[0];
    if (next === undefined) {
        toast("No revealed solution to replay; use Reveal first.");
        return;
    }
    state = clickCell(state, next);
    render();
}
function clearBoard() {
    const { rows, cols } = grid();
    state = newState({ rows, cols }, darkBoard({ rows, cols }));
    render();
    void updateBanner();
}
newBtn.addEventListener("click", () => void dealBoard());
clearBtn.addEventListener("click", clearBoard);
hintBtn.addEventListener("click", () => void requestHint());
revealBtn.addEventListener("click", () => void revealSolution());
stepBtn.addEventListener("click", stepSolution);
rowsEl.addEventListener("change", () => void dealBoard());
colsEl.addEventListener("change", () => void dealBoard());
render();
void dealBoard();
