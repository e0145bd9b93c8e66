/** Typed fetch wrappers over the JSON API served at the same origin. */
async function getJSON(path) {
    const res = await fetch(path);
    if (!res.ok)
        throw new Error(`GET ${path}: HTTP ${res.status}`);
    return (await res.json());
}
async function postJSON(path, body) {
    const res = await fetch(path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
    });
    if (!res.ok)
        throw new Error(`POST ${path}: HTTP ${res.status}`);
    return (await res.json());
}
export function fetchBoard(rows, cols, seed) {
    const extra = seed === undefined ? "" : `&seed=${seed}`;
    return getJSON(`/api/board?rows=${rows}&cols=${cols}${extra}`);
}
export function fetchCriterion(rows, cols) {
    return getJSON(`/api/criterion?rows=${rows}&cols=${cols}`);
}
export function postSolve(rows, cols, config) {
    return postJSON("/api/solve", { rows, cols, config });
}
export function postHint(rows, cols, config) {
    return postJSON("/api/hint", { rows, cols, config });
}
