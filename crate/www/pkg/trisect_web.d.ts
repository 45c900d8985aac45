/* tslint:disable */
/* eslint-disable */

/**
 * Validation report for a JSON diagram, then invariants of the closed
 * diagram (relative ones are capped off first).
 */
export function analyze(json: string): string;

/**
 * Canonical JSON of a bundled diagram (`D1`, `D2`, `S4`, `S1xS3`, `CP2`,
 * `CP2bar`).
 */
export function bundled(name: string): string;

/**
 * Caps off two relative diagrams and compares their invariants.
 */
export function distinguish(left: string, right: string): string;

/**
 * Admissible types with Euler characteristic `chi` and genus at most
 * `gmax`. A non-empty `boundary` (`s3`, `s2xs1`, `lens`, `other`) applies
 * the open-book filter and reports the least genus that survives it.
 */
export function explore_params(chi: number, gmax: number, boundary: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze: (a: number, b: number) => [number, number, number, number];
    readonly bundled: (a: number, b: number) => [number, number, number, number];
    readonly distinguish: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly explore_params: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
