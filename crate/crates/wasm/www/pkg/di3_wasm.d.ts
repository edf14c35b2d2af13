/* tslint:disable */
/* eslint-disable */

export class EmbedView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly capacityBits: number;
    readonly likelihoodAfter: number;
    readonly likelihoodBefore: number;
    readonly lscAfter: Uint8Array;
    readonly lscBefore: Uint8Array;
    readonly stegoPgm: Uint8Array;
}

export function embedText(pgm: Uint8Array, message: string, key_hex: string, low: number, high: number, prerandomize: boolean): EmbedView;

export function partitionSummary(pgm: Uint8Array, low: number, high: number): string;

export function planeView(pgm: Uint8Array, low: number, high: number, plane: number): Uint8Array;

export function sampleCover(width: number, height: number, seed: number): Uint8Array;

export function securityTable(embedder: string, n: number, p: number, strategies: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_embedview_free: (a: number, b: number) => void;
    readonly embedText: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number];
    readonly embedview_capacityBits: (a: number) => number;
    readonly embedview_likelihoodAfter: (a: number) => number;
    readonly embedview_likelihoodBefore: (a: number) => number;
    readonly embedview_lscAfter: (a: number) => [number, number];
    readonly embedview_lscBefore: (a: number) => [number, number];
    readonly embedview_stegoPgm: (a: number) => [number, number];
    readonly partitionSummary: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly planeView: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly sampleCover: (a: number, b: number, c: number) => [number, number];
    readonly securityTable: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
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
