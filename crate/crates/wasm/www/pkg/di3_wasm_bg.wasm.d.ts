/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_embedview_free: (a: number, b: number) => void;
export const embedText: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number];
export const embedview_capacityBits: (a: number) => number;
export const embedview_likelihoodAfter: (a: number) => number;
export const embedview_likelihoodBefore: (a: number) => number;
export const embedview_lscAfter: (a: number) => [number, number];
export const embedview_lscBefore: (a: number) => [number, number];
export const embedview_stegoPgm: (a: number) => [number, number];
export const partitionSummary: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const planeView: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const sampleCover: (a: number, b: number, c: number) => [number, number];
export const securityTable: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
