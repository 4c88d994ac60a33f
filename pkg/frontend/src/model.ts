/** Canvas graph state: positions, edges, selection, undo. */

import type { AnalysisDocument } from "./types.js";

export interface Vertex {
  x: number;
  y: number;
}

export interface GraphState {
  vertices: Vertex[];
  edges: [number, number][];
}

export function normalizeEdge(u: number, v: number): [number, number] {
  return u < v ? [u, v] : [v, u];
}

export function hasEdge(state: GraphState, u: number, v: number): boolean {
  const [a, b] = normalizeEdge(u, v);
  return state.edges.some(([x, y]) => x === a && y === b);
}

export function cloneState(state: GraphState): GraphState {
  return {
    vertices: state.vertices.map((v) => ({ ...v })),
    edges: state.edges.map(([u, v]) => [u, v] as [number, number]),
  };
}

/** Serialize exactly the edge list the API receives (sorted, canonical). */
export function sortedEdges(state: GraphState): [number, number][] {
  return state.edges
    .map(([u, v]) => normalizeEdge(u, v))
    .sort((a, b) => (a[0] - b[0]) || (a[1] - b[1]));
}

/** The "n m" edge-list text understood by the command-line tool. */
export function toEdgeListText(state: GraphState): string {
  const edges = sortedEdges(state);
  const lines = [`${state.vertices.length} ${edges.length}`];
  for (const [u, v] of edges) lines.push(`${u} ${v}`);
  return lines.join("\n") + "\n";
}

/** Connected components via union-find (for the bridge tool). */
export function components(state: GraphState): number[] {
  const parent = state.vertices.map((_, i) => i);
  const find = (x: number): number => {
    while (parent[x] !== x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const [u, v] of state.edges) {
    parent[find(u)] = find(v);
  }
  return state.vertices.map((_, i) => find(i));
}

export interface Snapshot {
  state: GraphState;
  report: AnalysisDocument | null;
}
