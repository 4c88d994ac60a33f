/** The edit loop: graph edits trigger analyze requests; stale responses
 * (older edit counter) are discarded so the display always matches the
 * displayed edge set.  The UI does no curvature math of its own. */

import type { ApiClient } from "./api.js";
import { PreconditionError } from "./api.js";
import {
  GraphState,
  Snapshot,
  cloneState,
  components,
  hasEdge,
  normalizeEdge,
  sortedEdges,
  toEdgeListText,
} from "./model.js";
import type { AnalysisDocument } from "./types.js";

export type Status =
  | { kind: "report"; report: AnalysisDocument }
  | { kind: "disconnected" }
  | { kind: "too-small" }
  | { kind: "pending" }
  | { kind: "error"; message: string };

export interface Delta {
  vertex: number;
  before: string;
  after: string;
}

export class EditorCore {
  state: GraphState = { vertices: [], edges: [] };
  status: Status = { kind: "too-small" };
  selection: number[] = [];
  editSeq = 0;
  private appliedSeq = -1;
  private undoStack: Snapshot[] = [];
  private previousReport: AnalysisDocument | null = null;
  deltas: Delta[] = [];
  onChange: (() => void) | null = null;

  constructor(private api: ApiClient) {}

  private notify() {
    if (this.onChange) this.onChange();
  }

  get report(): AnalysisDocument | null {
    return this.status.kind === "report" ? this.status.report : null;
  }

  private pushUndo() {
    this.undoStack.push({ state: cloneState(this.state), report: this.report });
    if (this.undoStack.length > 200) this.undoStack.shift();
  }

  /** Every topology change funnels through here. */
  private async edited(): Promise<void> {
    this.editSeq += 1;
    const seq = this.editSeq;
    const n = this.state.vertices.length;
    if (n === 0 || n === 1) {
      this.status = { kind: "too-small" };
      this.deltas = [];
      this.notify();
      return;
    }
    const prior = this.report;
    this.status = { kind: "pending" };
    this.notify();
    try {
      const report = await this.api.analyze({ n, edges: sortedEdges(this.state) });
      if (seq !== this.editSeq) return; // superseded: discard
      this.appliedSeq = seq;
      this.previousReport = prior;
      this.status = { kind: "report", report };
      this.deltas = this.computeDeltas(prior, report);
    } catch (err) {
      if (seq !== this.editSeq) return;
      if (err instanceof PreconditionError && err.condition === "DisconnectedGraph") {
        this.status = { kind: "disconnected" };
      } else if (err instanceof PreconditionError && err.condition === "SingleVertex") {
        this.status = { kind: "too-small" };
      } else {
        this.status = { kind: "error", message: String(err) };
      }
      this.deltas = [];
    }
    this.notify();
  }

  private computeDeltas(
    before: AnalysisDocument | null,
    after: AnalysisDocument
  ): Delta[] {
    if (!before) return [];
    const shared = Math.min(before.n, after.n);
    const out: Delta[] = [];
    for (let v = 0; v < shared; v++) {
      out.push({
        vertex: v,
        before: before.curvature_decimal[v],
        after: after.curvature_decimal[v],
      });
    }
    return out;
  }

  // --- operations -------------------------------------------------------

  async addVertex(x: number, y: number): Promise<void> {
    this.pushUndo();
    this.state.vertices.push({ x, y });
    await this.edited();
  }

  async removeVertex(v: number): Promise<void> {
    if (v < 0 || v >= this.state.vertices.length) return;
    this.pushUndo();
    this.state.vertices.splice(v, 1);
    this.state.edges = this.state.edges
      .filter(([a, b]) => a !== v && b !== v)
      .map(([a, b]) => normalizeEdge(a > v ? a - 1 : a, b > v ? b - 1 : b));
    this.selection = this.selection
      .filter((s) => s !== v)
      .map((s) => (s > v ? s - 1 : s));
    await this.edited();
  }

  async addEdge(u: number, v: number): Promise<void> {
    if (u === v || hasEdge(this.state, u, v)) return;
    this.pushUndo();
    this.state.edges.push(normalizeEdge(u, v));
    await this.edited();
  }

  async removeEdge(u: number, v: number): Promise<void> {
    if (!hasEdge(this.state, u, v)) return;
    this.pushUndo();
    const [a, b] = normalizeEdge(u, v);
    this.state.edges = this.state.edges.filter(([x, y]) => !(x === a && y === b));
    await this.edited();
  }

  /** Attach a fresh leaf to every selected vertex (one new vertex each). */
  async attachLeafToSelected(): Promise<void> {
    if (!this.selection.length) return;
    this.pushUndo();
    for (const v of [...this.selection]) {
      const base = this.state.vertices[v];
      const jitter = this.state.vertices.length;
      this.state.vertices.push({
        x: base.x + 0.6 * Math.cos(jitter),
        y: base.y + 0.6 * Math.sin(jitter),
      });
      this.state.edges.push(normalizeEdge(v, this.state.vertices.length - 1));
    }
    await this.edited();
  }

  /** Attach a single leaf at an explicit vertex (scripting convenience). */
  async attachLeaf(v: number): Promise<void> {
    this.pushUndo();
    const base = this.state.vertices[v];
    const k = this.state.vertices.length;
    this.state.vertices.push({
      x: base.x + 0.6 * Math.cos(k),
      y: base.y + 0.6 * Math.sin(k),
    });
    this.state.edges.push(normalizeEdge(v, k));
    await this.edited();
  }

  /** Join two components by an edge; rejects endpoints already connected. */
  async bridge(u: number, v: number): Promise<boolean> {
    const comp = components(this.state);
    if (comp[u] === comp[v]) return false;
    await this.addEdge(u, v);
    return true;
  }

  async loadFamily(name: string, args: number[]): Promise<void> {
    const fam = await this.api.family(name, args);
    this.pushUndo();
    this.state = {
      vertices: Array.from({ length: fam.n }, (_, i) => ({
        x: Math.cos((2 * Math.PI * i) / fam.n),
        y: Math.sin((2 * Math.PI * i) / fam.n),
      })),
      edges: fam.edges.map(([u, v]) => normalizeEdge(u, v)),
    };
    this.selection = [];
    await this.edited();
  }

  /** Undo restores topology and the cached report without a new request. */
  undo(): boolean {
    const snap = this.undoStack.pop();
    if (!snap) return false;
    this.editSeq += 1; // invalidate any in-flight response
    this.state = snap.state;
    this.selection = this.selection.filter((s) => s < this.state.vertices.length);
    this.status = snap.report
      ? { kind: "report", report: snap.report }
      : this.state.vertices.length <= 1
        ? { kind: "too-small" }
        : { kind: "disconnected" };
    this.deltas = [];
    this.notify();
    return true;
  }

  toggleSelect(v: number): void {
    const idx = this.selection.indexOf(v);
    if (idx >= 0) this.selection.splice(idx, 1);
    else this.selection.push(v);
    this.notify();
  }

  exportEdgeList(): string {
    return toEdgeListText(this.state);
  }

  /** True when the displayed report corresponds to the displayed edges. */
  displayConsistent(): boolean {
    if (this.status.kind !== "report") return true;
    const doc = this.status.report;
    const here = sortedEdges(this.state);
    if (doc.n !== this.state.vertices.length || doc.edges.length !== here.length) {
      return false;
    }
    return doc.edges.every(([u, v], i) => here[i][0] === u && here[i][1] === v);
  }
}
