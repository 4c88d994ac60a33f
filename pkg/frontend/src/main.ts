import { httpClient } from "./api.js";
import { EditorCore } from "./editor.js";
import { bannerText, draw, fitCamera, toScreen } from "./render.js";

const api = httpClient("");
const core = new EditorCore(api);

const canvas = document.getElementById("canvas") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const banner = document.getElementById("banner")!;
const exactLine = document.getElementById("exact")!;
const deltaPanel = document.getElementById("deltas")!;
const familySelect = document.getElementById("family") as HTMLSelectElement;
const familyArgs = document.getElementById("family-args") as HTMLInputElement;

function redraw() {
  const cam = fitCamera(core, canvas.width, canvas.height);
  draw(ctx, core, cam);
  banner.textContent = bannerText(core);
  const r = core.report;
  exactLine.textContent = r
    ? "exact: " + r.curvature.map((q, i) => `v${i}=${q}`).join("  ")
    : "";
  deltaPanel.textContent = core.deltas.length
    ? "per-vertex change: " +
      core.deltas.map((d) => `v${d.vertex}: ${d.before} → ${d.after}`).join("  ")
    : "";
}

core.onChange = redraw;

function vertexAt(px: number, py: number): number | null {
  const cam = fitCamera(core, canvas.width, canvas.height);
  for (let i = 0; i < core.state.vertices.length; i++) {
    const [x, y] = toScreen(cam, core.state.vertices[i].x, core.state.vertices[i].y);
    if ((x - px) ** 2 + (y - py) ** 2 <= 22 * 22) return i;
  }
  return null;
}

let pendingEdgeStart: number | null = null;

canvas.addEventListener("click", (ev) => {
  const rect = canvas.getBoundingClientRect();
  const px = ev.clientX - rect.left;
  const py = ev.clientY - rect.top;
  const hit = vertexAt(px, py);
  if (ev.shiftKey) {
    if (hit !== null) {
      if (pendingEdgeStart === null) {
        pendingEdgeStart = hit;
      } else {
        void core.addEdge(pendingEdgeStart, hit);
        pendingEdgeStart = null;
      }
    }
    return;
  }
  if (hit !== null) {
    core.toggleSelect(hit);
  } else {
    const cam = fitCamera(core, canvas.width, canvas.height);
    void core.addVertex((px - cam.cx) / cam.scale, (py - cam.cy) / cam.scale);
  }
});

canvas.addEventListener("dblclick", (ev) => {
  const rect = canvas.getBoundingClientRect();
  const hit = vertexAt(ev.clientX - rect.left, ev.clientY - rect.top);
  if (hit !== null) void core.removeVertex(hit);
});

document.getElementById("attach-leaf")!.addEventListener("click", () => {
  void core.attachLeafToSelected();
});
document.getElementById("remove-edge")!.addEventListener("click", () => {
  if (core.selection.length === 2) {
    void core.removeEdge(core.selection[0], core.selection[1]);
  }
});
document.getElementById("bridge")!.addEventListener("click", () => {
  if (core.selection.length === 2) {
    void core.bridge(core.selection[0], core.selection[1]);
  }
});
document.getElementById("undo")!.addEventListener("click", () => {
  core.undo();
});
document.getElementById("export")!.addEventListener("click", () => {
  const blob = new Blob([core.exportEdgeList()], { type: "text/plain" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "graph.txt";
  a.click();
});
document.getElementById("load-family")!.addEventListener("click", () => {
  const args = familyArgs.value
    .split(",")
    .map((s) => s.trim())
    .filter(Boolean)
    .map(Number);
  void core.loadFamily(familySelect.value, args);
});

async function boot() {
  const families = await api.families();
  for (const fam of families) {
    const opt = document.createElement("option");
    opt.value = fam.name;
    opt.textContent = `${fam.name}(${fam.params.join(",")})`;
    familySelect.appendChild(opt);
  }
  familySelect.value = "cycle";
  familyArgs.value = "6";
  await core.loadFamily("cycle", [6]);
}

void boot();
