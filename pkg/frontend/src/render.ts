/** Canvas painting: vertices colored by curvature sign, labeled with the
 * 4-decimal value; exact p/q shown as a tooltip line under the banner. */

import type { EditorCore } from "./editor.js";

const SIGN_FILL = {
  positive: "#2e8b57",
  zero: "#8c8c8c",
  negative: "#c0392b",
} as const;

export interface Camera {
  scale: number;
  cx: number;
  cy: number;
}

export function fitCamera(core: EditorCore, width: number, height: number): Camera {
  const vs = core.state.vertices;
  if (!vs.length) return { scale: 120, cx: width / 2, cy: height / 2 };
  const xs = vs.map((v) => v.x);
  const ys = vs.map((v) => v.y);
  const spanX = Math.max(...xs) - Math.min(...xs) || 1;
  const spanY = Math.max(...ys) - Math.min(...ys) || 1;
  const scale = Math.min((width - 120) / spanX, (height - 120) / spanY, 160);
  const midX = (Math.max(...xs) + Math.min(...xs)) / 2;
  const midY = (Math.max(...ys) + Math.min(...ys)) / 2;
  return { scale, cx: width / 2 - midX * scale, cy: height / 2 - midY * scale };
}

export function toScreen(cam: Camera, x: number, y: number): [number, number] {
  return [cam.cx + x * cam.scale, cam.cy + y * cam.scale];
}

export function draw(
  ctx: CanvasRenderingContext2D,
  core: EditorCore,
  cam: Camera
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  ctx.lineWidth = 1.5;
  ctx.strokeStyle = "#555";
  for (const [u, v] of core.state.edges) {
    const [x1, y1] = toScreen(cam, core.state.vertices[u].x, core.state.vertices[u].y);
    const [x2, y2] = toScreen(cam, core.state.vertices[v].x, core.state.vertices[v].y);
    ctx.beginPath();
    ctx.moveTo(x1, y1);
    ctx.lineTo(x2, y2);
    ctx.stroke();
  }
  const report = core.report;
  core.state.vertices.forEach((v, i) => {
    const [x, y] = toScreen(cam, v.x, v.y);
    const sign = report ? report.curvature_sign[i] : "zero";
    ctx.beginPath();
    ctx.arc(x, y, 20, 0, 2 * Math.PI);
    ctx.fillStyle = report ? SIGN_FILL[sign] : "#b0b0b0";
    ctx.fill();
    ctx.lineWidth = core.selection.includes(i) ? 4 : 1;
    ctx.strokeStyle = core.selection.includes(i) ? "#1a56c4" : "#222";
    ctx.stroke();
    ctx.fillStyle = "white";
    ctx.font = "9px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(report ? report.curvature_decimal[i] : String(i), x, y);
  });
}

export function bannerText(core: EditorCore): string {
  switch (core.status.kind) {
    case "too-small":
      return "add at least two connected vertices";
    case "disconnected":
      return "no curvature (disconnected)";
    case "pending":
      return "computing…";
    case "error":
      return `service error: ${core.status.message}`;
    case "report": {
      const r = core.status.report;
      const badges = [
        r.bm_sharp ? "BM-sharp" : null,
        r.self_centered ? "self-centered" : null,
        r.antipodal ? "antipodal" : null,
        r.constant_curvature ? "constant" : null,
      ]
        .filter(Boolean)
        .join(" · ");
      return (
        `total ${r.total} (${r.total_decimal})  |  diameter ${r.diameter}` +
        `  |  regime ${r.regime}` +
        (badges ? `  |  ${badges}` : "")
      );
    }
  }
}
