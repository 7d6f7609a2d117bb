/**
 * Quiver geometry and rendering.
 *
 * Everything here is pure: the scene is derived from the seed payload and
 * the preset layout hints, and the renderer emits an SVG string. The app
 * injects that string and listens for clicks via the data-vertex
 * attributes, so no algebraic state ever lives in the DOM.
 */

import { QuiverData } from "./api";

export interface PlacedVertex {
  /** 1-based, matching the API's vertex numbering. */
  index: number;
  label: string;
  x: number;
  y: number;
  frozen: boolean;
}

export interface QuiverArrow {
  /** 1-based source and target vertices. */
  from: number;
  to: number;
  /** Multiplicity |b_{from,to}| read from the exchange matrix. */
  forward: number;
  /** |b_{to,from}|; 0 when the matrix has no mirror entry (frozen rows). */
  backward: number;
}

export interface QuiverScene {
  width: number;
  height: number;
  vertices: PlacedVertex[];
  arrows: QuiverArrow[];
}

const NODE_RADIUS = 17;
const BOX_HALF_HEIGHT = 14;

/**
 * One arrow per connected pair. Between two mutable vertices exactly one
 * direction carries the positive entry, so each pair is emitted once. A
 * frozen vertex only has a matrix row, so its sign decides the direction.
 */
export function quiverArrows(quiver: QuiverData): QuiverArrow[] {
  const { n, m, entries } = quiver;
  const arrows: QuiverArrow[] = [];
  for (let i = 0; i < m; i++) {
    for (let j = 0; j < n; j++) {
      const e = entries[i][j];
      if (e === 0) {
        continue;
      }
      if (i < n) {
        if (e > 0) {
          arrows.push({ from: i + 1, to: j + 1, forward: e, backward: Math.abs(entries[j][i]) });
        }
      } else if (e > 0) {
        arrows.push({ from: i + 1, to: j + 1, forward: e, backward: 0 });
      } else {
        arrows.push({ from: j + 1, to: i + 1, forward: -e, backward: 0 });
      }
    }
  }
  return arrows;
}

/** "" for a plain arrow, "2" for equal multiplicities, "1,2" when they differ. */
export function arrowLabel(arrow: QuiverArrow): string {
  const { forward, backward } = arrow;
  if (backward === 0 || backward === forward) {
    return forward === 1 ? "" : String(forward);
  }
  return `${forward},${backward}`;
}

/**
 * Place vertices in the viewport. When the preset supplies coordinates
 * for every label they are scaled in uniformly (the hints mirror the
 * usual figures, so their shape is preserved); otherwise the vertices
 * fall back to a circle.
 */
export function placeVertices(
  quiver: QuiverData,
  layout: Record<string, [number, number]>,
  width: number,
  height: number,
  pad = 46,
): PlacedVertex[] {
  const hints = quiver.labels.map((label) => layout[label]);
  if (hints.every((p) => Array.isArray(p) && p.length === 2)) {
    return scaleHints(quiver, hints as Array<[number, number]>, width, height, pad);
  }
  return circleFallback(quiver, width, height, pad);
}

function scaleHints(
  quiver: QuiverData,
  hints: Array<[number, number]>,
  width: number,
  height: number,
  pad: number,
): PlacedVertex[] {
  const xs = hints.map((p) => p[0]);
  const ys = hints.map((p) => p[1]);
  const minX = Math.min(...xs);
  const minY = Math.min(...ys);
  const spanX = Math.max(...xs) - minX;
  const spanY = Math.max(...ys) - minY;
  const innerW = width - 2 * pad;
  const innerH = height - 2 * pad;
  const scale = Math.min(innerW / Math.max(spanX, 1e-9), innerH / Math.max(spanY, 1e-9));
  const offsetX = pad + (innerW - spanX * scale) / 2;
  const offsetY = pad + (innerH - spanY * scale) / 2;
  return quiver.labels.map((label, i) => ({
    index: i + 1,
    label,
    x: offsetX + (hints[i][0] - minX) * scale,
    y: offsetY + (hints[i][1] - minY) * scale,
    frozen: quiver.frozen[i],
  }));
}

function circleFallback(quiver: QuiverData, width: number, height: number, pad: number): PlacedVertex[] {
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) / 2 - pad;
  return quiver.labels.map((label, i) => {
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / quiver.m;
    return {
      index: i + 1,
      label,
      x: cx + radius * Math.cos(angle),
      y: cy + radius * Math.sin(angle),
      frozen: quiver.frozen[i],
    };
  });
}

export function buildScene(
  quiver: QuiverData,
  layout: Record<string, [number, number]>,
  width = 560,
  height = 420,
): QuiverScene {
  return {
    width,
    height,
    vertices: placeVertices(quiver, layout, width, height),
    arrows: quiverArrows(quiver),
  };
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function boxHalfWidth(label: string): number {
  return Math.max(18, label.length * 4.6 + 8);
}

/** Distance from a vertex center to its outline along the unit vector (ux, uy). */
function outlineDistance(vertex: PlacedVertex, ux: number, uy: number): number {
  if (!vertex.frozen) {
    return NODE_RADIUS;
  }
  const tx = Math.abs(ux) > 1e-9 ? boxHalfWidth(vertex.label) / Math.abs(ux) : Infinity;
  const ty = Math.abs(uy) > 1e-9 ? BOX_HALF_HEIGHT / Math.abs(uy) : Infinity;
  return Math.min(tx, ty);
}

function arrowSvg(arrow: QuiverArrow, byIndex: Map<number, PlacedVertex>): string {
  const a = byIndex.get(arrow.from);
  const b = byIndex.get(arrow.to);
  if (!a || !b) {
    return "";
  }
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const length = Math.hypot(dx, dy) || 1;
  const ux = dx / length;
  const uy = dy / length;
  const x1 = a.x + ux * (outlineDistance(a, ux, uy) + 2);
  const y1 = a.y + uy * (outlineDistance(a, ux, uy) + 2);
  const x2 = b.x - ux * (outlineDistance(b, ux, uy) + 7);
  const y2 = b.y - uy * (outlineDistance(b, ux, uy) + 7);
  const line =
    `<line class="arrow" data-mult="${arrow.forward}" x1="${round(x1)}" y1="${round(y1)}"` +
    ` x2="${round(x2)}" y2="${round(y2)}" marker-end="url(#arrowhead)"/>`;
  const label = arrowLabel(arrow);
  if (!label) {
    return line;
  }
  const mx = (x1 + x2) / 2 - uy * 10;
  const my = (y1 + y2) / 2 + ux * 10;
  return line + `<text class="arrow-label" x="${round(mx)}" y="${round(my)}">${label}</text>`;
}

function vertexSvg(vertex: PlacedVertex): string {
  const label = escapeXml(vertex.label);
  const common = `data-vertex="${vertex.index}"`;
  if (vertex.frozen) {
    const hw = boxHalfWidth(vertex.label);
    return (
      `<g class="vertex frozen" ${common}>` +
      `<rect x="${round(vertex.x - hw)}" y="${round(vertex.y - BOX_HALF_HEIGHT)}"` +
      ` width="${round(2 * hw)}" height="${2 * BOX_HALF_HEIGHT}" rx="3"/>` +
      `<text x="${round(vertex.x)}" y="${round(vertex.y)}">${label}</text></g>`
    );
  }
  return (
    `<g class="vertex mutable" ${common}>` +
    `<circle cx="${round(vertex.x)}" cy="${round(vertex.y)}" r="${NODE_RADIUS}"/>` +
    `<text x="${round(vertex.x)}" y="${round(vertex.y)}">${label}</text></g>`
  );
}

function round(value: number): string {
  return (Math.round(value * 10) / 10).toString();
}

export function quiverSvg(scene: QuiverScene): string {
  const byIndex = new Map(scene.vertices.map((v) => [v.index, v]));
  const arrows = scene.arrows.map((arrow) => arrowSvg(arrow, byIndex)).join("");
  const vertices = scene.vertices.map(vertexSvg).join("");
  return (
    `<svg viewBox="0 0 ${scene.width} ${scene.height}" xmlns="http://www.w3.org/2000/svg">` +
    `<defs><marker id="arrowhead" markerWidth="9" markerHeight="7" refX="8" refY="3.5" orient="auto">` +
    `<path d="M0,0 L9,3.5 L0,7 z"/></marker></defs>` +
    arrows +
    vertices +
    `</svg>`
  );
}
