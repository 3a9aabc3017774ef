/** SVG rendering of a board, with click hooks for vertices and edges. */

import type { GraphJson } from './api.js';
import type { BoardState } from './state.js';
import { layout, seedFromString } from './layout.js';

const SVG = 'http://www.w3.org/2000/svg';

export interface RenderHooks {
  onVertexClick(v: number): void;
  onEdgeClick(a: number, b: number): void;
}

export function renderGraph(
  svg: SVGSVGElement,
  graph: GraphJson,
  selection: { vertices: number[]; edge: [number, number] | null },
  seed: string,
  hooks: RenderHooks,
  size = 420,
): void {
  svg.innerHTML = '';
  svg.setAttribute('viewBox', `0 0 ${size} ${size}`);
  const pos = layout(graph, seedFromString(seed)).map((p) => ({
    x: p.x * size,
    y: p.y * size,
  }));
  for (const [a, b] of graph.edges) {
    const line = document.createElementNS(SVG, 'line');
    line.setAttribute('x1', String(pos[a].x));
    line.setAttribute('y1', String(pos[a].y));
    line.setAttribute('x2', String(pos[b].x));
    line.setAttribute('y2', String(pos[b].y));
    const selected =
      selection.edge !== null &&
      Math.min(a, b) === selection.edge[0] &&
      Math.max(a, b) === selection.edge[1];
    line.setAttribute('class', selected ? 'edge selected' : 'edge');
    line.addEventListener('click', () => hooks.onEdgeClick(a, b));
    svg.appendChild(line);
  }
  for (let v = 0; v < graph.n; v++) {
    const g = document.createElementNS(SVG, 'g');
    const circle = document.createElementNS(SVG, 'circle');
    circle.setAttribute('cx', String(pos[v].x));
    circle.setAttribute('cy', String(pos[v].y));
    circle.setAttribute('r', '11');
    circle.setAttribute(
      'class',
      selection.vertices.includes(v) ? 'vertex selected' : 'vertex',
    );
    circle.addEventListener('click', () => hooks.onVertexClick(v));
    const text = document.createElementNS(SVG, 'text');
    text.setAttribute('x', String(pos[v].x));
    text.setAttribute('y', String(pos[v].y + 4));
    text.setAttribute('text-anchor', 'middle');
    text.setAttribute('class', 'vertex-label');
    text.textContent = String(v);
    g.appendChild(circle);
    g.appendChild(text);
    svg.appendChild(g);
  }
}

export function renderStatus(
  container: HTMLElement,
  board: BoardState,
): void {
  const { acknowledged, banner, pending } = board;
  const goal =
    acknowledged.goal === 'point'
      ? 'reduce to a single vertex'
      : 'reach the target graph';
  container.innerHTML = '';
  const rows: [string, string][] = [
    ['goal', goal],
    ['vertices', String(board.shown.n)],
    ['Euler characteristic', String(acknowledged.chi)],
    ['moves played', String(acknowledged.history_length)],
    ['status', acknowledged.solved ? 'solved!' : pending ? 'waiting for verdict' : 'your move'],
  ];
  for (const [k, v] of rows) {
    const div = document.createElement('div');
    div.className = 'status-row';
    div.textContent = `${k}: ${v}`;
    container.appendChild(div);
  }
  if (banner) {
    const div = document.createElement('div');
    div.className = 'banner';
    div.textContent = banner;
    container.appendChild(div);
  }
}
