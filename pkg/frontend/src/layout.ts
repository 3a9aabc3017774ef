/**
 * Deterministic force-directed layout.  Positions are presentation only; the
 * same seed always produces the same embedding so replays look stable.
 */

import type { GraphJson } from './api.js';

export interface Point {
  x: number;
  y: number;
}

/** Small deterministic PRNG (mulberry32). */
export function rng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function seedFromString(text: string): number {
  let h = 2166136261;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 16777619);
  }
  return h >>> 0;
}

/**
 * Spring embedding: repulsion between all pairs, attraction along edges,
 * fixed iteration count, centered and scaled into the unit square.
 */
export function layout(graph: GraphJson, seed: number, iterations = 150): Point[] {
  const n = graph.n;
  if (n === 0) return [];
  const rand = rng(seed);
  const pos: Point[] = Array.from({ length: n }, () => ({
    x: rand() * 2 - 1,
    y: rand() * 2 - 1,
  }));
  if (n === 1) return [{ x: 0.5, y: 0.5 }];
  const k = 1 / Math.sqrt(n);
  for (let step = 0; step < iterations; step++) {
    const temp = 0.1 * (1 - step / iterations) + 0.01;
    const disp: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i].x - pos[j].x;
        let dy = pos[i].y - pos[j].y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-9) {
          dx = 1e-4 * (1 + i - j);
          dy = 1e-4;
          d2 = dx * dx + dy * dy;
        }
        const rep = (k * k) / d2;
        disp[i].x += dx * rep;
        disp[i].y += dy * rep;
        disp[j].x -= dx * rep;
        disp[j].y -= dy * rep;
      }
    }
    for (const [a, b] of graph.edges) {
      const dx = pos[a].x - pos[b].x;
      const dy = pos[a].y - pos[b].y;
      const d = Math.sqrt(dx * dx + dy * dy) || 1e-6;
      const att = (d * d) / k;
      disp[a].x -= (dx / d) * att * 0.05;
      disp[a].y -= (dy / d) * att * 0.05;
      disp[b].x += (dx / d) * att * 0.05;
      disp[b].y += (dy / d) * att * 0.05;
    }
    for (let i = 0; i < n; i++) {
      const d = Math.sqrt(disp[i].x ** 2 + disp[i].y ** 2) || 1e-6;
      const m = Math.min(d, temp);
      pos[i].x += (disp[i].x / d) * m;
      pos[i].y += (disp[i].y / d) * m;
    }
  }
  // normalize to [0.05, 0.95]^2
  const xs = pos.map((p) => p.x);
  const ys = pos.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const clamp = (v: number) => Math.min(0.95, Math.max(0.05, v));
  return pos.map((p) => ({
    x: clamp(0.05 + (0.9 * (p.x - minX)) / spanX),
    y: clamp(0.05 + (0.9 * (p.y - minY)) / spanY),
  }));
}
