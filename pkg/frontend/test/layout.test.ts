import { describe, expect, it } from 'vitest';

import { layout, rng, seedFromString } from '../src/layout.js';

const cycle = {
  n: 6,
  edges: [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]] as [number, number][],
};

describe('layout', () => {
  it('is deterministic for a fixed seed', () => {
    const a = layout(cycle, 42);
    const b = layout(cycle, 42);
    expect(a).toEqual(b);
  });

  it('different seeds give different embeddings', () => {
    const a = layout(cycle, 1);
    const b = layout(cycle, 2);
    expect(a).not.toEqual(b);
  });

  it('keeps every point inside the unit square margins', () => {
    for (const p of layout(cycle, 7)) {
      expect(p.x).toBeGreaterThanOrEqual(0.05);
      expect(p.x).toBeLessThanOrEqual(0.95);
      expect(p.y).toBeGreaterThanOrEqual(0.05);
      expect(p.y).toBeLessThanOrEqual(0.95);
    }
  });

  it('handles empty and single-vertex graphs', () => {
    expect(layout({ n: 0, edges: [] }, 3)).toEqual([]);
    expect(layout({ n: 1, edges: [] }, 3)).toEqual([{ x: 0.5, y: 0.5 }]);
  });
});

describe('prng', () => {
  it('streams are reproducible', () => {
    const a = rng(99);
    const b = rng(99);
    for (let i = 0; i < 10; i++) expect(a()).toBe(b());
  });

  it('string seeds are stable', () => {
    expect(seedFromString('session-1')).toBe(seedFromString('session-1'));
    expect(seedFromString('session-1')).not.toBe(seedFromString('session-2'));
  });
});
