import { describe, expect, it } from 'vitest';

import type { Move, SessionState } from '../src/api.js';
import {
  acceptMove,
  beginMove,
  filterMoves,
  initialBoard,
  networkFailure,
  offeredMoves,
  predictGraph,
  rollbackMove,
  selectEdge,
  toggleVertex,
} from '../src/state.js';

const c4: SessionState = {
  id: 's1',
  graph: { n: 4, edges: [[0, 1], [1, 2], [2, 3], [0, 3]] },
  chi: 0,
  goal: 'point',
  history_length: 0,
  solved: false,
};

describe('predictGraph', () => {
  it('contract removes the vertex and renumbers', () => {
    const g = predictGraph({ n: 3, edges: [[0, 1], [1, 2]] }, { kind: 'Contract', v: 0 });
    expect(g.n).toBe(2);
    expect(g.edges).toEqual([[0, 1]]);
  });

  it('expand appends a vertex joined to the attachment', () => {
    const g = predictGraph(c4.graph, { kind: 'Expand', attach: [0, 1] });
    expect(g.n).toBe(5);
    expect(g.edges).toContainEqual([0, 4]);
    expect(g.edges).toContainEqual([1, 4]);
  });

  it('edge refinement replaces the edge by a subdivision vertex', () => {
    const g = predictGraph(c4.graph, { kind: 'EdgeRefine', a: 0, b: 1 });
    expect(g.n).toBe(5);
    expect(g.edges).not.toContainEqual([0, 1]);
    expect(g.edges).toContainEqual([0, 4]);
    expect(g.edges).toContainEqual([1, 4]);
  });

  it('refinement wires the new vertex to common neighbors', () => {
    const triangle = { n: 3, edges: [[0, 1], [1, 2], [0, 2]] as [number, number][] };
    const g = predictGraph(triangle, { kind: 'EdgeRefine', a: 0, b: 1 });
    expect(g.edges).toContainEqual([2, 3]);
  });

  it('edge removal drops exactly one edge', () => {
    const g = predictGraph(c4.graph, { kind: 'EdgeRemove', a: 1, b: 2 });
    expect(g.n).toBe(4);
    expect(g.edges).toHaveLength(3);
  });
});

describe('optimistic board flow', () => {
  it('begin/accept advances the acknowledged state', () => {
    let board = initialBoard(c4, [{ kind: 'Expand', attach: [0, 1] }]);
    const move: Move = { kind: 'Expand', attach: [0, 1] };
    board = beginMove(board, move)!;
    expect(board.pending).toEqual(move);
    expect(board.shown.n).toBe(5);
    const next: SessionState = { ...c4, graph: { n: 5, edges: [] }, history_length: 1 };
    board = acceptMove(board, next, []);
    expect(board.pending).toBeNull();
    expect(board.acknowledged.history_length).toBe(1);
  });

  it('rollback restores the acknowledged graph and shows the verdict', () => {
    let board = initialBoard(c4, []);
    board = beginMove(board, { kind: 'Contract', v: 2 })!;
    expect(board.shown.n).toBe(3);
    board = rollbackMove(board, 'unit sphere of vertex 2 is not contractible');
    expect(board.shown).toEqual(c4.graph);
    expect(board.pending).toBeNull();
    expect(board.banner).toContain('not contractible');
  });

  it('only one move may be in flight', () => {
    let board = initialBoard(c4, []);
    board = beginMove(board, { kind: 'Expand', attach: [0] })!;
    expect(beginMove(board, { kind: 'Expand', attach: [1] })).toBeNull();
  });

  it('network failures also roll back', () => {
    let board = initialBoard(c4, []);
    board = beginMove(board, { kind: 'Expand', attach: [0] })!;
    board = networkFailure(board, 'connection refused');
    expect(board.shown).toEqual(c4.graph);
    expect(board.banner).toContain('network error');
  });
});

describe('selection and offers', () => {
  it('offers only server-approved moves for the selection', () => {
    let board = initialBoard(c4, [
      { kind: 'Expand', attach: [0] },
      { kind: 'EdgeRefine', a: 0, b: 1 },
    ]);
    board = toggleVertex(board, 0);
    const offers = offeredMoves(board);
    expect(offers).toEqual([{ kind: 'Expand', attach: [0] }]);
    board = selectEdge(board, 1, 0);
    expect(offeredMoves(board)).toEqual([{ kind: 'EdgeRefine', a: 0, b: 1 }]);
  });

  it('toggling a vertex twice clears it', () => {
    let board = initialBoard(c4, []);
    board = toggleVertex(board, 2);
    board = toggleVertex(board, 2);
    expect(board.selection.vertices).toEqual([]);
  });

  it('palette filter caps at fifty and matches text', () => {
    const moves: Move[] = Array.from({ length: 80 }, (_, i) => ({ kind: 'Contract', v: i }));
    expect(filterMoves(moves, '')).toHaveLength(50);
    expect(filterMoves(moves, '"v":7}')).toEqual([{ kind: 'Contract', v: 7 }]);
  });
});
