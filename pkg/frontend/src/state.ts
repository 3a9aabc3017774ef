/**
 * Board state: the last server-acknowledged session snapshot plus an optional
 * optimistic overlay while one move is in flight.
 *
 * The board never mutates graph state on its own authority; an optimistic
 * move is displayed immediately but rolled back the moment the server
 * answers 409.  At most one mutation is in flight at a time.
 */

import type { GraphJson, Move, SessionState } from './api.js';

export interface Selection {
  vertices: number[];
  edge: [number, number] | null;
}

export interface BoardState {
  acknowledged: SessionState;
  /** Move awaiting the server verdict, if any. */
  pending: Move | null;
  /** Graph shown while pending (locally predicted), else the acknowledged one. */
  shown: GraphJson;
  selection: Selection;
  legalMoves: Move[];
  banner: string | null;
}

export function initialBoard(state: SessionState, legalMoves: Move[] = []): BoardState {
  return {
    acknowledged: state,
    pending: null,
    shown: state.graph,
    selection: { vertices: [], edge: null },
    legalMoves,
    banner: null,
  };
}

/** Locally predict a move's effect so the board feels immediate. */
export function predictGraph(graph: GraphJson, move: Move): GraphJson {
  const edges = graph.edges.map((e) => [...e] as [number, number]);
  if (move.kind === 'Contract') {
    const remap = (v: number) => (v > move.v ? v - 1 : v);
    return {
      n: graph.n - 1,
      edges: edges
        .filter(([a, b]) => a !== move.v && b !== move.v)
        .map(([a, b]) => [remap(a), remap(b)] as [number, number]),
    };
  }
  if (move.kind === 'Expand') {
    const w = graph.n;
    return { n: graph.n + 1, edges: [...edges, ...move.attach.map((u) => [u, w] as [number, number])] };
  }
  if (move.kind === 'EdgeRefine') {
    const w = graph.n;
    const adjacent = new Set<number>();
    for (const [a, b] of edges) {
      if (a === move.a || a === move.b) adjacent.add(b);
      if (b === move.a || b === move.b) adjacent.add(a);
    }
    const common = [...adjacent].filter((u) =>
      edges.some(([a, b]) => (a === u && (b === move.a || b === move.b)) || (b === u && (a === move.a || a === move.b))),
    );
    const commonBoth = common.filter(
      (u) =>
        edges.some(([a, b]) => (a === u && b === move.a) || (b === u && a === move.a)) &&
        edges.some(([a, b]) => (a === u && b === move.b) || (b === u && a === move.b)),
    );
    const kept = edges.filter(([a, b]) => !(a === move.a && b === move.b) && !(a === move.b && b === move.a));
    const star: [number, number][] = [[move.a, w], [move.b, w], ...commonBoth.map((u) => [u, w] as [number, number])];
    return { n: graph.n + 1, edges: [...kept, ...star] };
  }
  // EdgeRemove
  return {
    n: graph.n,
    edges: edges.filter(([a, b]) => !(a === move.a && b === move.b) && !(a === move.b && b === move.a)),
  };
}

/** Begin an optimistic move; returns null if one is already pending. */
export function beginMove(board: BoardState, move: Move): BoardState | null {
  if (board.pending !== null) return null;
  return {
    ...board,
    pending: move,
    shown: predictGraph(board.acknowledged.graph, move),
    banner: null,
  };
}

/** Server accepted: the acknowledged state advances. */
export function acceptMove(board: BoardState, state: SessionState, legalMoves: Move[]): BoardState {
  return {
    acknowledged: state,
    pending: null,
    shown: state.graph,
    selection: { vertices: [], edge: null },
    legalMoves,
    banner: null,
  };
}

/** Server 409: drop the optimistic overlay and surface the verdict. */
export function rollbackMove(board: BoardState, reason: string): BoardState {
  return {
    ...board,
    pending: null,
    shown: board.acknowledged.graph,
    banner: `rejected: ${reason}`,
  };
}

/** Network trouble: same rollback, different banner. */
export function networkFailure(board: BoardState, message: string): BoardState {
  return {
    ...board,
    pending: null,
    shown: board.acknowledged.graph,
    banner: `network error: ${message}`,
  };
}

export function toggleVertex(board: BoardState, v: number): BoardState {
  const vertices = board.selection.vertices.includes(v)
    ? board.selection.vertices.filter((u) => u !== v)
    : [...board.selection.vertices, v];
  return { ...board, selection: { vertices, edge: null } };
}

export function selectEdge(board: BoardState, a: number, b: number): BoardState {
  return { ...board, selection: { vertices: [], edge: [Math.min(a, b), Math.max(a, b)] } };
}

export function clearSelection(board: BoardState): BoardState {
  return { ...board, selection: { vertices: [], edge: null } };
}

function sameMove(a: Move, b: Move): boolean {
  if (a.kind !== b.kind) return false;
  if (a.kind === 'Contract' && b.kind === 'Contract') return a.v === b.v;
  if (a.kind === 'Expand' && b.kind === 'Expand')
    return a.attach.length === b.attach.length && [...a.attach].sort().join() === [...b.attach].sort().join();
  if ((a.kind === 'EdgeRefine' || a.kind === 'EdgeRemove') && a.kind === b.kind) {
    const x = a as { a: number; b: number };
    const y = b as { a: number; b: number };
    return (x.a === y.a && x.b === y.b) || (x.a === y.b && x.b === y.a);
  }
  return false;
}

/** Moves the server listed as legal that match the current selection. */
export function offeredMoves(board: BoardState): Move[] {
  const { vertices, edge } = board.selection;
  const offers: Move[] = [];
  if (edge) {
    offers.push({ kind: 'EdgeRefine', a: edge[0], b: edge[1] });
    offers.push({ kind: 'EdgeRemove', a: edge[0], b: edge[1] });
  } else if (vertices.length === 1) {
    offers.push({ kind: 'Contract', v: vertices[0] });
    offers.push({ kind: 'Expand', attach: [...vertices] });
  } else if (vertices.length > 1) {
    offers.push({ kind: 'Expand', attach: [...vertices] });
  }
  return offers.filter((offer) => board.legalMoves.some((legal) => sameMove(offer, legal)));
}

/** Search filter for the move palette (the palette shows at most 50). */
export function filterMoves(moves: Move[], query: string, cap = 50): Move[] {
  const q = query.trim().toLowerCase();
  const hits = q
    ? moves.filter((m) => JSON.stringify(m).toLowerCase().includes(q))
    : moves;
  return hits.slice(0, cap);
}
