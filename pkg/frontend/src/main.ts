/**
 * Puzzle app: pick a challenge, click vertices/edges, submit moves, undo.
 * All legality lives on the server; this client only renders verdicts.
 */

import { MoveRejected, PuzzleApi, type Move, type SessionState } from './api.js';
import {
  acceptMove,
  beginMove,
  clearSelection,
  filterMoves,
  initialBoard,
  networkFailure,
  offeredMoves,
  rollbackMove,
  selectEdge,
  toggleVertex,
  type BoardState,
} from './state.js';
import { renderGraph, renderStatus } from './render.js';

interface Challenge {
  name: string;
  start: string;
  goal: 'point' | { catalog: string };
  blurb: string;
}

const CHALLENGES: Challenge[] = [
  { name: 'collapse K_3', start: 'K_3', goal: 'point', blurb: 'two contractions win' },
  {
    name: 'C_6 to a point',
    start: 'C_6',
    goal: 'point',
    blurb: 'no contraction is legal on a circle; thicken first',
  },
  { name: 'grow C_5 into C_6', start: 'C_5', goal: { catalog: 'C_6' }, blurb: 'three moves suffice' },
  {
    name: 'octahedron to icosahedron',
    start: 'octahedron',
    goal: { catalog: 'icosahedron' },
    blurb: 'side-by-side marathon',
  },
];

const api = new PuzzleApi(
  (window as unknown as { SCX_API?: string }).SCX_API ?? 'http://127.0.0.1:8023',
);

let board: BoardState | null = null;
let sessionId = '';
let paletteQuery = '';

const boardSvg = document.getElementById('board') as unknown as SVGSVGElement;
const targetSvg = document.getElementById('target') as unknown as SVGSVGElement;
const statusBox = document.getElementById('status') as HTMLElement;
const paletteBox = document.getElementById('palette') as HTMLElement;
const offersBox = document.getElementById('offers') as HTMLElement;
const pickerBox = document.getElementById('picker') as HTMLElement;

function describe(move: Move): string {
  switch (move.kind) {
    case 'Contract':
      return `contract vertex ${move.v}`;
    case 'Expand':
      return `expand over {${move.attach.join(', ')}}`;
    case 'EdgeRefine':
      return `refine edge ${move.a}-${move.b}`;
    case 'EdgeRemove':
      return `remove edge ${move.a}-${move.b}`;
  }
}

async function refreshLegal(): Promise<Move[]> {
  return api.legalMoves(sessionId);
}

function redraw(): void {
  if (!board) return;
  renderGraph(boardSvg, board.shown, board.selection, sessionId, {
    onVertexClick: (v) => {
      if (!board || board.pending) return;
      board = toggleVertex(board, v);
      redraw();
    },
    onEdgeClick: (a, b) => {
      if (!board || board.pending) return;
      board = selectEdge(board, a, b);
      redraw();
    },
  });
  const goal = board.acknowledged.goal;
  if (goal !== 'point') {
    targetSvg.style.display = '';
    renderGraph(targetSvg, goal.target, { vertices: [], edge: null }, 'target', {
      onVertexClick: () => {},
      onEdgeClick: () => {},
    });
  } else {
    targetSvg.style.display = 'none';
  }
  renderStatus(statusBox, board);
  renderOffers();
  renderPalette();
}

function renderOffers(): void {
  offersBox.innerHTML = '';
  if (!board) return;
  const offers = offeredMoves(board);
  if (board.selection.vertices.length === 0 && board.selection.edge === null) {
    offersBox.textContent = 'select a vertex, several vertices, or an edge';
    return;
  }
  if (offers.length === 0) {
    offersBox.textContent = 'no legal move for this selection';
  }
  for (const move of offers) {
    const btn = document.createElement('button');
    btn.textContent = describe(move);
    btn.addEventListener('click', () => void submit(move));
    offersBox.appendChild(btn);
  }
  const clear = document.createElement('button');
  clear.textContent = 'clear selection';
  clear.addEventListener('click', () => {
    if (board) {
      board = clearSelection(board);
      redraw();
    }
  });
  offersBox.appendChild(clear);
}

function renderPalette(): void {
  paletteBox.innerHTML = '';
  if (!board) return;
  const input = document.createElement('input');
  input.placeholder = 'filter moves';
  input.value = paletteQuery;
  input.addEventListener('input', () => {
    paletteQuery = input.value;
    renderPalette();
  });
  paletteBox.appendChild(input);
  for (const move of filterMoves(board.legalMoves, paletteQuery, 50)) {
    const btn = document.createElement('button');
    btn.textContent = describe(move);
    btn.addEventListener('click', () => void submit(move));
    paletteBox.appendChild(btn);
  }
}

async function submit(move: Move): Promise<void> {
  if (!board || board.pending) return;
  const optimistic = beginMove(board, move);
  if (!optimistic) return;
  board = optimistic;
  redraw();
  try {
    const state = await api.submitMove(sessionId, move);
    board = acceptMove(board, state, await refreshLegal());
  } catch (err) {
    if (err instanceof MoveRejected) {
      board = rollbackMove(board, err.reason);
    } else {
      board = networkFailure(board, err instanceof Error ? err.message : String(err));
    }
  }
  redraw();
}

async function undo(): Promise<void> {
  if (!board || board.pending) return;
  try {
    const state = await api.undo(sessionId);
    board = acceptMove(board, state, await refreshLegal());
  } catch (err) {
    board = networkFailure(board, err instanceof Error ? err.message : String(err));
  }
  redraw();
}

async function start(challenge: Challenge): Promise<void> {
  try {
    const state: SessionState = await api.createSession({
      catalog: challenge.start,
      goal: challenge.goal,
    });
    sessionId = state.id;
    board = initialBoard(state, await api.legalMoves(sessionId));
  } catch (err) {
    statusBox.textContent = `could not reach the engine: ${err instanceof Error ? err.message : err}`;
    return;
  }
  redraw();
}

function buildPicker(): void {
  for (const challenge of CHALLENGES) {
    const btn = document.createElement('button');
    btn.textContent = `${challenge.name} (${challenge.blurb})`;
    btn.addEventListener('click', () => void start(challenge));
    pickerBox.appendChild(btn);
  }
  const undoBtn = document.createElement('button');
  undoBtn.textContent = 'undo';
  undoBtn.addEventListener('click', () => void undo());
  pickerBox.appendChild(undoBtn);
}

buildPicker();
void start(CHALLENGES[0]);
