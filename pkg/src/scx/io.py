"""File formats: ``.scx`` complexes, ``.edg`` graphs, DOT export, and the
JSON encodings shared by the CLI and the HTTP API."""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import Complex, from_facets, validate
from .errors import InvalidInput
from .graphs import Graph, graph_from_edges


def parse_scx(text: str, facets: bool = False) -> Complex:
    """One set per line, comma-separated integers; ``#`` starts a comment.
    With ``facets=True`` the downward closure of the lines is taken."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
        except ValueError:
            raise InvalidInput(f"line {lineno}: expected integers, got {raw!r}")
    if not rows:
        raise InvalidInput("no sets in input")
    return from_facets(rows) if facets else validate(rows)


def format_scx(G: Complex) -> str:
    return "\n".join(",".join(map(str, s)) for s in G.sets) + "\n"


def complex_from_json(obj: dict) -> Complex:
    if "sets" in obj:
        return validate(obj["sets"])
    if "facets" in obj:
        return from_facets(obj["facets"])
    raise InvalidInput('complex JSON needs a "sets" or "facets" key')


def complex_to_json(G: Complex) -> dict:
    return {"sets": [list(s) for s in G.sets]}


def parse_edg(text: str) -> Graph:
    """Header ``n <count>`` then one ``a b`` edge per line."""
    lines = [l.split("#", 1)[0].strip() for l in text.splitlines()]
    lines = [l for l in lines if l]
    if not lines or not lines[0].startswith("n"):
        raise InvalidInput('edge format starts with a header line "n <count>"')
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise InvalidInput(f"bad header {lines[0]!r}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInput(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, edges)


def format_edg(A: Graph) -> str:
    lines = [f"n {A.n}"] + [f"{a} {b}" for a, b in A.edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(A: Graph) -> dict:
    out = {"n": A.n, "edges": [[a, b] for a, b in A.edges()]}
    if A.labels is not None:
        out["labels"] = [list(l) if isinstance(l, tuple) else l for l in A.labels]
    return out


def graph_from_json(obj: dict) -> Graph:
    if "n" not in obj or "edges" not in obj:
        raise InvalidInput('graph JSON needs "n" and "edges" keys')
    labels = obj.get("labels")
    if labels is not None:
        labels = tuple(tuple(l) if isinstance(l, list) else l for l in labels)
    try:
        return graph_from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]], labels)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed graph JSON: {exc}")


def graph_to_dot(A: Graph, name: str = "G") -> str:
    """Plain DOT text; labels become node labels, no coordinates assigned."""
    lines = [f"graph {name} {{"]
    for v in range(A.n):
        if A.labels is not None:
            text = ",".join(map(str, A.labels[v])) if isinstance(A.labels[v], tuple) else str(A.labels[v])
            lines.append(f'  {v} [label="{text}"];')
        else:
            lines.append(f"  {v};")
    for a, b in A.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def move_to_json(move) -> dict:
    from .homotopy import Contract, EdgeRefine, EdgeRemove, Expand

    if isinstance(move, Contract):
        return {"kind": "Contract", "v": move.v}
    if isinstance(move, Expand):
        return {"kind": "Expand", "attach": list(move.attach)}
    if isinstance(move, EdgeRefine):
        return {"kind": "EdgeRefine", "a": move.a, "b": move.b}
    if isinstance(move, EdgeRemove):
        return {"kind": "EdgeRemove", "a": move.a, "b": move.b}
    raise InvalidInput(f"unknown move {move!r}")


def move_from_json(obj: dict):
    from .homotopy import Contract, EdgeRefine, EdgeRemove, Expand

    kind = obj.get("kind")
    try:
        if kind == "Contract":
            return Contract(int(obj["v"]))
        if kind == "Expand":
            return Expand(tuple(int(v) for v in obj["attach"]))
        if kind == "EdgeRefine":
            return EdgeRefine(int(obj["a"]), int(obj["b"]))
        if kind == "EdgeRemove":
            return EdgeRemove(int(obj["a"]), int(obj["b"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed move: {exc}")
    raise InvalidInput(f"unknown move kind {kind!r}")


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def trace_to_json(trace) -> dict:
    moves = []
    for step in trace.steps:
        entry = move_to_json(step.move)
        entry["certificate"] = {
            k: _jsonable(v) for k, v in step.certificate.items() if k != "kind"
        }
        moves.append(entry)
    return {
        "start": graph_to_json(Graph(trace.start.adj)),
        "moves": moves,
        "end": graph_to_json(Graph(trace.end.adj)),
    }


def trace_from_json(obj: dict):
    """Rebuild a trace, re-deriving every certificate; a recorded certificate
    that does not match the recomputed one is rejected."""
    from .homotopy import HomotopyTrace, TraceStep, apply_move
    from .errors import CertificateFailure

    start = graph_from_json(obj["start"])
    cur = start
    steps = []
    for k, entry in enumerate(obj["moves"]):
        move = move_from_json(entry)
        cur, cert = apply_move(cur, move)
        recorded = {
            key: tuple(v) if isinstance(v, list) else v
            for key, v in entry.get("certificate", {}).items()
        }
        expected = {key: v for key, v in cert.items() if key != "kind"}
        if recorded and recorded != expected:
            raise CertificateFailure(k, "recorded certificate does not match")
        steps.append(TraceStep(move, cert))
    end = graph_from_json(obj["end"])
    if cur.adj != end.adj:
        raise CertificateFailure(len(steps), "trace does not land on its end graph")
    return HomotopyTrace(start, tuple(steps), end)


def load_complex(path: str | Path, facets: bool = False) -> Complex:
    """Read ``.scx`` or JSON; pipes and fd paths are sniffed by content."""
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json" or text.lstrip().startswith("{"):
        return complex_from_json(json.loads(text))
    return parse_scx(text, facets=facets)


def load_graph(path: str | Path) -> Graph:
    """Read ``.edg`` or JSON; pipes and fd paths are sniffed by content."""
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json" or text.lstrip().startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_edg(text)
