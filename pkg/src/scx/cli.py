"""Command-line front door.

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 on success, 1 on a
domain error, 2 on a usage error.  Inputs are file paths (``.scx``/``.json``
for complexes, ``.edg``/``.json`` for graphs) or catalog names.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import capacity as cap_mod
from . import catalog, complexes, graphs, homotopy, invariants
from . import io as scxio
from .errors import InvalidInput, ScxError


def _load_complex(arg: str, facets: bool = False) -> complexes.Complex:
    if Path(arg).exists():
        return scxio.load_complex(arg, facets=facets)
    if arg in catalog.COMPLEXES:
        return catalog.complex_by_name(arg)
    raise InvalidInput(f"no such file or catalog complex: {arg!r}")


def _load_graph(arg: str) -> graphs.Graph:
    if Path(arg).exists():
        return scxio.load_graph(arg)
    try:
        return catalog.graph_by_name(arg)
    except InvalidInput:
        pass
    raise InvalidInput(f"no such file or catalog graph: {arg!r}")


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _graph_out(A: graphs.Graph, args) -> None:
    if getattr(args, "dot", False):
        sys.stdout.write(scxio.graph_to_dot(A))
    elif getattr(args, "edg", False):
        sys.stdout.write(scxio.format_edg(A))
    else:
        _emit(scxio.graph_to_json(A))


def _cmd_functor(args) -> int:
    G = _load_complex(args.complex, facets=args.facets)
    A = graphs.psi(G) if args.functor == "psi" else graphs.phi(G)
    _graph_out(A, args)
    return 0


def _cmd_reconstruct(args) -> int:
    from .reconstruct import reconstruct_complex

    A = _load_graph(args.graph)
    R = reconstruct_complex(graphs.Graph(A.adj))
    sys.stdout.write(scxio.format_scx(R))
    return 0


def _cmd_invariants(args) -> int:
    try:
        A = _load_graph(args.input)
    except (ScxError, json.JSONDecodeError):
        A = None
    if A is not None:
        report = invariants.InvariantReport.for_graph(A)
        _emit(
            {
                "f_vector": list(report.f_vector),
                "chi": report.chi,
                "betti": None if report.betti is None else list(report.betti),
                "curvature": list(report.curvature),
                "sphere_dim": report.sphere_dim,
            }
        )
        return 0
    G = _load_complex(args.input, facets=args.facets)
    _emit(
        {
            "f_vector": list(G.f_vector()),
            "chi": G.euler_characteristic(),
            "betti": list(invariants.betti(G)),
        }
    )
    return 0


def _cmd_contractible(args) -> int:
    A = _load_graph(args.graph)
    _emit({"contractible": homotopy.is_contractible(A)})
    return 0


def _cmd_sphere(args) -> int:
    A = _load_graph(args.graph)
    _emit({"sphere_dim": homotopy.is_sphere(A)})
    return 0


def _cmd_reduce(args) -> int:
    A = _load_graph(args.graph)
    res = homotopy.homotopy_reduce(A, max_expansions=args.expansions)
    _emit(
        {
            "start_vertices": A.n,
            "end_vertices": res.graph.n,
            "status": res.status,
            "trace": scxio.trace_to_json(res.trace),
        }
    )
    return 0


def _cmd_psi2phi(args) -> int:
    G = _load_complex(args.complex, facets=args.facets)
    trace = homotopy.psi_to_phi_trace(G)
    _emit(scxio.trace_to_json(trace))
    return 0


def _cmd_barycentric(args) -> int:
    if Path(args.input).suffix == ".edg" or (
        not Path(args.input).exists() and _is_graph_name(args.input)
    ):
        A = _load_graph(args.input)
        trace = homotopy.barycentric_trace(A)
        _emit(scxio.trace_to_json(trace))
        return 0
    G = _load_complex(args.input, facets=args.facets)
    sys.stdout.write(scxio.format_scx(complexes.barycentric_refine(G)))
    return 0


def _is_graph_name(name: str) -> bool:
    try:
        catalog.graph_by_name(name)
        return True
    except ScxError:
        return False


def _cmd_product(args) -> int:
    if args.kind in ("phi", "psi"):
        G = _load_complex(args.a, facets=args.facets)
        H = _load_complex(args.b, facets=args.facets)
        A = graphs.phi_product(G, H) if args.kind == "phi" else graphs.psi_product(G, H)
    else:
        GA = _load_graph(args.a)
        GB = _load_graph(args.b)
        op = {
            "strong": graphs.strong_product,
            "join": graphs.zykov_join,
            "union": graphs.disjoint_union,
        }[args.kind]
        A = op(GA, GB)
    _graph_out(A, args)
    return 0


def _cmd_capacity(args) -> int:
    G = _load_complex(args.complex, facets=args.facets)
    cert = cap_mod.capacity_certificate(G)
    out = {
        "f0": cert.f0,
        "independence": cert.independence,
        "umbrella_bound": cert.umbrella_bound,
        "witness": list(cert.witness),
    }
    if cert.certified_theta is not None:
        out["certified_theta"] = cert.certified_theta
    if args.phi:
        value, witness = cap_mod.phi_capacity_1d(G)
        out["phi_lower_bound"] = value
        out["phi_witness"] = [list(s) for s in witness]
    if args.power:
        A = graphs.psi(G)
        bounds = []
        for k in range(1, args.power + 1):
            pb = cap_mod.shannon_lower(graphs.Graph(A.adj), k)
            bounds.append(
                {"power": pb.power, "independence": pb.independence, "root": pb.value}
            )
        out["power_bounds"] = bounds
    _emit(out)
    return 0


def _cmd_spectrum(args) -> int:
    G = _load_complex(args.a, facets=args.facets)
    H = _load_complex(args.b, facets=args.facets)
    ok = cap_mod.spectrum_product_check(G, H, tol=args.tol)
    _emit({"ok": ok, "tol": args.tol})
    return 0


def _cmd_aut(args) -> int:
    from .reconstruct import automorphism_group, complex_automorphisms

    try:
        A = _load_graph(args.input)
        group = automorphism_group(A)
    except (ScxError, json.JSONDecodeError):
        G = _load_complex(args.input, facets=args.facets)
        group = complex_automorphisms(G)
    _emit({"order": group.order, "generators": [list(g) for g in group.generators()]})
    return 0


def _cmd_catalog(args) -> int:
    _emit({"graphs": catalog.graph_names(), "complexes": sorted(catalog.COMPLEXES)})
    return 0


def _cmd_serve(args) -> int:
    from .server import serve

    serve(args.port, journal=args.journal)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scx", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        return sp

    for functor in ("psi", "phi"):
        sp = add(functor, _cmd_functor, help=f"{functor} graph of a complex")
        sp.set_defaults(functor=functor)
        sp.add_argument("complex")
        sp.add_argument("--facets", action="store_true", help="close the input downward")
        sp.add_argument("--dot", action="store_true")
        sp.add_argument("--edg", action="store_true")

    sp = add("reconstruct", _cmd_reconstruct, help="rebuild the complex behind a graph")
    sp.add_argument("graph")

    sp = add("invariants", _cmd_invariants, help="f-vector, Euler characteristic, betti")
    sp.add_argument("input")
    sp.add_argument("--facets", action="store_true")

    sp = add("contractible", _cmd_contractible, help="exact contractibility")
    sp.add_argument("graph")

    sp = add("sphere", _cmd_sphere, help="sphere dimension or null")
    sp.add_argument("graph")

    sp = add("homotopy-reduce", _cmd_reduce, help="greedy reduction with certificates")
    sp.add_argument("graph")
    sp.add_argument("--expansions", type=int, default=0)

    sp = add("psi2phi", _cmd_psi2phi, help="deformation trace between the two graphs")
    sp.add_argument("complex")
    sp.add_argument("--facets", action="store_true")

    sp = add("barycentric", _cmd_barycentric, help="refine a complex, or trace a graph refinement")
    sp.add_argument("input")
    sp.add_argument("--facets", action="store_true")

    sp = add("product", _cmd_product, help="products and sums")
    sp.add_argument("--kind", choices=("strong", "phi", "psi", "join", "union"), required=True)
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--facets", action="store_true")
    sp.add_argument("--dot", action="store_true")
    sp.add_argument("--edg", action="store_true")

    sp = add("capacity", _cmd_capacity, help="capacity certificate of the intersection graph")
    sp.add_argument("complex")
    sp.add_argument("--facets", action="store_true")
    sp.add_argument("--power", type=int, default=0, help="also bound via strong powers up to n")
    sp.add_argument("--phi", action="store_true", help="include the 1-dimensional incidence bound")

    sp = add("spectrum", _cmd_spectrum, help="tensor identity of product Laplacians")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--facets", action="store_true")
    sp.add_argument("--tol", type=float, default=1e-9)

    sp = add("aut", _cmd_aut, help="automorphism group order and generators")
    sp.add_argument("input")
    sp.add_argument("--facets", action="store_true")

    add("catalog", _cmd_catalog, help="list built-in graphs and complexes")

    sp = add("serve", _cmd_serve, help="run the puzzle session API")
    sp.add_argument("--port", type=int, default=8023)
    sp.add_argument("--journal", default=None, help="newline-delimited JSON journal file")

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ScxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
