"""Command-line interface: construct / aut / verify / search / reproduce /
encode / decode with stable JSON output.

Exit codes: 0 success or property holds, 1 property fails, 2 usage error,
3 resource budget exceeded.  Environment: MGRR_BUDGET overrides the
automorphism-search node budget, MGRR_PARALLEL sets sweep worker count.

Note on group names: D<n> is the dihedral group OF ORDER n (D6 = six
elements), matching the convention of the classification this tool
reproduces; many references write D_n for the dihedral group of degree n.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import codec
from .autgroup import BudgetExceeded, automorphism_group, DEFAULT_NODE_BUDGET
from .constructions import (
    ConstructionError,
    bicay,
    cayley,
    delta_cyclic,
    delta_q8,
    elementary_abelian_lift,
    section5_fixture,
    sigma_z2z2,
    theta_general,
    theta_grr,
)
from .digraph import Digraph, DigraphError
from .groups import GroupError, make_group
from .perms import cycle_notation
from .presets import PresetDataError, preset, preset_row_for
from .search import (
    REPRODUCE_TARGETS,
    SweepSpec,
    default_parallelism,
    exists_m_drr_exhaustive,
    exists_m_grr_exhaustive,
    reproduce,
)
from .verify import grr_search, theta_case_select, verify_file

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _node_budget() -> int:
    try:
        return int(os.environ.get("MGRR_BUDGET", str(DEFAULT_NODE_BUDGET)))
    except ValueError:
        return DEFAULT_NODE_BUDGET


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _emit(graph: Digraph, sidecar: dict, out: str | None) -> None:
    cert = codec.encode(graph)
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(cert + "\n")
    else:
        print(cert)
    sidecar["vertices"] = graph.n
    sidecar["vertex_convention"] = "block i, group element g -> vertex i*|G| + g"
    print(json.dumps(sidecar, sort_keys=True))


def _cmd_construct(args) -> int:
    family = args.family
    m = args.m
    if family == "delta-cyclic":
        if args.n is None:
            print("delta-cyclic needs -n", file=sys.stderr)
            return EXIT_USAGE
        g = delta_cyclic(args.n, m, args.delta)
        _emit(g, {"family": family, "n": args.n, "m": m, "delta": args.delta}, args.output)
    elif family == "delta-q8":
        g = delta_q8(m)
        _emit(g, {"family": family, "m": m}, args.output)
    elif family == "sigma-z2z2":
        g = sigma_z2z2(m)
        _emit(g, {"family": family, "m": m}, args.output)
    elif family == "theta":
        G = make_group(args.group)
        cd = preset(G, m)
        g = theta_general(G, cd) if m >= 3 else bicay(G, cd.R, cd.L, cd.S)
        _emit(g, {
            "family": family, "group": args.group, "m": m,
            "preset": preset_row_for(G).key,
            "connection_data": {"R": cd.R, "L": cd.L, "S": cd.S, "T": cd.T, "x": cd.x},
        }, args.output)
    elif family == "bicay":
        G = make_group(args.group)
        cd = preset(G, 2)
        g = bicay(G, cd.R, cd.L, cd.S)
        _emit(g, {"family": family, "group": args.group, "m": 2,
                  "connection_data": {"R": cd.R, "L": cd.L, "S": cd.S}}, args.output)
    elif family == "theta-grr":
        G = make_group(args.group)
        hit = grr_search(G)
        if hit is None:
            print(f"{args.group} admits no GRR; the GRR-based construction does not apply", file=sys.stderr)
            return EXIT_FAIL
        R, _ = hit
        sel = theta_case_select(G, R, m)
        if sel is None:
            print(f"no admissible case for m={m} over {args.group}", file=sys.stderr)
            return EXIT_FAIL
        case_id, x = sel
        g = theta_grr(G, R, x, m, case_id)
        _emit(g, {"family": family, "group": args.group, "m": m,
                  "R": R, "x": x, "case": case_id}, args.output)
    elif family == "cayley":
        G = make_group(args.group)
        R = G.subset(args.set.split(",")) if args.set else ()
        g = cayley(G, R)
        _emit(g, {"family": family, "group": args.group, "m": 1, "R": R}, args.output)
    elif family == "lift":
        rank = args.rank
        if rank < 4:
            print("lift builds E2^k from E2^(k-1) for k >= 4", file=sys.stderr)
            return EXIT_USAGE
        base = make_group(f"E2^{rank - 1}") if rank - 1 == 3 else None
        if base is None:
            print("lift chains above rank 4 exceed the order cap of this build", file=sys.stderr)
            return EXIT_USAGE
        cd = preset(base, m)
        delta = theta_general(base, cd)
        lifted_group = make_group(f"E2^{rank - 1}*C2")
        g, branch = elementary_abelian_lift(delta, lifted_group, m)
        _emit(g, {"family": family, "rank": rank, "m": m, "branch": branch}, args.output)
    elif family == "fixture":
        kind = {"z2-3drr": "z2_3drr", "z1-6drr": "z1_6drr"}.get(args.kind)
        if kind is None:
            print("fixture kind must be z2-3drr or z1-6drr", file=sys.stderr)
            return EXIT_USAGE
        g = section5_fixture(kind)
        _emit(g, {"family": family, "kind": args.kind, "m": 3 if kind == "z2_3drr" else 6}, args.output)
    else:
        print(f"unknown construct family {family!r}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _cmd_aut(args) -> int:
    g = codec.decode(_read_text(args.file))
    aut = automorphism_group(g, node_budget=_node_budget())
    orbits = aut.orbits()
    out = {
        "n": g.n,
        "directed": not g.symmetric,
        "order": str(aut.order()),
        "generators": [cycle_notation(p) for p in aut.generators],
        "orbit_sizes": sorted(len(o) for o in orbits),
        "semiregular": aut.is_semiregular(),
    }
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def _cmd_verify(args) -> int:
    G = make_group(args.group)
    g = codec.decode(_read_text(args.file))
    verdict = verify_file(G, args.m, g, group_label=args.group)
    print(json.dumps(verdict.to_dict(), sort_keys=True))
    return EXIT_OK if verdict.exists else EXIT_FAIL


def _cmd_search(args) -> int:
    spec = SweepSpec(
        args.group, args.m, directed=args.directed,
        budget_candidates=args.max_candidates,
        node_budget=_node_budget(),
        parallel=args.parallel if args.parallel else default_parallelism(),
    )
    verdict = exists_m_drr_exhaustive(spec) if args.directed else exists_m_grr_exhaustive(spec)
    print(json.dumps(verdict.to_dict(), sort_keys=True))
    if verdict.exists is None:
        return EXIT_BUDGET
    return EXIT_OK if verdict.exists else EXIT_FAIL


def _cmd_reproduce(args) -> int:
    start = time.perf_counter()
    report = reproduce(args.target, extended=args.extended,
                       parallel=args.parallel if args.parallel else default_parallelism())
    for v in report.verdicts:
        print(json.dumps(v.to_dict(), sort_keys=True))
    summary = {
        "target": args.target,
        "rows": len(report.verdicts),
        "mismatches": report.mismatches,
        "ok": report.ok,
        "seconds": round(time.perf_counter() - start, 3),
    }
    print(json.dumps(summary, sort_keys=True))
    return EXIT_OK if report.ok else EXIT_FAIL


def _parse_arclist(text: str) -> Digraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise DigraphError("empty arc-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("graph", "digraph"):
        raise DigraphError("first line must be 'graph <n>' or 'digraph <n>'")
    n = int(head[1])
    pairs = []
    for ln in lines[1:]:
        u, v = ln.split()
        pairs.append((int(u), int(v)))
    if head[0] == "graph":
        return Digraph.from_edges(n, pairs)
    return Digraph.from_arcs(n, pairs)


def _cmd_encode(args) -> int:
    g = _parse_arclist(_read_text(args.file))
    print(codec.encode(g))
    return EXIT_OK


def _cmd_decode(args) -> int:
    g = codec.decode(_read_text(args.file))
    if g.symmetric:
        print(f"graph {g.n}")
        for u, v in g.edges():
            print(f"{u} {v}")
    else:
        print(f"digraph {g.n}")
        for u, v in g.arcs():
            print(f"{u} {v}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mgrr",
        description="m-Cayley graph constructions, automorphism groups, and exhaustive searches. "
                    "Group specs: C6, D12 (dihedral of ORDER 12), Dic12, Q8, Alt4, A(4,2), E2^3, "
                    "GD(4,4), X16a/X16b/X18/X27, Q8xC3, products via '*'.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named graph construction")
    c.add_argument("family", choices=["delta-cyclic", "delta-q8", "sigma-z2z2", "theta",
                                      "bicay", "theta-grr", "cayley", "lift", "fixture"])
    c.add_argument("group", nargs="?", help="group spec (theta/bicay/theta-grr/cayley)")
    c.add_argument("-m", type=int, default=3)
    c.add_argument("-n", type=int, help="cyclic order for delta-cyclic")
    c.add_argument("--delta", type=int, default=0, help="shift exponent for delta-cyclic")
    c.add_argument("--set", help="comma-separated element words for cayley")
    c.add_argument("--rank", type=int, default=4, help="target rank for lift")
    c.add_argument("--kind", help="fixture kind: z2-3drr or z1-6drr")
    c.add_argument("-o", "--output", help="write the certificate to a file")
    c.set_defaults(fn=_cmd_construct)

    a = sub.add_parser("aut", help="automorphism group of a graph6/digraph6 file")
    a.add_argument("file", help="path or - for stdin")
    a.set_defaults(fn=_cmd_aut)

    v = sub.add_parser("verify", help="decide the m-block regular-representation property")
    v.add_argument("group")
    v.add_argument("-m", type=int, required=True)
    v.add_argument("file", help="path or - for stdin")
    v.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("search", help="exhaustive existence sweep over connection sets")
    s.add_argument("group")
    s.add_argument("-m", type=int, required=True)
    s.add_argument("--directed", action="store_true")
    s.add_argument("--extended", action="store_true", help="accepted for symmetry; sweeps are always exhaustive")
    s.add_argument("--max-candidates", type=int, default=None)
    s.add_argument("--parallel", type=int, default=0)
    s.set_defaults(fn=_cmd_search)

    r = sub.add_parser("reproduce", help="run a named verification battery")
    r.add_argument("target", choices=list(REPRODUCE_TARGETS))
    r.add_argument("--extended", action="store_true")
    r.add_argument("--parallel", type=int, default=0)
    r.set_defaults(fn=_cmd_reproduce)

    e = sub.add_parser("encode", help="arc-list text to graph6/digraph6")
    e.add_argument("file", help="path or - for stdin")
    e.set_defaults(fn=_cmd_encode)

    d = sub.add_parser("decode", help="graph6/digraph6 to arc-list text")
    d.add_argument("file", help="path or - for stdin")
    d.set_defaults(fn=_cmd_decode)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (GroupError, DigraphError, ConstructionError, PresetDataError,
            codec.CodecError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
