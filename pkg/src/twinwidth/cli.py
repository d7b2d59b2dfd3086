"""Command-line surface.

Subcommands (all read stdin or -i and write stdout or -o):

  gen <family> <params...>     emit a family graph (graph6 or tgf)
  lb1 / girth / srg            per-graph JSON reports
  greedy / exact               heuristic / exact solving with budgets
  scheme <name> [params]       emit a certificate (JSON; sequence via --seq-out)
  verify --bound K --seq FILE  replay a sequence and check a width bound
  reduce {girth|asym}          partial reduction; residual as tgf
  batch --task T [--bound K]   one JSON report per graph6 input line

Exit codes: 0 success, 1 bound violation, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import batch as batch_mod
from . import bounds, families, schemes, solver
from .errors import NotApplicableError, TwinwidthError
from .formats import (
    Report,
    parse_graph6,
    parse_sequence,
    parse_trigraph,
    write_graph6,
    write_sequence,
    write_trigraph,
)
from .trigraph import Trigraph, sequence_width


def _read_text(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write_text(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_graph(args) -> Trigraph:
    text = _read_text(getattr(args, "input", None))
    stripped = text.strip()
    if not stripped:
        raise TwinwidthError("empty input")
    if stripped.startswith("p tgf") or getattr(args, "format", None) == "tgf":
        return parse_trigraph(text)
    return parse_graph6(stripped.splitlines()[0])


def _emit_graph(args, G):
    if args.format == "tgf" or not G.is_simple():
        _write_text(args.output, write_trigraph(G))
    else:
        _write_text(args.output, write_graph6(G) + "\n")


def _gen_graph(family, params):
    p = [int(x) for x in params]
    if family == "johnson":
        return families.johnson(p[0])
    if family == "kneser":
        return families.kneser(p[0])
    if family == "petersen":
        return families.petersen()
    if family == "paley":
        return families.paley(p[0])
    if family == "rook":
        return families.rook(p[0])
    if family == "latin":
        return families.latin_square_graph(families.cyclic_latin(p[0]))
    if family == "cycle":
        from .trigraph import cycle_graph

        return cycle_graph(p[0])
    if family == "path":
        from .trigraph import path_graph

        return path_graph(p[0])
    if family == "complete":
        from .trigraph import complete_graph

        return complete_graph(p[0])
    if family == "circulant":
        n, *conn = p
        grp = families.AbelianGroupSpec((n,))
        members = set()
        for s in conn:
            members.add(s % n)
            members.add((-s) % n)
        return families.cayley_abelian(grp, families.ConnectionSet(members))
    if family == "random-degenerate":
        n, d, seed = p
        return families.random_degenerate(n, d, seed)[0]
    raise TwinwidthError(f"unknown family {family!r}")


def cmd_gen(args):
    G = _gen_graph(args.family, args.params)
    _emit_graph(args, G)
    return 0


def _report_json(args, payload):
    _write_text(args.output, json.dumps(payload, sort_keys=True) + "\n")


def cmd_lb1(args):
    G = _load_graph(args)
    _report_json(args, {"v": 1, "n": G.n, "m": G.edge_count(), "lb1": bounds.lb1(G)})
    return 0


def cmd_girth(args):
    G = _load_graph(args)
    g = bounds.girth(G)
    _report_json(
        args,
        {"v": 1, "n": G.n, "m": G.edge_count(), "girth": "inf" if g == float("inf") else int(g)},
    )
    return 0


def cmd_srg(args):
    G = _load_graph(args)
    try:
        p = bounds.srg_detect(G)
    except NotApplicableError as exc:
        _report_json(args, {"v": 1, "n": G.n, "srg": None, "applicable": False, "note": str(exc)})
        return 0
    payload = {"v": 1, "n": G.n, "applicable": True, "srg": list(p.as_tuple()) if p else None}
    if p:
        payload["srg_lb1"] = bounds.srg_lb1(p)
        payload["conference"] = bounds.is_conference(p)
    _report_json(args, payload)
    return 0


def cmd_greedy(args):
    G = _load_graph(args)
    res = solver.tww_greedy(G)
    payload = {"v": 1, "n": G.n, "value": res.value, "status": res.status}
    if args.seq_out:
        _write_text(args.seq_out, write_sequence(res.witness))
    _report_json(args, payload)
    return 0


def cmd_exact(args):
    G = _load_graph(args)
    res = solver.tww_exact(G, solver.Budget(nodes=args.nodes, seconds=args.timeout))
    payload = {"v": 1, "n": G.n, "value": res.value, "status": res.status}
    if args.seq_out:
        _write_text(args.seq_out, write_sequence(res.witness))
    _report_json(args, payload)
    return 0


def _family_scheme(name, params):
    p = [int(x) for x in params]
    if name == "johnson":
        return schemes.johnson_scheme(p[0]), f"johnson:{p[0]}"
    if name == "latin":
        return schemes.latin_grid_scheme(p[0]), f"latin:{p[0]}"
    if name == "selfcomp-paley":
        prime = p[0]
        families.paley(prime)  # validates primality and p = 1 (mod 4)
        grp = families.AbelianGroupSpec((prime,))
        cert = schemes.selfcomp_pairs(
            grp, families.ConnectionSet(families.paley_residues(prime))
        )
        return cert, f"selfcomp-paley:{prime}"
    return None, None


def cmd_scheme(args):
    cert, label = _family_scheme(args.name, args.params)
    if cert is None:
        G = _load_graph(args)
        if args.name == "degenerate":
            cert = schemes.degenerate_scheme(G, bounds.degeneracy(G))
        elif args.name == "girth":
            cert = schemes.girth_reduce(G)
        elif args.name == "asym":
            cert = schemes.asym_reduce(G)
        elif args.name == "circulant":
            n = G.n
            rot = schemes.Permutation(tuple((v + 1) % n for v in range(n)))
            cert = schemes.circulant_scheme(G, rot)
        else:
            raise TwinwidthError(f"unknown scheme {args.name!r}")
        label = args.name
    payload = {
        "v": 1,
        "scheme": label,
        "claimed_bound": cert.claimed_bound,
        "verified_width": cert.verified_width,
        "residual_order": cert.residual.n,
        "complete": cert.complete,
    }
    if cert.inconclusive:
        payload["inconclusive"] = True
    if args.seq_out:
        _write_text(args.seq_out, write_sequence(cert.seq))
    _report_json(args, payload)
    return 0


def cmd_verify(args):
    G = _load_graph(args)
    seq = parse_sequence(_read_text(args.seq))
    payload = batch_mod.verify_bound(G, seq, args.bound)
    _report_json(args, payload)
    return 1 if payload["violation"] else 0


def cmd_reduce(args):
    G = _load_graph(args)
    cert = schemes.girth_reduce(G) if args.what == "girth" else schemes.asym_reduce(G)
    if args.seq_out:
        _write_text(args.seq_out, write_sequence(cert.seq))
    _write_text(args.output, write_trigraph(cert.residual))
    return 0


def cmd_batch(args):
    spec = batch_mod.TaskSpec(
        kind=args.task,
        bound=args.bound,
        scheme=args.scheme,
        nodes=args.nodes,
        seconds=args.timeout,
        with_timings=args.timings,
    )
    text = _read_text(args.input)
    reports = list(batch_mod.batch_run(text.splitlines(), spec, workers=args.workers))
    out = "".join(json.dumps(r, sort_keys=True) + "\n" for r in reports)
    _write_text(args.output, out)
    return batch_mod.exit_code(reports)


def build_parser():
    ap = argparse.ArgumentParser(prog="twinwidth", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, seq_out=False):
        p.add_argument("-i", "--input", default=None, help="input file (default stdin)")
        p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=("graph6", "tgf"), default=None)
        if seq_out:
            p.add_argument("--seq-out", default=None, help="write the sequence file here")

    p = sub.add_parser("gen", help="generate a family graph")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    common(p)
    p.set_defaults(func=cmd_gen)

    for name, fn in (("lb1", cmd_lb1), ("girth", cmd_girth), ("srg", cmd_srg)):
        p = sub.add_parser(name, help=f"compute {name}")
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("greedy", help="greedy upper bound")
    common(p, seq_out=True)
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("exact", help="exact twin-width")
    common(p, seq_out=True)
    p.add_argument("--timeout", type=float, default=None, help="wall-clock seconds")
    p.add_argument("--nodes", type=int, default=None, help="search node limit")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("scheme", help="emit a scheme certificate")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    common(p, seq_out=True)
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("verify", help="replay a sequence and check a bound")
    common(p)
    p.add_argument("--seq", required=True, help="sequence file to replay")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="girth or symmetry reduction")
    p.add_argument("what", choices=("girth", "asym"))
    common(p, seq_out=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("batch", help="run a task over a graph6 file")
    common(p)
    p.add_argument("--task", required=True, choices=batch_mod.TASKS)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--scheme", default=None, choices=batch_mod.GRAPH_SCHEMES)
    p.add_argument("--nodes", type=int, default=None)
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="attach wall-clock timings")
    p.set_defaults(func=cmd_batch)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TwinwidthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
