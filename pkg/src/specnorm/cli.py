"""specnorm command line: one JSON document per invocation."""
import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from . import constructions as cons
from .bounds import evaluate_bound, get_entry
from .ensemble import ensemble_check
from .errors import ArgumentError, BudgetExceeded, SpecnormError
from .graphs import Graph, complement, emit_graph6, parse_graph6
from .matio import read_matrix, write_matrix
from .norms import (NormSubject, frobenius, ky_fan, operator_norm, recover_spectrum,
                    schatten, schatten_curve, spectra_match, trace_norm)
from .search import default_threads, extremal_search


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def _add_subject(p, graph_only=False):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--graph6", metavar="S", help="graph in graph6 format")
    g.add_argument("--matrix", metavar="FILE", help="matrix text file ('m n' header)")
    p.add_argument("--as-graph", action="store_true",
                   help="read --matrix as an adjacency matrix (validated)")
    if graph_only:
        p.set_defaults(graph_only=True)


def _load_subject(args, need_graph=False):
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    a = read_matrix(args.matrix)
    if args.as_graph or need_graph:
        return Graph(a)
    return a


def _parse_value(text):
    low = text.strip().lower()
    if low in ("none", "null"):
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text.strip()


def parse_params(text):
    out = {}
    if not text:
        return out
    for part in text.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise ArgumentError(f"parameter {part!r} is not of the form key=value")
        k, v = part.split("=", 1)
        out[k.strip()] = _parse_value(v)
    return out


def _range(text):
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ArgumentError("--xs must be A:B or A:B:STEP")
    try:
        a, b = float(parts[0]), float(parts[1])
        step = float(parts[2]) if len(parts) == 3 else 1.0
    except ValueError:
        raise ArgumentError(f"cannot parse range {text!r}") from None
    if step <= 0 or b < a:
        raise ArgumentError("need A <= B and STEP > 0")
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    return [a + i * step for i in range(count)]


def _matrix_payload(a):
    a = np.asarray(a)
    return {"shape": list(a.shape), "matrix": a.tolist()}


# ---- subcommands ----

def cmd_norm(args):
    s = _load_subject(args)
    if args.trace:
        kind, value = "trace", trace_norm(s)
    elif args.kyfan is not None:
        kind, value = f"kyfan({args.kyfan})", ky_fan(s, args.kyfan)
    elif args.schatten is not None:
        p = _parse_value(args.schatten)
        p = math.inf if p in ("inf", "Infinity") else float(p)
        kind, value = f"schatten({args.schatten})", schatten(s, p)
    elif args.operator:
        kind, value = "operator", operator_norm(s)
    else:
        kind, value = "frobenius", frobenius(s)
    return {"norm": kind, "value": value}


def cmd_bound(args):
    s = _load_subject(args)
    get_entry(args.id)
    rep = evaluate_bound(args.id, s, parse_params(args.params), observational=args.observational)
    return {"report": rep.as_dict()}


def cmd_certify(args):
    a = read_matrix(args.matrix)
    return {"certificate": cons.certify(a).as_dict()}


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise ArgumentError(f"this construction needs --{n.replace('_', '-')}")


def cmd_construct(args):
    kind = args.kind
    graph = None
    if kind == "paley-conference":
        _need(args, "q")
        a = cons.paley_conference(args.q)
    elif kind == "paley-hadamard":
        _need(args, "q")
        a = cons.paley_hadamard(args.q)
    elif kind == "sym-hadamard-double":
        _need(args, "q")
        a = cons.symmetric_hadamard_double(args.q)
    elif kind == "sylvester":
        _need(args, "k")
        a = cons.sylvester(args.k)
    elif kind == "paley-graph":
        _need(args, "q")
        graph = cons.paley_graph(args.q)
    elif kind == "turan":
        _need(args, "n", "r")
        graph = cons.turan_graph(args.n, args.r)
    elif kind == "kyfan-extremal":
        _need(args, "k", "q", "r", "s")
        a = cons.kyfan_extremal_matrix(args.k, args.q, args.r, args.s)
    elif kind == "ng-extremal":
        _need(args, "k", "t", "p", "q")
        a = cons.ng_extremal_matrix(args.k, args.t, args.p, args.q)
    elif kind in ("rpartite-matrix", "rpartite-graph"):
        _need(args, "q", "k")
        c = cons.paley_conference(args.q)
        h = cons.sylvester(args.k)
        if kind == "rpartite-matrix":
            a = cons.rpartite_extremal_matrix(c, h)
        else:
            graph = cons.rpartite_extremal_graph(c, h)
    else:
        raise ArgumentError(f"unknown construction {kind!r}")
    out = {"construction": kind}
    if graph is not None:
        a = graph.adjacency.astype(np.int64)
        out["graph6"] = emit_graph6(graph)
        out["order"] = graph.n
        out["edges"] = graph.m
    else:
        out["certificate"] = cons.certify(a).as_dict()
    if args.out:
        write_matrix(args.out, a)
        out["written"] = args.out
    else:
        out.update(_matrix_payload(a))
    return out


def cmd_search(args):
    threads = args.threads if args.threads is not None else default_threads()
    if args.sample is not None:
        if args.seed is None:
            raise ArgumentError("--sample needs --seed")
        res = extremal_search(args.n, args.objective, mode="sampled", trials=args.sample,
                              seed=args.seed, threads=threads, minimize=args.minimize,
                              connected_only=args.connected, max_graphs=args.max_graphs,
                              max_seconds=args.max_seconds)
    else:
        parts = args.partitions if args.partitions is not None else threads
        res = extremal_search(args.n, args.objective, partitions=parts, threads=threads,
                              minimize=args.minimize, connected_only=args.connected,
                              max_graphs=args.max_graphs, max_seconds=args.max_seconds)
    return {"result": res.as_dict(), "seed": args.seed}


def cmd_curve(args):
    s = _load_subject(args)
    pts = schatten_curve(s, _range(args.xs))
    return {"curve": [{"x": x, "value": v} for x, v in pts]}


def cmd_recover(args):
    s = NormSubject.of(_load_subject(args))
    oracle = s.curve_oracle(dps=args.dps)
    rec = recover_spectrum(oracle, max_x=args.maxx, tol=args.tol, step=args.step, dps=args.dps)
    direct = s.spectrum.nonzero_groups()
    got = rec.nonzero_groups()
    worst = None
    if len(got) == len(direct) and all(k1 == k2 for (_, k1), (_, k2) in zip(got, direct)):
        worst = max((abs(a - b) for (a, _), (b, _) in zip(got, direct)), default=0.0)
    return {"recovered": [list(g) for g in got], "direct": [list(g) for g in direct],
            "multiplicities_match": worst is not None,
            "max_value_error": worst,
            "match": worst is not None and worst <= args.tol,
            "exact_match": spectra_match(got, direct, rel=1e-6)}


def cmd_ensemble(args):
    rep = ensemble_check(args.n, args.p, args.trials, args.seed)
    return {"report": rep.as_dict(), "seed": args.seed}


def cmd_ng(args):
    g = _load_subject(args, need_graph=True)
    gc = complement(g)
    n = g.n
    out = {"order": n}
    if args.kyfan is not None:
        k = args.kyfan
        a, b = ky_fan(g, k), ky_fan(gc, k)
        out.update({"measure": f"kyfan({k})", "graph": a, "complement": b, "sum": a + b})
        if k >= 2:
            rep = evaluate_bound("NG_KYFAN", g.adjacency.astype(float), {"k": k})
            out["matrix_pair_bound"] = rep.as_dict()
        return out
    a, b = trace_norm(g), trace_norm(gc)
    out.update({"measure": "trace", "graph": a, "complement": b, "sum": a + b})
    out["conference_rhs"] = (n - 1) * math.sqrt(n) + n - 1
    out["bound"] = evaluate_bound("NG_TRACE_GRAPH", g.adjacency.astype(float),
                                  observational=True).as_dict()
    out["gutman_zhou"] = evaluate_bound("GZ", g).as_dict()
    return out


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="indent the JSON output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads (overrides SPECNORM_THREADS)")
    p = _Parser(prog="specnorm", parents=[common],
                description="Ky Fan and Schatten norm toolkit for graphs and matrices.")
    p.add_argument("--version", action="version", version=f"specnorm {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[common], **kw)

    q = sub.add_parser("norm", help="compute one norm")
    _add_subject(q)
    which = q.add_mutually_exclusive_group(required=True)
    which.add_argument("--trace", action="store_true")
    which.add_argument("--kyfan", type=int, metavar="K")
    which.add_argument("--schatten", metavar="P")
    which.add_argument("--operator", action="store_true")
    which.add_argument("--frobenius", action="store_true")
    q.set_defaults(func=cmd_norm)

    q = sub.add_parser("bound", help="evaluate a catalog bound")
    q.add_argument("--id", required=True)
    q.add_argument("--params", default="", help="k=..,p=..,r=..,q=..,variant=..")
    q.add_argument("--observational", action="store_true",
                   help="evaluate outside the stated order range without asserting")
    _add_subject(q)
    q.set_defaults(func=cmd_bound)

    q = sub.add_parser("certify", help="certify Hadamard / partial Hadamard / conference")
    q.add_argument("--matrix", required=True)
    q.set_defaults(func=cmd_certify)

    q = sub.add_parser("construct", help="build an extremal matrix or graph")
    q.add_argument("kind", choices=["paley-conference", "paley-hadamard", "sym-hadamard-double",
                                    "sylvester", "paley-graph", "turan", "kyfan-extremal",
                                    "ng-extremal", "rpartite-matrix", "rpartite-graph"])
    for name in ("q", "k", "r", "s", "t", "p", "n"):
        q.add_argument(f"--{name}", type=int)
    q.add_argument("--out", metavar="FILE")
    q.set_defaults(func=cmd_construct)

    q = sub.add_parser("search", help="extremal search over small graphs")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--objective", required=True)
    mode = q.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--sample", type=int, metavar="T")
    q.add_argument("--seed", type=int)
    q.add_argument("--partitions", type=int)
    q.add_argument("--minimize", action="store_true")
    q.add_argument("--connected", action="store_true")
    q.add_argument("--max-graphs", type=int)
    q.add_argument("--max-seconds", type=float)
    q.set_defaults(func=cmd_search)

    q = sub.add_parser("curve", help="sample the Schatten curve p -> ||A||_p")
    _add_subject(q)
    q.add_argument("--xs", required=True, metavar="A:B[:STEP]")
    q.set_defaults(func=cmd_curve)

    q = sub.add_parser("recover", help="recover the singular spectrum from the Schatten curve")
    _add_subject(q)
    q.add_argument("--maxx", type=float, default=60.0)
    q.add_argument("--tol", type=float, default=1e-3)
    q.add_argument("--step", type=float, default=4.0)
    q.add_argument("--dps", type=int, default=60)
    q.set_defaults(func=cmd_recover)

    q = sub.add_parser("ensemble", help="random-graph Schatten statistics")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=float, required=True)
    q.add_argument("--trials", type=int, default=5)
    q.add_argument("--seed", type=int, required=True)
    q.set_defaults(func=cmd_ensemble)

    q = sub.add_parser("ng", help="Nordhaus-Gaddum pair values")
    _add_subject(q)
    which = q.add_mutually_exclusive_group(required=True)
    which.add_argument("--trace", action="store_true")
    which.add_argument("--kyfan", type=int, metavar="K")
    q.set_defaults(func=cmd_ng)
    return p


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.generic):
        return x.item()
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    args.pretty = getattr(args, "pretty", False)
    args.threads = getattr(args, "threads", None)
    try:
        if args.threads is not None and args.threads < 1:
            raise ArgumentError("--threads must be positive")
        payload = args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"specnorm: {exc}\n")
        if exc.partial is not None:
            sys.stderr.write(exc.partial.to_json() + "\n")
        return exc.exit_code
    except SpecnormError as exc:
        sys.stderr.write(f"specnorm: {exc}\n")
        return exc.exit_code
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"specnorm: {exc}\n")
        return 2
    doc = {"tool": "specnorm", "version": __version__, "command": ["specnorm"] + argv}
    doc.update(payload)
    sys.stdout.write(json.dumps(_jsonable(doc), indent=2 if args.pretty else None) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
