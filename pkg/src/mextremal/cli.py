"""Command-line interface.

Exit codes: 0 success, 1 domain or I/O error, 2 usage error. Every command
accepts ``--format json``; JSON documents carry a ``"schema"`` key of the
form ``mextremal.<command>/1``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds, constructions, extremal, formats, pipeline
from .coloring import chromatic_number, optimal_coloring
from .errors import MextremalError
from .graphcore import blow_up, contains_colored, hom_exists
from .reduced import reduced_max_matching

SCHEMA_VERSION = 1


class _UsageError(Exception):
    pass


def _schema(cmd: str) -> str:
    return f"mextremal.{cmd}/{SCHEMA_VERSION}"


def _load(path: str):
    try:
        return formats.load(path)
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror or exc}") from None


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": _schema(args.command), **doc}, sort_keys=True))
    else:
        print(text.rstrip("\n"))


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("MEXTREMAL_THREADS", "1") or 1)


def _colors_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    if "," in text or text.isdigit():
        try:
            return tuple(int(x) for x in text.split(",") if x)
        except ValueError:
            raise _UsageError(f"--matching: cannot parse {text!r}") from None
    letters = {"R": 1, "B": 2}
    try:
        return tuple(letters[ch] for ch in text.upper())
    except KeyError:
        raise _UsageError(f"--matching: unknown color letter in {text!r}") from None


# -- commands ------------------------------------------------------------------


def cmd_chi(args):
    g = _load(args.graph)
    coloring = optimal_coloring(g)
    chi = max(coloring) + 1
    _emit(args, {"chi": chi, "coloring": list(coloring)},
          f"chi = {chi}\ncoloring = {' '.join(map(str, coloring))}")


def cmd_redmm(args):
    g = _load(args.graph)
    M, (p, mr) = reduced_max_matching(g)
    chi = chromatic_number(g)
    classes = [list(c) for c in p.classes]
    edges = [list(e) for e in mr.edges]
    lines = [f"M = {M}", f"chi = {chi}", "partition = " + " | ".join(" ".join(map(str, c)) for c in classes)]
    lines += [f"matched classes {i} {j} color {c}" for i, j, c in mr.edges]
    _emit(args, {"M": M, "chi": chi, "partition": classes, "matching": edges}, "\n".join(lines))


def cmd_bounds(args):
    g = _load(args.graph)
    rep = bounds.report(g, args.r)
    d = rep.as_dict()
    rows = [(k, "" if v is None else str(v)) for k, v in d.items()]
    fr = {"trivial_upper": rep.trivial_upper, "theorem_upper": rep.theorem_upper}
    width = max(len(k) for k, _ in rows)
    text = []
    for k, v in rows:
        extra = f"  ({float(fr[k]):.6f})" if k in fr else ""
        text.append(f"{k:<{width}}  {v}{extra}")
    _emit(args, d, "\n".join(text))


def _search(args, fn, label):
    pats = [_load(p) for p in args.patterns]
    res = fn(args.n, args.r, pats, symmetry=not args.no_symmetry, node_limit=args.node_limit,
             threads=_threads(args))
    if args.witness:
        formats.dump(res.witness, args.witness)
    doc = {
        "value": res.value,
        "exhaustive": res.exhaustive,
        "nodes_explored": res.nodes_explored,
        "witness": formats.to_dict(res.witness),
        "n": args.n,
        "r": args.r,
    }
    text = f"{label} = {res.value}\nexhaustive = {str(res.exhaustive).lower()}\nnodes = {res.nodes_explored}\n"
    if not args.witness:
        text += "# witness\n" + formats.serialize_text(res.witness)
    _emit(args, doc, text)


def cmd_mex(args):
    _search(args, extremal.mex_exact, "T")


def cmd_maxedges(args):
    _search(args, extremal.max_edges_avoiding, "E")


def cmd_contains(args):
    host, pat = _load(args.host), _load(args.pattern)
    emb = contains_colored(host, pat)
    found = emb is not None
    mapping = list(emb.mapping) if found else None
    text = f"found = {str(found).lower()}" + (f"\nmap = {' '.join(map(str, mapping))}" if found else "")
    _emit(args, {"found": found, "map": mapping}, text)


def cmd_hom(args):
    pat, tgt = _load(args.pattern), _load(args.target)
    w = hom_exists(pat, tgt)
    found = w is not None
    mapping = list(w.mapping) if found else None
    text = f"found = {str(found).lower()}" + (f"\nmap = {' '.join(map(str, mapping))}" if found else "")
    _emit(args, {"found": found, "map": mapping}, text)


def cmd_blowup(args):
    g = blow_up(_load(args.graph), args.s)
    _write_graph(args, g)


def _write_graph(args, g):
    if getattr(args, "output", None):
        formats.dump(g, args.output, "json" if args.format == "json" else "text")
        return
    if args.format == "json":
        print(json.dumps({"schema": _schema(args.command), "graph": formats.to_dict(g)}, sort_keys=True))
    else:
        sys.stdout.write(formats.serialize_text(g))


def cmd_construct(args):
    kind = args.kind
    if kind == "family":
        g = constructions.lower_bound_family(args.r, args.k, args.m).graph
    elif kind == "H":
        gadget = _load(args.gadget) if args.gadget else None
        g = constructions.graph_H(args.r, args.k, args.t, gadget=gadget, seed=args.seed)
    elif kind == "Hprime":
        g = constructions.graph_H_prime(_load(args.graph), args.m, red=args.red)
    elif kind == "t1":
        g = constructions.t1()
    elif kind == "t2":
        g = constructions.t2()
    elif kind == "cycle":
        g = constructions.cycle_pattern(args.length, args.colors)
    elif kind == "path":
        g = constructions.path_pattern(args.colors)
    elif kind == "gadget":
        if args.builtin == "cyclic3":
            g = constructions.gadget_cyclic3()
        elif args.builtin == "checkerboard":
            g = constructions.gadget_checkerboard(args.t)
        elif args.builtin == "mono":
            g = constructions.gadget_monochromatic(args.t, args.r)
        else:
            g = constructions.gadget_coloring(constructions.GadgetSpec(args.t, args.r, 1, args.seed))
    elif kind == "turan":
        g = constructions.turan_graph(args.n, args.parts)
    elif kind == "pprime":
        g = pipeline.build_pprime(pipeline.PPrimeSpec(args.k, _colors_arg(args.matching), args.r))
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown construction {kind}")
    _write_graph(args, g)


def cmd_verify_gadget(args):
    F = _load(args.graph)
    if args.trials is not None:
        chk = constructions.verify_gadget(F, args.s, mode="sampled", trials=args.trials, seed=args.seed)
        mode = "sampled"
    else:
        chk = constructions.verify_gadget(F, args.s, mode="exact")
        mode = "exact"
    doc = {"pass": chk.passed, "mode": mode, "checked": chk.checked,
           "rows": list(chk.rows), "cols": list(chk.cols), "missing": list(chk.missing)}
    text = f"{'pass' if chk.passed else 'fail'} ({mode}, {chk.checked} checked)"
    if not chk.passed:
        text += f"\nrows = {' '.join(map(str, chk.rows))}\ncols = {' '.join(map(str, chk.cols))}"
        text += f"\nmissing colors = {' '.join(map(str, chk.missing))}"
    _emit(args, doc, text)


def cmd_pipeline(args):
    h = _load(args.host)
    spec = pipeline.PPrimeSpec(args.k, _colors_arg(args.matching), h.r)
    part = None
    if args.partition:
        try:
            part = json.loads(Path(args.partition).read_text())
        except OSError as exc:
            raise OSError(f"cannot read {args.partition}: {exc.strerror or exc}") from None
        except json.JSONDecodeError as exc:
            raise _UsageError(f"--partition: {exc}") from None
    res = pipeline.find_pprime(h, spec, partition=part, rounds=args.rounds, seed=args.seed)
    mapping = list(res.embedding.mapping) if res.found else None
    doc = {"found": res.found, "map": mapping, "trace": res.trace.as_dict()}
    t = res.trace
    lines = [f"found = {str(res.found).lower()}"]
    if res.found:
        lines.append(f"map = {' '.join(map(str, mapping))}")
    lines.append(f"partition ({t.partition_source}) = " + " | ".join(" ".join(map(str, p)) for p in t.partition))
    lines.append(f"e(R) = {t.core_edges}  e(R') = {t.r_prime_edges}")
    if t.core_clique is not None:
        lines.append("clique in core = " + " ".join(map(str, t.core_clique)))
    for rt in t.rounds:
        lines.append(f"round {rt.round}: pi = {list(rt.permutation)}  e(F) = {list(rt.f_edges)}  "
                     f"e(F') = {list(rt.cut_edges)}  e(H') = {rt.h_prime_edges}"
                     + (f"  clique = {list(rt.clique)}" if rt.clique else ""))
    if not res.found:
        lines.append(f"not found within {args.rounds} rounds (not a proof of absence)")
    _emit(args, doc, "\n".join(lines))


def cmd_tightness(args):
    rep = bounds.tightness_check(args.r, args.k, args.m)
    d = rep.as_dict()
    width = max(len(k) for k in d)
    _emit(args, d, "\n".join(f"{k:<{width}}  {str(v).lower() if isinstance(v, bool) else v}" for k, v in d.items()))


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for searches (default: $MEXTREMAL_THREADS or 1)")

    p = argparse.ArgumentParser(prog="mextremal", description="Multicolor Turán problems at desk scale.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=fn)
        return sp

    sp = add("chi", cmd_chi, help="chromatic number")
    sp.add_argument("graph")

    sp = add("redmm", cmd_redmm, help="reduced maximum matching number")
    sp.add_argument("graph")

    sp = add("bounds", cmd_bounds, help="upper bounds for a pattern")
    sp.add_argument("graph")
    sp.add_argument("--r", type=int, default=None)

    for name, fn in (("mex", cmd_mex), ("maxedges", cmd_maxedges)):
        sp = add(name, fn, help="exact extremal search")
        sp.add_argument("patterns", nargs="*")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--witness", help="write the witness graph here")
        sp.add_argument("--node-limit", type=int, default=None)
        sp.add_argument("--no-symmetry", action="store_true")

    sp = add("contains", cmd_contains, help="colored subgraph containment")
    sp.add_argument("host")
    sp.add_argument("pattern")

    sp = add("hom", cmd_hom, help="colored homomorphism")
    sp.add_argument("pattern")
    sp.add_argument("target")

    sp = add("blowup", cmd_blowup, help="blow each vertex up into an independent set")
    sp.add_argument("graph")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("-o", "--output")

    sp = add("construct", cmd_construct, help="generate a named graph")
    sp.add_argument("kind", choices=("family", "H", "Hprime", "t1", "t2", "cycle", "path",
                                     "gadget", "turan", "pprime"))
    sp.add_argument("graph", nargs="?", help="input graph (Hprime)")
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--t", type=int, default=3)
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--parts", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--red", type=int, default=1)
    sp.add_argument("--length", type=int, default=3)
    sp.add_argument("--colors", default="RRR")
    sp.add_argument("--matching", default="")
    sp.add_argument("--gadget", help="gadget graph file for H")
    sp.add_argument("--builtin", choices=("cyclic3", "checkerboard", "mono", "random"), default="random")
    sp.add_argument("-o", "--output")

    sp = add("verify-gadget", cmd_verify_gadget, help="check the all-colors subset property")
    sp.add_argument("graph")
    sp.add_argument("--s", type=int, required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--trials", type=int)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("pipeline", cmd_pipeline, help="randomized search for P'")
    sp.add_argument("host")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--matching", default="", help="colors of the single edges, e.g. 1,2 or RB")
    sp.add_argument("--rounds", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--partition", help="JSON file with a list of parts (default: computed)")

    sp = add("tightness", cmd_tightness, help="construction lower bound vs upper bound")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "construct" and args.kind == "Hprime" and not args.graph:
        parser.print_usage(sys.stderr)
        print("mextremal: error: construct Hprime needs an input graph", file=sys.stderr)
        return 2
    try:
        args.func(args)
    except _UsageError as exc:
        print(f"mextremal: error: {exc}", file=sys.stderr)
        return 2
    except MextremalError as exc:
        print(f"mextremal: {exc.name}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"mextremal: ValueError: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"mextremal: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
