"""Command-line entry point: ``longberge <subcommand> [flags]``.

Exit codes: 0 success / claim holds, 1 claim violated (certificate written),
2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from .berge import (BudgetExhausted, InstanceTooLarge, SearchBudget, longest_berge, longest_graph_cycle,
                    verify_witness)
from .extremal import (ConstructionSpec, ExtremalParams, ParameterError, build_construction41,
                       build_construction42, build_construction63, build_from_spec, build_hnka, eval_f_graph,
                       eval_fr, eval_fr_plus, recognize_extremal, ur_value)
from .hypercore import (Graph, Hypergraph, MixedHypergraph, ParseError, binom, parse_hypergraph, parse_mixed,
                        serialize_hypergraph, serialize_mixed)
from .sdrp import hall_check, max_sdrp
from .search.exact import SearchRefused, exact_eg_graph, exact_eg_hypergraph, exact_mixed
from .search.hunt import random_hunt
from .search.report import SCHEMA
from .search.scan import CLAIMS, ScanGrid, inequality_scan
from .structure import KopylovError, blocks, core, find_kopylov_set

log = logging.getLogger("longberge")

OK, VIOLATED, USAGE, EXHAUSTED = 0, 1, 2, 3

TABLE_COLUMNS = ("n", "k", "r", "p", "m", "f", "f_r", "f_r_plus", "trivial_C(n,r)")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_range(text: str) -> range:
    """'7..30' (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected 'a..b' or an integer") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _budget(args) -> SearchBudget:
    return SearchBudget(args.budget_nodes, args.budget_seconds)


def _read_any(path: str):
    """Hypergraph (``n r``) or mixed hypergraph (``n 2 r``) file."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            return parse_mixed(text) if len(s.split()) == 3 else parse_hypergraph(text)
    return parse_hypergraph(text)


def _graph_of(obj) -> Graph:
    if isinstance(obj, MixedHypergraph):
        return obj.shadow_graph()
    return obj.as_graph() if obj.r == 2 else obj.shadow_graph()


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _need(args, *names) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.cmd} needs {' '.join(missing)}")


# ---------------------------------------------------------------------------
# subcommands

def cmd_table(args) -> int:
    _need(args, "r", "k", "n")
    k, r = args.k, args.r
    t = (k - 1) // 2
    svals = [args.s] if args.s is not None else list(range(k - t, k - 1))
    cols = list(TABLE_COLUMNS) + [f"u_r(s={s})" for s in svals]
    rows = []
    for n in args.n:
        p, m = (n - 1) // (k - 2), n - (k - 2) * ((n - 1) // (k - 2))
        row = [n, k, r, p, m, eval_f_graph(n, k), eval_fr(n, k, r), eval_fr_plus(n, k, r),
               binom(n, r) if n < k else ""]
        row += [ur_value(n, k, r, s) if n >= s else "" for s in svals]
        rows.append(row)
    if args.format == "json":
        _emit(args, json.dumps({"schema": SCHEMA, "table": "bounds", "columns": cols, "rows": rows}, indent=1) + "\n")
    else:
        _emit(args, "\n".join(["\t".join(cols)] + ["\t".join(map(str, r)) for r in rows]) + "\n")
    return OK


def cmd_construct(args) -> int:
    if args.n is not None:
        args.n = _single(args.n, "--n")
    if args.spec:
        spec = ConstructionSpec.parse(Path(args.spec).read_text())
        params = ExtremalParams(args.n, args.k, args.r) if args.n and args.k and args.r else None
        obj = build_from_spec(spec, params)
    elif args.kind == "Hnka":
        _need(args, "n", "k", "a")
        obj = build_hnka(args.n, args.k, args.a)
    else:
        _need(args, "n", "k", "r")
        params = ExtremalParams(args.n, args.k, args.r)
        if args.kind == "C41":
            obj = build_construction41(params)
        elif args.kind == "C42":
            obj = build_construction42(params)
        elif args.kind == "C63":
            choices = args.choices.split(",") if args.choices else None
            obj = build_construction63(params, choices)
        else:
            from .extremal import build_extremal
            obj = build_extremal(params)
    _emit(args, _serialize(obj))
    log.info("constructed %d edges", len(obj))
    return OK


def _serialize(obj) -> str:
    if isinstance(obj, MixedHypergraph):
        return serialize_mixed(obj)
    if isinstance(obj, Graph):
        return serialize_hypergraph(obj.as_hypergraph())
    return serialize_hypergraph(obj)


def cmd_verify(args) -> int:
    _need(args, "k")
    obj = _read_any(args.file)
    k = args.k
    out: dict = {"n": obj.n, "edges": len(obj), "k": k}
    if isinstance(obj, MixedHypergraph) or obj.r == 2:
        g = _graph_of(obj)
        res = longest_graph_cycle(g, _budget(args))
        length, witness, exact = res.length, res.witness, res.exact
        out["kind"] = "shadow cycle" if isinstance(obj, MixedHypergraph) else "cycle"
    else:
        res = longest_berge(obj, "cycle", _budget(args), force=args.force)
        length, witness, exact = res.length, res.witness, res.exact
        out["kind"] = "Berge cycle"
    if witness is not None:
        host = obj if isinstance(obj, Hypergraph) and obj.r >= 3 else _graph_of(obj).as_hypergraph()
        chk = verify_witness(host, witness)
        if not chk.ok:
            raise AssertionError(f"witness failed re-verification: {chk.reason}")
    bd = blocks(_graph_of(obj))
    out["longest"] = length
    out["exact"] = exact
    out["blocks"] = [list(b) for b in bd.blocks]
    if isinstance(obj, Hypergraph) and obj.r >= 3:
        rec = recognize_extremal(obj, k)
        out["verdict"] = rec.verdict
        out["recognizer"] = rec.summary()
        if obj.n >= k and k >= obj.r + 3:
            out["f_r"] = eval_fr(obj.n, k, obj.r)
            out["f_r_minus_edges"] = out["f_r"] - len(obj)
    elif isinstance(obj, MixedHypergraph) and obj.n >= k and k >= obj.r + 3:
        out["f_r_plus"] = eval_fr_plus(obj.n, k, obj.r)
        out["f_r_plus_minus_edges"] = out["f_r_plus"] - len(obj)
    violated = length >= k
    if args.format == "json":
        if violated:
            out["certificate"] = witness.serialize()
        _emit(args, json.dumps(out, indent=1) + "\n")
    else:
        lines = [f"{key}\t{val}" for key, val in out.items() if key != "blocks"]
        lines.append("blocks\t" + " | ".join(" ".join(map(str, b)) for b in bd.blocks))
        if violated:
            lines.append("CERTIFICATE")
            lines.append(witness.serialize().rstrip("\n"))
        _emit(args, "\n".join(lines) + "\n")
    if violated:
        print(f"cycle of length {length} >= k = {k} found", file=sys.stderr)
        return VIOLATED
    if not exact:
        print("budget exhausted before the search finished", file=sys.stderr)
        return EXHAUSTED
    return OK


def cmd_sdrp(args) -> int:
    h = _read_any(args.file)
    if not isinstance(h, Hypergraph) or h.r < 3:
        raise UsageError("sdrp needs an r-uniform hypergraph file with r >= 3")
    sd = max_sdrp(h)
    hc = hall_check(sd.residual)
    text = f"# size {sd.size} certified {str(sd.certified).lower()}\n" + sd.serialize()
    text += "HALL ok\n" if hc.ok else "HALL violated " + " ".join(f"{a},{b}" for a, b in hc.violator) + "\n"
    _emit(args, text)
    return OK if hc.ok else VIOLATED


def cmd_core(args) -> int:
    _need(args, "alpha")
    g = _graph_of(_read_any(args.file))
    cr = core(g, args.alpha)
    lines = ["surviving\t" + " ".join(map(str, sorted(cr.surviving)))]
    lines += [f"removed\t{v}\t{d}" for v, d in cr.removal_order]
    _emit(args, "\n".join(lines) + "\n")
    return OK


def cmd_blocks(args) -> int:
    g = _graph_of(_read_any(args.file))
    bd = blocks(g)
    lines = ["cut_vertices\t" + " ".join(map(str, sorted(bd.cut_vertices)))]
    lines += ["block\t" + " ".join(map(str, b)) for b in bd.blocks]
    _emit(args, "\n".join(lines) + "\n")
    return OK


def cmd_kopylov(args) -> int:
    _need(args, "k")
    g = _graph_of(_read_any(args.file))
    try:
        ks = find_kopylov_set(g, args.k)
    except KopylovError as exc:
        if exc.cycle is not None:
            _emit(args, "CYCLE " + " ".join(map(str, exc.cycle)) + "\n")
            print(str(exc), file=sys.stderr)
            return VIOLATED
        raise UsageError(str(exc)) from None
    if ks is None:
        print("no Kopylov set found", file=sys.stderr)
        return VIOLATED
    _emit(args, f"s\t{ks.s}\nS\t{' '.join(map(str, ks.S))}\n")
    return OK


def _report_out(args, rep) -> int:
    _emit(args, rep.to_json() if args.format == "json" else rep.to_tsv())
    log.info("%s (%.1fs)", rep.summary(), rep.elapsed)
    return VIOLATED if rep.violations else OK


def cmd_hunt(args) -> int:
    _need(args, "n", "k", "r")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    n = _single(args.n, "--n")
    rep = random_hunt(n, args.k, args.r, args.trials, args.seed, mixed=args.mixed, threads=args.threads)
    return _report_out(args, rep)


def _single(rng: range, flag: str) -> int:
    if len(rng) != 1:
        raise UsageError(f"{flag} must be a single value here")
    return rng[0]


def cmd_scan(args) -> int:
    kw = {}
    if args.r is not None:
        raise UsageError("use --r-range for scans")
    if args.r_range:
        kw.update(r_min=args.r_range[0], r_max=args.r_range[-1])
    if args.k_max is not None:
        kw["k_max"] = args.k_max
    if args.n_max is not None:
        kw.update(n_max=args.n_max, n12_max=args.n_max)
    rep = inequality_scan(args.claim or None, ScanGrid(**kw))
    return _report_out(args, rep)


def cmd_search(args) -> int:
    _need(args, "n", "k")
    n = _single(args.n, "--n")
    b = _budget(args)
    if args.mixed:
        _need(args, "r")
        res = exact_mixed(n, args.k, args.r, b, force=args.force)
    elif args.r is None or args.r == 2:
        res = exact_eg_graph(n, args.k, b, force=args.force)
    else:
        res = exact_eg_hypergraph(n, args.k, args.r, b, force=args.force)
    doc = {"schema": SCHEMA, "n": n, "k": args.k, "r": args.r or 2, "mixed": args.mixed, **res.as_dict()}
    if args.format == "json":
        _emit(args, json.dumps(doc, indent=1) + "\n")
    else:
        lines = [f"{key}\t{doc[key]}" for key in ("n", "k", "r", "mixed", "value", "exact", "extremal_count",
                                                  "nodes_expanded", "lower_bound_source")]
        for fam in res.extremal:
            lines.append("extremal\t" + " ".join(",".join(map(str, e)) for e in fam))
        _emit(args, "\n".join(lines) + "\n")
    return OK if res.exact else EXHAUSTED


COMMANDS = {
    "table": cmd_table, "construct": cmd_construct, "verify": cmd_verify, "sdrp": cmd_sdrp,
    "core": cmd_core, "blocks": cmd_blocks, "kopylov": cmd_kopylov, "hunt": cmd_hunt,
    "scan": cmd_scan, "search": cmd_search,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--r", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=parse_range)
    common.add_argument("--s", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--budget-nodes", type=int, default=10**8)
    common.add_argument("--budget-seconds", type=float, default=3600.0)
    common.add_argument("--force", action="store_true")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("-o", "--output", help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="longberge", description="Extremal numbers for long Berge cycles.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sub.add_parser("table", parents=[common], help="f, f_r, f_r+, u_r over a range of n")
    c = sub.add_parser("construct", parents=[common], help="emit an extremal construction")
    c.add_argument("--kind", choices=("C41", "C42", "C63", "Hnka", "auto"), default="auto")
    c.add_argument("--a", type=int, help="parameter a of H_{n,k,a}")
    c.add_argument("--choices", help="C63 block kinds, e.g. hyper,graph")
    c.add_argument("--spec", help="construction spec file")
    for name in ("verify", "sdrp", "core", "blocks", "kopylov"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file", help="hypergraph file, '-' for stdin")
        if name == "core":
            s.add_argument("--alpha", type=int)
    h = sub.add_parser("hunt", parents=[common], help="random counterexample hunt")
    h.add_argument("--mixed", action="store_true")
    sc = sub.add_parser("scan", parents=[common], help="inequality scan")
    sc.add_argument("--claim", action="append", choices=CLAIMS)
    sc.add_argument("--r-range", type=parse_range)
    sc.add_argument("--k-max", type=int)
    sc.add_argument("--n-max", type=int)
    se = sub.add_parser("search", parents=[common], help="exact extremal number by enumeration")
    se.add_argument("--mixed", action="store_true")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = {k: (f"{v.start}..{v.stop - 1}" if isinstance(v, range) else v) for k, v in sorted(vars(args).items())}
    log.info("config %s", json.dumps(cfg, sort_keys=True))
    try:
        return COMMANDS[args.cmd](args)
    except (UsageError, ParameterError, SearchRefused, InstanceTooLarge, ParseError, FileNotFoundError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXHAUSTED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
