"""Command-line entry point.

Exit codes: 0 success, 1 alarms (an expected inequality failed), 2 usage
errors or parameters outside a certified regime, 3 malformed input.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import __version__
from .canonical import dominance_certificate, truncation
from .catalog import SmallGraphCatalog
from .census import hom_count, inj_count, sub_count
from .counting import independence_profile, matching_profile
from .graph6 import Graph6Error, encode_graph6, iter_graph6, parse_graph6
from .graphs import MAX_VERTICES, DisjointCopies, construct, parse_spec, regular_degree
from .interval import DEFAULT_BITS, decimal_string
from .monomer_dimer import OutOfRangeError, clique_min_certificate, md_comparison
from .verdict import DivergentRegimeError, Verdict
from .verify import compare_graph

EXIT_OK, EXIT_ALARM, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
CONSTRUCT_LIMIT = 100_000


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _common(p: argparse.ArgumentParser, jobs: bool = False) -> None:
    p.add_argument("--input", "-i", help="graph6 file (default: standard input)")
    p.add_argument("--output", "-o", help="output file (default: standard output)")
    p.add_argument("--max-n", type=int, default=MAX_VERTICES, help="largest accepted vertex count")
    if jobs:
        p.add_argument("--jobs", "-j", type=int, default=1, help="worker processes (output order is input order)")


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(prog="clusterbound", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="JSON file of option defaults; command-line flags take precedence")
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {}

    p = sub.add_parser("construct", help="emit a named reference graph")
    p.add_argument("--spec", required=True, help="kdd(d), clique(m), cycle(len), heawood, petersen, copies(spec,c)")
    p.add_argument("--emit", choices=["graph6", "edges"], default="graph6")
    p.add_argument("--output", "-o")
    subs["construct"] = p

    p = sub.add_parser("count", help="exact independence or matching profile per input graph")
    p.add_argument("--kind", choices=["is", "match"], default="is")
    p.add_argument("--k-max", type=int, help="truncate the profile at this k")
    _common(p, jobs=True)
    subs["count"] = p

    p = sub.add_parser("census", help="hom/inj/sub counts of every connected pattern on <= j vertices (CSV)")
    p.add_argument("--j-max", type=int, default=4, help="largest pattern size (at most 7)")
    _common(p)
    subs["census"] = p

    p = sub.add_parser("expand", help="certified interval for log Xi_k from the truncated cluster expansion")
    p.add_argument("--k", type=int, required=True, nargs="+", help="one or more sizes k")
    p.add_argument("--t", type=int, default=4, help="truncation: clusters of excess < t are summed exactly")
    p.add_argument("--scale", type=int, default=1, help="replace each graph by this many disjoint copies")
    p.add_argument("--bits", type=int, default=DEFAULT_BITS, help="precision of certified constants")
    _common(p)
    subs["expand"] = p

    p = sub.add_parser("certify", help="certified lower bound on log(i_k(H)/i_k(G)) against a reference union")
    p.add_argument("--ref", required=True, help="reference spec, e.g. kdd(3)")
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=6)
    p.add_argument("--t", type=int, help="truncation excess (default: girth of the reference)")
    p.add_argument("--scale", type=int, default=1, help="replace each graph by this many disjoint copies")
    p.add_argument("--bits", type=int, default=DEFAULT_BITS)
    p.add_argument("--check-exact", action="store_true", help="also compare against exact coefficients")
    _common(p)
    subs["certify"] = p

    p = sub.add_parser("mdcert", help="monomer-dimer clique comparison: certificate or exact check")
    p.add_argument("--lambda", dest="lam", type=_fraction, required=True, help="activity as p/q")
    p.add_argument("--mode", choices=["certify", "exact"], default="exact")
    p.add_argument("--bits", type=int, default=DEFAULT_BITS)
    _common(p, jobs=True)
    subs["mdcert"] = p

    p = sub.add_parser("verify", help="exact coefficient-wise comparison of a corpus with a reference union")
    p.add_argument("--ref", required=True)
    p.add_argument("--kind", choices=["is", "match"], default="is")
    p.add_argument("--direction", choices=["max", "min"], default="max")
    p.add_argument("--girth-min", type=int)
    p.add_argument("--k-max", type=int)
    _common(p, jobs=True)
    subs["verify"] = p
    return parser, subs


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    parser, subs = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if known.config:
        try:
            with open(known.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read config {known.config}: {exc}")
        if not isinstance(cfg, dict):
            parser.error("config file must hold a JSON object")
        cfg = {k.replace("-", "_"): v for k, v in cfg.items()}
        if "lambda" in cfg:
            cfg["lam"] = Fraction(str(cfg.pop("lambda")))
        for p in subs.values():
            valid = {a.dest for a in p._actions}
            p.set_defaults(**{k: v for k, v in cfg.items() if k in valid})
    return parser.parse_args(argv)


# -- helpers -------------------------------------------------------------------

def _records(args) -> list[tuple[str, object]]:
    if args.input:
        with open(args.input, "rb") as fh:
            return [(rec, g) for _, rec, g in iter_graph6(fh, args.max_n)]
    return [(rec, g) for _, rec, g in iter_graph6(sys.stdin.buffer, args.max_n)]


def _emit(out, obj: dict) -> None:
    out.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def _map(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _dec(x, rounding: str = "floor") -> str:
    return decimal_string(x, digits=40, rounding=rounding)


# -- subcommands ---------------------------------------------------------------

def cmd_construct(args, out) -> int:
    try:
        spec = parse_spec(args.spec)
        if spec.num_vertices > CONSTRUCT_LIMIT:
            raise ValueError(f"{spec} has {spec.num_vertices} vertices; emit a small graph and use --scale instead")
        g = construct(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.emit == "graph6":
        out.write(encode_graph6(g) + "\n")
    else:
        out.write(f"{g.n} {g.num_edges}\n")
        for u, v in g.edges():
            out.write(f"{u} {v}\n")
    return EXIT_OK


def _count_one(item) -> dict:
    rec, kind, k_max = item
    g = parse_graph6(rec)
    prof = (independence_profile if kind == "is" else matching_profile)(g, k_max=k_max)
    return {"graph6": rec, "n": g.n, "kind": kind, "coeffs": [str(c) for c in prof.coeffs]}


def cmd_count(args, out) -> int:
    items = [(rec, args.kind, args.k_max) for rec, _ in _records(args)]
    for obj in _map(_count_one, items, args.jobs):
        _emit(out, obj)
    return EXIT_OK


def cmd_census(args, out) -> int:
    if not 1 <= args.j_max <= 7:
        raise UsageError("--j-max must lie in 1..7")
    catalog = SmallGraphCatalog(args.j_max)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["graph_id", "F_id", "hom", "inj", "sub", "t_density_num", "t_density_den"])
    for gid, (_, g) in enumerate(_records(args)):
        for j in range(1, args.j_max + 1):
            for cls in catalog.classes(j):
                f = cls.graph
                hom = hom_count(f, g, loops=True)
                dens = Fraction(hom, g.n ** j) if g.n else Fraction(0)
                writer.writerow([gid, f.label, hom, inj_count(f, g), sub_count(f, g),
                                 dens.numerator, dens.denominator])
    return EXIT_OK


def cmd_expand(args, out) -> int:
    status = EXIT_OK
    for rec, g in _records(args):
        gl = DisjointCopies(g, args.scale) if args.scale > 1 else g
        for k in args.k:
            base = {"graph6": rec, "scale": args.scale, "n": gl.n, "k": k, "t": args.t}
            try:
                tr = truncation(gl, k, args.t, args.bits)
            except DivergentRegimeError as exc:
                _emit(out, {**base, "error": "DIVERGENT_REGIME", "message": str(exc)})
                status = EXIT_USAGE
                continue
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            iv = tr.interval
            _emit(out, {**base, "lower": _dec(iv.lo, "floor"), "upper": _dec(iv.hi, "ceiling"),
                        "center": _dec(tr.center), "gamma": _dec(tr.gamma, "ceiling"),
                        "tail": _dec(tr.tail, "ceiling")})
    return status


def cmd_certify(args, out) -> int:
    try:
        spec = parse_spec(args.ref)
        h = construct(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    alarm = divergent = False
    for rec, g in _records(args):
        n = g.n * args.scale
        if n % h.n:
            raise UsageError(f"n={n} is not a multiple of |V({spec})|={h.n}")
        gl = DisjointCopies(g, args.scale) if args.scale > 1 else g
        hl = DisjointCopies(h, n // h.n)
        if regular_degree(g) != regular_degree(h):
            raise UsageError(f"graph {rec} does not have the reference degree")
        for k in range(args.k_min, args.k_max + 1):
            base = {"graph6": rec, "scale": args.scale, "n": n, "k": k}
            try:
                cert = dominance_certificate(gl, hl, k, args.t, args.bits)
            except DivergentRegimeError as exc:
                _emit(out, {**base, "error": "DIVERGENT_REGIME", "message": str(exc)})
                divergent = True
                continue
            verdict = cert.verdict
            obj = {**base, "t": cert.t, "verdict": verdict.value,
                   "lower_bound_log_ratio": _dec(cert.lower_bound, "floor"),
                   "gamma": _dec(cert.gamma, "ceiling"), "tail": _dec(cert.tail, "ceiling")}
            if args.check_exact:
                a = independence_profile(gl, k_max=k)[k]
                b = independence_profile(hl, k_max=k)[k]
                obj["exact"] = "LT" if a < b else "EQ" if a == b else "GT"
                if a > b:
                    obj["verdict"] = Verdict.REFUTED.value
                    alarm = True
                elif verdict == Verdict.CERTIFIED_STRICT and a == b:
                    obj["alarm"] = "certificate claims strictness but the exact counts are equal"
                    alarm = True
            _emit(out, obj)
    return EXIT_ALARM if alarm else EXIT_USAGE if divergent else EXIT_OK


def _md_one(item) -> dict:
    rec, lam, mode, bits = item
    g = parse_graph6(rec)
    obj = {"graph6": rec, "n": g.n, "lambda": str(lam), "mode": mode}
    if mode == "exact":
        sign = md_comparison(g, lam)
        obj.update({"holds": sign >= 0, "strict": sign > 0})
        return obj
    try:
        cert = clique_min_certificate(g, lam, bits)
    except OutOfRangeError as exc:
        obj.update({"verdict": Verdict.INCONCLUSIVE.value, "reason": str(exc)})
        return obj
    except ValueError as exc:
        obj.update({"error": str(exc)})
        return obj
    obj.update({"verdict": cert.verdict.value, "lower_bound": _dec(cert.lower_bound, "floor"),
                "uniform_bound": _dec(cert.uniform_bound, "floor"), "triangle_gap": _dec(cert.triangle_gap),
                "tail": _dec(cert.tail, "ceiling")})
    return obj


def cmd_mdcert(args, out) -> int:
    if args.lam < 0:
        raise UsageError("--lambda must be non-negative")
    items = [(rec, args.lam, args.mode, args.bits) for rec, _ in _records(args)]
    alarm = error = False
    for obj in _map(_md_one, items, args.jobs):
        if "error" in obj:
            error = True
        elif args.mode == "exact" and not obj["holds"]:
            obj["alarm"] = "clique comparison fails"
            alarm = True
        _emit(out, obj)
    return EXIT_ALARM if alarm else EXIT_USAGE if error else EXIT_OK


def _verify_one(item) -> dict:
    index, rec, ref, kind, direction, girth_min, k_max = item
    g = parse_graph6(rec)
    res = compare_graph(g, parse_spec(ref), kind, direction, girth_min, k_max, index, rec)
    obj = {"index": index, "graph6": rec, "n": g.n}
    if res.rejected:
        obj["rejected"] = res.rejected
        return obj
    obj.update({"comparisons": [c.value for c in res.comparisons],
                "strict_expected": res.strict_expected, "alarms": res.alarms})
    return obj


def cmd_verify(args, out) -> int:
    try:
        parse_spec(args.ref)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    items = [(i, rec, args.ref, args.kind, args.direction, args.girth_min, args.k_max)
             for i, (rec, _) in enumerate(_records(args))]
    results = _map(_verify_one, items, args.jobs)
    for obj in results:
        _emit(out, obj)
    alarms = sum(len(r.get("alarms", ())) for r in results)
    summary = {
        "graphs": len(results),
        "rejected": sum("rejected" in r for r in results),
        "violations": sum(c == "GT" for r in results for c in r.get("comparisons", ())),
        "alarms": alarms,
        "reference": args.ref, "kind": args.kind, "direction": args.direction,
    }
    out.flush()
    sys.stderr.write(json.dumps(summary) + "\n")
    return EXIT_ALARM if alarms else EXIT_OK


COMMANDS = {
    "construct": cmd_construct, "count": cmd_count, "census": cmd_census, "expand": cmd_expand,
    "certify": cmd_certify, "mdcert": cmd_mdcert, "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = open(args.output, "w") if getattr(args, "output", None) else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(f"clusterbound {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except Graph6Error as exc:
        sys.stderr.write(f"clusterbound {args.command}: input error: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        sys.stderr.write(f"clusterbound {args.command}: {exc}\n")
        return EXIT_INPUT
    finally:
        if out is not sys.stdout:
            out.close()
        else:
            out.flush()


if __name__ == "__main__":
    sys.exit(main())
