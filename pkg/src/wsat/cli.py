"""``wsat`` command line.  Exit codes: 0 success, 1 disagreement or failed
verification, 2 usage error."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import constructions as C
from .canon import CapExceeded, enumerate_cores, enumerate_trees
from .classify import CLAIMS, classify_good, reproduce
from .config import FORMATS, Config
from .formulas import wsat_formulas
from .graph import Graph, GraphSpecError, parse_graph_spec
from .pattern import NotATree, Pattern, caterpillar_of
from .percolation import Certificate, HostTooSmall, closure, is_weakly_saturated, verify_certificate
from .solver import table_csv, wsat_exact, wsat_limit_estimate


class UsageError(Exception):
    pass


def _graph(text: Optional[str], flag: str) -> Graph:
    if text is None:
        raise UsageError(f"{flag} is required")
    return parse_graph_spec(text)


def _pattern(text: Optional[str]) -> Pattern:
    g = _graph(text, "--pattern")
    try:
        return Pattern(g, text)
    except ValueError as exc:
        raise UsageError(f"bad pattern {text!r}: {exc}") from None


def _emit(cfg: Config, payload: dict, text: str, csv_rows=None, csv_cols=None,
          graph: Optional[Graph] = None) -> None:
    fmt = cfg.format
    if fmt == "json":
        out = json.dumps(payload, sort_keys=False) + "\n"
    elif fmt == "csv":
        if csv_rows is None:
            raise UsageError("csv output is not available for this command")
        out = table_csv(csv_rows, csv_cols)
    elif fmt in ("dot", "g6"):
        if graph is None:
            raise UsageError(f"{fmt} output needs a graph result")
        out = graph.to_dot() if fmt == "dot" else graph.to_graph6() + "\n"
    else:
        out = text.rstrip("\n") + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# ----------------------------------------------------------------------
# subcommands

def cmd_closure(a, cfg) -> int:
    f, g = _pattern(a.pattern), _graph(a.graph, "--graph")
    final, cert = closure(g, f)
    payload = {"final": final.to_graph6(), "edges": final.m, "complete": final.is_complete(),
               "certificate": cert.to_dict()}
    _emit(cfg, payload, f"closure has {final.m} edges; complete={final.is_complete()}", graph=final)
    return 0


def cmd_saturated(a, cfg) -> int:
    f, g = _pattern(a.pattern), _graph(a.graph, "--graph")
    ok = is_weakly_saturated(g, f)
    _emit(cfg, {"saturated": ok, "n": g.n, "edges": g.m}, str(ok).lower())
    return 0


def cmd_exact(a, cfg) -> int:
    f = _pattern(a.pattern)
    if a.n is None:
        raise UsageError("--n is required")
    res = wsat_exact(a.n, f, m_cap=a.m_cap, threads=cfg.threads, max_edges=cfg.max_edges)
    d = res.as_dict()
    if res.value is None:
        text = f"no weakly saturated graph with at most {res.m_cap} edges; w-sat >= {res.lower_bound}"
    else:
        text = f"{res.value} {d['witness']}"
    _emit(cfg, d, text, [{"n": a.n, "value": res.value}], ["n", "value"], graph=res.witness)
    return 0


def cmd_limit(a, cfg) -> int:
    f = _pattern(a.pattern)
    est = wsat_limit_estimate(f, window=a.window, max_n=cfg.max_n, threads=cfg.threads,
                              max_edges=cfg.max_edges)
    d = est.as_dict()
    text = f"{est.value} stabilized={est.stabilized} certified={est.certified} n_used={est.n_used}"
    _emit(cfg, d, text, d["series"], ["n", "value", "lower_bound"])
    return 0


def cmd_formulas(a, cfg) -> int:
    g = _graph(a.pattern, "--pattern")
    rec = wsat_formulas(g, a.n)
    d = rec.as_dict()
    lines = [f"{b.kind:5s} {b.value:4d}  {b.rule}  {b.note}" for b in rec.entries]
    _emit(cfg, d, "\n".join(lines) or "no rule applies", [b.as_dict() for b in rec.entries],
          ["kind", "value", "rule", "note"])
    return 0


def cmd_construct(a, cfg) -> int:
    if a.n is None:
        raise UsageError("--n is required")
    kind = a.kind
    if kind == "caterpillar":
        g = _graph(a.pattern, "--pattern")
        spec = caterpillar_of(g)
        if spec is None:
            raise UsageError("pattern is not a caterpillar")
        out = C.caterpillar_saturator(spec, a.n)
    elif kind == "endstar":
        out = C.endstar_saturator(_pattern(a.pattern), a.n)
    elif kind == "endd-mind":
        if a.u is None or a.w is None:
            raise UsageError("--u and --w are required")
        out = C.endd_mind_saturator(_pattern(a.pattern), a.u, a.w, a.n)
    elif kind == "local":
        out = C.local_structure_saturator(_pattern(a.pattern), a.n, a.structure)
    elif kind == "high-degree":
        if a.N is None:
            raise UsageError("--N is required")
        t, (v1, v2) = C.high_degree_good_tree(a.N)
        out = C.endd_mind_saturator(Pattern(t), v1, v2, a.n)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    d = out.to_dict()
    ok = bool(verify_certificate(out.certificate))
    _emit(cfg, d, f"{out.rule}: {out.claimed_edges} edges, n={a.n}, verifies={ok}", graph=out.start)
    return 0 if ok else 1


def cmd_classify(a, cfg) -> int:
    g = _graph(a.graph or a.pattern, "--graph")
    v = classify_good(g)
    _emit(cfg, {"status": v.status, "rule": v.rule, "detail": v.detail},
          f"{v.status} ({v.rule}): {v.detail}")
    return 0


def cmd_enumerate(a, cfg) -> int:
    if a.n is None:
        raise UsageError("--n is required")
    if a.what == "trees":
        gs = enumerate_trees(a.n)
    else:
        gs = enumerate_cores(a.n, max_edges=cfg.max_edges)
    codes = [g.to_graph6() for g in gs]
    _emit(cfg, {"kind": a.what, "size": a.n, "count": len(codes), "graphs": codes}, "\n".join(codes),
          [{"index": i, "graph6": c} for i, c in enumerate(codes)], ["index", "graph6"])
    return 0


def cmd_reproduce(a, cfg) -> int:
    if a.claim is None:
        raise UsageError("--claim is required")
    params = json.loads(a.params) if a.params else {}
    if not isinstance(params, dict):
        raise UsageError("--params must be a JSON object")
    rep = reproduce(a.claim, params)
    d = rep.to_dict()
    d["stats"].pop("seconds", None)  # keep JSON byte-stable
    d["stats"].pop("csv", None)
    lines = [f"{'ok ' if r.agree else 'BAD'} {r.instance}: predicted {r.predicted}, computed {r.computed}"
             for r in rep.rows]
    _emit(cfg, d, "\n".join(lines), d["rows"], ["instance", "predicted", "computed", "agree", "artifact"])
    return 0 if rep.ok else 1


def cmd_verify(a, cfg) -> int:
    if a.certificate is None:
        raise UsageError("--certificate is required")
    with open(a.certificate) as fh:
        data = json.load(fh)
    if "certificate" in data:  # construction output with header
        data = data["certificate"]
    cert = Certificate.from_dict(data)
    v = verify_certificate(cert)
    _emit(cfg, {"ok": v.ok, "failed_step": v.failed_step, "reason": v.reason, "final_edges": v.final_edges},
          "ok" if v.ok else f"failed at step {v.failed_step}: {v.reason}")
    return 0 if v.ok else 1


COMMANDS = {
    "closure": cmd_closure, "saturated": cmd_saturated, "exact": cmd_exact, "limit": cmd_limit,
    "formulas": cmd_formulas, "construct": cmd_construct, "classify": cmd_classify,
    "enumerate": cmd_enumerate, "reproduce": cmd_reproduce, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker processes (default $WSAT_THREADS or 1)")
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-edges", type=int, default=None, dest="max_edges")
    common.add_argument("--max-n", type=int, default=None, dest="max_n")

    p = argparse.ArgumentParser(prog="wsat", description="Weak saturation numbers and certificates.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name, parents=[common])
        if name in ("closure", "saturated", "exact", "limit", "formulas", "construct", "classify"):
            s.add_argument("--pattern")
        if name in ("closure", "saturated", "classify"):
            s.add_argument("--graph")
        if name in ("exact", "formulas", "construct", "enumerate"):
            s.add_argument("--n", type=int)
        if name == "exact":
            s.add_argument("--m-cap", type=int, dest="m_cap")
        if name == "limit":
            s.add_argument("--window", type=int, default=2)
        if name == "construct":
            s.add_argument("--kind", required=True,
                           choices=["caterpillar", "endstar", "endd-mind", "local", "high-degree"])
            s.add_argument("--u", type=int)
            s.add_argument("--w", type=int)
            s.add_argument("--N", type=int)
            s.add_argument("--structure", choices=list(C.STRUCTURES))
        if name == "enumerate":
            s.add_argument("what", choices=["trees", "cores"])
        if name == "reproduce":
            s.add_argument("--claim", choices=sorted(CLAIMS))
            s.add_argument("--params", default=None, help="JSON object of claim parameters")
        if name == "verify":
            s.add_argument("--certificate")
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config.from_env(threads=args.threads, format=args.format, out=args.out, seed=args.seed,
                              max_edges=args.max_edges, max_n=args.max_n)
        random.seed(cfg.seed)
        return COMMANDS[args.command](args, cfg)
    except (GraphSpecError, UsageError, json.JSONDecodeError, ValueError, HostTooSmall, NotATree,
            CapExceeded, C.ConstructionError, KeyError, OSError) as exc:
        print(f"wsat: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
