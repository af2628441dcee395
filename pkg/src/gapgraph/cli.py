"""Command-line entry point: ``gapgraph <module> <action> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path

from . import analytic, dpg, graphic, graphs, primes
from .exceptions import GapGraphError
from .logvalue import LogValue
from .pipeline import RunConfig, cmd_report, cmd_verify_all, threshold_artifact


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.replace(" ", "").split(",") if t]


def _emit(args, obj, text: str | None = None) -> None:
    if args.json or text is None:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def _primes(args) -> int:
    if args.action == "sieve":
        if args.cache:
            primes.write_gap_cache(args.cache, args.limit)
        recs = list(primes.sieve_gaps(args.limit))
        last = recs[-1]
        _emit(args, {"limit": args.limit, "count": len(recs), "lastPrime": last.prime},
              f"{len(recs)} primes <= {args.limit}, last {last.prime}")
    else:
        stats = primes.gap_stats(args.limit, _ints(args.n_values))
        _emit(args, stats.to_json())
    return 0


def _graphic(args) -> int:
    if args.action == "check":
        seq = _ints(args.seq)
        full = graphic.erdos_gallai_full(seq)
        red = graphic.zz_tv_reduced(seq)
        obj = {"seq": seq, "reduced": red.to_json(), "fullGraphic": full.graphic}
        _emit(args, obj, f"{'graphic' if red.graphic else 'not graphic'} (m={red.m}, checked k={list(red.checked_ks)})")
        return 0 if red.graphic == full.graphic else 2
    report = graphic.sweep(args.max_n)
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2) + "\n")
    _emit(args, report, f"checked PD_n for n <= {report['checked']}: {len(report['failures'])} failures")
    return 0 if report["pass"] else 1


def _graphs(args) -> int:
    if args.action == "realize":
        g = graphs.havel_hakimi_realize(_ints(args.seq))
        if args.out:
            g.write(args.out)
        _emit(args, {"n": g.n, "edges": list(g.edges())}, g.to_edgelist().rstrip())
    else:
        g = graphs.SimpleGraph.read(args.input)
        m = graphs.maximum_matching(g, seed=args.seed)
        _emit(args, {"size": len(m), "edges": [list(e) for e in m.edges]},
              f"maximum matching size {len(m)}")
    return 0


def _dpg(args) -> int:
    if args.action == "witness":
        cert = dpg.dpg_inequality_witness(args.n)
        _emit(args, cert.to_json())
        return 0 if cert.passed else 1
    out = open(args.certify, "w") if args.certify else None
    steps = 0
    try:
        for cert in dpg.dpg_run(args.start, args.end, args.seed):
            steps += 1
            if out:
                out.write(json.dumps(cert.to_json(), sort_keys=True) + "\n")
    finally:
        if out:
            out.close()
    _emit(args, {"start": args.start, "end": args.end, "steps": steps, "pass": True},
          f"{steps} growth steps from n={args.start} to n={args.end}, none stuck")
    return 0


def _analytic(args) -> int:
    params = analytic.AnalyticParams(alpha=args.alpha)
    if args.action == "thresholds":
        art = threshold_artifact()
        if args.report:
            Path(args.report).write_text(json.dumps(art, indent=2) + "\n")
        summary = {w: {k: art[w][k] for k in ("tMin", "holdsAtTarget", "signChanges", "pass")}
                   for w in ("case2", "dpg")}
        summary["params"] = art["params"]
        _emit(args, summary)
        return 0 if all(summary[w]["pass"] for w in ("case2", "dpg")) else 1
    x = LogValue.exp(args.log_x)
    if args.op == "sn_bound":
        res = analytic.sn_bound(x, LogValue.exp(args.log_n), params, LogValue.exp(args.log_m))
    elif args.op == "integral_I_bound":
        res = analytic.integral_I_bound(x, LogValue.exp(args.log_t), args.delta, params)
    elif args.op == "first_moment_bound":
        res = analytic.first_moment_bound(x, args.delta, LogValue.exp(args.log_i), LogValue.exp(args.log_m))
    elif args.op == "eta":
        _emit(args, {"eta": analytic.eta(args.log_t, params.c0, scale="log")})
        return 0
    else:
        raise GapGraphError(f"unknown op {args.op}")
    _emit(args, {"op": args.op, "params": params.to_json(), "log10Value": res.value.log / math.log(10),
                 "value": res.value.to_json(), "hypotheses": res.hypotheses, "extrapolated": res.extrapolated})
    return 0


def _zeros(args) -> int:
    from . import zeros

    table = zeros.load_zeros(args.file)
    if args.action == "check":
        rep = zeros.rect_count_check(table)
        _emit(args, rep, f"{rep['points']} points checked, {rep['violationCount']} violations")
        return 0 if rep["pass"] else 1
    approx, env = zeros.explicit_formula_psi(args.x, args.T, table)
    exact = primes.psi(int(math.floor(args.x)))
    _emit(args, {"x": args.x, "T": args.T, "approx": approx, "psi": exact,
                 "envelope": env, "ratio": abs(approx - exact) / env})
    return 0


def _verify_all(args) -> int:
    cfg = RunConfig(limit=args.limit, max_n=args.max_n, seed=args.seed,
                    zeros_path=Path(args.zeros) if args.zeros else None, out_dir=Path(args.out),
                    dpg_end=args.dpg_end, dusart_limit=args.dusart_limit)
    cert = cmd_verify_all(cfg)
    _emit(args, cert.to_json(), f"verify-all: {'PASS' if cert.passed else 'FAIL'} ({args.out}/certificate.json)")
    return 0 if cert.passed else 1


def _report(args) -> int:
    paths = cmd_report(RunConfig(out_dir=Path(args.out)), Path(args.dest) if args.dest else None)
    _emit(args, [str(p) for p in paths], "\n".join(map(str, paths)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print machine-readable JSON")
    p = argparse.ArgumentParser(prog="gapgraph", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="module", required=True)

    pr = sub.add_parser("primes").add_subparsers(dest="action", required=True)
    s = pr.add_parser("sieve", parents=[common])
    s.add_argument("--limit", type=int, required=True)
    s.add_argument("--cache", help="also write a gaps.bin cache file here")
    s = pr.add_parser("stats", parents=[common])
    s.add_argument("--limit", type=int, required=True)
    s.add_argument("--n-values", default="2,4,6,8,10")

    gr = sub.add_parser("graphic").add_subparsers(dest="action", required=True)
    s = gr.add_parser("check", parents=[common])
    s.add_argument("--seq", required=True)
    s = gr.add_parser("sweep", parents=[common])
    s.add_argument("--max-n", type=int, default=10**6)
    s.add_argument("--report")

    gs = sub.add_parser("graphs").add_subparsers(dest="action", required=True)
    s = gs.add_parser("realize", parents=[common])
    s.add_argument("--seq", required=True)
    s.add_argument("--out")
    s = gs.add_parser("match", parents=[common])
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--seed", type=int, default=0)

    dp = sub.add_parser("dpg").add_subparsers(dest="action", required=True)
    s = dp.add_parser("run", parents=[common])
    s.add_argument("--start", type=int, default=5)
    s.add_argument("--end", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--certify")
    s = dp.add_parser("witness", parents=[common])
    s.add_argument("--n", type=int, required=True)

    an = sub.add_parser("analytic").add_subparsers(dest="action", required=True)
    s = an.add_parser("thresholds", parents=[common])
    s.add_argument("--report")
    s.add_argument("--alpha", type=float, default=analytic.CASE2_ALPHA)
    s = an.add_parser("eval", parents=[common])
    s.add_argument("--op", required=True, choices=["sn_bound", "integral_I_bound", "first_moment_bound", "eta"])
    s.add_argument("--alpha", type=float, default=analytic.CASE2_ALPHA)
    s.add_argument("--log-x", type=float, default=5000.0)
    s.add_argument("--log-n", type=float, default=0.0)
    s.add_argument("--log-m", type=float, default=0.0)
    s.add_argument("--log-t", type=float, default=10.0)
    s.add_argument("--log-i", type=float, default=0.0)
    s.add_argument("--delta", type=float, default=0.5)

    ze = sub.add_parser("zeros").add_subparsers(dest="action", required=True)
    s = ze.add_parser("check", parents=[common])
    s.add_argument("--file", required=True)
    s = ze.add_parser("psi", parents=[common])
    s.add_argument("--file", required=True)
    s.add_argument("--x", type=float, required=True)
    s.add_argument("--T", type=float, required=True)

    s = sub.add_parser("verify-all", parents=[common])
    s.add_argument("--limit", type=int, default=2_000_000)
    s.add_argument("--max-n", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--dpg-end", type=int, default=10_000)
    s.add_argument("--dusart-limit", type=int, default=10**8)
    s.add_argument("--zeros")
    s.add_argument("--out", default="gapgraph-out")

    s = sub.add_parser("report", parents=[common])
    s.add_argument("--out", default="gapgraph-out")
    s.add_argument("--dest")
    return p


HANDLERS = {
    "primes": _primes, "graphic": _graphic, "graphs": _graphs, "dpg": _dpg,
    "analytic": _analytic, "zeros": _zeros, "verify-all": _verify_all, "report": _report,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return HANDLERS[args.module](args)
    except GapGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
