"""End-to-end verification run and its certificate files."""

from __future__ import annotations

import csv
import json
import logging
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .analytic import AnalyticParams, dusart_sweep, find_threshold, grid, sign_changes, THRESHOLDS
from .dpg import dpg_run, small_n_matching_check
from .exceptions import GapGraphError
from .graphic import sweep
from .primes import CACHE_ENV, GapRecord, cached_gaps, nth_primes

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
THRESHOLD_GRIDS = {"case2": (28.0, 60.0), "dpg": (32.0, 60.0)}
THRESHOLD_BRACKETS = {"case2": (29.0, 32.0), "dpg": (33.0, 36.0)}
EF_XS = (10**4 + 0.5, 10**5 + 0.5, 10**6 + 0.5, 10**7 + 0.5)
EF_TS = (1e3, 1e4, 5e4)


@dataclass
class RunConfig:
    limit: int = 2_000_000
    max_n: int = 100_000
    seed: int = 42
    zeros_path: Path | None = None
    out_dir: Path = Path("gapgraph-out")
    dpg_start: int = 5
    dpg_end: int = 10_000
    small_n: int = 8
    dusart_limit: int = 10**8
    dusart_points: int = 10_000
    cache_dir: Path | None = None

    def to_json(self) -> dict:
        return {
            "limit": self.limit, "maxN": self.max_n, "seed": self.seed,
            "zerosPath": str(self.zeros_path) if self.zeros_path else None,
            "dpgStart": self.dpg_start, "dpgEnd": self.dpg_end, "smallN": self.small_n,
            "dusartLimit": self.dusart_limit, "dusartPoints": self.dusart_points,
        }


@dataclass
class Certificate:
    command: str
    inputs: dict
    results: dict
    passed: bool
    failures: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    tool_version: str = __version__

    def to_json(self) -> dict:
        return {
            "schemaVersion": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "failures": self.failures,
            "pass": self.passed,
            "timestamp": self.timestamp,
            "toolVersion": self.tool_version,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def write(self, path) -> Path:
        path = Path(path)
        path.write_text(self.dumps() + "\n")
        return path


def _write_json(path: Path, obj) -> None:
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def threshold_artifact() -> dict:
    out = {"params": AnalyticParams().to_json()}
    for which, (lo, hi) in THRESHOLD_GRIDS.items():
        f = THRESHOLDS[which][0]
        rep = find_threshold(which, *THRESHOLD_BRACKETS[which])
        out[which] = {
            "tMin": rep.t_min,
            "failsBelow": rep.fails_below,
            "targetT": rep.target_t,
            "holdsAtTarget": rep.holds_at_target,
            "signChanges": sign_changes(which, lo, hi),
            "grid": [{"t": t, "lhs": s.lhs, "rhs": s.rhs, "holds": s.holds}
                     for t in grid(lo, hi, 0.01) for s in [f(t)]],
        }
        out[which]["pass"] = rep.holds_at_target and out[which]["signChanges"] == 1
    return out


def cmd_verify_all(config: RunConfig) -> Certificate:
    """Run every desk-scale check and write per-module artifacts plus one certificate."""
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    results, failures = {}, []

    cache_dir = config.cache_dir or os.environ.get(CACHE_ENV)
    gaps = cached_gaps(config.limit, cache_dir)
    if config.max_n > len(gaps):
        raise GapGraphError(f"limit {config.limit} is below p_{config.max_n} = {int(nth_primes(config.max_n)[-1])}")

    log.info("graphic sweep to n=%d", config.max_n)
    if config.max_n >= 2:
        records = (GapRecord(i + 1, 0, int(g)) for i, g in enumerate(gaps[: config.max_n].tolist()))
        graphic = sweep(config.max_n, records)
    else:
        graphic = {"maxN": config.max_n, "checked": 1, "failures": [], "pass": True}
    graphic["pd1Graphic"] = False  # PD_1 = (1) has odd sum; excluded from the pass criteria
    _write_json(out / "graphic.json", graphic)
    results["graphic"] = {k: graphic[k] for k in ("maxN", "checked", "pass")}
    if not graphic["pass"]:
        failures.append({"check": "graphic", "n": [f["n"] for f in graphic["failures"]]})

    log.info("growth run %d -> %d", config.dpg_start, config.dpg_end)
    steps, stuck = 0, None
    with open(out / "dpg.jsonl", "w") as fh:
        try:
            for cert in dpg_run(config.dpg_start, config.dpg_end, config.seed):
                fh.write(json.dumps(cert.to_json(), sort_keys=True) + "\n")
                steps += 1
        except GapGraphError as exc:
            stuck = str(exc)
    results["dpg"] = {"start": config.dpg_start, "end": config.dpg_end, "steps": steps,
                      "stuck": stuck, "pass": stuck is None}
    if stuck:
        failures.append({"check": "dpg", "error": stuck})

    small = small_n_matching_check(config.small_n)
    _write_json(out / "small_n.json", small)
    results["smallN"] = {"maxN": config.small_n, "pass": all(r["ok"] for r in small)}
    if not results["smallN"]["pass"]:
        failures.append({"check": "smallN", "rows": [r for r in small if not r["ok"]]})

    thresholds = threshold_artifact()
    _write_json(out / "thresholds.json", thresholds)
    for which in THRESHOLD_GRIDS:
        t = thresholds[which]
        results[f"threshold_{which}"] = {k: t[k] for k in ("tMin", "holdsAtTarget", "signChanges", "pass")}
        if not t["pass"]:
            failures.append({"check": f"threshold_{which}"})

    dusart = dusart_sweep(config.dusart_limit, config.dusart_points)
    _write_json(out / "dusart.json", dusart)
    results["dusart"] = {"limit": dusart["limit"], "points": dusart["points"], "pass": dusart["pass"]}
    if not dusart["pass"]:
        failures.append({"check": "dusart", "x": dusart["failures"]})

    if config.zeros_path:
        from .zeros import explicit_formula_matrix, load_zeros, rect_count_check

        table = load_zeros(config.zeros_path)
        rect = rect_count_check(table)
        Ts = [T for T in EF_TS if T <= table.max_ordinate]
        matrix = explicit_formula_matrix(table, EF_XS, Ts)
        findings = [r for r in matrix if r["ratio"] >= 1]
        zeros = {"count": table.count, "maxOrdinate": table.max_ordinate, "rectCount": rect,
                 "explicitFormula": matrix, "findings": findings}
        _write_json(out / "zeros.json", zeros)
        ok = rect["pass"] and all(r["ratio"] <= 10 for r in matrix)
        results["zeros"] = {"count": table.count, "rectPass": rect["pass"],
                            "maxRatio": max(r["ratio"] for r in matrix), "findings": len(findings), "pass": ok}
        if not ok:
            failures.append({"check": "zeros"})

    cert = Certificate("verify-all", config.to_json(), results, not failures, failures)
    cert.write(out / "certificate.json")
    return cert


def _csv(path: Path, header, rows) -> Path:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return path


def cmd_report(config: RunConfig, dest: Path | None = None) -> list[Path]:
    """Render CSV tables from the artifacts of an earlier ``verify-all`` run."""
    src = Path(config.out_dir)
    needed = [src / "thresholds.json", src / "dusart.json"]
    missing = [str(p) for p in needed if not p.exists()]
    if missing:
        raise GapGraphError("missing artifacts: " + ", ".join(missing))
    dest = Path(dest) if dest else src / "report"
    dest.mkdir(parents=True, exist_ok=True)
    written = []
    thresholds = json.loads((src / "thresholds.json").read_text())
    for which in THRESHOLD_GRIDS:
        rows = [(r["t"], r["lhs"], r["rhs"], r["holds"]) for r in thresholds[which]["grid"]]
        written.append(_csv(dest / f"thresholds_{which}.csv", ("t", "lhs", "rhs", "holds"), rows))
    dusart = json.loads((src / "dusart.json").read_text())
    rows = [(r["x"], r["pi"], r["lowerMargin"], r["upperMargin"]) for r in dusart["rows"]]
    written.append(_csv(dest / "dusart.csv", ("x", "pi", "lower_margin", "upper_margin"), rows))
    if (src / "zeros.json").exists():
        zeros = json.loads((src / "zeros.json").read_text())
        rows = [(r["x"], r["T"], r["psi"], r["approx"], r["error"], r["envelope"], r["ratio"])
                for r in zeros["explicitFormula"]]
        written.append(_csv(dest / "explicit_formula.csv",
                            ("x", "T", "psi", "approx", "error", "envelope", "ratio"), rows))
    return written
