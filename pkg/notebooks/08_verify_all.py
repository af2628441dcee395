"""
A complete verification run
===========================

The same pipeline as ``gapgraph verify-all``, at a smaller scale, followed
by the CSV report.
"""

import json
import tempfile
from pathlib import Path

from gapgraph.pipeline import RunConfig, cmd_report, cmd_verify_all

out = Path(tempfile.mkdtemp()) / "run"
cfg = RunConfig(limit=200_000, max_n=10_000, out_dir=out, dpg_end=1000, dusart_limit=10**6,
                dusart_points=1000)
cert = cmd_verify_all(cfg)
print(json.dumps(cert.results, indent=2))
print("pass:", cert.passed)

for p in cmd_report(cfg):
    print(p.name, len(p.read_text().splitlines()) - 1, "rows")
