"""Machine-readable verification reports.

A report is deterministic given the command parameters and seed: items are
assembled in submission order whatever the --jobs level, and wall-clock
fields live in a separate "timing" block excluded from the determinism
contract.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__


class VerifyReport:
    def __init__(self, command, params, corpus=""):
        self.command = command
        self.params = params
        self.corpus = corpus
        self.items = []
        self.t0 = time.perf_counter()

    def add(self, item_id, passed, **detail):
        entry = {"id": item_id, "pass": bool(passed)}
        entry.update(detail)
        self.items.append(entry)

    @property
    def aggregate_pass(self):
        return all(item["pass"] for item in self.items)

    def to_json(self):
        return {
            "command": self.command,
            "params": self.params,
            "corpus": self.corpus,
            "items": self.items,
            "aggregate_pass": self.aggregate_pass,
            "tool_version": __version__,
            "timing": {"wall_time": time.perf_counter() - self.t0},
        }

    def render(self, pretty=False):
        obj = self.to_json()
        if not pretty:
            return json.dumps(obj, sort_keys=True)
        lines = [f"# {self.command}  (chromalg {__version__})"]
        if self.corpus:
            lines.append(f"corpus: {self.corpus}")
        for item in self.items:
            mark = "PASS" if item["pass"] else "FAIL"
            extra = {k: v for k, v in item.items() if k not in ("id", "pass")}
            suffix = f"  {extra}" if extra else ""
            lines.append(f"  [{mark}] {item['id']}{suffix}")
        lines.append(f"aggregate: {'PASS' if self.aggregate_pass else 'FAIL'}"
                     f"  ({len(self.items)} items,"
                     f" {obj['timing']['wall_time']:.2f}s)")
        return "\n".join(lines)


def run_items(report, jobs, tasks):
    """Run (item_id, fn) pairs, possibly concurrently; deterministic order."""
    if jobs <= 1:
        results = [(item_id, fn()) for item_id, fn in tasks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [(item_id, pool.submit(fn)) for item_id, fn in tasks]
            results = [(item_id, fut.result()) for item_id, fut in futures]
    for item_id, (passed, detail) in results:
        report.add(item_id, passed, **detail)
    return report
