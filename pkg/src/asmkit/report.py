"""Verification report plumbing: entries, stable serialization, figures.

A report is a sorted list of check entries.  Entries carry six stable
fields (check id, parameters, status, expected, actual, witness) plus an
in-memory elapsed-time field that never reaches the serialized forms, so
that repeated runs of the same checks produce byte-identical files.  All
values are rendered to strings once, at entry construction, with exact
fractions; sorting is by (check_id, rendered parameters) so the output
order is independent of execution order.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

STATUSES = ("pass", "fail", "finding")


def render_value(v) -> str:
    """Canonical string form of a check value.

    Integers and fractions render exactly; containers render recursively
    in a stable bracketed form; polynomial-like objects use their own
    render method when they have one, falling back to repr.
    """
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(render_value(x) for x in v) + ")"
    if isinstance(v, dict):
        items = sorted(v.items(), key=lambda kv: str(kv[0]))
        return "{" + ", ".join(
            f"{render_value(k)}: {render_value(x)}" for k, x in items) + "}"
    render = getattr(v, "render", None)
    if callable(render):
        return render()
    return repr(v)


def render_params(params: Mapping[str, object]) -> Tuple[Tuple[str, str], ...]:
    """Parameters as sorted, rendered key/value pairs."""
    return tuple(sorted((str(k), render_value(v)) for k, v in params.items()))


@dataclass(frozen=True)
class CheckEntry:
    """One check result; the sortable unit of a report."""

    check_id: str
    params: Tuple[Tuple[str, str], ...]
    status: str
    expected: str
    actual: str
    witness: Optional[str] = None
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def sort_key(self):
        return (self.check_id, self.params)

    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)


def make_entry(check_id: str, params: Mapping[str, object], status: str,
               expected, actual, witness=None, elapsed_ms: int = 0
               ) -> CheckEntry:
    """Build an entry, rendering every value to its canonical string."""
    return CheckEntry(
        check_id=check_id,
        params=render_params(params),
        status=status,
        expected=render_value(expected),
        actual=render_value(actual),
        witness=None if witness is None else render_value(witness),
        elapsed_ms=elapsed_ms,
    )


@dataclass
class VerificationReport:
    """A sorted collection of check entries."""

    entries: List[CheckEntry] = field(default_factory=list)

    def __post_init__(self):
        self.entries = sorted(self.entries, key=lambda e: e.sort_key)

    def extend(self, entries: Iterable[CheckEntry]) -> None:
        self.entries = sorted(
            list(self.entries) + list(entries), key=lambda e: e.sort_key)

    def counts(self) -> Dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for e in self.entries:
            out[e.status] += 1
        return out

    def has_failures(self) -> bool:
        return any(e.status == "fail" for e in self.entries)

    def total_elapsed_ms(self) -> int:
        return sum(e.elapsed_ms for e in self.entries)

    # -- serialized forms (six stable fields, no timing) -----------------------

    def to_json(self) -> str:
        rows = []
        for e in self.entries:
            rows.append({
                "check_id": e.check_id,
                "params": {k: v for k, v in e.params},
                "status": e.status,
                "expected": e.expected,
                "actual": e.actual,
                "witness": e.witness,
            })
        return json.dumps({"entries": rows}, sort_keys=True,
                          separators=(",", ":"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check_id", "params", "status", "expected", "actual",
                    "witness"])
        for e in self.entries:
            w.writerow([e.check_id, e.params_text(), e.status, e.expected,
                        e.actual, e.witness or ""])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            line = f"{e.status.upper():<7} {e.check_id}"
            if e.params:
                line += f" [{e.params_text()}]"
            if e.status != "pass" or e.expected != e.actual:
                line += f" expected={e.expected} actual={e.actual}"
            if e.witness:
                line += f" witness={e.witness}"
            lines.append(line)
        c = self.counts()
        lines.append(
            f"{len(self.entries)} checks: {c['pass']} pass, "
            f"{c['fail']} fail, {c['finding']} finding")
        return "\n".join(lines) + "\n"


FORMATS = ("json", "csv", "text")


def emit_report(report: VerificationReport, format: str, path: str) -> None:
    """Write one serialized form of the report to the given path."""
    if format == "json":
        data = report.to_json()
    elif format == "csv":
        data = report.to_csv()
    elif format == "text":
        data = report.to_text()
    else:
        raise ValueError(f"unknown format {format!r}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(data)


def render_figures(report: VerificationReport, base_path: str) -> List[str]:
    """Render summary figures next to a delimited report file.

    Writes two PNGs sharing the base path's stem: a status total chart and
    a per-check breakdown.  Returns the written paths.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    stem = base_path.rsplit(".", 1)[0] if "." in base_path.rsplit(
        "/", 1)[-1] else base_path
    written = []

    counts = report.counts()
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    ax.bar(list(counts), [counts[s] for s in counts],
           color=["#2a7e43", "#b03030", "#b08030"])
    ax.set_ylabel("checks")
    ax.set_title("status totals")
    fig.tight_layout()
    path = f"{stem}_status.png"
    fig.savefig(path, dpi=110)
    plt.close(fig)
    written.append(path)

    per: Dict[str, Dict[str, int]] = {}
    for e in report.entries:
        row = per.setdefault(e.check_id, {s: 0 for s in STATUSES})
        row[e.status] += 1
    ids = sorted(per)
    fig, ax = plt.subplots(figsize=(7.0, max(2.5, 0.32 * len(ids) + 1.2)))
    base = [0] * len(ids)
    for status, color in (("pass", "#2a7e43"), ("fail", "#b03030"),
                          ("finding", "#b08030")):
        vals = [per[i][status] for i in ids]
        ax.barh(range(len(ids)), vals, left=base, color=color, label=status)
        base = [b + v for b, v in zip(base, vals)]
    ax.set_yticks(range(len(ids)))
    ax.set_yticklabels(ids, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("entries")
    ax.set_title("entries per check")
    ax.legend(fontsize=7)
    fig.tight_layout()
    path = f"{stem}_checks.png"
    fig.savefig(path, dpi=110)
    plt.close(fig)
    written.append(path)
    return written
