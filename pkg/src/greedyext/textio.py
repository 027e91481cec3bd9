"""Poset document format and JSON report serialization.

Document grammar, one directive per line:

    # comment
    poset <n>
    cover <i> <j>
    label <i> <name>

Indices are 0-based.  Duplicate and transitive pairs are tolerated and
canonicalized away; formatting emits sorted cover lines then labels, so
parse(format(p)) round-trips byte-identically.  Reports serialize every
ratio as an exact "num/den" string, never a float.
"""

from __future__ import annotations

import json

from .errors import PosetSyntaxError
from .greedy import BalanceReport, Ratio
from .poset import Poset, build_poset


def parse_poset(text: str) -> Poset:
    """Parse a poset document into a canonical poset."""
    n = None
    pairs = []
    labels: dict[int, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(None, 2)
        directive = fields[0]
        if directive == "poset":
            if n is not None:
                raise PosetSyntaxError(line_no, "duplicate poset directive")
            if len(fields) != 2 or not fields[1].isdigit():
                raise PosetSyntaxError(line_no, "expected: poset <n>")
            n = int(fields[1])
        elif directive == "cover":
            if n is None:
                raise PosetSyntaxError(line_no, "cover before poset directive")
            parts = line.split()
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise PosetSyntaxError(line_no, "expected: cover <i> <j>")
            pairs.append((int(parts[1]), int(parts[2])))
        elif directive == "label":
            if n is None:
                raise PosetSyntaxError(line_no, "label before poset directive")
            if len(fields) != 3 or not fields[1].isdigit():
                raise PosetSyntaxError(line_no, "expected: label <i> <name>")
            labels[int(fields[1])] = fields[2].strip()
        else:
            raise PosetSyntaxError(line_no, f"unknown directive {directive!r}")
    if n is None:
        raise PosetSyntaxError(1, "missing poset directive")
    p = build_poset(n, pairs)
    if labels:
        p = p.with_labels(tuple(labels.get(i, "") for i in range(n)))
    return p


def format_poset(p: Poset, provenance: str | None = None) -> str:
    """Canonical document: sorted cover lines, labels last."""
    lines = []
    if provenance:
        lines.extend(f"# {entry}" for entry in provenance.splitlines())
    lines.append(f"poset {p.n}")
    lines.extend(f"cover {a} {b}" for (a, b) in sorted(p.covers))
    if p.labels is not None:
        lines.extend(
            f"label {i} {name}" for i, name in enumerate(p.labels) if name
        )
    return "\n".join(lines) + "\n"


def ratio_str(r: Ratio) -> str:
    return f"{r.numerator}/{r.denominator}"


def ratio_with_total(r: Ratio, hits: int) -> str:
    return f"{ratio_str(r)} ({hits} of {r.raw_total})"


def balance_report_dict(report: BalanceReport) -> dict:
    """JSON-ready view of a balance report; all ratios exact strings."""
    out = {
        "pairs": [
            {
                "x": x,
                "y": y,
                "before": before,
                "total": total,
                "ratio": ratio_str(ratio),
            }
            for (x, y, before, total, ratio) in report.pairs
        ],
        "best_pair": list(report.best_pair) if report.best_pair else None,
        "best_level": ratio_str(report.best_level) if report.best_level else None,
    }
    if report.alpha is not None:
        out["alpha"] = f"{report.alpha.numerator}/{report.alpha.denominator}"
        out["meets_alpha"] = report.meets_alpha
    return out


def render_json(command: str, input_name: str | None, results: dict) -> str:
    doc = {"command": command, "input": input_name, "results": results}
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
