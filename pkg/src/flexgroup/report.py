"""Canonical JSON plus markdown/CSV renderers for CLI documents."""

from __future__ import annotations

import csv
import io
import json


def canonical_json(doc: dict) -> str:
    """Stable byte-for-byte serialization: sorted keys, two-space indent."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    return str(value)


def render_analysis_md(doc: dict) -> str:
    lines = [f"# {doc['spec']}", ""]
    lines.append(f"- order: {doc['order']}")
    lines.append(f"- d(G): {doc['d']}  (witness: {doc['witness_labels']})")
    cyc = doc["cycliciser"]
    lines.append(f"- cycliciser: order {len(cyc['members'])}, "
                 f"generator index {cyc['generator']}")
    tag = doc["structure"]
    lines.append(f"- structure: {tag['variant']} {tag['params']}")
    lines.append("")
    lines.append("| k | flexible | counterexample |")
    lines.append("|---|----------|----------------|")
    for entry in doc["profile"]:
        cex = entry.get("counterexample")
        lines.append(f"| {entry['k']} | {_fmt(entry['flexible'])} | "
                     f"{cex if cex is not None else '-'} |")
    return "\n".join(lines) + "\n"


def render_analysis_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["field", "value"])
    for key in ("spec", "order", "d"):
        writer.writerow([key, doc[key]])
    writer.writerow(["witness", json.dumps(doc["witness"])])
    writer.writerow(["cycliciser_order", len(doc["cycliciser"]["members"])])
    writer.writerow(["structure", json.dumps(doc["structure"], sort_keys=True)])
    for entry in doc["profile"]:
        writer.writerow([f"flexible_k{entry['k']}", entry["flexible"]])
    return buf.getvalue()


def render_verify_md(doc: dict) -> str:
    lines = [f"# verification: {doc['suite']}", ""]
    for suite_doc in doc["suites"]:
        lines.append(f"## {suite_doc['suite']}")
        lines.append("")
        lines.append("| group | check | expected | observed | agree |")
        lines.append("|-------|-------|----------|----------|-------|")
        for rep in suite_doc["groups"]:
            if not rep["checks"]:
                lines.append(f"| {rep['group']} | ({rep.get('note', 'skipped')}) "
                             f"| - | - | - |")
            for c in rep["checks"]:
                lines.append(
                    f"| {rep['group']} | {c['name']} | {_fmt(c['expected'])} "
                    f"| {_fmt(c['observed'])} | {_fmt(c['agree'])} |"
                )
        summary = suite_doc["summary"]
        lines.append("")
        lines.append(f"{summary['checks']} checks, "
                     f"{summary['disagreements']} disagreements")
        lines.append("")
    return "\n".join(lines)


def render_verify_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "group", "check", "expected", "observed",
                     "agree", "details"])
    for suite_doc in doc["suites"]:
        for rep in suite_doc["groups"]:
            for c in rep["checks"]:
                writer.writerow([suite_doc["suite"], rep["group"], c["name"],
                                 c["expected"], c["observed"], c["agree"],
                                 c["details"]])
    return buf.getvalue()


def render_catalog_md(doc: dict) -> str:
    lines = ["| name | spec | order | d | tags |",
             "|------|------|-------|---|------|"]
    for e in doc["entries"]:
        lines.append(f"| {e['name']} | {e['spec']} | {e['order']} | "
                     f"{_fmt(e['expected_d'])} | {', '.join(e['tags'])} |")
    return "\n".join(lines) + "\n"


def render_catalog_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "spec", "order", "expected_d", "tags"])
    for e in doc["entries"]:
        writer.writerow([e["name"], e["spec"], e["order"], e["expected_d"],
                         "|".join(e["tags"])])
    return buf.getvalue()
