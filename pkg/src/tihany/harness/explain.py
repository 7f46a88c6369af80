"""Human-readable certificate dumps for report records."""

from __future__ import annotations

from .sweep import SweepReport

LEMMA_REASONS = {
    "dense-clique": "its common neighbourhood C(K) is a clique, so K is dense",
    "equal-common-neighbourhood": "K is one of two braces at a vertex with equal common neighbourhoods",
    "clique-cutset": "K joins the lower-chromatic side of a clique cutset to the cutset",
}


def _names(labels: list[str], vertices) -> str:
    return "{" + ",".join(labels[v] for v in sorted(vertices)) + "}"


def explain_record(rec: dict) -> str:
    labels = rec["labels"]
    head = f"{rec['id']}: n={rec['n']} m={rec['m']} ω={rec['omega']} α={rec['alpha']}"
    lines = [head]
    if rec["chi"] is None:
        lines.append("unknown: chromatic number search exhausted its budget")
        return "\n".join(lines)
    lines.append(f"χ={rec['chi']}, colouring {[_names(labels, c) for c in rec['chi_coloring']]}")
    if not rec["chi_gt_omega"]:
        lines.append("out of scope: χ=ω")
        return "\n".join(lines)
    if not rec["claw_free"]:
        centre, leaves = rec["claw"]
        lines.append(f"out of scope: claw at {labels[centre]} with leaves {_names(labels, leaves)}")
    mt = rec["min_tihany"]
    if mt is not None:
        k = _names(labels, mt["clique"])
        lines.append(f"K={k}, χ {rec['chi']}→{mt['chi_after']}, Tihany")
        lines.append(f"colouring of G\\K: {[_names(labels, c) for c in mt['coloring_after']]}")
        if mt["lemma"]:
            lines.append(f"certified by {mt['lemma']}: {LEMMA_REASONS.get(mt['lemma'], '')}".rstrip(": "))
    if rec["refutations_checked"]:
        lines.append(f"{rec['refutations_checked']} smaller cliques refuted with a colouring; "
                     "each colour class met C(K)")
    for v in rec["violations"]:
        lines.append(f"VIOLATION {v['kind']}: {v}")
    for u in rec["unknowns"]:
        lines.append(f"unknown at stage {u['stage']}: budget {u['budget']}")
    for lemma in rec["lemmas"]:
        lines.append(f"check {lemma['name']}: {lemma['status']} ({lemma['checked']} checked)")
    return "\n".join(lines)


def explain(report: SweepReport, instance_id: str) -> str:
    return explain_record(report.record(instance_id))
