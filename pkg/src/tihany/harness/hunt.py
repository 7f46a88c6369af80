"""Counterexample hunting: the Tihany sweep plus the two-part colouring
partition check, with self-contained bundles for anything that fails."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..engine import MAX_ELT_VERTICES, TihanyCertificate, elt_partition_exists, find_min_tihany, is_tihany
from ..graph import common_neighbors_mask, to_mask
from ..graph6 import decode
from ..solvers import BudgetExhausted, Coloring, chromatic_number, clique_number
from ..analysis import find_claw
from .sweep import EXIT_CLEAN, EXIT_UNKNOWN, EXIT_VIOLATION, SweepConfig, SweepReport, run_sweep


def partition_pairs(chi: int) -> list[tuple[int, int]]:
    """All (s, t) with s, t >= 2 and s + t = chi + 1."""
    return [(s, chi + 1 - s) for s in range(2, chi) if chi + 1 - s >= 2]


@dataclass
class HuntResult:
    report: SweepReport
    failures: list[dict] = field(default_factory=list)
    unknowns: list[dict] = field(default_factory=list)
    bundle: Path | None = None

    @property
    def exit_code(self) -> int:
        base = self.report.exit_code
        if self.failures or base == EXIT_VIOLATION:
            return EXIT_VIOLATION
        if self.unknowns or base == EXIT_UNKNOWN:
            return EXIT_UNKNOWN
        return EXIT_CLEAN


def partition_checks(rec: dict, config: SweepConfig) -> tuple[list[dict], list[dict], list[dict]]:
    """(checked, failures, unknowns) for one report record."""
    checked: list[dict] = []
    failures: list[dict] = []
    unknowns: list[dict] = []
    if not (rec["claw_free"] and rec["chi_gt_omega"]) or rec["n"] > MAX_ELT_VERTICES:
        return checked, failures, unknowns
    g = decode(rec["graph6"])
    for s, t in partition_pairs(rec["chi"]):
        try:
            part = elt_partition_exists(g, s, t, config.budget)
        except BudgetExhausted as exc:
            unknowns.append({"id": rec["id"], "s": s, "t": t, "nodes": exc.nodes})
            continue
        entry = {"id": rec["id"], "s": s, "t": t}
        if part is None:
            failures.append({**entry, "kind": "no-partition", "graph6": rec["graph6"], "chi": rec["chi"]})
        else:
            checked.append({**entry, "s_side": sorted(part.s_side), "t_side": sorted(part.t_side)})
    return checked, failures, unknowns


def hunt(config: SweepConfig, bundle_dir: str | Path | None = None) -> HuntResult:
    report = run_sweep(config)
    result = HuntResult(report)
    for rec in report.instances:
        for v in rec["violations"]:
            result.failures.append({"id": rec["id"], "graph6": rec["graph6"], "chi": rec["chi"], **v})
        _, fails, unknown = partition_checks(rec, config)
        result.failures.extend(fails)
        result.unknowns.extend(unknown)
    if result.failures and bundle_dir is not None:
        result.bundle = write_bundle(Path(bundle_dir), result.failures, config)
    return result


def write_bundle(path: Path, failures: list[dict], config: SweepConfig) -> Path:
    path.mkdir(parents=True, exist_ok=True)
    lines = sorted({f["graph6"] for f in failures})
    (path / "graphs.g6").write_text("".join(line + "\n" for line in lines))
    payload = {"config": config.to_dict(), "failures": failures}
    (path / "failures.json").write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    return path


def verify_failure(failure: dict, kmax: int = 5) -> bool:
    """Re-derive one bundled failure from its graph alone; True when it is real."""
    g = decode(failure["graph6"])
    chi, _ = chromatic_number(g)
    if chi != failure["chi"]:
        return False
    kind = failure["kind"]
    if kind == "no-partition":
        return elt_partition_exists(g, failure["s"], failure["t"]) is None
    if kind == "no-tihany-clique":
        return (find_claw(g) is None and chi > clique_number(g)[0]
                and find_min_tihany(g, failure.get("kmax", kmax), chi=chi) is None)
    if kind.startswith("lemma:"):
        return not isinstance(is_tihany(g, failure["clique"], chi=chi), TihanyCertificate)
    if kind == "colour-class":
        kmask = to_mask(failure["clique"])
        coloring = Coloring(tuple(frozenset(c) for c in failure["coloring"]))
        rest = [v for v in range(g.n) if not kmask >> v & 1]
        if not coloring.is_proper(g, rest) or coloring.k > chi - kmask.bit_count():
            return False
        common = common_neighbors_mask(g, kmask)
        return any(not to_mask(c) & common for c in coloring.classes)
    return False


def verify_bundle(path: str | Path) -> list[bool]:
    data = json.loads((Path(path) / "failures.json").read_text())
    kmax = int(data["config"].get("kmax", 5))
    return [verify_failure(f, kmax) for f in data["failures"]]
