"""Sweep configuration, per-instance evaluation and the JSON report."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Iterable, Iterator

from ..analysis import find_claw
from ..engine import (
    LEMMA_CHECKS,
    LEMMA_NAMES,
    TihanyRefutation,
    audit_refutation,
    certifying_lemma,
    find_min_tihany,
)
from ..graph import Graph
from ..graph6 import decode, encode, read_file
from ..solvers import Budget, BudgetExhausted, chromatic_number, clique_number, stability_number
from ..constructions import Labeled
from .families import FAMILIES, Instance, connected_corpus, generate

EXIT_CLEAN = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_UNKNOWN = 3


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyRun:
    family: str
    count: int
    seed_start: int = 0
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[FamilyRun, ...] = ()
    # graph6 files; "atlas:7" stands for all connected graphs up to 7 vertices
    corpus: tuple[str, ...] = ()
    kmax: int = 5
    node_limit: int = 10_000_000
    time_limit: float = 10.0
    lemmas: tuple[str, ...] = ()
    workers: int = 1
    # only claw-free instances with chi > omega get a Tihany search
    require_claw_free: bool = True

    def __post_init__(self) -> None:
        if self.kmax < 1:
            raise ConfigError("kmax must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be positive")
        for run in self.families:
            if run.family not in FAMILIES:
                raise ConfigError(f"unknown family {run.family!r}")
            if run.count < 1:
                raise ConfigError(f"count for {run.family!r} must be positive")
        for name in self.lemmas:
            if name not in LEMMA_NAMES:
                raise ConfigError(f"unknown lemma check {name!r}; known: {list(LEMMA_NAMES)}")
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ConfigError("budget limits must be positive")

    @property
    def budget(self) -> Budget:
        return Budget(self.node_limit, self.time_limit)

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        known = {"families", "corpus", "kmax", "node_limit", "time_limit", "lemmas", "workers",
                 "require_claw_free"}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config fields {sorted(extra)}")
        try:
            runs = tuple(
                FamilyRun(r["family"], int(r["count"]), int(r.get("seed_start", 0)),
                          dict(r.get("params", {})))
                for r in data.get("families", ())
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad family entry: {exc}") from exc
        try:
            return cls(
                runs,
                tuple(data.get("corpus", ())),
                int(data.get("kmax", 5)),
                int(data.get("node_limit", 10_000_000)),
                float(data.get("time_limit", 10.0)),
                tuple(data.get("lemmas", ())),
                int(data.get("workers", 1)),
                bool(data.get("require_claw_free", True)),
            )
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"bad config value: {exc}") from exc

    @classmethod
    def load(cls, path: str | Path) -> "SweepConfig":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["families"] = [asdict(r) for r in self.families]
        out["corpus"] = list(self.corpus)
        out["lemmas"] = list(self.lemmas)
        return out


@dataclass(frozen=True)
class Job:
    """One instance to evaluate, in a form that pickles cheaply."""

    id: str
    family: str
    seed: int | None
    graph6: str
    labels: tuple[str, ...]
    detail: dict


def _job_from_instance(inst: Instance) -> Job:
    return Job(inst.id, inst.family, inst.seed, encode(inst.graph), inst.labeled.labels, inst.detail)


def iter_jobs(config: SweepConfig) -> Iterator[Job]:
    for run in config.families:
        for seed in range(run.seed_start, run.seed_start + run.count):
            yield _job_from_instance(generate(run.family, seed, run.params))
    for source in config.corpus:
        if source.startswith("atlas:"):
            for inst in connected_corpus(int(source.split(":", 1)[1])):
                yield _job_from_instance(inst)
            continue
        try:
            graphs = read_file(source)
        except OSError as exc:
            raise ConfigError(f"cannot read corpus {source}: {exc}") from exc
        stem = Path(source).stem
        for i, g in enumerate(graphs):
            labels = tuple(f"x{v}" for v in range(g.n))
            yield Job(f"{stem}-{i:05d}", stem, i, encode(g), labels, {"corpus": source})


def _clique_names(labels, clique) -> list[str]:
    return [labels[v] for v in sorted(clique)]


def evaluate(job: Job, config: SweepConfig) -> dict:
    """The report record for one instance.  Timings live under ``timings``;
    everything else is a deterministic function of the job and config."""
    g = decode(job.graph6)
    budget = config.budget
    start = time.perf_counter()
    omega, _ = clique_number(g)
    alpha, _ = stability_number(g)
    claw = find_claw(g)
    rec: dict[str, Any] = {
        "id": job.id,
        "family": job.family,
        "seed": job.seed,
        "graph6": job.graph6,
        "labels": list(job.labels),
        "detail": job.detail,
        "n": g.n,
        "m": g.m,
        "omega": omega,
        "alpha": alpha,
        "claw_free": claw is None,
        "claw": None if claw is None else [claw.center, sorted(claw.leaves)],
        "chi": None,
        "chi_gt_omega": None,
        "chi_coloring": None,
        "min_tihany": None,
        "refutations_checked": 0,
        "lemmas": [],
        "unknowns": [],
        "violations": [],
    }
    try:
        chi, coloring = chromatic_number(g, budget)
    except BudgetExhausted as exc:
        rec["unknowns"].append({"stage": "chi", "budget": budget.to_dict(), "nodes": exc.nodes})
        rec["timings"] = {"total": time.perf_counter() - start}
        return rec
    rec["chi"] = chi
    rec["chi_gt_omega"] = chi > omega
    rec["chi_coloring"] = coloring.to_lists()
    in_scope = chi > omega and (claw is None or not config.require_claw_free)
    if in_scope:
        audits = []

        def audit(graph: Graph, refutation: TihanyRefutation) -> None:
            verdict = audit_refutation(graph, refutation)
            audits.append(verdict.status)
            if verdict.status == "violation":
                rec["violations"].append({
                    "kind": "colour-class",
                    "clique": sorted(refutation.clique),
                    "coloring": refutation.coloring.to_lists(),
                })

        try:
            cert = find_min_tihany(g, config.kmax, budget, chi=chi, on_refutation=audit)
        except BudgetExhausted as exc:
            rec["unknowns"].append({"stage": "tihany", "budget": budget.to_dict(), "nodes": exc.nodes})
            cert = None
        else:
            if cert is None:
                rec["violations"].append({"kind": "no-tihany-clique", "kmax": config.kmax})
            else:
                lemma = None
                try:
                    lemma = certifying_lemma(g, cert.clique, budget)
                except BudgetExhausted:
                    pass
                rec["min_tihany"] = {
                    "size": len(cert.clique),
                    "clique": sorted(cert.clique),
                    "clique_labels": _clique_names(job.labels, cert.clique),
                    "chi_after": cert.chi_after,
                    "coloring_after": cert.coloring_after.to_lists(),
                    "lemma": lemma,
                }
        rec["refutations_checked"] = len(audits)
    if config.lemmas and chi > omega:
        cache: dict = {}
        for name in config.lemmas:
            check = LEMMA_CHECKS[name]
            try:
                outcome = check(g, chi, budget, cache=cache)
            except BudgetExhausted as exc:
                rec["unknowns"].append({"stage": name, "budget": budget.to_dict(), "nodes": exc.nodes})
                continue
            rec["lemmas"].append(outcome.to_dict())
            for bad in outcome.violations:
                rec["violations"].append({"kind": f"lemma:{name}", "clique": bad})
    rec["timings"] = {"total": time.perf_counter() - start}
    return rec


def _evaluate_packed(args: tuple[Job, SweepConfig]) -> dict:
    return evaluate(*args)


@dataclass
class SweepReport:
    config: dict
    instances: list[dict]

    @property
    def summary(self) -> dict:
        sizes: dict[str, int] = {}
        per_family: dict[str, dict[str, int]] = {}
        for rec in self.instances:
            mt = rec.get("min_tihany")
            if mt is not None:
                key = str(mt["size"])
                sizes[key] = sizes.get(key, 0) + 1
                fam = per_family.setdefault(rec["family"], {})
                fam[key] = fam.get(key, 0) + 1
        in_scope = [r for r in self.instances if r["chi_gt_omega"] and r["claw_free"]]
        return {
            "instances": len(self.instances),
            "claw_free": sum(1 for r in self.instances if r["claw_free"]),
            "claw_free_chi_gt_omega": len(in_scope),
            "violations": sum(len(r["violations"]) for r in self.instances),
            "unknowns": sum(len(r["unknowns"]) for r in self.instances),
            "refutations_checked": sum(r["refutations_checked"] for r in self.instances),
            "max_min_tihany_size": max((int(k) for k in sizes), default=None),
            "min_tihany_sizes": dict(sorted(sizes.items())),
            "min_tihany_sizes_by_family": {k: dict(sorted(v.items())) for k, v in sorted(per_family.items())},
        }

    @property
    def exit_code(self) -> int:
        s = self.summary
        if s["violations"]:
            return EXIT_VIOLATION
        if s["unknowns"]:
            return EXIT_UNKNOWN
        return EXIT_CLEAN

    def record(self, instance_id: str) -> dict:
        for rec in self.instances:
            if rec["id"] == instance_id:
                return rec
        raise KeyError(instance_id)

    def to_dict(self, timings: bool = True) -> dict:
        instances = self.instances
        if not timings:
            instances = [{k: v for k, v in r.items() if k != "timings"} for r in instances]
        return {"config": self.config, "summary": self.summary, "instances": instances}

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=1)

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "SweepReport":
        data = json.loads(Path(path).read_text())
        return cls(data["config"], data["instances"])


def run_sweep(config: SweepConfig, jobs: Iterable[Job] | None = None) -> SweepReport:
    jobs = list(iter_jobs(config) if jobs is None else jobs)
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            records = list(pool.map(_evaluate_packed, [(j, config) for j in jobs], chunksize=8))
    else:
        records = [evaluate(j, config) for j in jobs]
    records.sort(key=lambda r: r["id"])
    return SweepReport(config.to_dict(), records)


def labeled_of(rec: dict) -> Labeled:
    return Labeled(decode(rec["graph6"]), tuple(rec["labels"]))
