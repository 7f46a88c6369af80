"""Batch harness: seeded corpora, sweeps, counterexample hunts, reports."""

from __future__ import annotations

from .families import FAMILIES, Instance, connected_corpus, generate
from .hunt import HuntResult, hunt, verify_bundle
from .sweep import (
    EXIT_CLEAN,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    EXIT_VIOLATION,
    ConfigError,
    FamilyRun,
    SweepConfig,
    SweepReport,
    run_sweep,
)

__all__ = [
    "EXIT_CLEAN", "EXIT_UNKNOWN", "EXIT_USAGE", "EXIT_VIOLATION", "FAMILIES", "ConfigError",
    "FamilyRun", "HuntResult", "Instance", "SweepConfig", "SweepReport", "connected_corpus",
    "generate", "hunt", "run_sweep", "verify_bundle",
]
