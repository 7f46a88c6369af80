"""Acceptance criteria 1-11.  Each test records one PASS/FAIL line, printed
in the terminal summary as well as inline (visible with ``-s``)."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import pytest

from helpers import (
    ACCEPTANCE,
    brute_chi,
    brute_gallai_edmonds,
    brute_mu_dp,
    random_graph,
)
from tihany.analysis import find_claw, is_orientable_prismatic, is_prismatic
from tihany.constructions import (
    ICOSAHEDRON_F,
    icosahedron,
    named_family,
    random_chain_spec,
    random_composition,
    random_thickening_spec,
    rotator,
    thicken,
    triangle_chain,
    twister,
)
from tihany.constructions.chains import ChainFailure
from tihany.engine import (
    ReductionFailed,
    audit_refutation,
    check_dense_cliques,
    elt_partition_exists,
    find_min_tihany,
    find_nonreduced_wjoin,
    gallai_edmonds,
    reduce_wjoin,
)
from tihany.graph6 import decode
from tihany.harness.families import FAMILIES, connected_corpus, generate
from tihany.harness.hunt import partition_pairs
from tihany.harness.sweep import EXIT_CLEAN, SweepConfig, run_sweep
from tihany.solvers import chromatic_number, clique_number, maximum_matching

pytestmark = pytest.mark.acceptance

PER_FAMILY = 70
SWEEP_TIME_LIMIT = 30 * 60


def record(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


@dataclass
class Audit:
    """Colour-class audit of every refutation seen while searching."""

    checked: int = 0
    bad: list = field(default_factory=list)

    def __call__(self, g, refutation) -> None:
        self.checked += 1
        if audit_refutation(g, refutation).status != "ok":
            self.bad.append(sorted(refutation.clique))


@dataclass
class Cases:
    found: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    audit: Audit = field(default_factory=Audit)
    singleton_tihany: int = 0
    seeds_tried: int = 0


def _in_scope(g) -> int | None:
    """chi when g is claw-free with chi > omega, else None."""
    if find_claw(g) is not None:
        return None
    chi = chromatic_number(g)[0]
    return chi if chi > clique_number(g)[0] else None


def _brace_cases(family: str, params: dict, want: int = 100) -> Cases:
    out = Cases()
    seed = 0
    while len(out.found) < want and seed < 5000:
        inst = generate(family, seed, params)
        seed += 1
        g = inst.graph
        chi = _in_scope(g)
        if chi is None:
            continue
        out.found.append(inst.id)
        if find_min_tihany(g, 1, chi=chi) is not None:
            out.singleton_tihany += 1
        cert = find_min_tihany(g, 5, kmin=2, chi=chi, on_refutation=out.audit)
        if cert is None or len(cert.clique) != 2:
            out.failures.append(inst.id)
    out.seeds_tried = seed
    return out


@pytest.fixture(scope="module")
def flagship():
    cfg = SweepConfig.from_dict({
        "families": [{"family": f, "count": PER_FAMILY} for f in sorted(FAMILIES)],
        "corpus": ["atlas:7"],
        "lemmas": ["dense-clique", "equal-common-neighbourhood", "disjoint-closed-neighbourhoods",
                   "clique-cutset"],
    })
    start = time.perf_counter()
    report = run_sweep(cfg)
    return report, time.perf_counter() - start


@pytest.fixture(scope="module")
def icosahedron_cases():
    return _brace_cases("icosahedron", {"max_vertices": 24})


@pytest.fixture(scope="module")
def circular_cases():
    return _brace_cases("circular", {"max_vertices": 24})


@pytest.fixture(scope="module")
def dense_cases():
    rng = random.Random("dense-cliques")
    audit = Audit()
    graphs, bad, checked = 0, [], 0
    while graphs < 1000:
        g = random_graph(rng, rng.randint(5, 14), rng.uniform(0.25, 0.85))
        chi = chromatic_number(g)[0]
        if chi <= clique_number(g)[0]:
            continue
        graphs += 1
        outcome = check_dense_cliques(g, chi, kmax=5)
        checked += outcome.checked
        bad += outcome.violations
        find_min_tihany(g, 5, chi=chi, on_refutation=audit)
    return graphs, checked, bad, audit


def test_criterion_01_flagship_sweep(flagship):
    report, elapsed = flagship
    s = report.summary
    generated = [r for r in report.instances if r["family"] != "atlas"]
    atlas = [r for r in report.instances if r["family"] == "atlas"]
    in_scope = [r for r in report.instances if r["claw_free"] and r["chi_gt_omega"]]
    sizes_ok = all(r["min_tihany"] is not None and r["min_tihany"]["size"] <= 5 for r in in_scope)
    ok = (len(generated) >= 500 and all(r["n"] <= 20 for r in generated) and len(atlas) == 996
          and s["violations"] == 0 and s["unknowns"] == 0 and sizes_ok
          and report.exit_code == EXIT_CLEAN and elapsed <= SWEEP_TIME_LIMIT)
    record(1, ok, f"{len(generated)} generated + {len(atlas)} atlas instances, "
                  f"{len(in_scope)} claw-free with chi>omega, sizes {s['min_tihany_sizes']}, "
                  f"{s['violations']} violations, {s['unknowns']} unknowns, {elapsed:.1f}s")


def test_criterion_02_icosahedron_braces(icosahedron_cases):
    c = icosahedron_cases
    ok = len(c.found) == 100 and not c.failures
    record(2, ok, f"{len(c.found)} thickenings with chi>omega (n<=24, {c.seeds_tried} seeds), "
                  f"all with a Tihany brace; {c.singleton_tihany} also have a Tihany vertex; "
                  f"failures {c.failures[:5]}")


def test_criterion_03_circular_braces(circular_cases):
    c = circular_cases
    ok = len(c.found) == 100 and not c.failures
    record(3, ok, f"{len(c.found)} fuzzy long circular interval graphs with chi>omega "
                  f"({c.seeds_tried} seeds), failures {c.failures[:5]}")


def test_criterion_04_dense_cliques(dense_cases):
    graphs, checked, bad, _ = dense_cases
    record(4, graphs == 1000 and not bad,
           f"{graphs} random graphs with chi>omega, {checked} dense cliques checked, {len(bad)} exceptions")


def test_criterion_05_refutation_colour_classes(flagship, icosahedron_cases, circular_cases, dense_cases):
    report, _ = flagship
    sweep_checked = report.summary["refutations_checked"]
    sweep_bad = [v for r in report.instances for v in r["violations"] if v["kind"] == "colour-class"]
    audits = [icosahedron_cases.audit, circular_cases.audit, dense_cases[3]]
    total = sweep_checked + sum(a.checked for a in audits)
    bad = len(sweep_bad) + sum(len(a.bad) for a in audits)
    record(5, total > 0 and bad == 0, f"{total} non-Tihany cliques audited, {bad} classes missing C(K)")


def test_criterion_06_gallai_edmonds():
    rng = random.Random("gallai-edmonds")
    mismatches = 0
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 8), rng.uniform(0.1, 0.9))
        ge = gallai_edmonds(g)
        d, a, c = brute_gallai_edmonds(g)
        if (set(ge.d), set(ge.a), set(ge.c)) != (d, a, c):
            mismatches += 1
        elif g.n + len(ge.a) - ge.components_of_d != 2 * ge.mu:
            mismatches += 1
    record(6, mismatches == 0, f"200 graphs n<=8, {mismatches} mismatches against enumeration")


def test_criterion_07_solver_oracles():
    rng = random.Random("solver-oracles")
    chi_bad = mu_bad = 0
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 9), rng.uniform(0.1, 0.9))
        chi, col = chromatic_number(g)
        if chi != brute_chi(g) or not col.is_proper(g):
            chi_bad += 1
        h = random_graph(rng, rng.randint(1, 12), rng.uniform(0.1, 0.9))
        m = maximum_matching(h)
        if m.size != brute_mu_dp(h) or not m.is_valid(h):
            mu_bad += 1
    record(7, chi_bad == 0 and mu_bad == 0,
           f"500 graphs: chi mismatches {chi_bad} (n<=9), matching mismatches {mu_bad} (n<=12)")


def _prismatic_outputs():
    yield named_family("rotator").graph
    yield named_family("twister").graph
    yield named_family("l_k33").graph
    yield named_family("ring_of_five").graph
    for seed in range(200):
        yield generate("prismatic", seed).graph
    rng = random.Random("chains")
    for cyclic, n in ((False, 1), (False, 2), (False, 3), (True, 5)):
        for _ in range(25):
            out = triangle_chain(random_chain_spec(rng, cyclic, n, max_part=2))
            if not isinstance(out, ChainFailure):
                yield out.graph


def test_criterion_08_orientability():
    witnesses_ok = True
    for build, name in ((rotator, "rotator"), (twister, "twister")):
        g = build().graph
        v = is_orientable_prismatic(g)
        witnesses_ok &= (not v.orientable and v.pattern == name
                         and sorted(v.embedding.values()) == list(range(g.n)))
    small = [g for g in _prismatic_outputs() if g.n < 9]
    orientable = sum(is_orientable_prismatic(g).orientable for g in small)
    record(8, witnesses_ok and small and orientable == len(small),
           f"rotator/twister self-witnessed: {witnesses_ok}; {orientable}/{len(small)} "
           "generated prismatic graphs with n<9 orientable")


def test_criterion_09_generator_soundness():
    claw_free_families = ("icosahedron", "circular", "antiprismatic", "three_cliqued", "strips", "line_graph")
    total, bad = 0, []
    for family in claw_free_families:
        for seed in range(100):
            inst = generate(family, seed)
            total += 1
            if find_claw(inst.graph) is not None:
                bad.append(inst.id)
    rng = random.Random("compositions")
    for i in range(100):
        comp = random_composition(rng, strips=rng.randint(2, 4))
        total += 1
        if find_claw(comp.graph) is not None:
            bad.append(f"composition-{i}")
    prismatic = list(_prismatic_outputs())
    not_prismatic = sum(1 for g in prismatic if not is_prismatic(g))
    total += len(prismatic)
    record(9, not bad and not_prismatic == 0,
           f"{total} outputs; claws in {len(bad)} {bad[:5]}; non-prismatic {not_prismatic}")


def _elt_targets():
    for inst in connected_corpus(7):
        yield inst.id, inst.graph
    for family in ("icosahedron", "circular", "antiprismatic", "three_cliqued", "strips", "line_graph"):
        for seed in range(60):
            inst = generate(family, seed, {"max_vertices": 12})
            yield inst.id, inst.graph


def test_criterion_10_partitions():
    checked, failures, instances = 0, [], 0
    for ident, g in _elt_targets():
        if g.n > 12:
            continue
        chi = _in_scope(g)
        if chi is None:
            continue
        instances += 1
        for s, t in partition_pairs(chi):
            checked += 1
            part = elt_partition_exists(g, s, t)
            if part is None:
                failures.append((ident, s, t))
    record(10, instances > 0 and not failures,
           f"{instances} claw-free chi>omega instances n<=12, {checked} (s,t) pairs, failures {failures[:5]}")


def _nonreduced_thickenings(count: int):
    rng = random.Random("non-reduced")
    bases = []
    g2 = icosahedron(2)
    bases.append((g2.graph, [tuple(g2.ids(p)) for p in ICOSAHEDRON_F]))
    for seed in range(40):
        spec = generate("circular", seed).detail
        from tihany.constructions import IntervalSpec, interval_graph

        iv = IntervalSpec(True, spec["length"], tuple(spec["points"]),
                          tuple(tuple(x) for x in spec["intervals"]))
        base = interval_graph(iv).graph
        pairs = list(iv.outer_endpoint_pairs())
        chosen, used = [], set()
        for u, v in pairs:
            if u not in used and v not in used:
                chosen.append((u, v))
                used |= {u, v}
        if chosen:
            bases.append((base, chosen[:2]))
    made = 0
    while made < count:
        base, f = bases[made % len(bases)]
        spec = random_thickening_spec(rng, base, 3, f, reduced=False, max_vertices=22)
        yield thicken(spec).graph
        made += 1


def test_criterion_11_reduce_wjoin():
    steps, failures, instances = 0, [], 0
    for i, g in enumerate(_nonreduced_thickenings(100)):
        instances += 1
        chi = chromatic_number(g)[0]
        claw_free = find_claw(g) is None
        current = g
        w = find_nonreduced_wjoin(current)
        if w is None:
            failures.append((i, "no non-reduced W-join found"))
            continue
        while w is not None:
            try:
                h = reduce_wjoin(current, w)
            except ReductionFailed:
                failures.append((i, "reduction failed"))
                break
            steps += 1
            if h.m >= current.m:
                failures.append((i, "edge count did not drop"))
            if chromatic_number(h)[0] != chi:
                failures.append((i, "chromatic number changed"))
            if claw_free and find_claw(h) is not None:
                failures.append((i, "claw appeared"))
            current = h
            w = find_nonreduced_wjoin(current)
    record(11, instances == 100 and not failures,
           f"{instances} non-reduced thickenings, {steps} reduction steps, failures {failures[:5]}")


def test_decode_roundtrip_of_sweep_records(flagship):
    report, _ = flagship
    for rec in report.instances[:50]:
        assert decode(rec["graph6"]).n == rec["n"]
