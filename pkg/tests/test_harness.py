from __future__ import annotations

import json

import pytest

from tihany.graph import complete_graph, cycle_graph, path_graph, wheel_graph
from tihany.graph6 import encode, write_file
from tihany.harness import sweep as sweep_module
from tihany.harness.cli import main
from tihany.harness.explain import explain
from tihany.harness.families import connected_corpus, generate
from tihany.harness.hunt import hunt, partition_pairs, verify_bundle, verify_failure, write_bundle
from tihany.harness.sweep import (
    EXIT_CLEAN,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    EXIT_VIOLATION,
    ConfigError,
    SweepConfig,
    SweepReport,
    run_sweep,
)


@pytest.fixture
def small_corpus(tmp_path):
    path = tmp_path / "small.g6"
    write_file(path, [wheel_graph(5), cycle_graph(5), complete_graph(3)])
    return str(path)


class TestConfig:
    @pytest.mark.parametrize("data", [
        {"kmax": 0},
        {"workers": 0},
        {"node_limit": 0},
        {"families": [{"family": "nope", "count": 1}]},
        {"families": [{"family": "random", "count": 0}]},
        {"families": [{"count": 3}]},
        {"families": [{"family": "random", "count": "many"}]},
        {"lemmas": ["lemma-of-the-day"]},
        {"colour": "blue"},
    ])
    def test_invalid(self, data):
        with pytest.raises(ConfigError):
            SweepConfig.from_dict(data)

    def test_roundtrip(self):
        cfg = SweepConfig.from_dict({"families": [{"family": "random", "count": 2, "params": {"n": [5, 6]}}],
                                     "corpus": ["atlas:4"], "lemmas": ["dense-clique"]})
        assert SweepConfig.from_dict(cfg.to_dict()) == cfg
        assert cfg.budget.node_limit == 10_000_000 and cfg.kmax == 5

    def test_load_errors(self, tmp_path):
        with pytest.raises(ConfigError):
            SweepConfig.load(tmp_path / "missing.json")
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        with pytest.raises(ConfigError):
            SweepConfig.load(bad)

    def test_unreadable_corpus(self, tmp_path):
        cfg = SweepConfig(corpus=(str(tmp_path / "none.g6"),))
        with pytest.raises(ConfigError):
            run_sweep(cfg)


class TestSweep:
    def test_empty_corpus(self):
        report = run_sweep(SweepConfig())
        assert report.summary["instances"] == 0 and report.exit_code == EXIT_CLEAN

    def test_small_corpus(self, small_corpus):
        report = run_sweep(SweepConfig(corpus=(small_corpus,), lemmas=("dense-clique",)))
        assert report.exit_code == EXIT_CLEAN
        w5 = report.record("small-00000")
        assert w5["chi"] == 4 and w5["omega"] == 3 and w5["claw_free"]
        assert w5["min_tihany"]["size"] == 2 and w5["min_tihany"]["chi_after"] == 3
        assert w5["refutations_checked"] == 11
        k3 = report.record("small-00002")
        assert not k3["chi_gt_omega"] and k3["min_tihany"] is None
        with pytest.raises(KeyError):
            report.record("small-00009")

    def test_replayable(self):
        cfg = SweepConfig.from_dict({"families": [{"family": f, "count": 3} for f in
                                                  ("icosahedron", "circular", "random")]})
        a = run_sweep(cfg).to_json(timings=False)
        b = run_sweep(cfg).to_json(timings=False)
        assert a == b

    def test_workers_do_not_change_the_report(self):
        data = {"families": [{"family": "circular", "count": 6}], "corpus": ["atlas:4"]}
        one = run_sweep(SweepConfig.from_dict(data)).to_json(timings=False)
        two = run_sweep(SweepConfig.from_dict({**data, "workers": 2})).to_json(timings=False)
        assert json.loads(one)["instances"] == json.loads(two)["instances"]

    def test_unknowns_exit_code(self):
        cfg = SweepConfig.from_dict({"families": [{"family": "random", "count": 5,
                                                   "params": {"n": [14, 16]}}], "node_limit": 1})
        report = run_sweep(cfg)
        assert report.exit_code == EXIT_UNKNOWN
        for rec in report.instances:
            for u in rec["unknowns"]:
                assert u["budget"]["node_limit"] == 1

    def test_violation_exit_code(self, small_corpus, monkeypatch):
        monkeypatch.setattr(sweep_module, "find_min_tihany", lambda *a, **k: None)
        report = run_sweep(SweepConfig(corpus=(small_corpus,)))
        assert report.exit_code == EXIT_VIOLATION
        kinds = [v["kind"] for r in report.instances for v in r["violations"]]
        assert kinds == ["no-tihany-clique", "no-tihany-clique"]

    def test_report_file_roundtrip(self, small_corpus, tmp_path):
        report = run_sweep(SweepConfig(corpus=(small_corpus,)))
        path = tmp_path / "r.json"
        report.write(path)
        back = SweepReport.load(path)
        assert back.instances == report.instances and back.summary == report.summary

    def test_atlas_corpus(self):
        ids = [inst.id for inst in connected_corpus(4)]
        assert len(ids) == 1 + 1 + 2 + 6
        with pytest.raises(ValueError):
            next(connected_corpus(8))


class TestExplain:
    def test_wheel(self, small_corpus):
        report = run_sweep(SweepConfig(corpus=(small_corpus,)))
        text = explain(report, "small-00000")
        assert "K={x1,x2}, χ 4→3, Tihany" in text
        assert "certified by dense-clique" in text

    def test_c5(self, small_corpus):
        report = run_sweep(SweepConfig(corpus=(small_corpus,)))
        text = explain(report, "small-00001")
        assert "χ 3→2" in text and "dense-clique" in text

    def test_out_of_scope(self, small_corpus):
        report = run_sweep(SweepConfig(corpus=(small_corpus,)))
        assert "out of scope: χ=ω" in explain(report, "small-00002")

    def test_unknown_id(self, small_corpus):
        report = run_sweep(SweepConfig(corpus=(small_corpus,)))
        with pytest.raises(KeyError):
            explain(report, "nothing")


class TestHunt:
    def test_partition_pairs(self):
        assert partition_pairs(3) == [(2, 2)]
        assert partition_pairs(4) == [(2, 3), (3, 2)]
        assert partition_pairs(2) == []

    def test_k2_only_is_vacuous(self, tmp_path):
        path = tmp_path / "k2.g6"
        write_file(path, [complete_graph(2)])
        result = hunt(SweepConfig(corpus=(str(path),)), tmp_path / "bundle")
        assert result.exit_code == EXIT_CLEAN and not result.failures and result.bundle is None

    def test_small_claw_free_corpus(self):
        result = hunt(SweepConfig(corpus=("atlas:6",)))
        assert result.exit_code == EXIT_CLEAN and not result.failures

    def test_bundle_reverifies(self, tmp_path):
        k2 = encode(complete_graph(2))
        w5 = encode(wheel_graph(5))
        failures = [
            # real: K2 admits no split into two parts of chromatic number 2
            {"id": "k2", "graph6": k2, "chi": 2, "kind": "no-partition", "s": 2, "t": 2},
            # fake: the wheel does have a Tihany brace
            {"id": "w5", "graph6": w5, "chi": 4, "kind": "no-tihany-clique", "kmax": 5},
            # fake: the claimed colouring of W5 minus {hub, x1} meets C(K) in every class
            {"id": "w5c", "graph6": w5, "chi": 4, "kind": "colour-class", "clique": [0, 1],
             "coloring": [[2, 4], [3, 5]]},
            # fake: wrong chromatic number
            {"id": "c5", "graph6": encode(cycle_graph(5)), "chi": 4, "kind": "no-partition", "s": 2, "t": 2},
        ]
        bundle = write_bundle(tmp_path / "b", failures, SweepConfig())
        assert (bundle / "graphs.g6").read_text().count("\n") == 3
        assert verify_bundle(bundle) == [True, False, False, False]

    def test_colour_class_violation_detected(self):
        # a deliberately wrong certificate: class {x3} misses C({hub,x1}) = {x2,x5}
        w5 = encode(wheel_graph(5))
        fake = {"graph6": w5, "chi": 4, "kind": "colour-class", "clique": [0, 1],
                "coloring": [[2, 4], [3], [5]]}
        # three colours exceed chi - |K| = 2, so this is not a refutation at all
        assert verify_failure(fake) is False
        p3 = encode(path_graph(3))
        assert verify_failure({"graph6": p3, "chi": 2, "kind": "mystery"}) is False


class TestCli:
    def test_no_arguments(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_gen(self, tmp_path):
        out = tmp_path / "gen"
        assert main(["gen", "--family", "circular", "--seed", "3", "--count", "2", "--out", str(out)]) == 0
        assert (out / "circular-00003.g6").exists() and (out / "circular-00004.json").exists()
        side = json.loads((out / "circular-00003.json").read_text())
        assert side["id"] == "circular-00003" and side["labels"]
        line = (out / "circular-00003.g6").read_text().strip()
        assert line == encode(generate("circular", 3).graph)
        assert (out / "circular.g6").read_text().count("\n") == 2

    def test_gen_params(self, tmp_path):
        out = tmp_path / "gen"
        assert main(["gen", "--family", "random", "--params", '{"n": [6, 6]}', "--out", str(out)]) == 0
        side = json.loads((out / "random-00000.json").read_text())
        assert len(side["labels"]) == 6
        assert main(["gen", "--family", "random", "--params", "[1]", "--out", str(out)]) == EXIT_USAGE
        assert main(["gen", "--family", "unknown", "--out", str(out)]) == EXIT_USAGE

    def test_sweep_explain_hunt(self, tmp_path, small_corpus, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"corpus": [small_corpus]}))
        report = tmp_path / "report.json"
        assert main(["sweep", "--config", str(cfg), "--out", str(report), "--no-timings"]) == 0
        first = report.read_text()
        assert main(["sweep", "--config", str(cfg), "--out", str(report), "--no-timings"]) == 0
        assert report.read_text() == first
        capsys.readouterr()
        assert main(["explain", "--report", str(report), "--id", "small-00000"]) == 0
        assert "K={x1,x2}, χ 4→3, Tihany" in capsys.readouterr().out
        assert main(["explain", "--report", str(report), "--id", "nope"]) == EXIT_USAGE
        assert main(["hunt", "--config", str(cfg)]) == 0
        assert capsys.readouterr().out.strip().endswith("none")

    def test_bad_config(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"kmax": 0}))
        assert main(["sweep", "--config", str(cfg)]) == EXIT_USAGE
        assert main(["sweep", "--config", str(tmp_path / "missing.json")]) == EXIT_USAGE

    def test_unknowns_exit_code(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"families": [{"family": "random", "count": 3, "params": {"n": [14, 16]}}],
                                   "node_limit": 1}))
        assert main(["sweep", "--config", str(cfg)]) == EXIT_UNKNOWN
