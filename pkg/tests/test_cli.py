import json
import subprocess
import sys

import pytest

from trisect.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_standard_stock(self, capsys):
        code, out, _ = run(capsys, "gen", "--name", "CP2")
        payload = json.loads(out)
        assert code == 0
        assert payload["signature"] == [1, 0, 0, 0]

    def test_unknown_name_is_bad_input(self, capsys):
        code, out, err = run(capsys, "gen", "--name", "T4")
        assert code == 3 and not out

    def test_spun_lens_to_file(self, capsys, tmp_path):
        target = tmp_path / "d.json"
        code, out, _ = run(capsys, "gen", "--spun-lens", "3", "1",
                           "--out", str(target))
        assert code == 0 and not out
        assert json.loads(target.read_text())["signature"] == [3, 1, 1, 1]

    def test_exactly_one_source_required(self, capsys):
        code, _, err = run(capsys, "gen", "--name", "CP2",
                           "--spun-lens", "2", "1")
        assert code == 3 and "choose exactly one" in err

    def test_sum_and_stabilize(self, capsys, tmp_path):
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "gen", "--name", "CP2", "--out", str(f1))
        run(capsys, "gen", "--name", "S1xS3", "--out", str(f2))
        code, out, _ = run(capsys, "gen", "--sum", str(f1), str(f2))
        assert code == 0 and json.loads(out)["signature"] == [2, 1, 1, 1]
        code, out, _ = run(capsys, "gen", "--stabilize", str(f1),
                           "--which", "2")
        assert code == 0 and json.loads(out)["signature"] == [2, 0, 1, 0]

    def test_every_gen_output_validates(self, capsys, tmp_path):
        produced = []
        for name in ("S4", "S1xS3", "CP2", "CP2bar", "S2xS2"):
            target = tmp_path / f"{name}.json"
            run(capsys, "gen", "--name", name, "--out", str(target))
            produced.append(target)
        spun = tmp_path / "spun.json"
        run(capsys, "gen", "--spun-lens", "5", "2", "--out", str(spun))
        produced.append(spun)
        summed = tmp_path / "sum.json"
        run(capsys, "gen", "--sum", str(produced[2]), str(spun),
            "--out", str(summed))
        produced.append(summed)
        stabilized = tmp_path / "stab.json"
        run(capsys, "gen", "--stabilize", str(summed), "--which", "3",
            "--out", str(stabilized))
        produced.append(stabilized)
        for target in produced:
            code, out, _ = run(capsys, "validate", str(target))
            assert code == 0 and json.loads(out)["passed"], target


class TestValidate:
    def test_failing_diagram_exits_two(self, capsys, tmp_path):
        target = tmp_path / "bad.json"
        run(capsys, "gen", "--name", "CP2", "--out", str(target))
        data = json.loads(target.read_text())
        data["signature"] = [1, 1, 1, 1]
        target.write_text(json.dumps(data))
        code, out, _ = run(capsys, "validate", str(target))
        assert code == 2 and not json.loads(out)["passed"]

    def test_malformed_json_exits_three(self, capsys, tmp_path):
        target = tmp_path / "garbage.json"
        target.write_text("{not json")
        code, _, err = run(capsys, "validate", str(target))
        assert code == 3 and err

    def test_missing_file_exits_three(self, capsys):
        code, _, err = run(capsys, "validate", "no_such_file.json")
        assert code == 3 and err


class TestHomologyAndKirby:
    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    def test_spun_lens_fixture_homology(self, capsys, fixtures_dir, p):
        code, out, _ = run(capsys, "homology",
                           str(fixtures_dir / f"spun_l{p}_1.json"))
        assert code == 0
        assert json.loads(out) == {"free_rank": 0, "torsion": [p]}

    def test_kirby_payload(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "kirby",
                           str(fixtures_dir / "spun_l2_1.json"))
        payload = json.loads(out)
        assert code == 0
        assert payload["dotted"] == [0]
        assert payload["linking"]["entries"] == [["2", "0", "0"]]

    def test_unannotated_diagram_is_bad_input(self, capsys, tmp_path):
        target = tmp_path / "d.json"
        run(capsys, "gen", "--name", "CP2", "--out", str(target))
        data = json.loads(target.read_text())
        del data["annotations"]
        target.write_text(json.dumps(data))
        code, _, err = run(capsys, "homology", str(target))
        assert code == 3 and err


class TestLoop:
    def test_accepts_fixture_loop(self, capsys, tmp_path, fixtures_dir):
        diagram = tmp_path / "cp2.json"
        run(capsys, "gen", "--name", "CP2", "--out", str(diagram))
        code, out, _ = run(capsys, "loop", str(diagram),
                           str(fixtures_dir / "cp2_loop.json"))
        payload = json.loads(out)
        assert code == 0
        assert payload["accepted"] and payload["total_l"] == 3

    def test_rejects_mismatched_loop(self, capsys, tmp_path, fixtures_dir):
        diagram = tmp_path / "cp2bar.json"
        run(capsys, "gen", "--name", "CP2bar", "--out", str(diagram))
        code, out, _ = run(capsys, "loop", str(diagram),
                           str(fixtures_dir / "cp2_loop.json"))
        payload = json.loads(out)
        assert code == 2 and not payload["accepted"]

    def test_witness_loop_fixture(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "loop",
                           str(fixtures_dir / "spun_l2_1.json"),
                           str(fixtures_dir / "spun_l2_1_loop.json"))
        payload = json.loads(out)
        assert code == 0 and payload["L"] == 6 and payload["total_l"] == 12


class TestBoundAndWalk:
    def test_bound_payload(self, capsys):
        code, out, _ = run(capsys, "bound", "--p", "2")
        payload = json.loads(out)
        assert code == 0 and payload["L_lower"] == 6

    def test_bound_rejects_small_p(self, capsys):
        code, _, err = run(capsys, "bound", "--p", "1")
        assert code == 3 and err

    def test_walk_summary(self, capsys):
        code, out, _ = run(capsys, "walk", "--g", "3", "--m", "4",
                           "--trials", "100", "--seed", "5")
        payload = json.loads(out)
        assert code == 0 and payload["failed"] == 0

    def test_byte_identical_reproducibility(self, capsys):
        _, first, _ = run(capsys, "walk", "--g", "4", "--m", "5",
                          "--trials", "200", "--seed", "42")
        _, second, _ = run(capsys, "walk", "--g", "4", "--m", "5",
                           "--trials", "200", "--seed", "42")
        assert first == second
        _, third, _ = run(capsys, "bound", "--p", "97")
        _, fourth, _ = run(capsys, "bound", "--p", "97")
        assert third == fourth


class TestParser:
    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 3

    def test_help_exits_cleanly(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "trisect", "bound", "--p", "2"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["L_lower"] == 6


def test_fixtures_match_generator(fixtures_dir):
    # both shipped copies must stay in sync with the generator
    from importlib import resources
    from trisect.diagram import spun_lens
    for p in (2, 3, 4, 5):
        expected = spun_lens(p, 1).to_json()
        repo_copy = json.loads((fixtures_dir / f"spun_l{p}_1.json").read_text())
        packaged = json.loads(
            (resources.files("trisect.data") / f"spun_l{p}_1.json")
            .read_text())
        assert repo_copy == expected
        assert packaged == expected


def test_fixture_dir_override(monkeypatch, fixtures_dir):
    from trisect.fixtures import fixture_path, load_fixture
    monkeypatch.setenv("TRISECT_FIXTURES", str(fixtures_dir))
    path = fixture_path("spun_l2_1.json")
    assert str(fixtures_dir) in str(path)
    diagram = load_fixture("spun_l2_1.json")
    assert diagram.signature.to_json() == [3, 1, 1, 1]
    monkeypatch.delenv("TRISECT_FIXTURES")
    packaged = load_fixture("spun_l2_1.json")
    assert packaged.to_json() == diagram.to_json()
