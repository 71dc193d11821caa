"""Command-line interface: outputs, exit codes, determinism."""

import json

import pytest

from kappalat import emit_lattice, gen_a2, gen_ex424, gen_fig1, parse_lattice
from kappalat.cli import cli_main


@pytest.fixture
def fig1_file(tmp_path):
    path = tmp_path / "fig1.json"
    path.write_text(emit_lattice(gen_fig1()), encoding="utf-8")
    return str(path)


@pytest.fixture
def ex424_file(tmp_path):
    path = tmp_path / "ex424.json"
    path.write_text(emit_lattice(gen_ex424()), encoding="utf-8")
    return str(path)


@pytest.fixture
def m3_file(tmp_path):
    path = tmp_path / "m3.json"
    doc = {
        "elements": ["0", "a", "b", "c", "1"],
        "covers": [["a", "0"], ["b", "0"], ["c", "0"], ["1", "a"], ["1", "b"], ["1", "c"]],
    }
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


class TestCheck:
    def test_fig1(self, fig1_file, capsys):
        assert cli_main(["check", fig1_file]) == 0
        out = capsys.readouterr().out
        assert "12 elements, 18 covers" in out
        assert "semidistributive: yes" in out
        assert "jirr (5): 1, 2, 3, 4, 5" in out
        assert "4 -> 4*" in out

    def test_not_semidistributive_exits_3(self, m3_file, capsys):
        assert cli_main(["check", m3_file]) == 3
        assert "semidistributive: no" in capsys.readouterr().out

    def test_not_a_lattice_exits_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"elements":["a","b"],"covers":[]}', encoding="utf-8")
        assert cli_main(["check", str(path)]) == 2

    def test_bad_json_exits_1(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{oops", encoding="utf-8")
        assert cli_main(["check", str(path)]) == 1

    def test_missing_file_exits_1(self):
        assert cli_main(["check", "/nonexistent/x.json"]) == 1


class TestLabels:
    def test_per_arrow_lines(self, fig1_file, capsys):
        assert cli_main(["labels", fig1_file]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 18
        assert "2* -> 4 : gamma=1 mu=1*" in lines

    def test_dot(self, fig1_file, capsys):
        assert cli_main(["labels", fig1_file, "--dot"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph") and out.count("label=") == 18

    def test_console_entry_point(self):
        import subprocess
        import sys

        proc = subprocess.run(
            [sys.executable, "-m", "kappalat", "gen", "--family", "a2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert parse_lattice(proc.stdout).n == 5


class TestJlabel:
    def test_known_interval(self, fig1_file, capsys):
        assert cli_main(["jlabel", fig1_file, "--lower", "3", "--upper", "2*"]) == 0
        assert capsys.readouterr().out.strip() == "jlabel[3, 2*] = {1, 4}"

    def test_scan_agrees(self, fig1_file, capsys):
        cli_main(["jlabel", fig1_file, "--lower", "3", "--upper", "2*"])
        plain = capsys.readouterr().out
        cli_main(["jlabel", fig1_file, "--lower", "3", "--upper", "2*", "--scan"])
        assert capsys.readouterr().out == plain

    def test_bad_element_exits_4(self, fig1_file):
        assert cli_main(["jlabel", fig1_file, "--lower", "9", "--upper", "2*"]) == 4

    def test_bad_interval_exits_4(self, fig1_file):
        assert cli_main(["jlabel", fig1_file, "--lower", "2*", "--upper", "3"]) == 4


class TestPosets:
    def test_wide_table1(self, fig1_file, capsys):
        assert cli_main(["posets", fig1_file, "--kind", "wide"]) == 0
        doc = json.loads(capsys.readouterr().out)
        members = {"".join(m) for m in doc["members"]}
        assert members == {
            "", "1", "2", "3", "4", "5", "13", "14", "35", "125", "234", "12345",
        }
        assert len(doc["members"]) == 12

    def test_dot_format(self, fig1_file, capsys):
        assert cli_main(["posets", fig1_file, "--kind", "wide", "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph")
        assert '"{}"' in out


class TestCjrCommand:
    def test_single_element(self, fig1_file, capsys):
        assert cli_main(["cjr", fig1_file, "--element", "0*"]) == 0
        assert capsys.readouterr().out.strip() == "0* = join {1, 2, 3}"

    def test_all_elements(self, fig1_file, capsys):
        assert cli_main(["cjr", fig1_file]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 12


class TestOrders:
    def test_kappa_json(self, fig1_file, capsys):
        assert cli_main(["orders", fig1_file, "--kind", "kappa"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["hasse"]) == 22

    def test_clo_dot(self, fig1_file, capsys):
        assert cli_main(["orders", fig1_file, "--kind", "clo", "--format", "dot"]) == 0
        assert capsys.readouterr().out.count("->") == 22


class TestCompare:
    def test_divergent(self, ex424_file, capsys):
        assert cli_main(["compare", ex424_file]) == 0
        out = capsys.readouterr().out
        assert "orders coincide: no" in out
        assert "witness: (j4, x)" in out
        assert "clo_leq(j4, x) = True" in out
        assert "kappa_leq(j4, x) = False" in out
        assert "sufficient condition: fails at x" in out

    def test_coincident(self, fig1_file, capsys):
        assert cli_main(["compare", fig1_file]) == 0
        out = capsys.readouterr().out
        assert "orders coincide: yes" in out
        assert "sufficient condition: holds" in out


class TestGen:
    def test_families_round_trip(self, capsys):
        for family in ("fig1", "a2", "ex424", "ex426"):
            assert cli_main(["gen", "--family", family]) == 0
            lat = parse_lattice(capsys.readouterr().out)
            assert lat.n > 0

    def test_parametric(self, tmp_path, capsys):
        out_file = tmp_path / "c.json"
        assert cli_main(["gen", "--family", "chain", "--n", "4", "-o", str(out_file)]) == 0
        lat = parse_lattice(out_file.read_text(encoding="utf-8"))
        assert lat.n == 4

    def test_missing_n_exits_1(self):
        assert cli_main(["gen", "--family", "chain"]) == 1

    def test_unwanted_n_exits_1(self):
        assert cli_main(["gen", "--family", "fig1", "--n", "3"]) == 1

    def test_cap_exits_2(self):
        assert cli_main(["gen", "--family", "boolean", "--n", "13"]) == 2

    def test_gen_matches_generator(self, capsys):
        assert cli_main(["gen", "--family", "a2"]) == 0
        lat = parse_lattice(capsys.readouterr().out)
        ref = gen_a2()
        assert lat.names == ref.names and lat.covers == ref.covers


class TestDeterminism:
    def test_repeat_runs_identical(self, fig1_file, capsys):
        outputs = []
        for _ in range(2):
            for argv in (
                ["check", fig1_file],
                ["labels", fig1_file],
                ["posets", fig1_file, "--kind", "ice"],
                ["orders", fig1_file, "--kind", "clo"],
                ["compare", fig1_file],
            ):
                assert cli_main(argv) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]

    def test_usage_error_exits_1(self):
        assert cli_main(["posets"]) == 1
        assert cli_main(["nonsense"]) == 1
