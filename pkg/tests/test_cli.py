"""End-to-end command line tests driven through ``cli.main``."""

from __future__ import annotations

import io
import itertools
import json
import sys

import jsonschema
import pytest

from conjtri import cli
from conjtri.graphio import parse_graph_file, serialize_graph_file
from conjtri.graphs import UndirectedGraph
from conjtri.scan import report_schema


def _write_graph(path, g: UndirectedGraph) -> str:
    path.write_bytes(serialize_graph_file(g))
    return str(path)


def _octahedron() -> UndirectedGraph:
    non_edges = {(0, 5), (1, 3), (2, 4)}
    return UndirectedGraph(
        6,
        [
            (u, v)
            for u in range(6)
            for v in range(u + 1, 6)
            if (u, v) not in non_edges
        ],
    )


def _c4() -> UndirectedGraph:
    return UndirectedGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def _run_json(capsys, argv) -> dict:
    code = cli.main(argv)
    assert code == 0
    return json.loads(capsys.readouterr().out)


class TestBasicCommands:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["--version"])
        assert info.value.code == 0
        assert capsys.readouterr().out.strip()

    def test_validate_valid(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "octa.conj", _octahedron())
        out = _run_json(capsys, ["validate", "--input", path])
        assert out["valid"] is True
        assert out["vertices"] == 6 and out["edges"] == 12
        assert {c["name"] for c in out["checks"]} >= {"degrees", "connected"}

    def test_validate_invalid_is_still_exit_zero(self, tmp_path, capsys):
        k4 = UndirectedGraph(4, list(itertools.combinations(range(4), 2)))
        path = _write_graph(tmp_path / "k4.conj", k4)
        out = _run_json(capsys, ["validate", "--input", path])
        assert out["valid"] is False
        failed = [c["name"] for c in out["checks"] if c["status"] == "fail"]
        assert "degrees" in failed

    def test_gamma(self, tmp_path, capsys):
        c5 = UndirectedGraph(5, [(i, (i + 1) % 5) for i in range(5)])
        path = _write_graph(tmp_path / "c5.conj", c5)
        out = _run_json(capsys, ["gamma", "--input", path])
        assert out["gamma"] == 3
        witness = out["witness"]
        for u, v in c5.edges:
            assert witness[u] != witness[v]

    def test_chi(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        out = _run_json(capsys, ["chi", "--input", path])
        assert out["chi"] == 2
        assert set(out["witness"]) == {"1", "2", "3", "4"}

    def test_gamma_reads_stdin(self, capsys, monkeypatch):
        blob = serialize_graph_file(_c4())
        monkeypatch.setattr(
            sys, "stdin", type("S", (), {"buffer": io.BytesIO(blob)})()
        )
        out = _run_json(capsys, ["gamma"])
        assert out["gamma"] == 2

    def test_output_to_file(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        dest = tmp_path / "out.json"
        assert cli.main(["gamma", "--input", path, "--output", str(dest)]) == 0
        assert json.loads(dest.read_text())["gamma"] == 2
        assert capsys.readouterr().out == ""

    def test_linegraph(self, tmp_path, capsys):
        tri = UndirectedGraph(3, [(0, 1), (1, 2), (0, 2)])
        path = _write_graph(tmp_path / "tri.conj", tri)
        code = cli.main(["linegraph", "--input", path])
        assert code == 0
        lg, rot = parse_graph_file(capsys.readouterr().out.encode())
        assert lg.vertex_count == 3 and lg.edge_count == 3  # L(C3) = C3
        assert rot is None

    def test_euler(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "octa.conj", _octahedron())
        out = _run_json(capsys, ["euler", "--input", path])
        assert out["length"] == 12
        assert len(out["edge_ids"]) == 12
        assert sorted(out["edge_ids"]) == list(range(1, 13))
        assert out["vertices"][0] == out["vertices"][-1]
        assert min(out["vertices"]) >= 1  # 1-based like the file format


class TestPairCommands:
    def test_induce(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        out = _run_json(capsys, ["induce", "--input", path])
        assert out["proper"] is True
        assert out["violations"] == []
        assert set(out["pairs"]) == {"1", "2", "3", "4"}
        for eid, (t, h) in out["arcs"].items():
            first, second = out["pairs"][eid]
            assert out["coloring"][t - 1] == first
            assert out["coloring"][h - 1] == second

    def test_recover_roundtrip(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        induced = _run_json(capsys, ["induce", "--input", path])
        pairs_file = tmp_path / "pairs.json"
        pairs_file.write_text(json.dumps({"pairs": induced["pairs"]}))
        out = _run_json(
            capsys, ["recover", "--input", path, "--pairs", str(pairs_file)]
        )
        assert out["recovered"] == induced["coloring"]
        assert out["conflict"] is None

    def test_recover_conflict_reported_one_based(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        pairs_file = tmp_path / "pairs.json"
        pairs_file.write_text(
            json.dumps(
                {
                    "pairs": {
                        "1": [0, 1],
                        "2": [1, 0],
                        "3": [1, 2],
                        "4": [2, 0],
                    }
                }
            )
        )
        out = _run_json(
            capsys, ["recover", "--input", path, "--pairs", str(pairs_file)]
        )
        assert out["recovered"] is None
        assert out["conflict"]["vertex"] == 3  # vertex index 2, 1-based
        assert set(out["conflict"]["colors"]) == {0, 1}

    def test_recover_missing_arcs(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        pairs_file = tmp_path / "pairs.json"
        pairs_file.write_text(json.dumps({"pairs": {"1": [0, 1]}}))
        out = _run_json(
            capsys, ["recover", "--input", path, "--pairs", str(pairs_file)]
        )
        assert out["recovered"] is None
        assert out["missing_arcs"] == [2, 3, 4]

    def test_recover_malformed_pairs_is_format_error(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        pairs_file = tmp_path / "pairs.json"
        pairs_file.write_text(json.dumps({"pairs": {"1": [0, 0]}}))
        code = cli.main(["recover", "--input", path, "--pairs", str(pairs_file)])
        assert code == 2
        assert "malformed" in capsys.readouterr().err

    def test_recover_unparseable_json(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        pairs_file = tmp_path / "pairs.json"
        pairs_file.write_text("not json at all")
        assert (
            cli.main(["recover", "--input", path, "--pairs", str(pairs_file)]) == 2
        )


class TestEnumCommands:
    def test_enum_rk_single_k(self, capsys):
        out = _run_json(capsys, ["enum-rk", "--k", "3"])
        (res,) = out["results"]
        assert res["k"] == 3
        assert res["searched"] == 1
        assert res["passing"] == 1
        (cand,) = res["candidates"]
        assert cand["row_sums"] == [2, 2, 2]
        assert cand["gamma"] == 3 and cand["rho"] == 4 and cand["chi"] == 6
        assert "|" in cand["pretty"]

    def test_enum_rk_all(self, capsys):
        out = _run_json(capsys, ["enum-rk"])
        by_k = {r["k"]: r for r in out["results"]}
        assert set(by_k) == {1, 2, 3, 4}
        assert [by_k[k]["searched"] for k in (1, 2, 3, 4)] == [0, 0, 1, 924]
        assert [by_k[k]["passing"] for k in (1, 2, 3, 4)] == [0, 0, 1, 0]

    def test_enum_p4(self, capsys):
        out = _run_json(capsys, ["enum-p4"])
        assert out["symmetric"]["count"] == 20
        assert out["symmetric"]["class_sizes"] == {
            "path": 12,
            "star": 4,
            "triangle_plus_vertex": 4,
        }
        assert out["symmetric"]["square_orbit_count"] == 5
        assert out["asymmetric"]["searched"] == 216
        assert out["asymmetric"]["row_variant_count"] == 6
        assert out["asymmetric"]["verdict"] == 0
        assert all(v == 0 for v in out["asymmetric"]["condition_counts"].values())

    def test_enum_p4_full_includes_matrices(self, capsys):
        out = _run_json(capsys, ["enum-p4", "--full"])
        assert len(out["symmetric"]["matrices"]) == 20


class TestScanAndGen:
    def test_gen_writes_corpus(self, tmp_path, capsys):
        dest = tmp_path / "corpus"
        out = _run_json(
            capsys,
            [
                "gen",
                "--output",
                str(dest),
                "--inserts",
                "1",
                "--subdivisions",
                "1",
                "--replicates",
                "1",
            ],
        )
        assert out["count"] == 4  # (0..1 inserts) x (0..1 subdivisions) x 1
        for name in out["files"]:
            with open(name, "rb") as fh:
                parse_graph_file(fh.read())

    def test_scan_gen_writes_valid_report(self, tmp_path, capsys):
        report_path = tmp_path / "report.json"
        code = cli.main(
            [
                "scan",
                "--gen",
                "--inserts",
                "1",
                "--subdivisions",
                "1",
                "--replicates",
                "1",
                "--timeout-ms",
                "2000",
                "--output",
                str(report_path),
                "--counterexample-dir",
                str(tmp_path / "cex"),
            ]
        )
        assert code == 0
        assert "scanned 4 instances" in capsys.readouterr().err
        payload = json.loads(report_path.read_text())
        jsonschema.validate(payload, report_schema())
        assert payload["summary"]["instances"] == 4

    def test_scan_directory_input(self, tmp_path, capsys):
        corpus = tmp_path / "corpus"
        _run_json(
            capsys,
            [
                "gen",
                "--output",
                str(corpus),
                "--inserts",
                "0",
                "--subdivisions",
                "1",
                "--replicates",
                "1",
            ],
        )
        out = _run_json(
            capsys,
            [
                "scan",
                "--input",
                str(corpus),
                "--timeout-ms",
                "2000",
                "--counterexample-dir",
                str(tmp_path / "cex"),
            ],
        )
        assert out["summary"]["instances"] == 2
        assert out["config"]["source"] == "files"

    def test_scan_single_file_and_hypothesis_subset(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        out = _run_json(
            capsys,
            [
                "scan",
                "--input",
                path,
                "--hypotheses",
                "H10,H11",
                "--counterexample-dir",
                str(tmp_path / "cex"),
            ],
        )
        assert set(out["summary"]["verdicts"]) == {"H10", "H11"}
        assert out["summary"]["verdicts"]["H10"]["pass"] == 1

    def test_scan_without_source_is_format_error(self, capsys):
        assert cli.main(["scan"]) == 2
        assert "needs --gen or --input" in capsys.readouterr().err

    def test_scan_unknown_hypothesis_is_usage_error(self, tmp_path, capsys):
        path = _write_graph(tmp_path / "c4.conj", _c4())
        assert (
            cli.main(["scan", "--input", path, "--hypotheses", "H10,H99"]) == 1
        )


class TestExitCodes:
    def test_missing_input_file(self, capsys):
        assert cli.main(["gamma", "--input", "/no/such/file.conj"]) == 2

    def test_malformed_graph_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.conj"
        bad.write_text("p conj 2 1\ne 1 5\n")
        assert cli.main(["gamma", "--input", str(bad)]) == 2
        assert "outside" in capsys.readouterr().err

    def test_non_conjugated_input_is_usage_error(self, tmp_path, capsys):
        k4 = UndirectedGraph(4, list(itertools.combinations(range(4), 2)))
        path = _write_graph(tmp_path / "k4.conj", k4)
        assert cli.main(["euler", "--input", path]) == 1

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["frobnicate"])
        assert info.value.code == 1

    def test_bad_flag_value(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["enum-rk", "--k", "7"])
        assert info.value.code == 1

    def test_no_subcommand(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main([])
        assert info.value.code == 1
