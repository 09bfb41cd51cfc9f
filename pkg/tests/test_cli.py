"""End-to-end command-line behavior: outputs, config handling, exit codes."""

import hashlib
import json
import re
import subprocess
import sys

import pytest

from hiddentree import DirectedGraph, TreeParams, build_tree, read_edge_list, write_edge_list
from hiddentree.cli import main


def run_cli(*argv):
    return main([str(arg) for arg in argv])


def write_triangle(path):
    graph = DirectedGraph(3, [(0, 1), (1, 2), (2, 0)])
    with path.open("w") as fh:
        write_edge_list(graph, fh)


def read_manifest(path):
    return json.loads(path.read_text())


def test_generate_zero_activity_writes_empty_edge_list(tmp_path):
    out = tmp_path / "empty.edges"
    code = run_cli("generate", "--nodes", 7, "--branching", "2.0",
                   "--activity", 0, "--seed", 1, "--out", out)
    assert code == 0
    assert out.read_text() == "# nodes=7 edges=0\n"


def test_generate_manifest_digests_verify(tmp_path):
    out = tmp_path / "net.edges"
    assert run_cli("generate", "--nodes", 200, "--branching", "2.0",
                   "--activity", 0.4, "--seed", 3, "--out", out) == 0
    manifest = read_manifest(tmp_path / "net.edges.manifest.json")
    assert set(manifest) == {"command", "version", "params", "outputs"}
    for name, digest in manifest["outputs"].items():
        recomputed = hashlib.sha256((tmp_path / name).read_bytes()).hexdigest()
        assert digest == f"sha256:{recomputed}"
    assert manifest["params"]["nodes"] == 200
    assert manifest["params"]["tree_seed"] == 3


def test_generate_rerun_is_byte_identical(tmp_path):
    args = ("generate", "--nodes", 10000, "--branching", "2.0",
            "--activity", 0.4, "--seed", 7)
    first = tmp_path / "a.edges"
    second = tmp_path / "b.edges"
    assert run_cli(*args, "--out", first) == 0
    assert run_cli(*args, "--out", second) == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.stat().st_size > 0


def test_generate_usage_errors(tmp_path):
    assert run_cli("generate", "--nodes", 0, "--branching", "2.0",
                   "--activity", 1, "--out", tmp_path / "x.edges") == 1
    assert run_cli("generate", "--nodes", 5, "--branching", "2.0", "--activity", 1) == 1
    assert run_cli("generate", "--bogus-flag", 1) == 1


def test_generate_unwritable_path_is_io_error(tmp_path):
    code = run_cli("generate", "--nodes", 5, "--branching", "2.0",
                   "--activity", 1, "--out", tmp_path / "missing_dir" / "x.edges")
    assert code == 2


def test_generate_tree_dump(tmp_path):
    out = tmp_path / "net.edges"
    dump = tmp_path / "net.tree"
    assert run_cli("generate", "--nodes", 7, "--branching", "2.0", "--activity", 0,
                   "--out", out, "--tree-dump", dump) == 0
    lines = dump.read_text().splitlines()
    assert len(lines) == 7
    assert lines[0] == "0\t-1\t0"
    manifest = read_manifest(tmp_path / "net.edges.manifest.json")
    assert dump.name in manifest["outputs"]


def test_analyze_triangle(tmp_path, capsys):
    edge_file = tmp_path / "triangle.edges"
    write_triangle(edge_file)
    assert run_cli("analyze", edge_file) == 0
    report_text = (tmp_path / "triangle.report.txt").read_text()
    assert "avg_clustering = 1\n" in report_text
    report = json.loads((tmp_path / "triangle.report.json").read_text())
    assert report["avg_clustering"] == 1.0
    assert report["avg_shortest_path"] == 1.0
    assert report["gamma"] is None
    assert (tmp_path / "triangle.ccdf.tsv").read_text() == "1\t1\n"
    assert "avg_clustering = 1" in capsys.readouterr().out


def test_analyze_generated_network(tmp_path):
    edge_file = tmp_path / "net.edges"
    assert run_cli("generate", "--nodes", 800, "--branching", "2.0",
                   "--activity", 0.4, "--seed", 5, "--out", edge_file) == 0
    assert run_cli("analyze", edge_file, "--path-samples", "all") == 0
    ks = [int(line.split("\t")[0])
          for line in (tmp_path / "net.ccdf.tsv").read_text().splitlines()]
    assert ks == sorted(set(ks))
    report = json.loads((tmp_path / "net.report.json").read_text())
    assert report["nodes"] == 800
    with edge_file.open() as fh:
        graph = read_edge_list(fh)
    assert report["edges"] == graph.edge_count
    assert isinstance(report["gamma"], float)
    assert isinstance(report["gamma_mle"], float)


def test_analyze_empty_distribution_fails(tmp_path):
    edge_file = tmp_path / "empty.edges"
    assert run_cli("generate", "--nodes", 7, "--branching", "2.0",
                   "--activity", 0, "--out", edge_file) == 0
    assert run_cli("analyze", edge_file) == 3


def test_analyze_missing_file(tmp_path):
    assert run_cli("analyze", tmp_path / "nowhere.edges") == 2


def test_analyze_malformed_line_names_line_number(tmp_path, capsys):
    edge_file = tmp_path / "bad.edges"
    edge_file.write_text("# nodes=3 edges=2\n0,1\n0;2\n")
    assert run_cli("analyze", edge_file) == 3
    assert "line 3" in capsys.readouterr().err


def test_config_file_supplies_defaults_and_flags_override(tmp_path):
    out = tmp_path / "cfg.edges"
    config = tmp_path / "run.cfg"
    config.write_text(
        "# sample config\n"
        "nodes = 300\n"
        "branching = 2.0\n"
        "activity = 0.1\n"
        "seed = 9\n"
        "include-tree-edges = true\n"
        f"out = {out}\n"
    )
    assert run_cli("generate", "--config", config, "--activity", 0.2) == 0
    params = read_manifest(tmp_path / "cfg.edges.manifest.json")["params"]
    assert params["nodes"] == 300
    assert params["activity"] == 0.2
    assert params["include_tree_edges"] is True


def test_config_file_errors(tmp_path):
    config = tmp_path / "bad.cfg"
    config.write_text("no_such_key = 1\n")
    assert run_cli("generate", "--config", config) == 1
    config.write_text("just a line without equals\n")
    assert run_cli("generate", "--config", config) == 1
    assert run_cli("generate", "--config", tmp_path / "missing.cfg") == 2


def test_sweep_outputs_and_manifest(tmp_path):
    out_dir = tmp_path / "sweep"
    assert run_cli("sweep", "--kind", "activity", "--values", "0.2,0.4",
                   "--replicates", 2, "--nodes", 400, "--branching", "2.0",
                   "--seed", 5, "--path-samples", 100, "--out", out_dir) == 0
    names = sorted(path.name for path in out_dir.iterdir())
    assert names == [
        "ccdf_activity=0.2_rep0.tsv",
        "ccdf_activity=0.2_rep1.tsv",
        "ccdf_activity=0.4_rep0.tsv",
        "ccdf_activity=0.4_rep1.tsv",
        "manifest.json",
        "summary.tsv",
    ]
    lines = (out_dir / "summary.tsv").read_text().splitlines()
    assert lines[0].split("\t") == ["value", "replicate", "gamma", "r_squared",
                                    "avg_clustering", "avg_shortest_path",
                                    "max_in_degree", "giant_fraction"]
    keys = [(line.split("\t")[0], int(line.split("\t")[1])) for line in lines[1:]]
    assert keys == [("0.2", 0), ("0.2", 1), ("0.4", 0), ("0.4", 1)]
    manifest = read_manifest(out_dir / "manifest.json")
    assert len(manifest["runs"]) == 4
    assert manifest["runs"][0]["seed"] != manifest["runs"][1]["seed"]
    for name, digest in manifest["outputs"].items():
        recomputed = hashlib.sha256((out_dir / name).read_bytes()).hexdigest()
        assert digest == f"sha256:{recomputed}"


def test_sweep_jobs_do_not_change_outputs(tmp_path):
    base = ("sweep", "--kind", "branching", "--values", "1.5,2.5",
            "--replicates", 2, "--nodes", 300, "--activity", 0.4,
            "--seed", 2, "--path-samples", 50)
    dir_serial = tmp_path / "serial"
    dir_threads = tmp_path / "threads"
    assert run_cli(*base, "--jobs", 1, "--out", dir_serial) == 0
    assert run_cli(*base, "--jobs", 4, "--out", dir_threads) == 0
    names = sorted(path.name for path in dir_serial.iterdir())
    assert names == sorted(path.name for path in dir_threads.iterdir())
    for name in names:
        assert (dir_serial / name).read_bytes() == (dir_threads / name).read_bytes()


def test_sweep_nodes_kind_uses_integer_values(tmp_path):
    out_dir = tmp_path / "nsweep"
    assert run_cli("sweep", "--kind", "nodes", "--values", "100,200",
                   "--branching", "2.0", "--activity", 0.4, "--out", out_dir) == 0
    lines = (out_dir / "summary.tsv").read_text().splitlines()
    assert [line.split("\t")[0] for line in lines[1:]] == ["100", "200"]
    assert (out_dir / "ccdf_nodes=100_rep0.tsv").exists()


def test_sweep_usage_errors(tmp_path):
    out_dir = tmp_path / "bad"
    common = ("--nodes", 100, "--branching", "2.0", "--out", out_dir)
    assert run_cli("sweep", "--kind", "activity", "--values", "0.2",
                   "--activity", 0.4, *common) == 1
    assert run_cli("sweep", "--kind", "activity", "--values", "0.2",
                   "--out", out_dir, "--nodes", 100) == 1
    assert run_cli("sweep", "--kind", "nodes", "--values", "ten",
                   "--branching", "2.0", "--activity", 0.4, "--out", out_dir) == 1
    assert run_cli("sweep", "--kind", "activity", "--values", "0.2",
                   "--replicates", 0, *common) == 1


def test_export_dot_triangle(tmp_path):
    edge_file = tmp_path / "triangle.edges"
    write_triangle(edge_file)
    assert run_cli("export-dot", edge_file) == 0
    expected = "graph g {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"
    assert (tmp_path / "triangle.dot").read_text() == expected


def test_export_dot_keeps_largest_component_only(tmp_path):
    edge_file = tmp_path / "two.edges"
    graph = DirectedGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4)])
    with edge_file.open("w") as fh:
        write_edge_list(graph, fh)
    out = tmp_path / "giant.dot"
    assert run_cli("export-dot", edge_file, "--out", out) == 0
    text = out.read_text()
    assert "3" not in text and "4" not in text
    full = tmp_path / "full.dot"
    assert run_cli("export-dot", edge_file, "--component", "full", "--out", full) == 0
    full_text = full.read_text()
    assert "  3 -- 4;\n" in full_text
    assert "  5;\n" in full_text


def test_export_dot_matches_reported_component_size(tmp_path):
    edge_file = tmp_path / "net.edges"
    assert run_cli("generate", "--nodes", 300, "--branching", "2.0",
                   "--activity", 0.04, "--seed", 0, "--tree-seed", 100,
                   "--out", edge_file) == 0
    assert run_cli("analyze", edge_file, "--path-samples", "all") == 0
    report = json.loads((tmp_path / "net.report.json").read_text())
    assert run_cli("export-dot", edge_file) == 0
    node_lines = re.findall(r"^  \d+;$", (tmp_path / "net.dot").read_text(), flags=re.M)
    assert len(node_lines) == round(report["giant_component_fraction"] * 300)


def test_leaf_variant_via_cli(tmp_path):
    edge_file = tmp_path / "leaf.edges"
    assert run_cli("generate", "--nodes", 60, "--branching", "2.0", "--activity", 1,
                   "--seed", 4, "--variant", "leaf", "--out", edge_file) == 0
    with edge_file.open() as fh:
        graph = read_edge_list(fh)
    leaves = set(build_tree(TreeParams(60, 2.0, seed=4)).leaves())
    assert {src for src, _ in graph.edges()} <= leaves


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "hiddentree", "--version"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip().startswith("hiddentree ")
