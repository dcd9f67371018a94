import json

import pytest
from click.testing import CliRunner

from drdlab import __version__, edgelist
from drdlab.cli import main
from drdlab.constructions import block_cycle, find_srd, gamma_n
from drdlab.digraph import Digraph

from known import NON_WDRD_5


@pytest.fixture
def run(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("DRDLAB_SEED", raising=False)
    runner = CliRunner()

    def invoke(*args, **kwargs):
        return runner.invoke(main, [str(a) for a in args], catch_exceptions=False, **kwargs)

    return invoke


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in {
        "bc.dg": block_cycle(3, 2),
        "gamma5.dg": gamma_n(5),
        "srd8.dg": find_srd(8, 3, 2, 1, 1)[0],
        "nonwdrd.dg": NON_WDRD_5,
        "split.dg": Digraph.from_edge_list(4, [(0, 1), (1, 0), (2, 3), (3, 2)]),
    }.items():
        paths[name] = str(edgelist.write(g, tmp_path / name))
    bc = block_cycle(3, 2)
    u, v = bc.edges()[0]
    bad = Digraph.from_edge_list(6, [e for e in bc.edges() if e != (u, v)] + [(u, 1)])
    paths["corrupted.dg"] = str(edgelist.write(bad, tmp_path / "corrupted.dg"))
    return paths


def test_version(run):
    r = run("--version")
    assert r.exit_code == 0 and __version__ in r.output


# -- gen ---------------------------------------------------------------------------------


def test_gen_blockcycle(run, tmp_path):
    r = run("gen", "--family", "blockcycle", "--t", 3, "--rho", 2, "-o", "bc.dg")
    assert r.exit_code == 0
    assert edgelist.read(tmp_path / "bc.dg") == block_cycle(3, 2)


def test_gen_srd(run, tmp_path):
    r = run("gen", "--family", "srd", "--params", "6,2,1,0,1", "-o", "out/")
    assert r.exit_code == 0
    dg = sorted((tmp_path / "out").glob("*.dg"))
    assert len(dg) >= 1
    index = json.loads((tmp_path / "out" / "srd_6_2_1_0_1_index.json").read_text())
    assert index["count"] == len(dg)


@pytest.mark.parametrize(
    "args",
    [
        ("--family", "blockcycle", "--t", 1, "--rho", 2),
        ("--family", "dcycle"),
        ("--family", "ucycle", "--n", 2),
        ("--family", "srd", "--params", "6,2,1,0"),
        ("--family", "gamma", "--n", 40),
        ("--family", "nope"),
    ],
)
def test_gen_bad_flags_exit_2(run, args):
    assert run("gen", *args).exit_code == 2


def test_gen_to_stdout(run):
    r = run("gen", "--family", "gamma", "--n", 3)
    assert r.exit_code == 0
    assert edgelist.loads(r.output) == gamma_n(3)


def test_gen_lift(run, tmp_path):
    assert run("gen", "--family", "lift", "--n", 3, "--m", 2, "-o", "l.dg").exit_code == 0
    assert edgelist.read(tmp_path / "l.dg").n == 6


# -- check -------------------------------------------------------------------------------


def test_check_drd_true(run, files):
    r = run("check", "--what", "drd", files["bc.dg"])
    assert r.exit_code == 0 and r.output.startswith("drd: true")
    assert "lambda: 0" in r.output


def test_check_normal_false(run, files):
    r = run("check", "--what", "normal", files["gamma5.dg"])
    assert r.exit_code == 1 and "normal: false" in r.output


def test_check_missing_file(run):
    assert run("check", "--what", "srd", "missing.dg").exit_code == 2


def test_check_malformed_file(run, tmp_path):
    (tmp_path / "bad.dg").write_text("digraph 2\ne 0 0\n")
    assert run("check", "--what", "drd", "bad.dg").exit_code == 2


@pytest.mark.parametrize(
    "what, name, code, text",
    [
        ("wdrd", "gamma5.dg", 0, "wdrd: true"),
        ("wdrd", "nonwdrd.dg", 1, "length=2"),
        ("srd", "srd8.dg", 0, "params: n=8 k=3 t=2 lambda=1 mu=1"),
        ("srd", "gamma5.dg", 1, "srd: false"),
        ("stable", "bc.dg", 0, "stable: true"),
        ("stable", "nonwdrd.dg", 1, "stable: false"),
        ("type", "bc.dg", 0, "type: long"),
        ("drd", "gamma5.dg", 1, "witness"),
        ("drd", "corrupted.dg", 2, ""),
        ("type", "gamma5.dg", 2, ""),
        ("drd", "split.dg", 2, ""),
    ],
)
def test_check_predicates(run, files, what, name, code, text):
    r = run("check", "--what", what, files[name])
    assert r.exit_code == code, r.output
    assert text in r.output


# -- cut ------------------------------------------------------------------------------------


def test_cut_edge_enumerate(run, files):
    r = run("cut", "--edge", "--enumerate", "--classify", files["bc.dg"])
    assert r.exit_code == 0
    assert r.output.splitlines()[0] == "edge connectivity: 2"
    classes = [line.split("class=")[1] for line in r.output.splitlines()[1:]]
    assert classes and all(c.startswith(("OutStar", "InStar")) for c in classes)


def test_cut_vertex_srd8(run, files):
    r = run("cut", "--vertex", files["srd8.dg"])
    assert r.exit_code == 0 and r.output.strip() == "vertex connectivity: 2"


def test_cut_gamma5_nontrivial(run, files):
    r = run("cut", "--edge", files["gamma5.dg"], "--enumerate", "--classify")
    assert r.exit_code == 0 and "class=NonTrivial" in r.output


def test_cut_disconnected(run, files):
    r = run("cut", "--edge", files["split.dg"])
    assert r.exit_code == 2
    assert "0" in r.output and "2" in r.output


# -- verify ------------------------------------------------------------------------------------


def test_verify_all_default_catalog(run, tmp_path):
    r = run("verify", "--all", "--default-catalog", "--seed", 1, "--report", "r.json")
    assert r.exit_code == 0, r.output
    report = json.loads((tmp_path / "r.json").read_text())
    assert report["seed"] == "1"
    assert report["summary"].get("fail", 0) == 0
    first = (tmp_path / "r.json").read_bytes()
    r2 = run("verify", "--all", "--default-catalog", "--seed", 1, "--report", "r.json")
    assert r2.output == r.output
    assert (tmp_path / "r.json").read_bytes() == first


def test_verify_seed_from_env(run, tmp_path):
    r = run("verify", "--theorem", "gamma", "--n", "3", "--report", "e.json", env={"DRDLAB_SEED": "42"})
    assert r.exit_code == 0
    assert json.loads((tmp_path / "e.json").read_text())["seed"] == "42"


def test_verify_gamma_range(run):
    r = run("verify", "--theorem", "gamma", "--n", "3..10")
    assert r.exit_code == 0
    lines = [line for line in r.output.splitlines() if "gamma-family" in line]
    assert len(lines) == 8 and lines[-1].endswith("gamma(n=10)")


def test_verify_corrupted(run, files, tmp_path):
    r = run("verify", "--theorem", "drd", files["corrupted.dg"], "--report", "bad.json")
    assert r.exit_code == 1
    report = json.loads((tmp_path / "bad.json").read_text())
    (result,) = report["results"]
    assert result["verdict"] == "fail" and result["witness"]["type"] == "irregular"
    assert report["inputs"][0]["sha256"]


def test_verify_srd8_and_srd(run, files):
    assert run("verify", "--theorem", "srd8").exit_code == 0
    assert run("verify", "--theorem", "srd8", files["srd8.dg"]).exit_code == 0
    alias = run("verify", "--theorem", "figure1")
    assert alias.exit_code == 0 and alias.output == run("verify", "--theorem", "srd8").output
    r = run("verify", "--theorem", "srd", files["srd8.dg"])
    assert r.exit_code == 0 and r.output.startswith("PASS")


@pytest.mark.parametrize(
    "args",
    [
        ("verify",),
        ("verify", "--all", "--theorem", "drd"),
        ("verify", "--theorem", "gamma", "--n", "1..40"),
        ("verify", "--theorem", "gamma", "--n", "x"),
        ("verify", "--theorem", "drd", "missing.dg"),
        ("verify", "--theorem", "srd", "GAMMA"),
    ],
)
def test_verify_errors(run, files, args):
    args = tuple(files["gamma5.dg"] if a == "GAMMA" else a for a in args)
    assert run(*args).exit_code == 2


# -- search --------------------------------------------------------------------------------------


def test_search_exhaustive_small(run, tmp_path):
    r = run("search", "--conjecture", "--exhaustive", "--max-n", 6, "--max-k", 2, "--out", "cx")
    assert r.exit_code == 0
    assert "counterexamples: 0" in r.output
    assert not (tmp_path / "cx").exists()


def test_search_catalog(run):
    r = run("search", "--conjecture", "--catalog")
    assert r.exit_code == 0 and "counterexamples: 0" in r.output


def test_search_bounds(run):
    assert run("search", "--conjecture", "--exhaustive", "--max-n", 20).exit_code == 2
    assert run("search", "--max-n", 5).exit_code == 2
