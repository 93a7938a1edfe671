import json

from patrolsim.cli import main
from patrolsim.graph import load_graph
from patrolsim.triangulation import load_triangulation


def write_scenario(path, **overrides):
    scenario = {
        "graph": {"family": "four-cycle-chain", "params": {"k": 2}},
        "policy": "lrv-v",
        "robots": {"starts": [0]},
        "horizon": 100,
    }
    scenario.update(overrides)
    path.write_text(json.dumps(scenario))
    return path


def test_generate_four_cycle_chain(tmp_path, capsys):
    out = tmp_path / "fcc3.graph"
    assert main(["generate", "four-cycle-chain", "k=3",
                 "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "12 14"
    stdout = capsys.readouterr().out
    assert "n=12 m=14 max_degree=3" in stdout
    g = load_graph(out)
    assert g.meta["family"] == "four_cycle_chain"


def test_generate_grid_writes_triangulation(tmp_path):
    out = tmp_path / "grid.graph"
    assert main(["generate", "grid", "w=2", "h=2", "--out", str(out)]) == 0
    assert load_graph(out).n == 8
    assert len(load_triangulation(str(out) + ".tri").triangles) == 8


def test_generate_errors(tmp_path, capsys):
    out = str(tmp_path / "x")
    assert main(["generate", "moebius", "n=3", "--out", out]) == 2
    assert main(["generate", "path", "k=3", "--out", out]) == 2
    assert main(["generate", "path", "n=zero", "--out", out]) == 2
    assert "error:" in capsys.readouterr().err


def test_simulate_outputs(tmp_path, capsys):
    scenario = write_scenario(tmp_path / "s.json")
    out_dir = tmp_path / "run"
    assert main(["simulate", "--scenario", str(scenario),
                 "--out-dir", str(out_dir)]) == 0
    stdout = capsys.readouterr().out
    assert "peak_refresh=" in stdout and "coverage_time=" in stdout
    events = (out_dir / "events.csv").read_text().splitlines()
    assert events[0] == "round,robot,from,edge,to"
    assert len(events) == 101
    metrics = (out_dir / "metrics.csv").read_text().splitlines()
    assert metrics[0] == "round,max_refresh,coverage_fraction"
    summary = json.loads((out_dir / "summary.json").read_text())
    assert summary["policy"] == "lrv-v"
    assert summary["peak_refresh"] >= 1


def test_simulate_byte_determinism(tmp_path):
    scenario = write_scenario(tmp_path / "s.json",
                              tiebreak={"kind": "seeded_random", "seed": 9})
    dirs = []
    for name in ("a", "b"):
        out_dir = tmp_path / name
        assert main(["simulate", "--scenario", str(scenario),
                     "--out-dir", str(out_dir)]) == 0
        dirs.append(out_dir)
    for fname in ("events.csv", "metrics.csv", "summary.json"):
        assert (dirs[0] / fname).read_bytes() == (dirs[1] / fname).read_bytes()


def test_simulate_rejects_unknown_keys(tmp_path, capsys):
    scenario = write_scenario(tmp_path / "s.json", extra_knob=1)
    assert main(["simulate", "--scenario", str(scenario),
                 "--out-dir", str(tmp_path / "o")]) == 2
    assert "unknown key extra_knob" in capsys.readouterr().err


def test_simulate_witness_replay(tmp_path, capsys):
    from patrolsim.generators import four_cycle_chain
    from patrolsim.oracle import exhaustive_tiebreak_search
    from patrolsim.policies import PolicyKind

    res = exhaustive_tiebreak_search(four_cycle_chain(2), PolicyKind.LRV_V,
                                     0, 100)
    witness = tmp_path / "w.txt"
    witness.write_text("\n".join(str(i) for i in res.witness) + "\n")
    scenario = write_scenario(tmp_path / "s.json")
    assert main(["simulate", "--scenario", str(scenario),
                 "--witness", str(witness),
                 "--out-dir", str(tmp_path / "o")]) == 0
    assert f"peak_refresh={res.peak} " in capsys.readouterr().out


def test_sweep(tmp_path, capsys):
    out_dir = tmp_path / "sweep"
    assert main(["sweep", "--family", "path", "--sweep", "n=4..6",
                 "--policies", "lrv-v,lfv-v", "--horizon", "60",
                 "--seeds", "0,1", "--out-dir", str(out_dir)]) == 0
    rows = (out_dir / "sweep.csv").read_text().splitlines()
    assert rows[0] == "family,param,policy,robots,seed,peak_refresh,coverage_time"
    assert len(rows) == 1 + 3 * 2 * 2
    fits = (out_dir / "fits.txt").read_text()
    assert "lrv-v robots=1: exponent=" in fits


def test_sweep_bad_range(tmp_path, capsys):
    assert main(["sweep", "--family", "path", "--sweep", "n",
                 "--policies", "lrv-v", "--horizon", "10",
                 "--out-dir", str(tmp_path)]) == 2


def test_verify_invariants(capsys):
    assert main(["verify", "invariants"]) == 0
    out = capsys.readouterr().out
    assert "PASS graph-invariants" in out
    assert "PASS run-determinism" in out
    assert "PASS visit-conservation" in out


def test_verify_unknown_suite(capsys):
    assert main(["verify", "nonsense"]) == 2
