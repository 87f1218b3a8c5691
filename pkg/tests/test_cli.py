import json

import pytest

from frobcirc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def test_classify_91(capsys):
    blob = run_json(capsys, "classify", "91")
    assert blob["exists"] is True
    assert blob["solutions"] == [10, 17, 75, 82]
    assert blob["graph_count"] == 2
    assert blob["canonical_generators"] == [10, 17]


def test_classify_nonexistent_is_exit_zero(capsys):
    blob = run_json(capsys, "classify", "21")
    assert blob["exists"] is False and blob["solutions"] == []


def test_classify_bad_order_exits_one(capsys):
    code, _ = run_cli(capsys, "classify", "5")
    assert code == 1


def test_build(capsys):
    blob = run_json(capsys, "build", "49", "31")
    assert blob["connection_set"] == [1, 18, 19, 30, 31, 48]
    assert blob["canonical_generator"] == 19
    assert blob["ej"]["canonical_cd"] == [5, 3]


def test_build_default_generator(capsys):
    blob = run_json(capsys, "build", "49")
    assert blob["a"] in (19, 31)


def test_metrics_figure_one(capsys):
    blob = run_json(capsys, "metrics", "49", "31")
    assert blob["diameter"] == 4
    assert blob["pi"] == 44
    assert blob["gossip_time"] == 8
    assert blob["broadcast_horizon"] == 7
    assert blob["wiener"] == 3234
    assert blob["pi_closed_form_matches"] is False  # even-branch transcription


def test_convert(capsys):
    blob = run_json(capsys, "convert", "49", "31")
    assert blob["canonical_cd"] == [5, 3]
    assert blob["witness"]["case"] in (7, 8, 9)
    assert blob["iso_map_sample"]["0"] == "0+0r"


def test_convert_ej(capsys):
    blob = run_json(capsys, "convert-ej", "3", "5")
    assert blob["n"] == 49 and blob["a"] == 19
    assert blob["distance_distribution"] == [1, 6, 12, 18, 12]
    code, _ = run_cli(capsys, "convert-ej", "2", "2")
    assert code == 1


def test_diagram(capsys):
    blob = run_json(capsys, "diagram", "49", "31")
    assert blob["profile"] == [4, 3, 1, 0, 0]
    assert {c["residue"] for c in blob["cells"]} == {1, 2, 3, 4, 32, 33, 34, 14}
    assert all(c["k"] == 0 for c in blob["cells"])
    rot = {r["residue"]: r["orbit"] for r in blob["sector_rotations"]}
    assert set(rot[1]) == {1, 18, 19, 30, 31, 48}


def test_schedule_gossip(capsys):
    blob = run_json(capsys, "schedule", "gossip", "49", "31")
    assert blob["total_steps"] == 8
    assert len(blob["steps"]) == 8
    first = blob["steps"][0]
    assert len(first) == 6 * 49
    assert set(first[0]) == {"arc", "origin"}


def test_schedule_broadcast(capsys):
    blob = run_json(capsys, "schedule", "broadcast", "43", "7")
    assert blob["horizon"] == 6
    assert len(blob["assignments"]) == 42


def test_simulate_gossip(capsys):
    blob = run_json(capsys, "simulate", "gossip", "49", "31")
    assert blob["valid"] is True
    assert blob["completion_time"] == 8 == blob["expected_steps"]


def test_simulate_broadcast(capsys):
    blob = run_json(capsys, "simulate", "broadcast", "49", "31")
    assert blob["valid"] is True
    assert blob["completion_time"] == 7
    assert blob["broadcast_time"] == 6 and blob["broadcast_exact"] is True


def test_quotient(capsys):
    blob = run_json(capsys, "quotient", "49", "31", "7")
    assert blob["base"] == {"n": 7, "a": 3}
    assert blob["fold"] == 7 and blob["cover_valid"] is True
    assert len(blob["projection"]) == 49
    code, _ = run_cli(capsys, "quotient", "49", "31", "5")
    assert code == 1


def test_ej_cover(capsys):
    blob = run_json(capsys, "ej-cover", "1", "2", "2", "0")
    assert blob["product_norm"] == 28
    assert blob["fold"] == 4 and blob["cover_valid"] is True


def test_export_edges(capsys):
    code, out = run_cli(capsys, "export", "7", "3", "--format", "edges")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 21  # K_7
    assert lines[0].split() == ["0", "1"]


def test_export_dot(capsys):
    code, out = run_cli(capsys, "export", "13", "4", "--format", "dot")
    assert code == 0
    assert out.startswith("graph TL_13")
    assert out.count("--") == 3 * 13


def test_verify_small(capsys):
    code, out = run_cli(capsys, "verify", "--max", "200")
    assert code == 0
    blob = json.loads(out)
    assert blob["ok"] is True
    assert blob["orders_checked"] == 25


def test_verify_5000_exits_zero(capsys):
    # the contract case; sweeps 510 orders, takes about two minutes
    code, out = run_cli(capsys, "verify", "--max", "5000")
    assert code == 0
    blob = json.loads(out)
    assert blob["ok"] is True and blob["orders_checked"] == 510


def test_human_output(capsys):
    code, out = run_cli(capsys, "--human", "metrics", "49", "31")
    assert code == 0
    assert "pi: 44" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)
