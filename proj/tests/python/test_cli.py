import json

import jsonschema
import pytest


EXIT_CORPUS = [
    (0, ["family", "--type", "fano"]),
    (0, ["bound", "sigma-upper", "--pi", "3/4", "--k", "3"]),
    (0, ["search", "--n", "5", "--k", "2", "--constraint", "intersecting"]),
    (0, ["verify", "ekr-l2", "--n", "6", "--k", "3"]),
    (0, ["verify", "hm-l2-conjecture", "--n", "9", "--k", "3", "--no-search"]),
    (2, []),
    (2, ["bogus"]),
    (2, ["family", "--type", "star", "--n", "5"]),
    (2, ["family", "--type", "star", "--n", "3", "--k", "5", "--t", "1"]),
    (2, ["co2", "/nonexistent/file"]),
    (2, ["search", "--n", "6", "--k", "3", "--constraint", "wat"]),
    (2, ["verify", "no-such-claim", "--n", "6", "--k", "3"]),
    (3, ["search", "--n", "7", "--k", "3", "--constraint", "intersecting", "--no-l1-caps", "--node-budget", "5"]),
]


@pytest.mark.parametrize("code,args", EXIT_CORPUS)
def test_exit_codes(hx, code, args):
    assert hx(*args).returncode == code


def test_property_exit_codes(hx, tmp_path):
    star = tmp_path / "star.txt"
    assert hx("family", "--type", "star", "--n", "6", "--k", "3", "--t", "1", "-o", star).returncode == 0
    assert hx("check", star, "--prop", "intersecting").returncode == 0
    assert hx("check", star, "--prop", "matching", "--s", "0").returncode == 1
    assert hx("check", star, "--prop", "pattern-free", "--pattern", "linear-cycle:3").returncode == 0


def test_bad_thread_count(hx):
    assert hx("family", "--type", "fano", env={"HX_THREADS": "0"}).returncode == 2


def test_family_co2_round_trip(hx, tmp_path):
    out = tmp_path / "b.txt"
    assert hx("family", "--type", "b", "--n", "12", "--k", "3", "--s", "2", "-o", out).returncode == 0
    fam = json.loads(hx("--json", "family", "--type", "b", "--n", "12", "--k", "3", "--s", "2").stdout)
    assert fam["outputs"]["family"]["text"] == out.read_text()
    co2 = json.loads(hx("--json", "co2", out).stdout)
    import codegree as cg

    assert int(co2["outputs"]["co2"]) == cg.co2_b_closed(12, 3, 2)


SCHEMA_RUNS = [
    ["family", "--type", "hm", "--n", "8", "--k", "3", "--t", "1"],
    ["bound", "sigma-kt", "--t", "4", "--k", "3"],
    ["search", "--n", "6", "--k", "3", "--constraint", "free:linear-cycle:3", "--mode", "brute"],
    ["search", "--n", "7", "--k", "3", "--constraint", "intersecting", "--no-l1-caps", "--node-budget", "5"],
    ["verify", "emc-ratio", "--n", "30", "--k", "3", "--s", "2"],
    ["verify", "ekr-l2", "--n", "4", "--k", "2"],
    ["random", "--n", "8", "--k", "3", "--seed", "7"],
]


@pytest.mark.parametrize("args", SCHEMA_RUNS)
def test_json_reports_match_schema(hx, schema, args):
    for extra in ([], ["--timing"]):
        proc = hx("--json", *extra, *args)
        assert proc.returncode in (0, 3), proc.stderr
        jsonschema.validate(json.loads(proc.stdout), schema)


def test_bound_report_matches_schema(hx, schema, tmp_path):
    fano = tmp_path / "fano.txt"
    assert hx("family", "--type", "fano", "-o", fano).returncode == 0
    proc = hx("--json", "bound", "report", fano)
    assert proc.returncode == 0, proc.stderr
    jsonschema.validate(json.loads(proc.stdout), schema)


def test_json_is_byte_stable_across_threads(hx):
    args = ["--json", "search", "--n", "6", "--k", "3", "--constraint", "intersecting"]
    assert hx(*args).stdout == hx(*args).stdout
    one = json.loads(hx(*args, env={"HX_THREADS": "1"}).stdout)
    four = json.loads(hx(*args, env={"HX_THREADS": "4"}).stdout)
    assert one["outputs"] == four["outputs"]
