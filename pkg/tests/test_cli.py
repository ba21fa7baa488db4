"""Runner-level exercises of the command-line front end."""

import io
import json
import os

import pytest

from ylab import cli


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


SPEC21 = ["--n", "2", "--mu", "0,0", "--nu", "2,1"]


# -------------------------------------------------------------------- build

def test_build_report(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["build"] + SPEC21)
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 2
    assert doc["lambar"] == ["2", "1"]
    assert doc["dominant"] is True
    assert out.endswith("\n")


def test_build_rejects_wide_degree(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch,
                         ["build", "--n", "2", "--mu", "0", "--nu", "3"])
    assert code == 2
    assert out == ""
    assert "exceeds" in err


def test_build_negative_degree_sign(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch,
                       ["build", "--n", "2", "--mu", "0", "--nu", "-2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 1
    assert doc["eps"] == [-1]


def test_build_reads_spec_from_stdin(capsys, monkeypatch):
    payload = '{"n":2,"m":2,"mu":["0","0"],"nu":[2,1]}'
    code, out, _ = run(capsys, monkeypatch, ["build"], stdin=payload)
    assert code == 0
    assert json.loads(out)["dim"] == 2


def test_build_rejects_partial_flags(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["build", "--n", "2"])
    assert code == 2
    assert "together" in err


# --------------------------------------------------------------- intertwine

def test_intertwine_single_row_is_identity(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch,
                       ["intertwine", "--n", "2", "--mu", "0", "--nu", "1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["matrix"] == [["1", "0"], ["0", "1"]]
    assert doc["hv_check"] is True
    assert doc["rank"] == 2 == doc["image_dim"]


def test_intertwine_not_dominant_exit(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch,
                         ["intertwine", "--n", "2", "--mu", "0,1",
                          "--nu", "1,1"])
    assert code == 3
    assert out == ""
    assert "(1, 2)" in err


def test_intertwine_word_flag(capsys, monkeypatch):
    base = ["intertwine", "--n", "2", "--mu", "0,-2", "--nu", "1,1"]
    code_a, out_a, _ = run(capsys, monkeypatch, base)
    code_b, out_b, _ = run(capsys, monkeypatch, base + ["--word", "1"])
    assert code_a == code_b == 0
    assert (json.loads(out_a)["matrix"] == json.loads(out_b)["matrix"])


def test_intertwine_bad_word(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch,
                       ["intertwine", "--n", "2", "--mu", "0,-2",
                        "--nu", "1,1", "--word", "1,1"])
    assert code == 2
    assert "word" in err


# ------------------------------------------------- drinfeld/realize/reduce

def test_drinfeld_realize_round_trip(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch,
                       ["drinfeld", "--n", "2", "--mu", "0,3",
                        "--nu", "1,-2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "rational"
    code, out, _ = run(capsys, monkeypatch, ["realize"],
                       stdin=json.dumps(doc["data"]))
    assert code == 0
    realized = json.loads(out)
    assert realized["spec"]["nu"] == [-2, 1]
    assert realized["kind"] == "rational"


def test_realize_rejects_junk(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["realize"], stdin='{"P":')
    assert code == 2
    assert "JSON" in err


def test_reduce_fuses_pairs(capsys, monkeypatch):
    pairs = '[[1,"0"],[-2,"0"],[2,"3"],[-2,"3"]]'
    code, out, _ = run(capsys, monkeypatch, ["reduce", "--n", "2"],
                       stdin=pairs)
    assert code == 0
    doc = json.loads(out)
    assert doc["source_size"] == 4
    assert doc["size"] == len(doc["reduced"]) == 2


# ------------------------------------------------------------------- verify

@pytest.mark.parametrize("suite", cli.SUITES)
def test_verify_suites_pass(capsys, monkeypatch, suite):
    code, out, _ = run(capsys, monkeypatch,
                       ["verify", "--suite", suite, "--n", "2",
                        "--mu", "0,0", "--nu", "1,-1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["suite"] == suite


def test_verify_composite_reports_counters(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch,
                       ["verify", "--suite", "composite", "--n", "2",
                        "--mu", "0,0", "--nu", "1,-1"])
    assert code == 0
    doc = json.loads(out)
    assert {"K", "L", "M"} <= doc.keys()
    assert doc["sign"] in (1, -1)


def test_verify_rtt_samples_floor(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch,
                       ["verify", "--suite", "rtt", "--samples", "169",
                        "--n", "2", "--mu", "0,0", "--nu", "1,-1"])
    assert code == 0
    assert json.loads(out)["pairs"] == 169


def test_verify_rtt_too_few_samples(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch,
                       ["verify", "--suite", "rtt", "--samples", "4",
                        "--n", "2", "--mu", "0,0", "--nu", "1,-1"])
    assert code == 2
    assert "samples" in err


def test_verify_desk_bounds(capsys, monkeypatch):
    code, _, _ = run(capsys, monkeypatch,
                     ["verify", "--suite", "lemma41", "--n", "3",
                      "--mu", "0,0,0", "--nu", "1,1,1"])
    assert code == 2  # dim 27 exceeds the brute-force bound
    code, _, _ = run(capsys, monkeypatch,
                     ["verify", "--suite", "iso", "--n", "5",
                      "--mu", "0", "--nu", "1"])
    assert code == 2


def test_verify_unknown_suite_is_usage_error(capsys, monkeypatch):
    with pytest.raises(SystemExit) as info:
        run(capsys, monkeypatch, ["verify", "--suite", "nope"] + SPEC21)
    assert info.value.code == 2


# -------------------------------------------------------------------- cache

def test_cache_round_trip_and_env_override(capsys, monkeypatch, tmp_path):
    argv = ["verify", "--suite", "eigen", "--n", "2", "--mu", "0,0",
            "--nu", "2,1", "--cache-dir", str(tmp_path)]
    code_a, out_a, _ = run(capsys, monkeypatch, argv)
    entries = os.listdir(tmp_path)
    assert len(entries) == 1 and entries[0].endswith(".json")
    code_b, out_b, _ = run(capsys, monkeypatch, argv)
    assert (code_a, out_a) == (code_b, out_b) == (0, out_a)

    # env var wins over a bogus --cache-dir and still hits the same entry
    monkeypatch.setenv("YLAB_CACHE", str(tmp_path))
    code_c, out_c, _ = run(capsys, monkeypatch,
                           argv[:-1] + ["/nonexistent/nowhere"])
    assert (code_c, out_c) == (0, out_a)
    assert os.listdir(tmp_path) == entries


def test_cache_ignores_out_flag_in_key(capsys, monkeypatch, tmp_path):
    target = tmp_path / "report.json"
    argv = ["build", "--cache-dir", str(tmp_path / "cache"),
            "--out", str(target)] + SPEC21
    code, out, _ = run(capsys, monkeypatch, argv)
    assert code == 0 and out == ""
    first = target.read_text(encoding="utf-8")
    argv2 = ["build", "--cache-dir", str(tmp_path / "cache")] + SPEC21
    code, out, _ = run(capsys, monkeypatch, argv2)
    assert code == 0
    assert out == first  # cache hit: byte-identical despite --out change
