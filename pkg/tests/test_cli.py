import json

import pytest

from tensorsquare.cli import main, render_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "s3" in out and "heis27" in out
    code, out, _ = run(capsys, "catalog", "--json")
    data = json.loads(out)
    assert {"name": "d4", "order": 8, "description": "dihedral of order 8"} in data["groups"]
    code, out, _ = run(capsys, "catalog", "gdc:2,2,2", "--json")
    assert json.loads(out)["order"] == 32


def test_compute_s3(capsys):
    code, out, _ = run(capsys, "compute", "s3", "--json")
    data = json.loads(out)
    assert code == 0
    r = data["report"]
    assert r["tensor_order"] == 6 and r["splits"] is True and r["multiplicator"]["factors"] == []
    assert data["tool"]["version"] and data["seed"] == 0 and data["transversal"] == r["transversal"]
    assert "wall_time_s" in data and data["config"]["nu_mode"] == "auto"


def test_compute_klein(capsys):
    code, out, _ = run(capsys, "compute", "z2xz2", "--json")
    assert json.loads(out)["report"]["tensor_order"] == 16


def test_cache_byte_identical(capsys, tmp_path):
    args = ("compute", "q8", "--cache", str(tmp_path), "--json")
    _, cold, _ = run(capsys, *args)
    assert len(list(tmp_path.iterdir())) == 1
    _, hot, _ = run(capsys, *args)
    assert hot == cold
    _, cold_text, _ = run(capsys, "compute", "q8", "--cache", str(tmp_path))
    assert cold_text == render_text(json.loads(cold)) + "\n"


def test_cache_keyed_by_config(capsys, tmp_path):
    run(capsys, "compute", "z4", "--cache", str(tmp_path))
    run(capsys, "compute", "z4", "--cache", str(tmp_path), "--seed", "3")
    assert len(list(tmp_path.iterdir())) == 2


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "compute", "no-such-group")[0] == 3
    assert run(capsys, "compute", "d4", "--nu-mode", "full", "--max-cosets", "100")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"order": 2, "mul": [[0, 1], [1, 1]]}))
    assert run(capsys, "compute", f"table:{bad}")[0] == 3
    pres = tmp_path / "p.txt"
    pres.write_text("a | a^3, b")
    assert run(capsys, "compute", f"presentation:{pres}")[0] == 3


def test_internal_assertion_exit(capsys, monkeypatch):
    import tensorsquare.cli as cli

    def boom(ref, cfg):
        raise AssertionError("order identity violated")

    monkeypatch.setattr(cli, "compute_payload", boom)
    assert run(capsys, "compute", "z2")[0] == 4


def test_presentation_input(capsys, tmp_path):
    pres = tmp_path / "s3.txt"
    pres.write_text("<a, b | a^3, b^2, (ab)^2>")
    code, out, _ = run(capsys, "compute", f"presentation:{pres}", "--json")
    assert code == 0 and json.loads(out)["report"]["tensor_order"] == 6


def test_verify_identities_s3(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--group", "s3")
    assert code == 0
    assert out.count("PASS") == 10 and "fail=0" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "centers", "--group", "z4", "--group", "s3", "--json")
    data = json.loads(out)
    assert code == 0 and data["summary"]["fail"] == 0
    keys = [(o["claim_id"], o["group_name"]) for o in data["outcomes"]]
    assert keys == sorted(keys)


def test_verify_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "bounds", "--group", "z2xz2")
    assert code == 1 and "FAIL" in out and "schur-bound" in out


def test_verify_question_exits_zero(capsys, tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("# small\nz2\nq8\nz3xz3\n")
    code, out, _ = run(capsys, "verify", "question", "--corpus", str(corpus))
    assert code == 0
    assert out.splitlines()[0].split()[0] == "group" and len(out.splitlines()) == 4


def test_text_rendering_stable():
    obj = {"a": 1, "b": {"c": [1, 2], "d": [{"e": "x"}]}, "f": {}}
    assert render_text(obj) == "a: 1\nb:\n  c: [1, 2]\n  d:\n    -\n      e: x\nf: {}"


def test_bad_flag_values():
    # usage errors share the invalid-input code, not the overflow code
    with pytest.raises(SystemExit) as e:
        main(["compute", "z2", "--max-cosets", "0"])
    assert e.value.code == 3
    with pytest.raises(SystemExit) as e:
        main(["verify", "everything"])
    assert e.value.code == 3
