import json

import pytest

from wexc.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv, "--json")
    assert rc == 0, err
    return json.loads(out)


def test_catalog_list(capsys):
    rows = run_json(capsys, "catalog", "list")
    by_name = {row["name"]: row for row in rows}
    assert by_name["sl3/E108"]["dimension"] == 3
    assert by_name["sl3/E108"]["order"] == 108
    assert by_name["sl4/fermat"]["parameters"] == {"m": 5}


def test_catalog_show(capsys):
    rc, out, _ = run(capsys, "catalog", "show", "sl3/typeC")
    assert rc == 0
    assert "order: 12" in out
    assert "generators:" in out
    payload = run_json(capsys, "catalog", "show", "sl3/typeC")
    assert payload["facts"]["witness"] == "x^2+y^2+z^2"
    assert len(payload["generators"]) == 3


def test_catalog_show_placeholder(capsys):
    rc, _, err = run(capsys, "catalog", "show", "sl3/L1080")
    assert rc == 2
    assert "placeholder" in err


def test_closure_round_trip(capsys, tmp_path):
    data = run_json(capsys, "closure", "catalog:sl3/heis27")
    assert data["order"] == 27
    assert len(data["elements"]) == 27

    refeed = tmp_path / "refeed.json"
    refeed.write_text(json.dumps({
        "dimension": data["dimension"],
        "generators": data["elements"],
    }))
    again = run_json(capsys, "closure", str(refeed))
    assert again["order"] == data["order"]
    first = {json.dumps(e) for e in data["elements"]}
    second = {json.dumps(e) for e in again["elements"]}
    assert first == second


def test_classify_text(capsys):
    rc, out, _ = run(capsys, "classify", "catalog:sl4/eg-imprim-nonmono")
    assert rc == 0
    assert "ImprimitiveNonMonomial" in out
    assert "span{" in out


def test_classify_cap(capsys):
    rc, _, err = run(capsys, "classify", "catalog:sl4/cubic-mono-2")
    assert rc == 3
    assert "classification cap" in err
    data = run_json(capsys, "classify", "catalog:sl4/cubic-mono-2",
                    "--class-cap", "2600")
    assert data["action_class"] == "ImprimitiveMonomial"


def test_semi_invariants_single_degree(capsys):
    data = run_json(capsys, "semi-invariants", "catalog:sl3/typeC",
                    "--degree", "2")
    spaces = data["results"][0]["spaces"]
    trivial = [sp for sp in spaces if sp["trivial"]]
    assert trivial and trivial[0]["basis"] == ["x^2+y^2+z^2"]


def test_semi_invariants_degree_range(capsys):
    data = run_json(capsys, "semi-invariants", "catalog:sl3/typeC",
                    "--max-degree", "2")
    assert [r["degree"] for r in data["results"]] == [1, 2]
    assert data["results"][0]["spaces"] == []
    assert data["results"][1]["spaces"]


def test_semi_invariants_needs_one_degree_flag(capsys):
    rc, _, err = run(capsys, "semi-invariants", "catalog:sl3/typeC")
    assert rc == 2
    assert "exactly one" in err
    rc, _, _ = run(capsys, "semi-invariants", "catalog:sl3/typeC",
                   "--degree", "1", "--max-degree", "2")
    assert rc == 2


def test_check_fields(capsys):
    data = run_json(capsys, "check", "catalog:sl4/a5sym3", "--dim", "4")
    assert list(data) == [
        "name", "dimension", "order", "transitive",
        "min_semi_invariant_degree", "a5_flag", "action_class",
        "weakly_exceptional", "witness",
    ]
    assert data["a5_flag"] is True
    assert data["weakly_exceptional"] is False
    assert data["action_class"] == "Primitive"
    assert data["witness"] == (
        "projective image is the simple group of order 60")


def test_check_leaves_class_empty_past_cap(capsys):
    data = run_json(capsys, "check", "catalog:sl4/cubic-mono-2",
                    "--dim", "4")
    assert data["action_class"] is None
    assert data["min_semi_invariant_degree"] == 3
    assert data["weakly_exceptional"] is False


def test_check_dimension_mismatch(capsys):
    rc, _, err = run(capsys, "check", "catalog:sl3/E108", "--dim", "4")
    assert rc == 2
    assert "dimension" in err


def test_check_group_file(capsys, tmp_path):
    path = tmp_path / "heis.json"
    path.write_text(json.dumps({
        "name": "heis",
        "generators": [
            [["1", "0", "0"], ["0", "E(3)", "0"], ["0", "0", "E(3)^2"]],
            [["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]],
        ],
    }))
    data = run_json(capsys, "check", str(path), "--dim", "3")
    assert data["order"] == 27
    assert data["weakly_exceptional"] is True


def test_group_file_parse_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"generators": [[["1"]]')
    rc, _, err = run(capsys, "check", str(path), "--dim", "3")
    assert rc == 2
    assert "position" in err


def test_missing_file(capsys):
    rc, _, err = run(capsys, "closure", "no-such-file.json")
    assert rc == 2
    assert err


def test_closure_cap_exit(capsys):
    rc, _, err = run(capsys, "closure", "catalog:sl4/fermat",
                     "--cap", "500")
    assert rc == 3
    assert "exceeded" in err


def test_param_override(capsys):
    data = run_json(capsys, "closure", "catalog:sl3/typeD",
                    "--param", "a=E(4)", "--param", "b=E(4)",
                    "--param", "c=1")
    assert data["order"] == 96


def test_param_rejected_for_files(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(
        {"generators": [[["0", "1"], ["-1", "0"]]]}))
    rc, _, err = run(capsys, "closure", str(path), "--param", "n=3")
    assert rc == 2
    assert "catalog" in err


def test_param_needs_equals(capsys):
    rc, _, err = run(capsys, "closure", "catalog:sl4/fermat",
                     "--param", "m7")
    assert rc == 2
    assert "key=value" in err


def test_report_requires_battery_flag(capsys):
    rc, _, err = run(capsys, "report")
    assert rc == 2
    assert "--paper" in err


def test_report_subset(capsys, tmp_path):
    rc, out, _ = run(capsys, "report", "--paper", "--out", str(tmp_path),
                     "--entry", "sl3/typeC", "--entry", "sl3/heis27")
    assert rc == 0
    assert "PASS sl3/typeC" in out
    assert "PASS sl3/heis27" in out
    assert "2/2 entries verified" in out
    for artifact in ("results.csv", "orders.png", "verdicts.png"):
        assert (tmp_path / artifact).exists()


def test_unknown_catalog_entry(capsys):
    rc, _, err = run(capsys, "check", "catalog:sl4/bogus", "--dim", "4")
    assert rc == 2
    assert "unknown catalog entry" in err
