import json

import pytest

from towercalc import models
from towercalc.chainio import dumps, serialize_complex, serialize_map
from towercalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tower_phi_example(capsys):
    code, out, _ = run(capsys, "tower", "--n", "9", "--k", "4", "--j", "2", "phi")
    assert code == 0
    assert out.strip() == "2"


def test_witt_example(capsys):
    code, out, _ = run(capsys, "witt", "--g", "2", "--len", "6")
    assert code == 0
    assert out.strip() == "9"


def test_disk_links_pi0_example(capsys):
    code, out, _ = run(capsys, "disk-links", "--n", "4", "--t", "3", "pi0")
    assert code == 0
    assert out.strip() == "8"


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-thing"])
    assert exc.value.code == 2


def test_missing_required_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["witt", "--g", "2"])
    assert exc.value.code == 2


def test_domain_error_exits_1_with_code(capsys):
    code, out, _ = run(capsys, "disk-links", "--n", "5", "--t", "2", "--m", "1", "ses")
    assert code == 1
    assert "PARITY_UNSUPPORTED" in out
    code, out, _ = run(
        capsys, "--format", "structured",
        "disk-links", "--n", "5", "--t", "2", "--m", "1", "ses",
    )
    assert code == 1
    assert json.loads(out)["error"] == "PARITY_UNSUPPORTED"


def test_codim_not_applicable_is_typed(capsys):
    code, out, _ = run(capsys, "tower", "--n", "7", "--k", "5", "--bconn", "2", "codim")
    assert code == 1
    assert "NOT_APPLICABLE" in out


def test_invariant_violation_exits_2(capsys):
    code, _, err = run(capsys, "tower", "--n", "9", "--k", "7", "--j", "1", "phi")
    assert code == 2
    assert "n - k" in err


def test_connectivity_note_flagging(capsys):
    code, out, _ = run(capsys, "tower", "--n", "9", "--k", "4", "--j", "1", "stage")
    assert code == 2  # stage needs j >= 2
    code, out, _ = run(capsys, "tower", "--n", "12", "--k", "4", "--j", "1", "phi")
    assert code == 0
    assert out.splitlines()[0] == "2"
    code, out, _ = run(capsys, "tower", "--n", "20", "--k", "17", "--j", "1", "phi")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "-16"
    assert lines[1].startswith("NOTE:")
    payload = json.loads(
        run(capsys, "--format", "structured", "tower", "--n", "20", "--k", "17",
            "--j", "1", "phi")[1]
    )
    assert payload["value"] == -16
    assert "note" in payload


def test_structured_round_trip_suite(capsys, tmp_path):
    cpath = tmp_path / "cyl.json"
    cpath.write_text(serialize_complex(models.cylinder()))
    mpath = tmp_path / "section.json"
    mpath.write_text(serialize_map(models.cylinder_section()))
    bpath = tmp_path / "boundary.json"
    bpath.write_text(serialize_map(models.cylinder_pair()[1]))

    invocations = [
        ("tower", "--n", "9", "--k", "4", "--j", "2", "phi"),
        ("tower", "--n", "9", "--k", "4", "--j", "4", "convergence"),
        ("tower", "--n", "9", "--k", "4", "--bconn", "2", "codim"),
        ("witt", "--g", "3", "--len", "5"),
        ("lyndon", "--g", "2", "--max-len", "4"),
        ("pi-wedge", "--dims", "3,3", "--q-max", "9"),
        ("pi-wedge", "--dims", "3,3", "--q-max", "8", "--loop-t", "2"),
        ("layer", "--n", "4", "--j", "2", "--t", "2"),
        ("layer", "--n", "5", "--j", "3", "--betti", "0:1,2:1"),
        ("obstruction", "--n", "9", "--j", "3"),
        ("obstruction", "--n", "3", "--j", "2", "--betti", "0:1,1:1"),
        ("compare", "--n", "9", "--k", "4", "--j", "3"),
        ("disk-links", "--n", "4", "--t", "3", "pi0"),
        ("disk-links", "--n", "4", "--t", "2", "pi1"),
        ("disk-links", "--n", "4", "--t", "2", "--m", "1", "ses"),
        ("homology", "--complex", str(cpath)),
        ("cone", "--map", str(mpath)),
        ("desusp-check", "--boundary", str(bpath), "--section", str(mpath)),
    ]
    for argv in invocations:
        code, out, err = run(capsys, "--format", "structured", *argv)
        assert code == 0, (argv, err)
        parsed = json.loads(out)
        assert dumps(parsed) == out, argv


def test_text_and_structured_agree_on_scalars(capsys):
    scalar_cases = [
        (("tower", "--n", "9", "--k", "4", "--j", "2", "phi"), "value"),
        (("witt", "--g", "2", "--len", "6"), "rank"),
        (("disk-links", "--n", "4", "--t", "3", "pi0"), "value"),
    ]
    for argv, key in scalar_cases:
        _, text, _ = run(capsys, *argv)
        _, structured, _ = run(capsys, "--format", "structured", *argv)
        assert int(text.strip()) == json.loads(structured)[key]


def test_text_and_structured_agree_on_tables(capsys):
    argv = ("pi-wedge", "--dims", "3,3", "--q-max", "9")
    _, text, _ = run(capsys, *argv)
    _, structured, _ = run(capsys, "--format", "structured", *argv)
    ranks = json.loads(structured)["ranks"]
    parsed = {}
    for line in text.strip().splitlines():
        q, _, r = line.partition(":")
        parsed[q.strip()] = int(r)
    assert parsed == ranks


def test_text_and_structured_agree_on_records(capsys):
    argv = ("compare", "--n", "9", "--k", "4", "--j", "3")
    _, text, _ = run(capsys, *argv)
    values = json.loads(run(capsys, "--format", "structured", *argv)[1])["values"]
    parsed = {}
    for line in text.strip().splitlines():
        name, _, v = line.partition(":")
        parsed[name.strip()] = int(v)
    assert parsed == values

    argv = ("disk-links", "--n", "4", "--t", "2", "--m", "1", "ses")
    _, text, _ = run(capsys, *argv)
    payload = json.loads(run(capsys, "--format", "structured", *argv)[1])
    for key in ("rank_B", "rank_C", "upper_odd", "upper_even", "euler_relation"):
        assert str(payload[key]) in text


def test_homology_subcommand_text(capsys, tmp_path):
    cpath = tmp_path / "rp2.json"
    cpath.write_text(serialize_complex(models.projective_plane()))
    code, out, _ = run(capsys, "homology", "--complex", str(cpath))
    assert code == 0
    assert "H_0 = Z" in out
    assert "H_1 = Z/2" in out


def test_cone_output_feeds_back_as_complex(capsys, tmp_path):
    mpath = tmp_path / "section.json"
    mpath.write_text(serialize_map(models.cylinder_section()))
    code, out, _ = run(capsys, "--format", "structured", "cone", "--map", str(mpath))
    assert code == 0
    cone_path = tmp_path / "cone.json"
    cone_path.write_text(out)
    code, out, _ = run(capsys, "homology", "--complex", str(cone_path))
    assert code == 0
    assert out.splitlines() == ["H_0 = Z", "H_1 = Z"]


def test_desusp_check_verdicts(capsys, tmp_path):
    bpath = tmp_path / "boundary.json"
    bpath.write_text(serialize_map(models.cylinder_pair()[1]))
    good = tmp_path / "good.json"
    good.write_text(serialize_map(models.cylinder_section()))
    bad = tmp_path / "bad.json"
    bad.write_text(serialize_map(models.cylinder_section(2)))
    diag = tmp_path / "diag.json"
    diag.write_text(serialize_map(models.cylinder_diagonal_section()))

    code, out, _ = run(capsys, "desusp-check", "--boundary", str(bpath), "--section", str(good))
    assert code == 0
    assert out.splitlines()[0] == "PASS"

    code, out, _ = run(capsys, "desusp-check", "--boundary", str(bpath), "--section", str(bad))
    assert code == 0  # a computed MISMATCH is a result, not an error
    assert out.splitlines()[0] == "MISMATCH"

    code, out, _ = run(capsys, "desusp-check", "--boundary", str(bpath), "--section", str(diag))
    assert code == 1  # failed preconditions are a typed error
    assert out.splitlines()[0] == "INVALID_SECTIONING"


def test_normal_invariant_subcommand(capsys, tmp_path):
    from towercalc.chains import ChainMap, mapping_cone

    p, bi, s = models.disk_fixture(4)
    thom = mapping_cone(s)
    bpath = tmp_path / "boundary.json"
    bpath.write_text(serialize_map(bi))
    for deg, expected in [(1, "IS_NORMAL_INVARIANT"), (2, "NOT_NORMAL_INVARIANT")]:
        alpha = ChainMap.build(models.sphere(3), thom, {0: [[1]], 3: [[deg]]})
        apath = tmp_path / f"alpha{deg}.json"
        apath.write_text(serialize_map(alpha))
        code, out, _ = run(
            capsys, "normal-invariant",
            "--alpha", str(apath), "--boundary", str(bpath), "--n", "4",
        )
        assert code == 0
        assert out.strip() == expected


def test_malformed_file_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"ranks": {"0": 1}, "boundaries": {"1": [[1]]}}')
    code, _, err = run(capsys, "homology", "--complex", str(bad))
    assert code == 2
    assert "degree" in err
    code, _, err = run(capsys, "homology", "--complex", str(tmp_path / "missing.json"))
    assert code == 2


def test_degree_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("TOWER_CALC_MAX_DEGREE", "8")
    code, _, err = run(capsys, "pi-wedge", "--dims", "3,3", "--q-max", "9")
    assert code == 2
    assert "TOWER_CALC_MAX_DEGREE" in err
    code, out, _ = run(capsys, "pi-wedge", "--dims", "3,3", "--q-max", "8")
    assert code == 0
    monkeypatch.setenv("TOWER_CALC_MAX_DEGREE", "10")
    # ses derives degree 2m+n-1 = 11 > 10
    code, _, err = run(capsys, "disk-links", "--n", "4", "--t", "2", "--m", "4", "ses")
    assert code == 2
    monkeypatch.delenv("TOWER_CALC_MAX_DEGREE")
    code, _, _ = run(capsys, "disk-links", "--n", "4", "--t", "2", "--m", "4", "ses")
    assert code == 0


def test_disk_links_requires_n_at_least_3(capsys):
    code, _, err = run(capsys, "disk-links", "--n", "2", "--t", "1", "pi0")
    assert code == 2
    assert "n >= 3" in err


def test_lyndon_text_output(capsys):
    code, out, _ = run(capsys, "lyndon", "--g", "2", "--max-len", "3")
    assert code == 0
    assert out.splitlines() == ["1: a b", "2: ab", "3: aab abb"]
