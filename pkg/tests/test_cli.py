import json

from pvsft.cli import canonical_json, main


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_orbits_pretty(capsys):
    code, out, _ = run_cli(capsys, "orbits", "--rep", "sym2-3", "--q", "5")
    assert code == 0
    for size in ("124", "1860", "1240", "12400"):
        assert size in out


def test_orbits_verify_census(capsys):
    code, out, _ = run_cli(capsys, "orbits", "--rep", "sym2-2", "--q", "3",
                           "--verify-census")
    assert code == 0
    assert "census OK" in out


def test_orbits_bad_prime(capsys):
    code, _, err = run_cli(capsys, "orbits", "--rep", "sym3-2", "--q", "3")
    assert code != 0
    assert "bad prime" in err


def test_counts_mask(capsys):
    code, out, _ = run_cli(capsys, "counts", "--rep", "2sym2-2", "--q", "3",
                           "--subspace", "001|111", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"] == [1, 14, 12, 6, 12, 36, 0]


def test_ft_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "ft", "--rep", "sym2-2", "--q", "3",
                           "--method", "oracle", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix_scaled"] == [["1", "8", "12", "6"],
                                        ["1", "-1", "3", "-3"],
                                        ["1", "2", "-3", "0"],
                                        ["1", "-4", "0", "3"]]
    assert canonical_json(payload) == out       # byte-identical reserialization


def test_oracle_alias(capsys):
    code1, out1, _ = run_cli(capsys, "oracle", "--rep", "sym2-2", "--q", "3",
                             "--format", "json")
    code2, out2, _ = run_cli(capsys, "ft", "--rep", "sym2-2", "--q", "3",
                             "--method", "oracle", "--format", "json")
    assert code1 == code2 == 0 and out1 == out2


def test_ft_methods_agree(capsys):
    outputs = []
    for method in ("table", "subspace", "oracle"):
        code, out, _ = run_cli(capsys, "ft", "--rep", "sym2-3", "--q", "3",
                               "--method", method, "--format", "json")
        assert code == 0
        outputs.append(json.loads(out)["matrix_scaled"])
    assert outputs[0] == outputs[1] == outputs[2]


def test_symbolic_latex(capsys):
    code, out, _ = run_cli(capsys, "symbolic", "--rep", "sym3-2",
                           "--format", "latex")
    assert code == 0
    assert out.count("\\begin{bmatrix}") == 2    # both congruence classes


def test_verify_battery(capsys):
    code, out, _ = run_cli(capsys, "verify", "--rep", "sym2-2", "--q", "3")
    assert code == 0
    assert "matrix-vs-paper" in out and "FAIL" not in out


def test_verify_quartic_skips_slow(capsys):
    code, out, _ = run_cli(capsys, "verify", "--rep", "2sym2-3", "--q", "5")
    assert code == 0
    assert "skipped (needs --slow)" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    code, out, _ = run_cli(capsys, "ft", "--rep", "sym2-2", "--q", "3",
                           "--format", "json", "--out", str(path))
    assert code == 0
    assert json.loads(path.read_text())["q"] == 3
