import json
from fractions import Fraction

import pytest

import stirlingkit.cli as cli
from stirlingkit.families import FamilySpec, family_value


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_value_examples(capsys):
    code, out, _ = run(capsys, "value", "--family", "classic", "--n", "4", "--k", "2")
    assert code == 0 and out == "7\n"
    code, out, _ = run(
        capsys,
        *"value --family partial --n 2 --k 1 --ell 1 --gamma 0 --alpha 1 --beta 2".split(),
    )
    assert code == 0 and out == "1\n"
    code, out, _ = run(
        capsys,
        *"value --family generalized --n 3 --k 0 --alpha 1 --beta 2 --gamma 3".split(),
    )
    assert code == 0 and out == "6\n"


def test_value_methods(capsys):
    args = "value --family degenerate --lambda 1/2 --n 5 --k 3".split()
    expected = None
    for method in ("egf", "recurrence", "explicit", "oracle"):
        code, out, _ = run(capsys, *args, "--method", method)
        assert code == 0
        expected = expected or out
        assert out == expected


def test_value_check_agreement(capsys):
    code, out, _ = run(
        capsys, *"value --family classic --n 6 --k 3 --check".split()
    )
    assert code == 0 and out == "90\n"


def test_value_check_disagreement(capsys, monkeypatch):
    real = cli.family_value

    def rigged(spec, n, k, method="egf"):
        value = real(spec, n, k, method)
        return value + 1 if method == "recurrence" else value

    monkeypatch.setattr(cli, "family_value", rigged)
    code, _, err = run(capsys, *"value --family classic --n 6 --k 3 --check".split())
    assert code == 1
    assert "disagreement" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, *"value --family classic --n 4".split())
    assert code == 2 and "error" in err
    code, _, err = run(capsys, *"value --family classic --n 4 --k 2 --ell 3".split())
    assert code == 2  # classic takes no ell
    code, _, err = run(
        capsys, *"value --family generalized --n 1 --k 1 --alpha x --beta 1 --gamma 0".split()
    )
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["value", "--family", "not-a-family", "--n", "1", "--k", "1"])
    assert exc.value.code == 2


def test_oracle_cap_usage_error(capsys):
    code, _, err = run(
        capsys, *"value --family classic --n 20 --k 2 --method oracle".split()
    )
    assert code == 2 and "capped" in err


def test_table_csv(capsys):
    code, out, _ = run(capsys, *"table --family classic --nmax 3".split())
    assert code == 0
    assert "\r" not in out  # plain LF rows
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,value"
    assert "3,2,3" in lines and "3,3,1" in lines
    assert lines[1] == "0,0,1"


def test_table_restricted_diagonal(capsys):
    code, out, _ = run(capsys, *"table --family restricted --ell 1 --nmax 3".split())
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    for n, k, value in rows:
        expected = "1" if n == k else "0"
        assert value == expected


def test_table_json_round_trip(capsys):
    code, out, _ = run(
        capsys,
        *"table --family gen_restricted --alpha 1 --beta 3 --gamma 2 --ell 2 --nmax 6 --format json".split(),
    )
    assert code == 0
    spec = FamilySpec("gen_restricted", alpha=1, beta=3, gamma=2, ell=2)
    payload = json.loads(out)
    assert len(payload) == 7 * 8 // 2
    for row in payload:
        assert Fraction(row["value"]) == family_value(spec, row["n"], row["k"])


def test_table_out_file(capsys, tmp_path):
    target = tmp_path / "triangle.csv"
    code, out, _ = run(
        capsys, *("table --family classic --nmax 2 --out " + str(target)).split()
    )
    assert code == 0 and out == ""
    assert target.read_text().startswith("n,k,value")


def test_series_output(capsys):
    code, out, _ = run(capsys, *"series --family classic --k 2 --order 4".split())
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "0 0 0"
    assert lines[2] == "2 1/2 1"
    assert lines[4] == "4 7/24 7"


def test_series_beta_zero_rejected(capsys):
    code, _, err = run(
        capsys,
        *"series --family generalized --alpha 1 --beta 0 --gamma 2 --k 2 --order 4".split(),
    )
    assert code == 2 and "beta" in err


def test_verify_thm3(capsys):
    code, out, _ = run(capsys, *"verify --suite thm3 --nmax 6".split())
    assert code == 0
    assert "alternating-special-set-removal" in out


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, *"verify --suite all --nmax 5".split())
    assert code == 0
    assert "audit OK" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, *"verify --suite derivative --nmax 5 --format json".split())
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    forms = {(f["form"], f["verdict"]) for f in payload["findings"]}
    assert ("literal", "FAIL") in forms and ("corrected", "PASS") in forms


def test_verify_unknown_suite_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_asympt_table(capsys):
    code, out, _ = run(
        capsys,
        *"asympt --n 4 --k 10,20,40 --m 3 --gamma 1 --alpha 1 --beta 2 --ell 2".split(),
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert lines[1].split()[0] == "10"


def test_asympt_zero_offset(capsys):
    code, out, _ = run(
        capsys, *"asympt --n 15 --k 15 --m 0 --gamma 1 --alpha 1 --beta 2 --ell 2".split()
    )
    assert code == 0
    row = out.strip().splitlines()[1].split()
    assert row[2] == "1" and row[3] == "1" and row[4] == "0"


def test_asympt_literal_flags(capsys):
    code, out, _ = run(
        capsys,
        *"asympt --n 4 --k 20 --m 3 --mode literal --gamma 1 --alpha 1 --beta 2 --ell 2".split(),
    )
    assert code == 0
    assert "exact value is zero" in out


def test_asympt_json(capsys):
    code, out, _ = run(
        capsys,
        *"asympt --n 4 --k 20,40 --m 3 --gamma 1 --alpha 1 --beta 2 --ell 2 --format json".split(),
    )
    assert code == 0
    payload = json.loads(out)
    assert [row["k"] for row in payload] == [20, 40]
    assert all(row["rel_error"] == "0" for row in payload)


def test_asympt_usage(capsys):
    code, _, err = run(capsys, *"asympt --n 4 --m 3".split())
    assert code == 2
    code, _, err = run(
        capsys, *"asympt --n 4 --k 1x --m 3 --gamma 1 --alpha 1 --beta 2 --ell 2".split()
    )
    assert code == 2


@pytest.mark.parametrize(
    "script",
    [
        "triangles_and_families.py",
        "generating_functions.py",
        "weighted_partition_oracle.py",
        "identity_audit_report.py",
        "asymptotic_sweep.py",
    ],
)
def test_demo_scripts_run(script):
    import pathlib
    import subprocess
    import sys

    path = pathlib.Path(__file__).resolve().parent.parent / "demos" / script
    proc = subprocess.run(
        [sys.executable, str(path)], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()
