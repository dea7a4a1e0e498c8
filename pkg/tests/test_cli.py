import json
import subprocess
import sys

import pytest

from analytical_engine.cli import main
from analytical_engine.programs import Coefficients, solve_closed_form

from conftest import AE_DIR

X_AE = str(AE_DIR / "bab_l1_x.ae")
XY_AE = str(AE_DIR / "bab_l1_xy.ae")
PAPER_INIT = "v1=1,v2=2,v3=-8,v4=1,v5=-1,v6=1"


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_run_table(capsys):
    code, out, _ = cli(capsys, "run", X_AE, "--init", PAPER_INIT)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 + 7 + 1
    assert lines[-1] == "v3'' = 2"


def test_init_flag_overrides_file(capsys):
    code, out, _ = cli(capsys, "run", X_AE, "--init", "v1=1,v2=1,v3=-3,v4=1,v5=-1,v6=1")
    assert code == 0 and out.splitlines()[-1] == "v3'' = 1"


def test_run_json(capsys):
    code, out, _ = cli(capsys, "run", X_AE, "--init", PAPER_INIT, "--format", "json")
    assert code == 0 and len(json.loads(out)["rows"]) == 7


def test_run_csv(capsys):
    code, out, _ = cli(capsys, "run", XY_AE, "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 14


def test_run_division_by_zero(capsys):
    code, out, err = cli(capsys, "run", X_AE, "--init", "v1=1,v2=1,v3=5,v4=1,v5=1,v6=7")
    assert code == 1 and out == ""
    assert "step 7" in err and "division by zero" in err


def test_run_truncate_mode(capsys):
    init = "v1=1,v2=2,v3=-7,v4=1,v5=-1,v6=1"
    assert cli(capsys, "run", X_AE, "--init", init)[0] == 1
    code, out, _ = cli(capsys, "run", X_AE, "--init", init, "--division", "truncate")
    assert code == 0 and out.splitlines()[-1] == "v3'' = 1"


def test_run_narrow_machine_overflows(capsys):
    code, _, err = cli(capsys, "run", X_AE, "--init", "v1=9,v2=9,v3=9,v4=8,v5=9,v6=9", "--digits", "1")
    assert code == 1 and "step 1" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "missing.ae"],
        ["run", X_AE, "--init", "x1=3"],
        ["run", X_AE, "--init", "v1=1.5"],
        ["run", X_AE, "--init", "v100=1"],
        ["run", X_AE, "--format", "xml"],
        ["run", X_AE, "--digits", "0"],
        ["frobnicate"],
        ["solve2x2", "--a", "1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(argv))
    assert info.value.code == 2


def test_parse_error_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.ae"
    bad.write_text("OP ×\nSUPPLY 1 v1\nOP ?\n", encoding="utf-8")
    for cmd in ("run", "asm"):
        code, _, err = cli(capsys, cmd, str(bad))
        assert code == 2 and "line 3" in err


def test_asm_census(capsys):
    code, out, _ = cli(capsys, "asm", X_AE)
    deck = json.loads(out)
    assert code == 0 and (len(deck["processor"]), len(deck["memory"])) == (7, 21)
    code, out, _ = cli(capsys, "cards", XY_AE)
    deck = json.loads(out)
    assert code == 0 and (len(deck["processor"]), len(deck["memory"])) == (10, 33)


def test_asm_text_is_canonical(capsys, tmp_path):
    _, text, _ = cli(capsys, "asm", XY_AE, "--text")
    again = tmp_path / "again.ae"
    again.write_text(text, encoding="utf-8")
    assert cli(capsys, "asm", str(again), "--text")[1] == text
    assert cli(capsys, "asm", str(again))[1] == cli(capsys, "asm", XY_AE)[1]


def test_solve2x2(capsys):
    code, out, _ = cli(capsys, "solve2x2", "--a", "1", "--b", "2", "--c", "-8", "--ap", "1", "--bp", "-1", "--cp", "1")
    assert code == 0 and out == "x = 2, y = 3\n"


def test_solve2x2_oracle(capsys):
    args = ["--a", "1", "--b", "1", "--c", "-3", "--ap", "1", "--bp", "-1", "--cp", "1", "--oracle"]
    code, out, _ = cli(capsys, "solve2x2", *args)
    assert code == 0 and out.splitlines() == ["x = 1, y = 2", "oracle: x = 1, y = 2", "MATCH"]


def test_solve2x2_singular(capsys):
    code, _, err = cli(capsys, "solve2x2", "--a", "1", "--b", "1", "--c", "0", "--ap", "1", "--bp", "1", "--cp", "5")
    assert code == 1 and "SingularSystem" in err and "step 7" in err


def test_solve2x2_degenerate_b(capsys):
    code, _, err = cli(capsys, "solve2x2", "--a", "1", "--b", "0", "--c", "-2", "--ap", "1", "--bp", "1", "--cp", "3")
    assert code == 1 and "DegenerateB" in err and "step 13" in err


def test_solve2x2_inexact_names_step(capsys):
    co = next(
        co
        for c in range(-9, 10)
        for c_p in range(-9, 10)
        for co in [Coefficients(1, 2, c, 3, 2, c_p)]
        if solve_closed_form(co).x.denominator == 1 and solve_closed_form(co).y.denominator != 1
    )
    args = [str(v) for pair in zip(["--a", "--b", "--c", "--ap", "--bp", "--cp"], co.as_tuple()) for v in pair]
    code, _, err = cli(capsys, "solve2x2", *args)
    assert code == 1 and "InexactDivision" in err and "step 13" in err
    code, _, err = cli(capsys, "solve2x2", "--a", "1", "--b", "2", "--c", "-7", "--ap", "1", "--bp", "-1", "--cp", "1")
    assert code == 1 and "InexactDivision" in err and "step 7" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "analytical_engine", "solve2x2",
         "--a", "1", "--b", "2", "--c", "-8", "--ap", "1", "--bp", "-1", "--cp", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "x = 2, y = 3\n"
