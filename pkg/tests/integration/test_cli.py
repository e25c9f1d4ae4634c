"""End-to-end tests of the wildcount command line"""

import importlib
import json

import pytest

from core.cli.main import main
from core.config import WildcountConfig

pytestmark = pytest.mark.integration


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_lastjump_of_heisenberg_datum(capsys, data_dir):
    code, out, _ = run(capsys, "lastjump", str(data_dir / "h1_f9_datum.json"))
    assert code == 0
    assert out == "lastjump,oracle\n4/3,4/3\n"


def test_lastjump_json(capsys, data_dir):
    code, out, _ = run(capsys, "lastjump", str(data_dir / "h1_f9_datum.json"), "--format", "json", "--method", "general")
    assert code == 0
    assert json.loads(out) == {"lastjump": "4/3", "oracle": "4/3"}


def test_lastjump_of_zero_datum(capsys, data_dir):
    code, out, _ = run(capsys, "lastjump", str(data_dir / "zero_datum.json"))
    assert code == 0
    assert out == "lastjump,oracle\n0/1,0/1\n"


def test_malformed_datum_is_a_user_error(capsys, data_dir):
    code, out, err = run(capsys, "lastjump", str(data_dir / "malformed_datum.json"))
    assert code == 2
    assert out == ""
    assert "line 3" in err


def test_oracle_disagreement_exits_one(capsys, data_dir, monkeypatch):
    command = importlib.import_module("core.cli.commands.lastjump")
    monkeypatch.setattr(command, "lastjump_oracle", lambda datum: 2)
    code, out, err = run(capsys, "lastjump", str(data_dir / "h1_f9_datum.json"))
    assert code == 1
    assert out == "lastjump,oracle\n4/3,2/1\n"
    assert "Invariant violation" in err


def test_distribution(capsys):
    code, out, _ = run(capsys, "distribution", "--algebra", "abelian:1", "--q", "3", "--vmax", "2")
    assert code == 0
    assert out == "jump_num,jump_den,count\n0,1,1\n1,1,2\n"


def test_distribution_from_config(capsys, data_dir):
    code, out, _ = run(capsys, "distribution", "--config", str(data_dir / "run_config.yaml"))
    assert code == 0
    assert out == "jump_num,jump_den,count\n0,1,1\n1,1,2\n"


def test_distribution_json(capsys):
    code, out, _ = run(capsys, "distribution", "--algebra", "heisenberg:1", "--p", "3", "--vmax", "2",
                       "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"jump_num": 0, "jump_den": 1, "count": 1},
        {"jump_num": 1, "jump_den": 1, "count": 26},
    ]


def test_akm_table(capsys):
    code, out, _ = run(capsys, "heisenberg-table", "akm", "--k", "1", "--q", "3", "--m", "2")
    assert code == 0
    assert out == "k,m,q,a_km,method\n1,0,3,9,brute\n1,1,3,9,brute\n1,2,3,9,brute\n"


def test_akm_stable_table_starts_at_k(capsys):
    code, out, _ = run(capsys, "heisenberg-table", "akm", "--q", "9", "--m", "1", "--method", "stable")
    assert code == 0
    assert out == "k,m,q,a_km,method\n1,1,9,33,stable\n"


def test_isotropic_table(capsys):
    code, out, _ = run(capsys, "heisenberg-table", "isotropic", "--p", "3", "--k", "2")
    assert code == 0
    assert out == "p,k,brute_force,formula\n3,2,40,40\n"


def test_local_table(capsys):
    code, out, _ = run(capsys, "heisenberg-table", "local", "--q", "9", "--m", "1")
    assert code == 0
    assert out == "k,m,q,count\n1,0,9,729\n1,1,9,297\n"


def test_global_series(capsys):
    code, out, _ = run(capsys, "global-series", "--algebra", "abelian:1", "--q", "3", "--nmax", "1")
    assert code == 0
    assert out == "N_num,N_den,a_N\n0,1,1\n1,1,8\n"


def test_global_series_direct(capsys):
    code, out, _ = run(capsys, "global-series", "--algebra", "abelian:1", "--q", "3", "--nmax", "1",
                       "--method", "direct")
    assert code == 0
    assert out == "N_num,N_den,a_N\n0,1,1\n1,1,8\n"


def test_heisenberg_asymptotics(capsys):
    code, out, _ = run(capsys, "asymptotics", "--heisenberg", "3,1")
    assert code == 0
    report = json.loads(out)
    assert (report["A"], report["B"], report["M"]) == ("3/1", 5, "4/1")
    assert report["hypothesis_ok"] is True


def test_main_theorem_asymptotics(capsys):
    code, out, _ = run(capsys, "asymptotics", "--algebra", "heisenberg:1", "--p", "5")
    assert code == 0
    report = json.loads(out)
    assert (report["A"], report["B"], report["M"]) == ("10/3", 1, "6/5")


def test_bad_heisenberg_argument(capsys):
    code, _, err = run(capsys, "asymptotics", "--heisenberg", "3")
    assert code == 2
    assert "p,k" in err


def test_two_algebra_sources(capsys):
    code, out, err = run(capsys, "asymptotics", "--algebra", "abelian:1", "--heisenberg", "3,1")
    assert code == 2
    assert out == ""
    assert "exactly one" in err


def test_unknown_algebra(capsys):
    code, _, err = run(capsys, "distribution", "--algebra", "sl2:1")
    assert code == 2
    assert "neither a built-in" in err


def test_scale_guard_is_reported(capsys, monkeypatch):
    monkeypatch.setenv(WildcountConfig.SCALE_GUARD_ENV, "10")
    code, out, err = run(capsys, "distribution", "--algebra", "abelian:2", "--q", "3", "--vmax", "3")
    assert code == 2
    assert out == ""
    assert "WILDCOUNT_SCALE_GUARD" in err


def test_bad_scale_guard_value(capsys, monkeypatch):
    monkeypatch.setenv(WildcountConfig.SCALE_GUARD_ENV, "huge")
    code, _, _ = run(capsys, "distribution", "--algebra", "abelian:2", "--q", "3", "--vmax", "3")
    assert code == 2


def test_no_command(capsys):
    code, out, _ = run(capsys)
    assert code == 2
    assert out == ""


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert WildcountConfig.VERSION in out


def test_usage_error(capsys):
    code, _, _ = run(capsys, "heisenberg-table", "nonsense")
    assert code == 2


def test_doctor(capsys):
    code, out, err = run(capsys, "doctor")
    assert code == 0
    assert out == ""
    assert "healthy" in err


@pytest.mark.parametrize("argv", [
    ["lastjump", "{data}/h1_f9_datum.json"],
    ["distribution", "--algebra", "abelian:2", "--q", "3", "--vmax", "4"],
    ["distribution", "--algebra", "heisenberg:1", "--q", "3", "--vmax", "3"],
    ["heisenberg-table", "akm", "--k", "1", "--q", "9", "--m", "2"],
    ["heisenberg-table", "isotropic", "--p", "3", "--k", "2"],
    ["heisenberg-table", "local", "--k", "1", "--q", "9", "--m", "1"],
    ["global-series", "--algebra", "abelian:1", "--q", "3", "--nmax", "3"],
    ["global-series", "--algebra", "abelian:1", "--q", "3", "--nmax", "2", "--method", "direct"],
    ["asymptotics", "--heisenberg", "3,1"],
    ["asymptotics", "--algebra", "heisenberg:1", "--p", "5"],
])
def test_output_does_not_depend_on_jobs(capsys, data_dir, argv):
    argv = [arg.replace("{data}", str(data_dir)) for arg in argv]
    serial = run(capsys, *argv, "--jobs", "1")
    parallel = run(capsys, *argv, "--jobs", "8")
    assert serial[0] == parallel[0] == 0
    assert serial[1] == parallel[1]
    assert serial[1]


def test_bad_jobs_flag(capsys):
    code, _, err = run(capsys, "global-series", "--algebra", "abelian:1", "--q", "3", "--jobs", "0")
    assert code == 2
    assert "--jobs must be positive" in err
