import io
import json
import subprocess
import sys

import pytest

from superdual.cli import EXIT_CAP, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, run, suite_configs


def call(argv, env=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_sergeev_passes():
    code, out, _ = call(["verify", "sergeev", "--m", "1", "--n", "2", "--d", "2"])
    assert code == EXIT_PASS
    assert out.startswith("PASS sergeev")


def test_cyclotomic_reports_x_squared():
    code, out, _ = call(["verify", "cyclotomic", "--m", "1", "--n", "2", "--d", "2",
                         "--c", "0,0", "--format", "json"])
    assert code == EXIT_PASS
    rep = json.loads(out)
    assert any("x^2" in (c["detail"] or "") for c in rep["checks"])


def test_vust_non_regular_partitions():
    code, _, _ = call(["verify", "vust", "--m", "1", "--n", "2", "--d", "2", "--partitions", "1|1,1"])
    assert code == EXIT_PASS


def test_partitions_alone_fix_m_and_n():
    code, _, _ = call(["verify", "vust", "--d", "2", "--partitions", "1|1,1"])
    assert code == EXIT_PASS


@pytest.mark.parametrize("argv", [
    ["verify", "sergeev", "--m", "1", "--n", "2"],
    ["verify", "sergeev", "--m", "3", "--n", "2", "--d", "2"],
    ["verify", "cyclotomic", "--m", "1", "--n", "2", "--d", "2", "--c", "1,x"],
    ["verify", "cyclotomic", "--m", "1", "--n", "2", "--d", "2", "--c", "1,2,3"],
    ["verify", "vust", "--m", "2", "--n", "2", "--d", "2", "--partitions", "1|1,1"],
    ["verify", "nonsense"],
    ["bogus"],
    [],
])
def test_usage_errors(argv, capsys):
    code, _, _ = call(argv)
    assert code == EXIT_USAGE


def test_size_cap_exit():
    code, _, err = call(["verify", "sergeev", "--m", "2", "--n", "3", "--d", "3"])
    assert code == EXIT_CAP
    assert "125" in err
    code, _, _ = call(["verify", "sergeev", "--m", "1", "--n", "1", "--d", "2", "--size-cap", "3"])
    assert code == EXIT_CAP


def test_failed_check_exit(monkeypatch):
    from superdual import duality
    orig = duality.verify_sergeev

    def broken(*a, **kw):
        rep = orig(*a, **kw)
        rep.check("forced failure", False, "injected")
        return rep

    monkeypatch.setattr(duality, "verify_sergeev", broken)
    code, out, _ = call(["verify", "sergeev", "--m", "1", "--n", "1", "--d", "2"])
    assert code == EXIT_FAIL
    assert "FAILED forced failure" in out


def test_json_round_trip_and_schema():
    code, out, _ = call(["verify", "hecke-relations", "--m", "1", "--n", "2", "--d", "2",
                         "--c", "1/2,-3", "--format", "json"])
    assert code == EXIT_PASS
    rep = json.loads(out)
    assert list(rep) == ["theorem", "params", "lhs_dim", "rhs_dim", "equal", "checks", "elapsed_ms"]
    assert json.loads(json.dumps(rep)) == rep


def test_negative_character_values():
    code, out, _ = call(["verify", "cyclotomic", "--m", "1", "--n", "2", "--d", "2",
                         "--c", "-1/3,5/2", "--format", "json"])
    assert code == EXIT_PASS
    assert json.loads(out)["params"]["c"] == "-1/3,5/2"


def test_byte_identical_without_timing():
    argv = ["verify", "theta-sigma", "--seed", "7", "--format", "json", "--no-timing"]
    a = call(argv)[1]
    b = call(argv)[1]
    assert a == b


def test_env_override(monkeypatch):
    monkeypatch.setenv("SUPERDUAL_FORMAT", "json")
    monkeypatch.setenv("SUPERDUAL_M", "1")
    monkeypatch.setenv("SUPERDUAL_N", "1")
    code, out, _ = call(["verify", "sergeev", "--d", "2"])
    assert code == EXIT_PASS
    assert json.loads(out)["params"]["m"] == 1
    # command line wins
    code, out, _ = call(["verify", "sergeev", "--d", "2", "--format", "text"])
    assert out.startswith("PASS")


def test_env_bad_integer(monkeypatch):
    monkeypatch.setenv("SUPERDUAL_SIZE_CAP", "lots")
    code, _, err = call(["verify", "sergeev", "--m", "1", "--n", "1", "--d", "2"])
    assert code == EXIT_USAGE and "SIZE_CAP" in err


def test_wchi_commands():
    assert call(["wchi", "hilbert", "--m", "1", "--n", "1", "--max-kazhdan", "4"])[0] == EXIT_PASS
    assert call(["wchi", "discover", "--m", "1", "--n", "2", "--max-kazhdan", "4"])[0] == EXIT_PASS


def test_suite_grid_covers_every_command():
    cfgs = suite_configs({"size_cap": 64, "max_kazhdan": 6, "timing": False, "seed": 0,
                          "format": "json", "workers": 1, "partitions": None})
    names = {(c["group"], c["what"]) for c in cfgs}
    for what in ("sergeev", "vust", "trunc-poly", "hecke-relations", "cyclotomic", "hecke-dc", "filtration"):
        assert ("verify", what) in names
    assert ("wchi", "hilbert") in names


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "superdual", "verify", "sergeev",
                          "--m", "1", "--n", "1", "--d", "2"], capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
