import io
import json
import math
import pandas as pd
import pytest
from interferencepy import cli_main
from interferencepy.cli_build import PRESETS, _build_parser, _build_points, _build_settings
from interferencepy.cli_main import EXIT_ACCURACY, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, run
from interferencepy.cli_option import SweepSpec
from interferencepy.cli_process import FUNCTIONAL_COLUMNS, LINK_COLUMNS, SIMULATION_COLUMNS
from interferencepy.cli_verify import VERIFY_COLUMNS, verify_suite
from interferencepy.functionals_option import NetworkConfig
from interferencepy.models_option import FadingModel
from interferencepy.outage_main import joint_success_probability_singular, success_probability_singular
from interferencepy.outage_option import LinkConfig
from interferencepy.utils import AccuracyError

LINK_FLAGS = ["--m", "3", "--theta", "0.5", "--d", "2", "--lambda", "0.01"]

def _frame(text):
    return pd.read_csv(io.StringIO(text))

def _reference_link(intensity=0.01, alpha=4.0):
    network = NetworkConfig(intensity=intensity, fading=FadingModel(kind="nakagami", m=3)).replace(alpha=alpha)
    return LinkConfig(network=network, theta=0.5, d=2.0)

def test_outage_command(capsys):
    """Test the outage subcommand output against the closed form."""
    assert run(["outage", *LINK_FLAGS, "--quiet"]) == EXIT_OK
    out, err = capsys.readouterr()
    assert out.splitlines()[0] == ",".join(LINK_COLUMNS)
    assert "\r" not in out
    df = _frame(out)
    assert len(df) == 1
    expected = success_probability_singular(_reference_link())
    assert df.loc[0, "p_success"] == pytest.approx(expected, rel=1e-8)
    assert df.loc[0, "p_outage"] == pytest.approx(1 - expected, rel=1e-8)
    assert df.loc[0, "quantity"] == "outage"
    assert err == ""

def test_joint_command_jsonl(capsys):
    """Test JSON lines output of the joint subcommand."""
    assert run(["joint", *LINK_FLAGS, "--format", "jsonl", "--quiet"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    row = json.loads(lines[0])
    assert list(row) == LINK_COLUMNS
    assert row["quantity"] == "joint"
    assert row["p_joint"] == pytest.approx(joint_success_probability_singular(_reference_link()), rel=1e-8)

def test_functional_command(capsys):
    """Test E[I exp(-I)] at alpha = 4, lambda = 0.1 through the functional subcommand."""
    assert run(["functional", "--lambda", "0.1", "--p", "1", "--c", "1", "--quiet"]) == EXIT_OK
    df = _frame(capsys.readouterr().out)
    assert list(df.columns) == FUNCTIONAL_COLUMNS
    expected = 0.25 * 0.1 * math.pi ** 2 * math.exp(-0.1 * math.pi ** 2 / 2)
    assert df.loc[0, "value"] == pytest.approx(expected, rel=1e-8)

def test_functional_command_status_message(capsys):
    assert run(["functional", "--lambda", "0.1"]) == EXIT_OK
    assert "✔ Evaluated 1 point(s) for 'functional'." in capsys.readouterr().err

def test_dump_matrices(capsys):
    assert run(["functional", "--p", "2,1", "--dump-matrices"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["p"] == [2, 1]
    assert [entry["l"] for entry in document["classes"]] == [1, 2, 3]
    assert document["classes"][0]["matrices"] == [{"entries": [[2], [1]], "multiplicity": 1}]

def test_sweep_with_zero_intensity(capsys):
    """Test that lambda = 0 is the empty network in a functional sweep."""
    assert run(["sweep", "--quantity", "i-exp-i", "--lambda-sweep", "0:0.2:3", "--quiet"]) == EXIT_OK
    df = _frame(capsys.readouterr().out)
    assert df["lambda"].tolist() == [0.0, 0.1, 0.2]
    assert df.loc[0, "value"] == 0.0
    assert df.loc[1, "value"] > 0

def test_sweep_outage_with_zero_intensity(capsys):
    assert run(["sweep", "--quantity", "outage", "--m", "3", "--theta", "0.5", "--d", "2", "--lambda-sweep", "0:0.02:3", "--quiet"]) == EXIT_OK
    df = _frame(capsys.readouterr().out)
    assert df.loc[0, "p_success"] == 1.0
    assert df["p_success"].is_monotonic_decreasing

def test_sweep_preset(capsys):
    """Test the two-slot preset: one curve per alpha over 30 intensities."""
    assert run(["sweep", "--preset", "fig6", "--quiet"]) == EXIT_OK
    df = _frame(capsys.readouterr().out)
    assert len(df) == 4 * 30
    assert sorted(df["alpha"].unique().tolist()) == [2.5, 3.0, 4.0, 5.0]
    assert set(df["quantity"]) == {"joint-outage"}
    first = df[df["alpha"] == 4.0].iloc[0]
    link = _reference_link(intensity=0.001, alpha=4.0)
    assert first["p_joint"] == pytest.approx(joint_success_probability_singular(link), rel=1e-8)

def test_sweep_output_is_independent_of_worker_count(capsys):
    args = ["sweep", "--preset", "fig2", "--quiet"]
    assert run(args) == EXIT_OK
    serial = capsys.readouterr().out
    assert run(args + ["--n-jobs", "2"]) == EXIT_OK
    assert capsys.readouterr().out == serial

def test_preset_points():
    """Test the grids of the figure presets."""
    settings = _build_settings(_build_parser().parse_args(["sweep", "--preset", "fig5"]), {})
    points = _build_points(settings)
    assert len(points) == 5 * 60
    assert {point["m"] for point in points} == {1, 2, 3, 4, 5}
    assert all(point["d_base"] == 4.0 and point["intensity"] == 0.01 for point in points)
    fig1 = _build_points(dict(settings, preset="fig1"))
    assert fig1[0]["intensity"] == 0.0
    assert fig1[0]["quantity"] == "i-exp-i"
    assert set(PRESETS) == {f"fig{i}" for i in range(1, 8)}

def test_sweep_spec():
    sweep = SweepSpec("alpha", 2.5, 4.0, 4, fixed={"m": 2})
    assert sweep.values() == pytest.approx([2.5, 3.0, 3.5, 4.0])
    points = sweep.points({"alpha": 9.0, "m": 1})
    assert [point["alpha"] for point in points] == sweep.values()
    assert all(point["m"] == 2 for point in points)
    log = SweepSpec("lambda", 0.001, 0.1, 3, scale="log")
    assert log.values() == pytest.approx([0.001, 0.01, 0.1])
    assert log.points({})[1]["intensity"] == pytest.approx(0.01)
    with pytest.raises(ValueError, match="lower end"):
        SweepSpec("lambda", 0.1, 0.1, 3)
    with pytest.raises(ValueError, match="sweep parameter"):
        SweepSpec("m", 1, 3, 3)
    with pytest.raises(ValueError, match="positive lower end"):
        SweepSpec("lambda", 0.0, 0.1, 3, scale="log")

def test_config_file_and_precedence(tmp_path, capsys):
    """Test that a configuration file equals its flags and flags override it."""
    config = tmp_path / "link.env"
    config.write_text("# fig2 link\nm=3\ntheta=0.5\nd=2\nlambda=0.02\ntx_prob=1\n", encoding="utf-8")
    assert run(["outage", "--config", str(config), "--lambda", "0.01", "--quiet"]) == EXIT_OK
    from_config = capsys.readouterr().out
    assert run(["outage", *LINK_FLAGS, "--quiet"]) == EXIT_OK
    assert capsys.readouterr().out == from_config

def test_config_errors(tmp_path, capsys):
    assert run(["outage", "--config", str(tmp_path / "missing.env")]) == EXIT_USAGE
    assert "✖ Configuration file not found" in capsys.readouterr().err
    config = tmp_path / "bad.env"
    config.write_text("colour=blue\n", encoding="utf-8")
    assert run(["outage", "--config", str(config)]) == EXIT_USAGE
    assert "Invalid configuration key: 'colour'" in capsys.readouterr().err

def test_out_file(tmp_path, capsys):
    target = tmp_path / "outage.csv"
    assert run(["outage", *LINK_FLAGS, "--out", str(target), "--quiet"]) == EXIT_OK
    assert capsys.readouterr().out == ""
    data = target.read_bytes()
    assert data.endswith(b"\n")
    assert b"\r" not in data
    assert data.decode("utf-8").splitlines()[0] == ",".join(LINK_COLUMNS)

@pytest.mark.parametrize("argv,message", [
    (["outage", "--m", "3"], "Missing required setting: --lambda"),
    (["outage", *LINK_FLAGS, "--alpha", "2"], "Invalid alpha"),
    (["outage", *LINK_FLAGS, "--fading", "gamma:2"], "Invalid fading model"),
    (["outage", "--lambda", "0.01", "--fading", "rice:2,1"], "Must be 'nakagami' or 'rayleigh'"),
    (["sweep", "--lambda-sweep", "0:1:3"], "Missing required setting: --quantity or --preset"),
    (["sweep", "--quantity", "outage", "--lambda-sweep", "0:1:3", "--alpha-sweep", "3:4:2"], "not both"),
    (["sweep", "--preset", "fig9"], "Invalid preset"),
    (["functional", "--lambda", "0.1", "--abs-tol", "-1"], "Invalid abs_tol")
])
def test_usage_errors(argv, message, capsys):
    assert run(argv) == EXIT_USAGE
    assert message in capsys.readouterr().err

def test_argparse_errors(capsys):
    assert run(["outage", "--unknown"]) == EXIT_USAGE
    assert run([]) == EXIT_USAGE
    assert run(["functional", "--p", "0,0"]) == EXIT_USAGE
    assert run(["--help"]) == EXIT_OK

def test_accuracy_error_exit_code(monkeypatch, capsys):
    def failing(command, settings):
        raise AccuracyError("Integral missed its tolerance", estimate=0.5, error_bound=0.1, function="radial_integral")
    monkeypatch.setattr(cli_main, "_run_command", failing)
    assert run(["outage", *LINK_FLAGS]) == EXIT_ACCURACY
    assert "✖ Integral missed its tolerance" in capsys.readouterr().err

def test_simulate_is_reproducible(capsys):
    """Test byte-identical simulate output for a fixed seed, serial or parallel."""
    args = ["simulate", "--quantity", "outage", *LINK_FLAGS, "--reps", "2000", "--batch-size", "500", "--seed", "3", "--quiet"]
    assert run(args) == EXIT_OK
    first = capsys.readouterr().out
    assert run(args + ["--n-jobs", "2"]) == EXIT_OK
    assert capsys.readouterr().out == first
    df = _frame(first)
    assert list(df.columns) == SIMULATION_COLUMNS
    assert df.loc[0, "statistic"] == "p_success"
    assert df.loc[0, "n"] == 2000
    assert abs(df.loc[0, "estimate"] - success_probability_singular(_reference_link())) <= 4 * df.loc[0, "std_error"]

def test_simulate_functional(capsys):
    assert run(["simulate", "--quantity", "functional", "--lambda", "0.1", "--p", "1", "--reps", "5000", "--tail-compensation", "--quiet"]) == EXIT_OK
    df = _frame(capsys.readouterr().out)
    assert df.loc[0, "statistic"] == "functional"
    assert bool(df.loc[0, "tail_compensation"]) is True
    expected = 0.25 * 0.1 * math.pi ** 2 * math.exp(-0.1 * math.pi ** 2 / 2)
    assert abs(df.loc[0, "estimate"] - expected) <= 4 * df.loc[0, "std_error"]

def test_verify_suite_quick():
    report = verify_suite("quick", seed=7, reps=5000, n_jobs=1, interactive_mode=False)
    assert list(report.columns) == VERIFY_COLUMNS
    assert len(report) == 4
    assert report["passed"].all()
    with pytest.raises(ValueError, match="suite"):
        verify_suite("huge")

def test_verify_exit_codes(monkeypatch, capsys):
    """Test exit 4 and the failure report when a check misses."""
    failed = pd.DataFrame([{"check": "i-exp-i", "analytic": 0.15, "estimate": 0.2, "std_error": 0.001, "z": 50.0, "passed": False}], columns=VERIFY_COLUMNS)
    monkeypatch.setattr(cli_main, "verify_suite", lambda **kwargs: failed)
    assert run(["verify", "--quiet"]) == EXIT_VERIFY_FAILED
    out = capsys.readouterr().out
    assert out.splitlines()[0] == ",".join(VERIFY_COLUMNS)

def test_verify_command(capsys):
    assert run(["verify", "--reps", "5000", "--seed", "7", "--quiet"]) == EXIT_OK
    df = _frame(capsys.readouterr().out)
    assert df["passed"].all()

@pytest.mark.slow
def test_verify_suite_full():
    report = verify_suite("full", seed=11, interactive_mode=False)
    assert len(report) == 2 + 2 * 12
    assert report["passed"].all()
