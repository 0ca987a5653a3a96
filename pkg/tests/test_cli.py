"""CLI subcommand tests (exit codes, outputs, overrides)."""

import numpy as np
import pytest

from ckaf.cli import CASES, SCALES, cli_main, fig1_config, fig2_config
from ckaf.harness import load_config, parse_config

CFG = """
channel = soft
rho = 0.1
snr_db = 15
n_samples = 200
n_trials = 2
base_seed = 7
algorithms = nclms, naclms
nclms.mu = 0.0625
naclms.mu = 0.0625
"""


@pytest.fixture
def cfg_file(tmp_path):
    p = tmp_path / "exp.cfg"
    p.write_text(CFG)
    return p


class TestPresets:
    def test_fig1_parameters(self):
        cfg = fig1_config()
        assert cfg.channel_name == "soft"
        assert cfg.rho == pytest.approx(0.1)
        assert cfg.snr_db == 15.0
        assert (cfg.filter_length, cfg.delay) == (5, 2)
        by_name = {a.name: a for a in cfg.algorithms}
        assert list(by_name) == ["ncklms2", "nacklms", "nclms", "naclms"]
        assert by_name["ncklms2"].mu == 0.125
        assert by_name["ncklms2"].sigma == 10.0
        assert by_name["nacklms"].mu == 0.125
        assert by_name["nacklms"].sigma == 10.0
        assert by_name["nclms"].mu == 0.0625
        assert by_name["naclms"].mu == 0.0625

    def test_fig2_parameters(self):
        cfg = fig2_config()
        assert cfg.channel_name == "strong"
        by_name = {a.name: a for a in cfg.algorithms}
        assert by_name["ncklms2"].sigma == 15.0
        assert by_name["nacklms"].sigma == 15.0
        assert by_name["mlp"].mu == 0.0003
        assert by_name["cngd"].mu == 0.0005

    def test_scales(self):
        assert SCALES == {"fast": (20, 3000), "full": (100, 5000)}
        fast = fig1_config(scale="fast")
        assert (fast.n_trials, fast.n_samples) == (20, 3000)
        full = fig1_config(scale="full")
        assert (full.n_trials, full.n_samples) == (100, 5000)

    def test_cases(self):
        assert CASES["circular"] == pytest.approx(np.sqrt(0.5))
        assert CASES["noncircular"] == 0.1
        assert fig1_config(case="circular").rho == pytest.approx(np.sqrt(0.5))


class TestShippedPresets:
    @pytest.mark.parametrize("name,builder", [("fig1", fig1_config),
                                              ("fig2", fig2_config)])
    def test_preset_file_matches_builder(self, name, builder):
        import importlib.resources as res
        text = (res.files("ckaf") / "presets" / f"{name}.cfg").read_text()
        assert parse_config(text) == builder()

    @pytest.mark.parametrize("name", ["fig1", "fig2"])
    def test_preset_file_validates(self, name, tmp_path, capsys):
        import importlib.resources as res
        text = (res.files("ckaf") / "presets" / f"{name}.cfg").read_text()
        p = tmp_path / f"{name}.cfg"
        p.write_text(text)
        assert cli_main(["validate", "--config", str(p)]) == 0
        assert "config ok" in capsys.readouterr().out


class TestRunCommand:
    def test_writes_all_outputs(self, cfg_file, tmp_path, capsys):
        out = tmp_path / "out"
        rc = cli_main(["run", "--config", str(cfg_file), "--out", str(out)])
        assert rc == 0
        assert (out / "curves.csv").exists()
        assert (out / "summary.csv").exists()
        assert (out / "config.txt").exists()
        printed = capsys.readouterr().out
        assert "steady-state" in printed

    def test_config_txt_round_trips(self, cfg_file, tmp_path):
        out = tmp_path / "out"
        cli_main(["run", "--config", str(cfg_file), "--out", str(out)])
        effective = load_config(out / "config.txt")
        assert effective == parse_config(CFG)

    def test_overrides_reach_the_run(self, cfg_file, tmp_path):
        out = tmp_path / "out"
        rc = cli_main(["run", "--config", str(cfg_file), "--out", str(out),
                       "--trials", "1", "--samples", "120", "--seed", "99"])
        assert rc == 0
        lines = (out / "curves.csv").read_text().strip().split("\n")
        assert len(lines) == 121
        effective = load_config(out / "config.txt")
        assert (effective.base_seed, effective.n_trials,
                effective.n_samples) == (99, 1, 120)

    def test_missing_config_file_exits_2(self, tmp_path, capsys):
        rc = cli_main(["run", "--config", str(tmp_path / "nope.cfg"),
                       "--out", str(tmp_path)])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_config_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.cfg"
        bad.write_text("algorithms = nclms\n")  # missing mu
        rc = cli_main(["run", "--config", str(bad), "--out", str(tmp_path)])
        assert rc == 2
        assert "mu is required" in capsys.readouterr().err


class TestValidateCommand:
    def test_valid_config(self, cfg_file, capsys):
        rc = cli_main(["validate", "--config", str(cfg_file)])
        assert rc == 0
        assert "config ok" in capsys.readouterr().out

    def test_invalid_config(self, tmp_path, capsys):
        bad = tmp_path / "bad.cfg"
        bad.write_text("algorithms = nclms\nnclms.mu = -1\n")
        rc = cli_main(["validate", "--config", str(bad)])
        assert rc == 2
        assert "mu must be positive" in capsys.readouterr().err

    def test_validate_runs_nothing(self, cfg_file, tmp_path):
        cli_main(["validate", "--config", str(cfg_file)])
        assert not (tmp_path / "curves.csv").exists()


class TestFigureCommands:
    def test_fig1_tiny_run_writes_outputs(self, tmp_path):
        out = tmp_path / "fig1"
        rc = cli_main(["paper-fig1", "--scale", "fast", "--out", str(out),
                       "--trials", "1", "--samples", "200"])
        assert rc == 0
        header = (out / "curves.csv").read_text().split("\n", 1)[0]
        assert header == "iteration,ncklms2,nacklms,nclms,naclms"

    def test_fig2_tiny_run_writes_outputs(self, tmp_path):
        out = tmp_path / "fig2"
        rc = cli_main(["paper-fig2", "--out", str(out),
                       "--trials", "1", "--samples", "150"])
        assert rc == 0
        header = (out / "curves.csv").read_text().split("\n", 1)[0]
        assert header == "iteration,ncklms2,nacklms,mlp,cngd"

    def test_fig1_deterministic_across_runs(self, tmp_path):
        a = tmp_path / "a"
        b = tmp_path / "b"
        for out in (a, b):
            rc = cli_main(["paper-fig1", "--out", str(out),
                           "--trials", "2", "--samples", "250"])
            assert rc == 0
        assert (a / "curves.csv").read_bytes() == (b / "curves.csv").read_bytes()
        assert (a / "summary.csv").read_bytes() == (b / "summary.csv").read_bytes()

    def test_unknown_scale_rejected_by_argparse(self):
        with pytest.raises(SystemExit):
            cli_main(["paper-fig1", "--scale", "huge"])

    def test_unknown_case_rejected_by_argparse(self):
        with pytest.raises(SystemExit):
            cli_main(["paper-fig1", "--case", "elliptic"])

    def test_missing_subcommand_rejected(self):
        with pytest.raises(SystemExit):
            cli_main([])
