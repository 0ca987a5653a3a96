"""Command-line entry point.

Subcommands:

    run        --config FILE --out DIR   run an experiment from a config
    paper-fig1 [--scale fast|full] [--case circular|noncircular] --out DIR
    paper-fig2 [--scale fast|full] [--case circular|noncircular] --out DIR
    validate   --config FILE             check a config without running

``--seed``, ``--trials`` and ``--samples`` override the corresponding
config values everywhere. Each run writes curves.csv, summary.csv and the
effective config as config.txt into the output directory.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from pathlib import Path

from .harness import (AlgorithmConfig, ExperimentConfig, SOFT_CHANNEL,
                      STRONG_CHANNEL, emit_csv, emit_summary_csv,
                      load_config, override_config, run_experiment,
                      serialize_config, validate_config)

SCALES = {"fast": (20, 3000), "full": (100, 5000)}
CASES = {"circular": math.sqrt(0.5), "noncircular": 0.1}
DEFAULT_BASE_SEED = 1234


def _scaled(config: ExperimentConfig, scale: str) -> ExperimentConfig:
    trials, samples = SCALES[scale]
    config.n_trials = trials
    config.n_samples = samples
    return config


def fig1_config(case: str = "noncircular",
                scale: str = "fast") -> ExperimentConfig:
    """Soft-channel preset: kernel pair at mu=1/8, sigma=10 vs the linear
    pair at mu=1/16."""
    config = ExperimentConfig(
        channel_name="soft", channel=SOFT_CHANNEL, rho=CASES[case],
        snr_db=15.0, n_samples=0, n_trials=0, base_seed=DEFAULT_BASE_SEED,
        algorithms=[
            AlgorithmConfig(name="ncklms2", kind="ncklms2", mu=0.125,
                            sigma=10.0),
            AlgorithmConfig(name="nacklms", kind="nacklms", mu=0.125,
                            sigma=10.0),
            AlgorithmConfig(name="nclms", kind="nclms", mu=0.0625),
            AlgorithmConfig(name="naclms", kind="naclms", mu=0.0625),
        ])
    return _scaled(config, scale)


def fig2_config(case: str = "noncircular",
                scale: str = "fast") -> ExperimentConfig:
    """Strong-channel preset: kernel pair at mu=1/8, sigma=15 vs MLP and
    CNGD."""
    config = ExperimentConfig(
        channel_name="strong", channel=STRONG_CHANNEL, rho=CASES[case],
        snr_db=15.0, n_samples=0, n_trials=0, base_seed=DEFAULT_BASE_SEED,
        algorithms=[
            AlgorithmConfig(name="ncklms2", kind="ncklms2", mu=0.125,
                            sigma=15.0),
            AlgorithmConfig(name="nacklms", kind="nacklms", mu=0.125,
                            sigma=15.0),
            AlgorithmConfig(name="mlp", kind="mlp", mu=0.0003),
            AlgorithmConfig(name="cngd", kind="cngd", mu=0.0005),
        ])
    return _scaled(config, scale)


def _write_outputs(config: ExperimentConfig, out_dir: str,
                   quiet: bool = False) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()
    result = run_experiment(config)
    elapsed = time.perf_counter() - started
    emit_csv(result.curves, out / "curves.csv")
    emit_summary_csv(result.summary, out / "summary.csv")
    (out / "config.txt").write_text(serialize_config(config))
    if not quiet:
        print(f"wrote {out / 'curves.csv'} and {out / 'summary.csv'} "
              f"({config.n_trials} trials x {config.n_samples} samples, "
              f"{elapsed:.1f}s)")
        for row in result.summary:
            size = "" if row.dict_size is None else f"  dict={row.dict_size:.1f}"
            print(f"  {row.name}: steady-state {row.steady_state_db:.2f} dB{size}")


def _add_overrides(sub):
    sub.add_argument("--seed", type=int, default=None,
                     help="override base seed")
    sub.add_argument("--trials", type=int, default=None,
                     help="override trial count")
    sub.add_argument("--samples", type=int, default=None,
                     help="override samples per trial")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ckaf",
        description="Complex kernel adaptive filter benchmark harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run an experiment from a config file")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--out", required=True)
    _add_overrides(p_run)

    for name, help_text in (("paper-fig1", "soft-channel preset"),
                            ("paper-fig2", "strong-channel preset")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--scale", choices=sorted(SCALES), default="fast")
        p.add_argument("--case", choices=sorted(CASES), default="noncircular")
        p.add_argument("--out", default=".")
        _add_overrides(p)

    p_val = sub.add_parser("validate", help="check a config without running")
    p_val.add_argument("--config", required=True)
    return parser


def cli_main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            config = load_config(args.config)
            config = override_config(config, args.seed, args.trials,
                                     args.samples)
            validate_config(config)
            _write_outputs(config, args.out)
        elif args.command in ("paper-fig1", "paper-fig2"):
            build = fig1_config if args.command == "paper-fig1" else fig2_config
            config = build(case=args.case, scale=args.scale)
            config = override_config(config, args.seed, args.trials,
                                     args.samples)
            _write_outputs(config, args.out)
        elif args.command == "validate":
            load_config(args.config)
            print("config ok")
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> int:
    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
