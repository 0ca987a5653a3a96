"""Experiment harness: flat key=value configs, seeded Monte-Carlo trials,
learning-curve aggregation and CSV output.

Config format (one ``key = value`` per line, ``#`` comments, blank lines
ignored):

    channel = soft | strong | custom
    channel.taps = (-0.9+0.8j), (0.6-0.7j)     # custom only
    channel.nl2 = (0.1+0.15j)                  # custom only, default 0
    channel.nl3 = (0.06+0.05j)
    rho = 0.1
    snr_db = 15            # or inf
    filter_length = 5
    delay = 2
    scale = 0.7
    n_samples = 3000
    n_trials = 20
    base_seed = 1234
    algorithms = ncklms2, nacklms, nclms, naclms

    <name>.type = ncklms2  # defaults to <name>
    <name>.mu = 0.125
    <name>.sigma = 10.0    # kernel algorithms
    <name>.delta1 = 0.1
    <name>.delta2 = 0.2
    <name>.eps = 1e-08
    <name>.normalize = true
    <name>.kernel = gaussian | complex-gaussian | polynomial
    <name>.degree = 3      # polynomial kernel
    <name>.hidden = 50     # mlp
    <name>.linear_output = false

Algorithm types: nclms, naclms (widely linear), ncklms1 (complexified real
kernel), ncklms2 (pure complex kernel), nacklms (augmented pure complex
kernel), cngd, mlp. Column order in curves.csv follows the ``algorithms``
list.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field, replace

import numpy as np

from . import streams
from .channel import (DEFAULT_SCALE, SOFT_CHANNEL, STRONG_CHANNEL,
                      ChannelSpec, make_equalization_data)
from .core import SeededRng
from .kernel_lms import KernelLMS
from .kernels import ComplexGaussian, GaussianRBF, Polynomial

KINDS = ("nclms", "naclms", "ncklms1", "ncklms2", "nacklms", "cngd", "mlp")
_KERNEL_KINDS = ("ncklms1", "ncklms2", "nacklms")
_MODE_BY_KIND = {
    "ncklms1": "complexified-linear",
    "ncklms2": "pure-complex-linear",
    "nacklms": "pure-complex-augmented",
}
_DEFAULT_KERNEL = {
    "ncklms1": "gaussian",
    "ncklms2": "complex-gaussian",
    "nacklms": "complex-gaussian",
}
# Offset folding a trial seed into an independent init stream for the
# neural baselines; far larger than any realistic trial count.
_INIT_SEED_OFFSET = 0x9E3779B9
_MASK64 = 0xFFFFFFFFFFFFFFFF


@dataclass
class AlgorithmConfig:
    name: str
    kind: str
    mu: float
    sigma: float | None = None
    delta1: float = 0.1
    delta2: float = 0.2
    eps: float = 1e-8
    normalize: bool = True
    kernel: str | None = None
    degree: int = 3
    hidden: int = 50
    linear_output: bool = False


@dataclass
class ExperimentConfig:
    channel_name: str
    channel: ChannelSpec
    rho: float
    snr_db: float
    n_samples: int
    n_trials: int
    base_seed: int
    algorithms: list = field(default_factory=list)
    filter_length: int = 5
    delay: int = 2
    scale: float = DEFAULT_SCALE


@dataclass
class LearningCurve:
    """Per-iteration mean squared error across trials (linear scale)."""

    mse: np.ndarray

    @property
    def db(self) -> np.ndarray:
        return 10.0 * np.log10(np.maximum(self.mse, 1e-300))

    def __len__(self):
        return self.mse.shape[0]


@dataclass
class SummaryRow:
    name: str
    steady_state_db: float
    dict_size: float | None = None


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    curves: dict
    summary: list
    trial_digests: list


def make_kernel(algo: AlgorithmConfig):
    name = algo.kernel or _DEFAULT_KERNEL[algo.kind]
    if name in ("gaussian", "rbf"):
        return GaussianRBF(algo.sigma)
    if name == "complex-gaussian":
        return ComplexGaussian(algo.sigma)
    if name == "polynomial":
        return Polynomial(algo.degree)
    raise ValueError(f"algorithm {algo.name}: unknown kernel {name!r}")


def validate_config(config: ExperimentConfig) -> None:
    """Raise ValueError on any inconsistency; runs before any trial."""
    if config.n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    if config.filter_length < 1 or config.delay < 0:
        raise ValueError("filter_length must be >= 1 and delay >= 0")
    if config.n_samples < config.filter_length:
        raise ValueError("n_samples must be at least filter_length")
    if not config.algorithms:
        raise ValueError("no algorithms configured")
    names = [a.name for a in config.algorithms]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate algorithm names in {names}")
    for algo in config.algorithms:
        if algo.kind not in KINDS:
            raise ValueError(
                f"algorithm {algo.name}: invalid type {algo.kind!r} "
                f"(expected one of {', '.join(KINDS)})"
            )
        if algo.mu <= 0:
            raise ValueError(f"algorithm {algo.name}: mu must be positive")
        if algo.kind in _KERNEL_KINDS:
            needs_sigma = (algo.kernel or _DEFAULT_KERNEL[algo.kind]) != "polynomial"
            if needs_sigma and (algo.sigma is None or algo.sigma <= 0):
                raise ValueError(
                    f"algorithm {algo.name}: {algo.kind} needs sigma > 0"
                )
            if algo.delta1 < 0 or algo.delta2 < 0:
                raise ValueError(
                    f"algorithm {algo.name}: novelty thresholds must be >= 0"
                )
            # Instantiating surfaces kernel/mode incompatibilities here
            # rather than mid-run.
            try:
                KernelLMS(make_kernel(algo), _MODE_BY_KIND[algo.kind],
                          algo.mu, eps=algo.eps, delta_dist=algo.delta1,
                          delta_err=algo.delta2, normalize=algo.normalize)
            except (TypeError, ValueError) as exc:
                raise ValueError(f"algorithm {algo.name}: {exc}") from exc
        elif algo.kernel is not None:
            raise ValueError(
                f"algorithm {algo.name}: kernel option is only valid for "
                f"kernel algorithms"
            )


def _stream_digest(dataset) -> str:
    h = hashlib.sha256()
    h.update(dataset.windows.tobytes())
    h.update(dataset.targets.tobytes())
    return h.hexdigest()


def _run_algo(algo: AlgorithmConfig, dataset, trial_seed: int):
    w, t = dataset.windows, dataset.targets
    if algo.kind == "nclms":
        return streams.run_linear(w, t, algo.mu, eps=algo.eps), None
    if algo.kind == "naclms":
        return streams.run_linear(w, t, algo.mu, eps=algo.eps,
                                  widely_linear=True), None
    if algo.kind in _KERNEL_KINDS:
        errors, size = streams.run_kernel(
            w, t, make_kernel(algo), _MODE_BY_KIND[algo.kind], algo.mu,
            eps=algo.eps, delta_dist=algo.delta1, delta_err=algo.delta2,
            normalize=algo.normalize)
        return errors, size
    init_seed = (trial_seed + _INIT_SEED_OFFSET) & _MASK64
    if algo.kind == "cngd":
        return streams.run_cngd(w, t, algo.mu, seed=init_seed), None
    if algo.kind == "mlp":
        return streams.run_mlp(w, t, algo.mu, hidden=algo.hidden,
                               seed=init_seed,
                               linear_output=algo.linear_output), None
    raise ValueError(f"invalid algorithm type {algo.kind!r}")


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Run all trials and aggregate learning curves.

    Trial tau uses the seeded stream base_seed + tau; every algorithm in
    the experiment consumes the identical per-trial dataset (paired
    comparison), which is asserted by re-hashing the stream before each
    algorithm runs.
    """
    validate_config(config)
    n = config.n_samples
    acc = {a.name: np.zeros(n) for a in config.algorithms}
    sizes = {a.name: [] for a in config.algorithms}
    digests = []
    for tau in range(config.n_trials):
        rng = SeededRng(config.base_seed + tau)
        dataset = make_equalization_data(
            config.channel, config.rho, config.snr_db, n,
            config.filter_length, config.delay, rng, config.scale)
        digest = _stream_digest(dataset)
        digests.append(digest)
        for algo in config.algorithms:
            if _stream_digest(dataset) != digest:
                raise RuntimeError(
                    "per-trial data stream changed between algorithms"
                )
            errors, size = _run_algo(algo, dataset,
                                     config.base_seed + tau)
            acc[algo.name] += errors.real**2 + errors.imag**2
            if size is not None:
                sizes[algo.name].append(size)
    curves = {}
    summary = []
    for algo in config.algorithms:
        curve = LearningCurve(acc[algo.name] / config.n_trials)
        curves[algo.name] = curve
        dict_size = (float(np.mean(sizes[algo.name]))
                     if sizes[algo.name] else None)
        summary.append(SummaryRow(name=algo.name,
                                  steady_state_db=steady_state_db(curve),
                                  dict_size=dict_size))
    return ExperimentResult(config=config, curves=curves, summary=summary,
                            trial_digests=digests)


def steady_state_db(curve: LearningCurve, window: int | None = None) -> float:
    """Mean MSE over the final window (default: last 10 percent), in dB."""
    n = len(curve)
    if window is None:
        window = max(1, n // 10)
    if not 1 <= window <= n:
        raise ValueError(f"window {window} outside curve bounds (1..{n})")
    tail = float(np.mean(curve.mse[n - window:]))
    return 10.0 * float(np.log10(max(tail, 1e-300)))


def emit_csv(curves: dict, path) -> None:
    """Write learning curves in dB: header ``iteration,<name1>,...``, one
    row per iteration, 6 decimal places, columns in dict (= config) order."""
    names = list(curves)
    if not names:
        raise ValueError("no curves to write")
    lengths = {len(curves[k]) for k in names}
    if len(lengths) != 1:
        raise ValueError("curves have differing lengths")
    n = lengths.pop()
    cols = [curves[k].db for k in names]
    with open(path, "w", newline="") as f:
        f.write("iteration," + ",".join(names) + "\n")
        for i in range(n):
            row = ",".join(f"{col[i]:.6f}" for col in cols)
            f.write(f"{i + 1},{row}\n")


def emit_summary_csv(summary: list, path) -> None:
    with open(path, "w", newline="") as f:
        f.write("algorithm,steady_state_mse_db,final_dict_size\n")
        for row in summary:
            size = "" if row.dict_size is None else f"{row.dict_size:.1f}"
            f.write(f"{row.name},{row.steady_state_db:.6f},{size}\n")


# ---------------------------------------------------------------------------
# Flat key=value config parsing / serialization

_EXPERIMENT_KEYS = ("channel", "rho", "snr_db", "filter_length", "delay",
                    "scale", "n_samples", "n_trials", "base_seed",
                    "algorithms")
_CHANNEL_KEYS = ("taps", "nl2", "nl3")
_ALGO_KEYS = ("type", "mu", "sigma", "delta1", "delta2", "eps", "normalize",
              "kernel", "degree", "hidden", "linear_output")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_-]*$")


def _parse_bool(key, val):
    low = val.lower()
    if low == "true":
        return True
    if low == "false":
        return False
    raise ValueError(f"{key}: expected true or false, got {val!r}")


def _parse_complex(key, val):
    try:
        return complex(val.replace(" ", ""))
    except ValueError as exc:
        raise ValueError(f"{key}: bad complex literal {val!r}") from exc


def _split_list(val):
    return [p for p in re.split(r"[,\s]+", val.strip()) if p]


def parse_config(text: str) -> ExperimentConfig:
    """Parse the flat key=value grammar into an ExperimentConfig."""
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key = value")
        key, val = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ValueError(f"line {lineno}: empty key")
        if key in pairs:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = val

    def take(key, default=None):
        return pairs.pop(key, default)

    channel_name = take("channel", "soft").lower()
    if channel_name == "soft":
        spec = SOFT_CHANNEL
    elif channel_name == "strong":
        spec = STRONG_CHANNEL
    elif channel_name == "custom":
        taps_val = take("channel.taps")
        if taps_val is None:
            raise ValueError("channel = custom requires channel.taps")
        taps = tuple(_parse_complex("channel.taps", p)
                     for p in _split_list(taps_val))
        nl2 = _parse_complex("channel.nl2", take("channel.nl2", "0"))
        nl3 = _parse_complex("channel.nl3", take("channel.nl3", "0"))
        spec = ChannelSpec(taps=taps, nl2=nl2, nl3=nl3)
    else:
        raise ValueError(f"channel: expected soft, strong or custom, "
                         f"got {channel_name!r}")

    algo_names = _split_list(take("algorithms", ""))
    if not algo_names:
        raise ValueError("algorithms: at least one name required")
    for name in algo_names:
        if not _NAME_RE.match(name):
            raise ValueError(f"algorithms: invalid name {name!r}")

    snr_raw = take("snr_db", "15")
    snr_db = float("inf") if snr_raw.lower() in ("inf", "+inf") else float(snr_raw)

    try:
        config = ExperimentConfig(
            channel_name=channel_name,
            channel=spec,
            rho=float(take("rho", "0.1")),
            snr_db=snr_db,
            filter_length=int(take("filter_length", "5")),
            delay=int(take("delay", "2")),
            scale=float(take("scale", repr(DEFAULT_SCALE))),
            n_samples=int(take("n_samples", "3000")),
            n_trials=int(take("n_trials", "20")),
            base_seed=int(take("base_seed", "0")),
            algorithms=[],
        )
    except ValueError as exc:
        raise ValueError(f"bad numeric value in config: {exc}") from exc

    for name in algo_names:
        opts = {}
        for key in list(pairs):
            if key.startswith(name + "."):
                opts[key[len(name) + 1:]] = pairs.pop(key)
        for opt in opts:
            if opt not in _ALGO_KEYS:
                raise ValueError(f"{name}.{opt}: unknown algorithm option")
        kind = opts.get("type", name).lower()
        if "mu" not in opts:
            raise ValueError(f"{name}.mu is required")
        algo = AlgorithmConfig(name=name, kind=kind, mu=float(opts["mu"]))
        if "sigma" in opts:
            algo.sigma = float(opts["sigma"])
        if "delta1" in opts:
            algo.delta1 = float(opts["delta1"])
        if "delta2" in opts:
            algo.delta2 = float(opts["delta2"])
        if "eps" in opts:
            algo.eps = float(opts["eps"])
        if "normalize" in opts:
            algo.normalize = _parse_bool(f"{name}.normalize",
                                         opts["normalize"])
        if "kernel" in opts:
            algo.kernel = opts["kernel"].lower()
        if "degree" in opts:
            algo.degree = int(opts["degree"])
        if "hidden" in opts:
            algo.hidden = int(opts["hidden"])
        if "linear_output" in opts:
            algo.linear_output = _parse_bool(f"{name}.linear_output",
                                             opts["linear_output"])
        config.algorithms.append(algo)

    if pairs:
        bad = ", ".join(sorted(pairs))
        raise ValueError(f"unknown config keys: {bad}")
    validate_config(config)
    return config


def load_config(path) -> ExperimentConfig:
    with open(path, "r") as f:
        return parse_config(f.read())


def serialize_config(config: ExperimentConfig) -> str:
    """Round-trippable dump of a config in the flat key=value grammar."""
    lines = [f"channel = {config.channel_name}"]
    if config.channel_name == "custom":
        taps = ", ".join(repr(t) for t in config.channel.taps)
        lines.append(f"channel.taps = {taps}")
        lines.append(f"channel.nl2 = {config.channel.nl2!r}")
        lines.append(f"channel.nl3 = {config.channel.nl3!r}")
    lines += [
        f"rho = {config.rho!r}",
        f"snr_db = {'inf' if np.isinf(config.snr_db) else repr(config.snr_db)}",
        f"filter_length = {config.filter_length}",
        f"delay = {config.delay}",
        f"scale = {config.scale!r}",
        f"n_samples = {config.n_samples}",
        f"n_trials = {config.n_trials}",
        f"base_seed = {config.base_seed}",
        "algorithms = " + ", ".join(a.name for a in config.algorithms),
        "",
    ]
    for a in config.algorithms:
        lines.append(f"{a.name}.type = {a.kind}")
        lines.append(f"{a.name}.mu = {a.mu!r}")
        if a.kind in _KERNEL_KINDS:
            if a.sigma is not None:
                lines.append(f"{a.name}.sigma = {a.sigma!r}")
            lines.append(f"{a.name}.delta1 = {a.delta1!r}")
            lines.append(f"{a.name}.delta2 = {a.delta2!r}")
            lines.append(f"{a.name}.eps = {a.eps!r}")
            lines.append(f"{a.name}.normalize = "
                         f"{'true' if a.normalize else 'false'}")
            if a.kernel is not None:
                lines.append(f"{a.name}.kernel = {a.kernel}")
                if a.kernel == "polynomial":
                    lines.append(f"{a.name}.degree = {a.degree}")
        if a.kind == "mlp":
            lines.append(f"{a.name}.hidden = {a.hidden}")
            lines.append(f"{a.name}.linear_output = "
                         f"{'true' if a.linear_output else 'false'}")
        lines.append("")
    return "\n".join(lines)


def override_config(config: ExperimentConfig, seed=None, trials=None,
                    samples=None) -> ExperimentConfig:
    """CLI-style overrides; returns a new config."""
    updates = {}
    if seed is not None:
        updates["base_seed"] = int(seed)
    if trials is not None:
        updates["n_trials"] = int(trials)
    if samples is not None:
        updates["n_samples"] = int(samples)
    return replace(config, **updates) if updates else config
