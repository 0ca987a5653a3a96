"""Data generation for the nonlinear channel-equalization benchmark.

Input model: s(n) = scale * (sqrt(1 - rho^2) X(n) + i rho Y(n)) with X, Y
independent standard normals; the signal is circular for rho = sqrt(2)/2
and strongly non-circular as rho approaches 0 or 1.

A channel applies an FIR filter t(n) = sum_k taps[k] s(n-k) followed by the
memoryless distortion q = t + nl2 t^2 + nl3 t^3, then additive circular
Gaussian noise at a target SNR produces the received signal r.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SeededRng

DEFAULT_SCALE = 0.70


@dataclass(frozen=True)
class ChannelSpec:
    """FIR taps plus quadratic/cubic distortion coefficients."""

    taps: tuple
    nl2: complex
    nl3: complex

    def __post_init__(self):
        if len(self.taps) < 1:
            raise ValueError("channel needs at least one tap")
        object.__setattr__(self, "taps", tuple(complex(t) for t in self.taps))
        object.__setattr__(self, "nl2", complex(self.nl2))
        object.__setattr__(self, "nl3", complex(self.nl3))

    def apply(self, s):
        """Return (t, q): linear-stage and distorted outputs, same length
        as s. The FIR state starts at zero (s(k) = 0 for k < 0)."""
        s = np.asarray(s, dtype=np.complex128)
        if s.ndim != 1:
            raise ValueError("s must be 1-d")
        taps = np.asarray(self.taps, dtype=np.complex128)
        t = np.convolve(s, taps)[: s.shape[0]]
        q = t + self.nl2 * t * t + self.nl3 * t * t * t
        return t, q


SOFT_CHANNEL = ChannelSpec(
    taps=(-0.9 + 0.8j, 0.6 - 0.7j),
    nl2=0.1 + 0.15j,
    nl3=0.06 + 0.05j,
)

# The published fifth tap reads "(-0.1i - 0.2i)", which collapses to a
# single imaginary value; the default below assumes a dropped real part.
# Pass a custom ChannelSpec to use a different variant.
STRONG_CHANNEL = ChannelSpec(
    taps=(-0.9 + 0.8j, 0.6 - 0.7j, -0.4 + 0.3j, 0.3 - 0.2j, -0.1 - 0.2j),
    nl2=0.2 + 0.25j,
    nl3=0.08 + 0.09j,
)


def soft_channel(s):
    return SOFT_CHANNEL.apply(s)


def strong_channel(s):
    return STRONG_CHANNEL.apply(s)


def gen_input(rho: float, n_samples: int, rng: SeededRng,
              scale: float = DEFAULT_SCALE) -> np.ndarray:
    """Draw n_samples of the rho-parameterized complex source."""
    if not 0.0 <= rho <= 1.0:
        raise ValueError("rho must be in [0, 1]")
    g = rng.standard_normal(2 * n_samples)
    x = g[0::2]
    y = g[1::2]
    return scale * (np.sqrt(1.0 - rho * rho) * x + 1j * rho * y)


def add_noise(q, snr_db: float, rng: SeededRng) -> np.ndarray:
    """Add circular complex Gaussian noise so the result has the given SNR
    relative to the mean power of q. snr_db=inf returns q unchanged."""
    q = np.asarray(q, dtype=np.complex128)
    if q.size == 0:
        raise ValueError("empty signal")
    if np.isinf(snr_db):
        return q.copy()
    power = float(np.mean(q.real**2 + q.imag**2))
    var = power / (10.0 ** (snr_db / 10.0))
    g = rng.standard_normal(2 * q.shape[0])
    noise = np.sqrt(var / 2.0) * (g[0::2] + 1j * g[1::2])
    return q + noise


def window_matrix(r, length: int, delay: int, n_pairs: int) -> np.ndarray:
    """Row n holds (r(n+delay), r(n+delay-1), ..., r(n+delay-length+1)),
    newest first, with r(k)=0 for k < 0. Requires len(r) >= n_pairs+delay."""
    r = np.asarray(r, dtype=np.complex128)
    if r.shape[0] < n_pairs + delay:
        raise ValueError("received sequence too short for requested pairs")
    padded = np.concatenate([np.zeros(length - 1, dtype=np.complex128), r])
    idx = (np.arange(n_pairs)[:, None] + (delay + length - 1)
           - np.arange(length)[None, :])
    return padded[idx]


@dataclass(frozen=True)
class EqualizationDataset:
    """Aligned (window, target) pairs for one trial."""

    windows: np.ndarray  # (n, L) complex
    targets: np.ndarray  # (n,) complex
    length: int
    delay: int


def make_equalization_data(channel: ChannelSpec, rho: float, snr_db: float,
                           n_samples: int, length: int, delay: int,
                           rng: SeededRng,
                           scale: float = DEFAULT_SCALE) -> EqualizationDataset:
    """Generate one trial's dataset.

    The source runs for n_samples + delay steps so every window is filled
    from actual channel output; only the cold-start left edge is
    zero-padded. Stream order: input normals first, then noise normals.
    """
    s = gen_input(rho, n_samples + delay, rng, scale)
    _, q = channel.apply(s)
    r = add_noise(q, snr_db, rng)
    windows = window_matrix(r, length, delay, n_samples)
    targets = s[:n_samples].copy()
    return EqualizationDataset(windows=windows, targets=targets,
                               length=length, delay=delay)
