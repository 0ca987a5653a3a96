"""Shared primitives: Hermitian inner product, tap-delay window, seeded RNG."""

from __future__ import annotations

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_MUL1 = 0xBF58476D1CE4E5B9
_MUL2 = 0x94D049BB133111EB
_TWO53 = float(2**53)


def hermitian_dot(a, b) -> complex:
    """Inner product sum_k conj(b_k) * a_k.

    Linear in ``a``, conjugate-linear in ``b``. Both arguments must be
    1-d and of equal length.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.ndim != 1 or b.ndim != 1:
        raise ValueError("hermitian_dot expects 1-d vectors")
    if a.shape[0] != b.shape[0]:
        raise ValueError(
            f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}"
        )
    return complex(np.vdot(b, a))


class RegressorWindow:
    """Fixed-length tap-delay line over a complex stream, newest sample first.

    Starts zero-filled, so early windows reflect a cold start.
    """

    def __init__(self, length: int):
        if length < 1:
            raise ValueError("window length must be >= 1")
        self.length = length
        self._buf = np.zeros(length, dtype=np.complex128)

    def push(self, sample: complex) -> None:
        self._buf[1:] = self._buf[:-1]
        self._buf[0] = sample

    def values(self) -> np.ndarray:
        """Window contents, index 0 = most recent sample."""
        return self._buf.copy()


def _mix64(x):
    # SplitMix64 output mixing; operates on uint64 arrays (wraps mod 2^64).
    x = (x ^ (x >> np.uint64(30))) * np.uint64(_MUL1)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(_MUL2)
    return x ^ (x >> np.uint64(31))


def _mix64_scalar(x: int) -> int:
    x = ((x ^ (x >> 30)) * _MUL1) & _MASK64
    x = ((x ^ (x >> 27)) * _MUL2) & _MASK64
    return x ^ (x >> 31)


class SeededRng:
    """Deterministic random stream: SplitMix64 uniforms, Box-Muller normals.

    The i-th uniform (counting from 1) is ``u_i = ((mix(seed + i*GAMMA) >> 11)
    + 1) * 2**-53`` in (0, 1], where ``mix`` is the SplitMix64 finalizer
    (xor-shift 30, mul 0xBF58476D1CE4E5B9, xor-shift 27, mul
    0x94D049BB133111EB, xor-shift 31; all arithmetic mod 2**64) and GAMMA is
    0x9E3779B97F4A7C15. Normals come in Box-Muller pairs from consecutive
    uniforms (u_odd, u_even):

        z0 = sqrt(-2 ln u_odd) * cos(2 pi u_even)
        z1 = sqrt(-2 ln u_odd) * sin(2 pi u_even)

    The counter-based construction makes the stream reproducible from the
    seed alone, in any language, and draw-size independent: consuming n
    variates in chunks yields the same stream as one call.
    """

    def __init__(self, seed: int):
        self._seed = int(seed) & _MASK64
        self._count = 0  # uniforms consumed so far
        self._spare = None  # second half of a partially consumed normal pair

    def uniforms(self, n: int) -> np.ndarray:
        """Next n uniforms in (0, 1]."""
        if n < 0:
            raise ValueError("n must be >= 0")
        idx = np.arange(self._count + 1, self._count + n + 1, dtype=np.uint64)
        words = _mix64(np.uint64(self._seed) + idx * np.uint64(_GAMMA))
        self._count += n
        return ((words >> np.uint64(11)).astype(np.float64) + 1.0) / _TWO53

    def standard_normal(self, n: int) -> np.ndarray:
        """Next n standard normal variates."""
        if n < 0:
            raise ValueError("n must be >= 0")
        out = np.empty(n, dtype=np.float64)
        pos = 0
        if self._spare is not None and n > 0:
            out[0] = self._spare
            self._spare = None
            pos = 1
        need = n - pos
        if need == 0:
            return out
        pairs = (need + 1) // 2
        u = self.uniforms(2 * pairs)
        r = np.sqrt(-2.0 * np.log(u[0::2]))
        theta = (2.0 * np.pi) * u[1::2]
        z0 = r * np.cos(theta)
        z1 = r * np.sin(theta)
        inter = np.empty(2 * pairs, dtype=np.float64)
        inter[0::2] = z0
        inter[1::2] = z1
        out[pos:] = inter[:need]
        if need % 2 == 1:
            self._spare = inter[need]
        return out

    def gaussian_pair(self) -> tuple[float, float]:
        """Next two normals from the stream."""
        z = self.standard_normal(2)
        return float(z[0]), float(z[1])
