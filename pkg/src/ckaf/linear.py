"""Normalized complex LMS filters, linear and widely linear.

The linear filter estimates d(n) as w^H z(n). The widely-linear variant adds
a conjugate branch, w^H z(n) + v^H conj(z(n)), which makes the estimator
R-linear (but not C-linear) and lets it exploit non-circular input
statistics. Also holds the decomposition from stacked real-channel operator
blocks to the (w, v) pair, used to cross-check the equivalence of the two
formulations.
"""

from __future__ import annotations

import numpy as np

from .core import hermitian_dot


class ComplexNLMS:
    """Sample-wise normalized complex LMS, optionally widely linear.

    Parameters
    ----------
    length : int
        Number of filter taps.
    step_size : float
        Adaptation step mu.
    eps : float, optional
        Regularizer added to the normalization energy.
    widely_linear : bool, optional
        If True, maintain a conjugate-branch weight vector v and predict
        w^H z + v^H conj(z). The normalization energy doubles because the
        augmented regressor (z, conj(z)) carries twice the power of z.

    Notes
    -----
    Weights start at zero. ``update`` returns the a-priori error
    e = d - prediction; the Wirtinger gradient of |e|^2 gives the update
    directions e*.z for w and e*.conj(z) for v.
    """

    def __init__(self, length: int, step_size: float, eps: float = 1e-8,
                 widely_linear: bool = False):
        if length < 1:
            raise ValueError("length must be >= 1")
        if step_size <= 0:
            raise ValueError("step_size must be positive")
        self.length = int(length)
        self.step_size = float(step_size)
        self.eps = float(eps)
        self.widely_linear = bool(widely_linear)
        self.w = np.zeros(self.length, dtype=np.complex128)
        self.v = np.zeros(self.length, dtype=np.complex128) if widely_linear else None

    def _check(self, z):
        z = np.asarray(z, dtype=np.complex128)
        if z.ndim != 1 or z.shape[0] != self.length:
            raise ValueError(
                f"expected regressor of length {self.length}, got shape {z.shape}"
            )
        return z

    def predict(self, z) -> complex:
        z = self._check(z)
        out = hermitian_dot(z, self.w)
        if self.v is not None:
            out += hermitian_dot(np.conj(z), self.v)
        return out

    def update(self, z, d: complex) -> complex:
        """One adaptation step; returns the a-priori error."""
        z = self._check(z)
        e = complex(d) - self.predict(z)
        energy = float(np.vdot(z, z).real)
        if self.v is not None:
            energy = 2.0 * energy
        mu_eff = self.step_size / (self.eps + energy)
        g = mu_eff * np.conj(e)
        self.w += g * z
        if self.v is not None:
            self.v += g * np.conj(z)
        return e


def decompose_real_blocks(u11, u12, u21, u22):
    """Convert four real operator blocks into widely-linear weights (w, v).

    The blocks define a map on stacked real channels,
    T(x, y) = (u11.x + u12.y) + i(u21.x + u22.y); the returned pair
    satisfies T(x, y) = hermitian_dot(z, w) + hermitian_dot(conj(z), v)
    for z = x + iy, via

        w = (u11 + u22)/2 + i (u12 - u21)/2
        v = (u11 - u22)/2 - i (u21 + u12)/2
    """
    blocks = []
    for name, u in (("u11", u11), ("u12", u12), ("u21", u21), ("u22", u22)):
        u = np.asarray(u)
        if np.iscomplexobj(u):
            raise TypeError(f"{name} must be real")
        u = u.astype(np.float64, copy=False)
        if u.ndim != 1:
            raise ValueError(f"{name} must be 1-d")
        blocks.append(u)
    u11, u12, u21, u22 = blocks
    if not (u11.shape == u12.shape == u21.shape == u22.shape):
        raise ValueError("block lengths differ")
    w = (u11 + u22) / 2.0 + 1j * (u12 - u21) / 2.0
    v = (u11 - u22) / 2.0 - 1j * (u21 + u12) / 2.0
    return w, v
