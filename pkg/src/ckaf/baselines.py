"""Nonlinear non-kernel baselines: a single complex neuron trained by
gradient descent (CNGD) and a one-hidden-layer complex MLP.

Both use the fully-complex tanh activation and adapt every parameter by
steepest descent on the instantaneous squared error, with gradients taken
in the Wirtinger sense (z and conj(z) treated as independent variables).
"""

from __future__ import annotations

import numpy as np

from .core import SeededRng, hermitian_dot

# tanh poles sit at +/- i pi/2; pre-activations are clamped inside this band.
IM_CLAMP = 1.4


def ctanh(z):
    """Fully-complex tanh with |Im z| clamped to IM_CLAMP for pole safety."""
    z = np.asarray(z, dtype=np.complex128)
    zc = z.real + 1j * np.clip(z.imag, -IM_CLAMP, IM_CLAMP)
    out = np.tanh(zc)
    if out.ndim == 0:
        return complex(out)
    return out


def _init_uniform(rng: SeededRng, shape, scale: float) -> np.ndarray:
    n = int(np.prod(shape))
    u = rng.uniforms(2 * n)
    re = scale * (2.0 * u[0::2] - 1.0)
    im = scale * (2.0 * u[1::2] - 1.0)
    return (re + 1j * im).reshape(shape)


class CNGD:
    """Single complex neuron y = ctanh(w^H z + bias), adapted by gradient
    descent on |d - y|^2.

    Weights and bias start as small uniform complex values drawn from the
    given seed (re and im each uniform in [-scale, scale]).
    """

    def __init__(self, length: int, step_size: float, seed: int = 0,
                 init_scale: float = 0.1):
        if length < 1:
            raise ValueError("length must be >= 1")
        self.length = int(length)
        self.step_size = float(step_size)
        rng = SeededRng(seed)
        self.w = _init_uniform(rng, (self.length,), init_scale)
        self.bias = complex(_init_uniform(rng, (1,), init_scale)[0])

    def _check(self, z):
        z = np.asarray(z, dtype=np.complex128)
        if z.ndim != 1 or z.shape[0] != self.length:
            raise ValueError(
                f"expected regressor of length {self.length}, got shape {z.shape}"
            )
        return z

    def predict(self, z) -> complex:
        z = self._check(z)
        return complex(ctanh(hermitian_dot(z, self.w) + self.bias))

    def step(self, z, d: complex) -> complex:
        """One adaptation step; returns the a-priori error.

        With y = ctanh(net) and psi = 1 - y^2 (the tanh derivative at the
        clamped net), the descent directions are

            w    <- w    + mu * conj(e) * psi * z
            bias <- bias + mu * e * conj(psi)

        which equal -mu * dL/d(param)* for L = |e|^2.
        """
        z = self._check(z)
        y = self.predict(z)
        e = complex(d) - y
        psi = 1.0 - y * y
        mu = self.step_size
        self.w = self.w + mu * np.conj(e) * psi * z
        self.bias = self.bias + mu * e * np.conj(psi)
        return e


class ComplexMLP:
    """Complex L-H-1 perceptron with ctanh activations.

    Forward pass: hidden = ctanh(W z + b), out = ctanh(u^H hidden + c).
    With ``linear_output=True`` the final ctanh is dropped. All parameters
    adapt simultaneously from gradients evaluated at the pre-update state.

    Parameters
    ----------
    length : int
        Input dimension L.
    step_size : float
        Adaptation step mu.
    hidden : int, optional
        Hidden-layer width (default 50).
    seed : int, optional
        Seed for the small uniform complex initialization.
    linear_output : bool, optional
        Skip the output nonlinearity.
    """

    def __init__(self, length: int, step_size: float, hidden: int = 50,
                 seed: int = 0, linear_output: bool = False,
                 init_scale: float = 0.1):
        if length < 1 or hidden < 1:
            raise ValueError("length and hidden must be >= 1")
        self.length = int(length)
        self.hidden = int(hidden)
        self.step_size = float(step_size)
        self.linear_output = bool(linear_output)
        rng = SeededRng(seed)
        self.W = _init_uniform(rng, (self.hidden, self.length), init_scale)
        self.b = _init_uniform(rng, (self.hidden,), init_scale)
        self.u = _init_uniform(rng, (self.hidden,), init_scale)
        self.c = complex(_init_uniform(rng, (1,), init_scale)[0])

    def _check(self, z):
        z = np.asarray(z, dtype=np.complex128)
        if z.ndim != 1 or z.shape[0] != self.length:
            raise ValueError(
                f"expected regressor of length {self.length}, got shape {z.shape}"
            )
        return z

    def _forward(self, z):
        a = self.W @ z + self.b
        h = ctanh(a)
        net = hermitian_dot(h, self.u) + self.c
        y = net if self.linear_output else complex(ctanh(net))
        return h, y

    def predict(self, z) -> complex:
        z = self._check(z)
        return self._forward(z)[1]

    def step(self, z, d: complex) -> complex:
        """One adaptation step; returns the a-priori error."""
        z = self._check(z)
        h, y = self._forward(z)
        e = complex(d) - y
        psi_o = 1.0 if self.linear_output else 1.0 - y * y
        psi_h = 1.0 - h * h
        # All deltas use the pre-update parameters.
        delta_u = np.conj(e) * psi_o * h
        delta_c = e * np.conj(psi_o)
        back = e * np.conj(psi_o) * self.u * np.conj(psi_h)
        delta_W = np.outer(back, np.conj(z))
        delta_b = back
        mu = self.step_size
        self.u = self.u + mu * delta_u
        self.c = self.c + mu * delta_c
        self.W = self.W + mu * delta_W
        self.b = self.b + mu * delta_b
        return e
