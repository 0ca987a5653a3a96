"""Positive-definite kernels on real and complex vectors.

Two real kernels (Gaussian RBF, polynomial), one complex kernel (complex
Gaussian), and the complexification bridge that evaluates a real kernel on
the stacked real/imaginary representation of complex data.
"""

from __future__ import annotations

import numpy as np


def _as_real_vec(x, name):
    x = np.asarray(x)
    if np.iscomplexobj(x):
        raise TypeError(f"{name} must be a real vector")
    x = x.astype(np.float64, copy=False)
    if x.ndim != 1:
        raise ValueError(f"{name} must be 1-d")
    return x


def _check_pair(x, y):
    if x.shape[0] != y.shape[0]:
        raise ValueError(f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}")


def real_gaussian(x, y, sigma: float) -> float:
    """Gaussian RBF exp(-sum_k (x_k - y_k)^2 / sigma^2).

    The exponent divides by sigma^2 only; there is no factor 2.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    x = _as_real_vec(x, "x")
    y = _as_real_vec(y, "y")
    _check_pair(x, y)
    diff = x - y
    return float(np.exp(-np.dot(diff, diff) / (sigma * sigma)))


class GaussianRBF:
    """Real Gaussian RBF kernel with width sigma."""

    complex_input = False

    def __init__(self, sigma: float):
        if sigma <= 0:
            raise ValueError("sigma must be positive")
        self.sigma = float(sigma)

    def __call__(self, x, y) -> float:
        return real_gaussian(x, y, self.sigma)

    def __repr__(self):
        return f"GaussianRBF(sigma={self.sigma})"


class Polynomial:
    """Real polynomial kernel (1 + x.y)^degree."""

    complex_input = False

    def __init__(self, degree: int):
        if int(degree) != degree or degree < 1:
            raise ValueError("degree must be a positive integer")
        self.degree = int(degree)

    def __call__(self, x, y) -> float:
        x = _as_real_vec(x, "x")
        y = _as_real_vec(y, "y")
        _check_pair(x, y)
        return float((1.0 + np.dot(x, y)) ** self.degree)

    def __repr__(self):
        return f"Polynomial(degree={self.degree})"


def complex_gaussian(z, w, sigma: float) -> complex:
    """Complex Gaussian kernel exp(-sum_k (z_k - conj(w_k))^2 / sigma^2).

    The square is the complex square and exp the complex exponential, so the
    result is complex in general and kappa(z, z) need not equal 1.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    z = np.asarray(z, dtype=np.complex128)
    w = np.asarray(w, dtype=np.complex128)
    if z.ndim != 1 or w.ndim != 1:
        raise ValueError("inputs must be 1-d")
    _check_pair(z, w)
    diff = z - np.conj(w)
    return complex(np.exp(-np.sum(diff * diff) / (sigma * sigma)))


class ComplexGaussian:
    """Complex Gaussian kernel with width sigma."""

    complex_input = True

    def __init__(self, sigma: float):
        if sigma <= 0:
            raise ValueError("sigma must be positive")
        self.sigma = float(sigma)

    def __call__(self, z, w) -> complex:
        return complex_gaussian(z, w, self.sigma)

    def __repr__(self):
        return f"ComplexGaussian(sigma={self.sigma})"


def stack_real(z) -> np.ndarray:
    """Concatenate (Re z, Im z) into one real vector, real part first."""
    z = np.asarray(z, dtype=np.complex128)
    if z.ndim != 1:
        raise ValueError("z must be 1-d")
    return np.concatenate([z.real, z.imag])


def complexified_eval(kernel, z, c) -> float:
    """Evaluate a real kernel on the stacked representations of z and c."""
    if getattr(kernel, "complex_input", False):
        raise TypeError("complexified evaluation requires a real kernel")
    return float(kernel(stack_real(z), stack_real(c)))
