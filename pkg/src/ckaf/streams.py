"""Whole-stream runners for every algorithm, with backend dispatch.

The numpy path drives the per-sample reference classes in a Python loop;
the numba path calls the jitted twins in _accel. Kernel filters with a
non-Gaussian kernel always use the numpy path (the jitted loops cover the
Gaussian kernels used by the benchmark presets).
"""

from __future__ import annotations

import numpy as np

from .backend import backend_choice
from .baselines import CNGD, ComplexMLP
from .kernel_lms import KernelLMS
from .kernels import ComplexGaussian, GaussianRBF
from .linear import ComplexNLMS


def _prepared(windows, targets):
    windows = np.ascontiguousarray(windows, dtype=np.complex128)
    targets = np.ascontiguousarray(targets, dtype=np.complex128)
    if windows.ndim != 2 or targets.ndim != 1:
        raise ValueError("windows must be 2-d and targets 1-d")
    if windows.shape[0] != targets.shape[0]:
        raise ValueError("windows and targets disagree on sample count")
    return windows, targets


def run_linear(windows, targets, step_size, eps=1e-8, widely_linear=False):
    """Errors of a (widely-)linear NLMS pass over the stream."""
    windows, targets = _prepared(windows, targets)
    if backend_choice() == "numba":
        from . import _accel
        return _accel.linear_stream(windows, targets, float(step_size),
                                    float(eps), bool(widely_linear))
    filt = ComplexNLMS(windows.shape[1], step_size, eps=eps,
                       widely_linear=widely_linear)
    errors = np.empty(targets.shape[0], dtype=np.complex128)
    for i in range(targets.shape[0]):
        errors[i] = filt.update(windows[i], targets[i])
    return errors


def run_kernel(windows, targets, kernel, mode, step_size, eps=1e-8,
               delta_dist=0.1, delta_err=0.2, normalize=True):
    """Errors and final dictionary size of a kernel LMS pass."""
    windows, targets = _prepared(windows, targets)
    if backend_choice() == "numba":
        jit = None
        if isinstance(kernel, ComplexGaussian) and mode.startswith("pure-complex"):
            from . import _accel
            jit = _accel.kernel_stream_complex_gaussian
        elif isinstance(kernel, GaussianRBF) and mode.startswith("complexified"):
            from . import _accel
            jit = _accel.kernel_stream_rbf
        if jit is not None:
            errors, size = jit(windows, targets, float(kernel.sigma),
                               float(step_size), float(eps),
                               float(delta_dist), float(delta_err),
                               bool(normalize), mode.endswith("augmented"))
            return errors, int(size)
    filt = KernelLMS(kernel, mode, step_size, eps=eps, delta_dist=delta_dist,
                     delta_err=delta_err, normalize=normalize)
    errors = np.empty(targets.shape[0], dtype=np.complex128)
    for i in range(targets.shape[0]):
        errors[i], _ = filt.update(windows[i], targets[i])
    return errors, filt.size


def run_cngd(windows, targets, step_size, seed=0):
    windows, targets = _prepared(windows, targets)
    filt = CNGD(windows.shape[1], step_size, seed=seed)
    if backend_choice() == "numba":
        from . import _accel
        return _accel.cngd_stream(windows, targets, float(step_size),
                                  filt.w, complex(filt.bias))
    errors = np.empty(targets.shape[0], dtype=np.complex128)
    for i in range(targets.shape[0]):
        errors[i] = filt.step(windows[i], targets[i])
    return errors


def run_mlp(windows, targets, step_size, hidden=50, seed=0,
            linear_output=False):
    windows, targets = _prepared(windows, targets)
    filt = ComplexMLP(windows.shape[1], step_size, hidden=hidden, seed=seed,
                      linear_output=linear_output)
    if backend_choice() == "numba":
        from . import _accel
        return _accel.mlp_stream(windows, targets, float(step_size), filt.W,
                                 filt.b, filt.u, complex(filt.c),
                                 bool(linear_output))
    errors = np.empty(targets.shape[0], dtype=np.complex128)
    for i in range(targets.shape[0]):
        errors[i] = filt.step(windows[i], targets[i])
    return errors
