"""Kernel LMS filters on complex data with novelty-criterion sparsification.

Four operating modes cover the combinations of kernel family and estimator
structure:

``pure-complex-linear``
    Complex kernel, C-linear expansion: d_hat = sum_k a_k kappa(z, c_k).
``pure-complex-augmented``
    Complex kernel, widely-linear expansion adding the conjugate branch:
    d_hat = sum_k a_k (kappa(z, c_k) + conj(kappa(z, c_k))).
``complexified-linear``
    Real kernel evaluated on stacked (Re, Im) data, output scaled by 2.
``complexified-augmented``
    Same with scale 4; equivalent to ``complexified-linear`` at twice the
    step size, kept so that equivalence can be asserted.

Coefficients a_k store mu_eff * e(k) frozen at admission time (pure KLMS,
no re-projection). The novelty criterion admits a new center only when it
is farther than ``delta_dist`` from every stored center and the a-priori
error magnitude exceeds ``delta_err``.
"""

from __future__ import annotations

import numpy as np

from .kernels import ComplexGaussian, GaussianRBF, Polynomial, stack_real

MODES = (
    "pure-complex-linear",
    "pure-complex-augmented",
    "complexified-linear",
    "complexified-augmented",
)


def novelty_check(centers, z, e: complex, delta_dist: float, delta_err: float) -> bool:
    """Admission rule for a candidate center.

    Parameters
    ----------
    centers : (m, L) array
        Stored dictionary centers; m may be 0.
    z : (L,) array
        Candidate center.
    e : complex
        A-priori error at this sample.
    delta_dist, delta_err : float
        Distance and error thresholds, both >= 0.

    Returns
    -------
    bool
        True iff min_k ||z - centers[k]|| > delta_dist (an empty dictionary
        passes this condition) and |e| > delta_err. Distances are Euclidean
        on C^L viewed as R^{2L}; the comparison is done on squared
        distances, which is exact for nonnegative thresholds.
    """
    if abs(e) <= delta_err:
        return False
    centers = np.asarray(centers, dtype=np.complex128)
    if centers.size == 0:
        return True
    diff = centers - np.asarray(z, dtype=np.complex128)[None, :]
    d2_min = float(np.min(np.sum(diff.real**2 + diff.imag**2, axis=1)))
    return d2_min > delta_dist * delta_dist


class KernelLMS:
    """Online kernel LMS with a growing center dictionary.

    Parameters
    ----------
    kernel : GaussianRBF, Polynomial or ComplexGaussian
        Pure modes need a complex kernel, complexified modes a real one.
    mode : str
        One of ``MODES``.
    step_size : float
        Adaptation step mu.
    eps : float, optional
        Regularizer in the normalized step.
    delta_dist, delta_err : float, optional
        Novelty thresholds; setting both to 0 admits every sample with
        nonzero error.
    normalize : bool, optional
        If True (default) the per-sample step is mu / (eps + |kappa(z, z)|)
        in the linear modes and mu / (eps + |kappa(z, z) + conj(kappa(z, z))|)
        in the augmented modes. If False the raw mu is used.
    max_size : int, optional
        Hard cap on dictionary growth; admission stops when reached.
    """

    def __init__(self, kernel, mode: str, step_size: float, eps: float = 1e-8,
                 delta_dist: float = 0.1, delta_err: float = 0.2,
                 normalize: bool = True, max_size: int | None = None):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
        complex_kernel = bool(getattr(kernel, "complex_input", False))
        if mode.startswith("pure-complex") and not complex_kernel:
            raise ValueError(f"mode {mode!r} requires a complex kernel, got {kernel!r}")
        if mode.startswith("complexified") and complex_kernel:
            raise ValueError(f"mode {mode!r} requires a real kernel, got {kernel!r}")
        if step_size <= 0:
            raise ValueError("step_size must be positive")
        if delta_dist < 0 or delta_err < 0:
            raise ValueError("novelty thresholds must be >= 0")
        self.kernel = kernel
        self.mode = mode
        self.step_size = float(step_size)
        self.eps = float(eps)
        self.delta_dist = float(delta_dist)
        self.delta_err = float(delta_err)
        self.normalize = bool(normalize)
        self.max_size = None if max_size is None else int(max_size)
        self.augmented = mode.endswith("augmented")
        self.complexified = mode.startswith("complexified")
        self.length: int | None = None
        self.size = 0
        self._centers = np.empty((0, 0), dtype=np.complex128)
        self._coeffs = np.empty(0, dtype=np.complex128)

    @property
    def centers(self) -> np.ndarray:
        return self._centers[: self.size]

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs[: self.size]

    def _check(self, z):
        z = np.asarray(z, dtype=np.complex128)
        if z.ndim != 1:
            raise ValueError("regressor must be 1-d")
        if self.length is None:
            self.length = z.shape[0]
            self._centers = np.empty((16, self.length), dtype=np.complex128)
            self._coeffs = np.empty(16, dtype=np.complex128)
        elif z.shape[0] != self.length:
            raise ValueError(
                f"expected regressor of length {self.length}, got {z.shape[0]}"
            )
        return z

    def _kernel_row(self, z) -> np.ndarray:
        """kappa(z, centers[k]) for all stored centers, i.e. every stored
        basis function evaluated at the query z (for real kernels both
        sides are stacked to R^{2L}).

        For the complex Gaussian the entry is exp(-sum((z - conj(c_k))^2)
        / sigma^2), which depends on z but not conj(z). The expansion
        therefore stays inside the class the feature map generates; with
        the arguments swapped each entry would be a function of conj(z)
        only, a class that fits the equalization targets dramatically
        worse (for circular input it cannot even match the plain linear
        filter). The augmented prediction uses only the real part of the
        row and is identical under either order.
        """
        C = self._centers[: self.size]
        if isinstance(self.kernel, ComplexGaussian):
            s2 = self.kernel.sigma**2
            diff = z[None, :] - np.conj(C)
            return np.exp(-np.sum(diff * diff, axis=1) / s2)
        zeta = stack_real(z)
        S = np.concatenate([C.real, C.imag], axis=1)
        if isinstance(self.kernel, GaussianRBF):
            s2 = self.kernel.sigma**2
            d2 = np.sum((S - zeta[None, :]) ** 2, axis=1)
            return np.exp(-d2 / s2).astype(np.complex128)
        if isinstance(self.kernel, Polynomial):
            return ((1.0 + S @ zeta) ** self.kernel.degree).astype(np.complex128)
        out = np.empty(self.size, dtype=np.complex128)
        for k in range(self.size):
            out[k] = self.kernel(S[k], zeta)
        return out

    def _self_similarity(self, z) -> complex:
        if isinstance(self.kernel, ComplexGaussian):
            diff = z - np.conj(z)
            return complex(np.exp(-np.sum(diff * diff) / self.kernel.sigma**2))
        zeta = stack_real(z)
        return complex(self.kernel(zeta, zeta))

    def predict(self, z) -> complex:
        """Current estimate for regressor z; 0 on an empty dictionary."""
        z = self._check(z)
        if self.size == 0:
            return 0j
        row = self._kernel_row(z)
        a = self._coeffs[: self.size]
        if self.complexified:
            scale = 4.0 if self.augmented else 2.0
            return complex(scale * np.sum(a * row))
        if self.augmented:
            return complex(np.sum(a * (2.0 * row.real)))
        return complex(np.sum(a * row))

    def update(self, z, d: complex) -> tuple[complex, bool]:
        """One adaptation step.

        Returns
        -------
        (error, admitted)
            The a-priori error e = d - predict(z) and whether z entered the
            dictionary. When admitted, the stored coefficient is mu_eff * e.
        """
        z = self._check(z)
        e = complex(d) - self.predict(z)
        full = self.max_size is not None and self.size >= self.max_size
        admitted = (not full) and novelty_check(
            self._centers[: self.size], z, e, self.delta_dist, self.delta_err
        )
        if admitted:
            if self.normalize:
                kzz = self._self_similarity(z)
                energy = abs(kzz + np.conj(kzz)) if self.augmented else abs(kzz)
                mu_eff = self.step_size / (self.eps + energy)
            else:
                mu_eff = self.step_size
            self._append(z, mu_eff * e)
        return e, admitted

    def _append(self, z, coeff: complex) -> None:
        if self.size == self._centers.shape[0]:
            new_cap = max(16, 2 * self._centers.shape[0])
            centers = np.empty((new_cap, self.length), dtype=np.complex128)
            coeffs = np.empty(new_cap, dtype=np.complex128)
            centers[: self.size] = self._centers[: self.size]
            coeffs[: self.size] = self._coeffs[: self.size]
            self._centers = centers
            self._coeffs = coeffs
        self._centers[self.size] = z
        self._coeffs[self.size] = coeff
        self.size += 1
