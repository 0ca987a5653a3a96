"""Numba-jitted whole-stream loops for the hot per-sample algorithms.

Imported only when the numba backend is active. Each function mirrors the
arithmetic of the corresponding pure-numpy reference path in streams.py;
the backend-parity tests hold them together. Gaussian kernels only: other
kernel variants always run on the numpy path.
"""

import cmath

import numpy as np
from numba import njit

IM_CLAMP = 1.4  # keep in sync with baselines.IM_CLAMP


@njit(cache=True)
def linear_stream(windows, targets, mu, eps, widely_linear):
    n, L = windows.shape
    w = np.zeros(L, dtype=np.complex128)
    v = np.zeros(L, dtype=np.complex128)
    errors = np.empty(n, dtype=np.complex128)
    for i in range(n):
        pred = 0.0 + 0.0j
        for j in range(L):
            pred += np.conj(w[j]) * windows[i, j]
        if widely_linear:
            predv = 0.0 + 0.0j
            for j in range(L):
                predv += np.conj(v[j]) * np.conj(windows[i, j])
            pred += predv
        e = targets[i] - pred
        energy = 0.0
        for j in range(L):
            zr = windows[i, j].real
            zi = windows[i, j].imag
            energy += zr * zr + zi * zi
        if widely_linear:
            energy = 2.0 * energy
        g = (mu / (eps + energy)) * np.conj(e)
        for j in range(L):
            w[j] += g * windows[i, j]
        if widely_linear:
            for j in range(L):
                v[j] += g * np.conj(windows[i, j])
        errors[i] = e
    return errors


@njit(cache=True)
def kernel_stream_complex_gaussian(windows, targets, sigma, mu, eps,
                                   delta_dist, delta_err, normalize,
                                   augmented):
    n, L = windows.shape
    centers = np.empty((n, L), dtype=np.complex128)
    coeffs = np.empty(n, dtype=np.complex128)
    errors = np.empty(n, dtype=np.complex128)
    m = 0
    inv_s2 = 1.0 / (sigma * sigma)
    d1sq = delta_dist * delta_dist
    for i in range(n):
        acc = 0.0 + 0.0j
        for k in range(m):
            ssum = 0.0 + 0.0j
            for j in range(L):
                diff = windows[i, j] - np.conj(centers[k, j])
                ssum += diff * diff
            kc = cmath.exp(-ssum * inv_s2)
            if augmented:
                acc += coeffs[k] * (2.0 * kc.real)
            else:
                acc += coeffs[k] * kc
        e = targets[i] - acc
        errors[i] = e
        if abs(e) > delta_err:
            ok = True
            if m > 0:
                dmin = np.inf
                for k in range(m):
                    s = 0.0
                    for j in range(L):
                        dr = centers[k, j].real - windows[i, j].real
                        di = centers[k, j].imag - windows[i, j].imag
                        s += dr * dr + di * di
                    if s < dmin:
                        dmin = s
                ok = dmin > d1sq
            if ok:
                if normalize:
                    ssum = 0.0 + 0.0j
                    for j in range(L):
                        diff = windows[i, j] - np.conj(windows[i, j])
                        ssum += diff * diff
                    kzz = cmath.exp(-ssum * inv_s2)
                    if augmented:
                        energy = abs(kzz + np.conj(kzz))
                    else:
                        energy = abs(kzz)
                    mu_eff = mu / (eps + energy)
                else:
                    mu_eff = mu
                for j in range(L):
                    centers[m, j] = windows[i, j]
                coeffs[m] = mu_eff * e
                m += 1
    return errors, m


@njit(cache=True)
def kernel_stream_rbf(windows, targets, sigma, mu, eps, delta_dist,
                      delta_err, normalize, augmented):
    # Real Gaussian RBF on stacked (Re, Im) data; output scale 2 (linear)
    # or 4 (augmented). RBF self-similarity is exactly 1.
    n, L = windows.shape
    centers = np.empty((n, L), dtype=np.complex128)
    coeffs = np.empty(n, dtype=np.complex128)
    errors = np.empty(n, dtype=np.complex128)
    m = 0
    inv_s2 = 1.0 / (sigma * sigma)
    d1sq = delta_dist * delta_dist
    scale = 4.0 if augmented else 2.0
    for i in range(n):
        acc = 0.0 + 0.0j
        for k in range(m):
            s = 0.0
            for j in range(L):
                dr = centers[k, j].real - windows[i, j].real
                di = centers[k, j].imag - windows[i, j].imag
                s += dr * dr + di * di
            acc += coeffs[k] * np.exp(-s * inv_s2)
        e = targets[i] - scale * acc
        errors[i] = e
        if abs(e) > delta_err:
            ok = True
            if m > 0:
                dmin = np.inf
                for k in range(m):
                    s = 0.0
                    for j in range(L):
                        dr = centers[k, j].real - windows[i, j].real
                        di = centers[k, j].imag - windows[i, j].imag
                        s += dr * dr + di * di
                    if s < dmin:
                        dmin = s
                ok = dmin > d1sq
            if ok:
                if normalize:
                    energy = 2.0 if augmented else 1.0
                    mu_eff = mu / (eps + energy)
                else:
                    mu_eff = mu
                for j in range(L):
                    centers[m, j] = windows[i, j]
                coeffs[m] = mu_eff * e
                m += 1
    return errors, m


@njit(cache=True)
def _ctanh(z):
    im = z.imag
    if im > IM_CLAMP:
        im = IM_CLAMP
    elif im < -IM_CLAMP:
        im = -IM_CLAMP
    return cmath.tanh(complex(z.real, im))


@njit(cache=True)
def cngd_stream(windows, targets, mu, w0, bias0):
    n, L = windows.shape
    w = w0.copy()
    bias = bias0
    errors = np.empty(n, dtype=np.complex128)
    for i in range(n):
        net = bias
        for j in range(L):
            net += np.conj(w[j]) * windows[i, j]
        y = _ctanh(net)
        e = targets[i] - y
        psi = 1.0 - y * y
        g = mu * np.conj(e) * psi
        for j in range(L):
            w[j] += g * windows[i, j]
        bias += mu * e * np.conj(psi)
        errors[i] = e
    return errors


@njit(cache=True)
def mlp_stream(windows, targets, mu, W0, b0, u0, c0, linear_output):
    n, L = windows.shape
    H = W0.shape[0]
    W = W0.copy()
    b = b0.copy()
    u = u0.copy()
    c = c0
    h = np.empty(H, dtype=np.complex128)
    errors = np.empty(n, dtype=np.complex128)
    for i in range(n):
        net_o = c
        for k in range(H):
            a = b[k]
            for j in range(L):
                a += W[k, j] * windows[i, j]
            h[k] = _ctanh(a)
            net_o += np.conj(u[k]) * h[k]
        if linear_output:
            y = net_o
            psi_o = 1.0 + 0.0j
        else:
            y = _ctanh(net_o)
            psi_o = 1.0 - y * y
        e = targets[i] - y
        errors[i] = e
        gu = mu * np.conj(e) * psi_o
        gb = mu * e * np.conj(psi_o)
        for k in range(H):
            psi_h = 1.0 - h[k] * h[k]
            back = gb * u[k] * np.conj(psi_h)
            for j in range(L):
                W[k, j] += back * np.conj(windows[i, j])
            b[k] += back
            u[k] += gu * h[k]
        c += gb
    return errors
