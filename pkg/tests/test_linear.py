"""Linear and widely-linear normalized LMS tests."""

import numpy as np
import pytest

from gradcheck import conjugate_grad_fd, rel_err

from ckaf.core import SeededRng, hermitian_dot
from ckaf.linear import ComplexNLMS, decompose_real_blocks


def _random_complex(rng, n):
    return rng.normal(size=n) + 1j * rng.normal(size=n)


class TestLinearUpdates:
    def test_hand_stepped_first_update(self):
        # z = [1, 0], d = i, mu = 0.5, eps = 0
        # e = i, energy = 1, w <- 0.5 * conj(i) * z = [-0.5i, 0]
        f = ComplexNLMS(2, 0.5, eps=0.0)
        e = f.update([1.0, 0.0], 1j)
        assert e == 1j
        assert np.array_equal(f.w, [-0.5j, 0])
        # prediction is now w^H z = conj(-0.5i) * 1 = 0.5i
        assert f.predict([1.0, 0.0]) == 0.5j

    def test_hand_stepped_widely_linear(self):
        # z = [1], d = 1+i, mu = 0.25, eps = 0; energy doubles to 2
        f = ComplexNLMS(1, 0.25, eps=0.0, widely_linear=True)
        e = f.update([1.0], 1 + 1j)
        assert e == 1 + 1j
        g = 0.125 * (1 - 1j)
        assert np.array_equal(f.w, [g])
        assert np.array_equal(f.v, [g])
        # on a purely imaginary input the two branches cancel exactly
        assert f.predict([1j]) == 0j

    def test_normalization_denominator(self):
        # With ||z||^2 = 4 and eps = 1 the effective step is mu / 5.
        f = ComplexNLMS(1, 1.0, eps=1.0)
        f.update([2.0], 1.0)
        assert np.array_equal(f.w, [0.4])

    def test_error_is_a_priori(self):
        rng = np.random.default_rng(8)
        f = ComplexNLMS(3, 0.3)
        for _ in range(10):
            z = _random_complex(rng, 3)
            d = complex(rng.normal(), rng.normal())
            before = f.predict(z)
            e = f.update(z, d)
            assert e == pytest.approx(d - before, rel=1e-12)

    def test_weights_start_zero_prediction_zero(self):
        f = ComplexNLMS(4, 0.1, widely_linear=True)
        assert f.predict([1j, 2, 3, 4]) == 0j

    def test_rejects_wrong_length(self):
        f = ComplexNLMS(2, 0.1)
        with pytest.raises(ValueError, match="length 2"):
            f.update([1.0], 0j)

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            ComplexNLMS(0, 0.1)
        with pytest.raises(ValueError):
            ComplexNLMS(2, 0.0)


class TestLinearGradients:
    """The update direction must equal -dL/dw* for L = |d - prediction|^2."""

    def test_w_direction_matches_finite_differences(self):
        rng = np.random.default_rng(21)
        for _ in range(25):
            f = ComplexNLMS(4, 0.1)
            f.w = _random_complex(rng, 4)
            z = _random_complex(rng, 4)
            d = complex(rng.normal(), rng.normal())
            e = d - f.predict(z)
            analytic = -np.conj(e) * z  # dL/dw* (descent is its negative)

            def loss():
                return abs(d - f.predict(z)) ** 2

            fd = conjugate_grad_fd(loss, f.w)
            assert rel_err(fd, analytic) < 1e-6

    def test_v_direction_matches_finite_differences(self):
        rng = np.random.default_rng(22)
        for _ in range(25):
            f = ComplexNLMS(3, 0.1, widely_linear=True)
            f.w = _random_complex(rng, 3)
            f.v = _random_complex(rng, 3)
            z = _random_complex(rng, 3)
            d = complex(rng.normal(), rng.normal())
            e = d - f.predict(z)
            analytic = -np.conj(e) * np.conj(z)

            def loss():
                return abs(d - f.predict(z)) ** 2

            fd = conjugate_grad_fd(loss, f.v)
            assert rel_err(fd, analytic) < 1e-6

    def test_update_reduces_instantaneous_error(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            f = ComplexNLMS(3, 0.5)
            f.w = 0.1 * _random_complex(rng, 3)
            z = _random_complex(rng, 3)
            d = complex(rng.normal(), rng.normal())
            before = abs(d - f.predict(z))
            f.update(z, d)
            after = abs(d - f.predict(z))
            assert after < before + 1e-12


class TestLinearConvergence:
    def test_identifies_a_linear_system(self):
        # Noise-free identification: d = w_true^H z. Steady-state error
        # should fall by orders of magnitude.
        rng = SeededRng(2001)
        w_true = np.array([0.5 - 0.2j, -0.3 + 0.7j, 0.1 + 0.1j])
        f = ComplexNLMS(3, 0.8)
        errs = []
        for _ in range(600):
            g = rng.standard_normal(6)
            z = g[0::2][:3] + 1j * g[1::2][:3]
            d = hermitian_dot(z, w_true)
            errs.append(abs(f.update(z, d)))
        assert np.mean(errs[-50:]) < 1e-4 * max(np.mean(errs[:50]), 1e-12)
        assert np.max(np.abs(f.w - w_true)) < 1e-3

    def test_widely_linear_identifies_conjugate_system(self):
        # d depends on conj(z) only; the strictly linear filter cannot
        # drive the error to zero, the widely linear one can.
        rng = SeededRng(2002)
        v_true = np.array([0.4 + 0.3j, -0.2 - 0.6j])
        lin = ComplexNLMS(2, 0.8)
        wl = ComplexNLMS(2, 0.8, widely_linear=True)
        lin_errs, wl_errs = [], []
        for _ in range(800):
            g = rng.standard_normal(4)
            z = g[0::2] + 1j * g[1::2]
            d = hermitian_dot(np.conj(z), v_true)
            lin_errs.append(abs(lin.update(z, d)))
            wl_errs.append(abs(wl.update(z, d)))
        assert np.mean(wl_errs[-80:]) < 1e-5
        assert np.mean(lin_errs[-80:]) > 0.1


class TestRealBlockDecomposition:
    def test_reconstruction_identity(self):
        # The (w, v) pair must reproduce the stacked two-channel map
        # T(x, y) = (u11.x + u12.y) + i (u21.x + u22.y) for all inputs.
        rng = np.random.default_rng(31)
        for _ in range(200):
            L = rng.integers(1, 8)
            u11, u12, u21, u22 = rng.normal(size=(4, L))
            w, v = decompose_real_blocks(u11, u12, u21, u22)
            x, y = rng.normal(size=(2, L))
            z = x + 1j * y
            want = (u11 @ x + u12 @ y) + 1j * (u21 @ x + u22 @ y)
            got = hermitian_dot(z, w) + hermitian_dot(np.conj(z), v)
            assert abs(got - want) < 1e-12 * max(1.0, abs(want))

    def test_known_blocks(self):
        # u11 = u22 = [1], u12 = u21 = [0] is the identity map z -> z,
        # giving w = [1], v = [0].
        w, v = decompose_real_blocks([1.0], [0.0], [0.0], [1.0])
        assert np.array_equal(w, [1.0 + 0j])
        assert np.array_equal(v, [0.0 + 0j])

    def test_conjugation_blocks(self):
        # x + iy -> x - iy is conjugation: w = [0], v = [1].
        w, v = decompose_real_blocks([1.0], [0.0], [0.0], [-1.0])
        assert np.array_equal(w, [0.0 + 0j])
        assert np.array_equal(v, [1.0 + 0j])

    def test_rejects_complex_blocks(self):
        with pytest.raises(TypeError):
            decompose_real_blocks([1j], [0.0], [0.0], [0.0])

    def test_rejects_mixed_lengths(self):
        with pytest.raises(ValueError):
            decompose_real_blocks([1.0], [0.0, 1.0], [0.0], [0.0])
