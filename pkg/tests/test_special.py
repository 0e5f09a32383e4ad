import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl import DunklParams, GridFunction, bessel_normalized, dunkl_derivative, dunkl_kernel, make_grid
from dunkl.special import kernel_values


def _series_oracle(order, z, terms=120):
    """Direct series summation, independent of the production stopping rule."""
    total = 0.0
    term = 1.0
    for n in range(terms):
        total += term
        term *= -z * z / (4.0 * (n + 1) * (n + 1 + order))
    return total


def test_bessel_at_zero_is_one():
    assert bessel_normalized(0.7, 0.0) == 1.0


def test_bessel_half_order_closed_forms():
    # j_{1/2}(z) = sin(z)/z and j_{-1/2}(z) = cos(z)
    assert abs(bessel_normalized(0.5, math.pi)) < 1e-12
    assert bessel_normalized(-0.5, math.pi) == pytest.approx(-1.0, abs=1e-12)
    for z in (0.3, 1.7, 4.4, 9.2):
        assert bessel_normalized(0.5, z) == pytest.approx(math.sin(z) / z, abs=5e-12)
        assert bessel_normalized(-0.5, z) == pytest.approx(math.cos(z), abs=5e-12)


def test_bessel_agrees_with_direct_series():
    for order in (-0.3, 0.0, 0.8, 2.5):
        for z in (0.1, 1.0, 3.3, 8.0):
            assert bessel_normalized(order, z) == pytest.approx(
                _series_oracle(order, z), rel=1e-12, abs=1e-14
            )


def test_bessel_branches_agree_with_high_precision_oracle():
    # both the series branch (z < 10) and the renormalized backend branch
    # (z > 10) match an independent high-precision evaluation
    import mpmath

    mpmath.mp.dps = 30
    for order in (-0.4, 0.0, 1.5, 3.5):
        for z in (9.99, 10.01, 25.0):
            oracle = float(
                2.0**order * mpmath.gamma(order + 1) * mpmath.besselj(order, z) / mpmath.mpf(z) ** order
            )
            assert bessel_normalized(order, z) == pytest.approx(oracle, abs=1e-11)


@given(st.floats(-60.0, 60.0))
@settings(max_examples=200, deadline=None)
def test_bessel_even_exactly(z):
    for order in (-0.4, 0.5, 2.0):
        assert bessel_normalized(order, z) == bessel_normalized(order, -z)


def test_bessel_rejects_bad_input():
    with pytest.raises(ValueError):
        bessel_normalized(-1.0, 1.0)
    with pytest.raises(ValueError):
        bessel_normalized(-1.5, 1.0)
    with pytest.raises(ValueError):
        bessel_normalized(0.5, float("inf"))


def test_kernel_at_zero_and_classical():
    p = DunklParams(0.3)
    assert dunkl_kernel(p, 0.0) == 1.0 + 0.0j
    pc = DunklParams(-0.5, classical=True)
    assert dunkl_kernel(pc, math.pi) == pytest.approx(-1.0 + 0.0j, abs=1e-12)
    for s in (-11.3, 0.7, 25.0):
        assert dunkl_kernel(pc, s) == pytest.approx(np.exp(1j * s), abs=1e-12)


def test_kernel_first_bessel_zero():
    # at kappa = 0 the kernel is J_0(s) + i J_1(s); s is near the first zero
    # of J_0, where high-precision series evaluation gives the imaginary part
    import mpmath

    s = 2.404826
    expected = complex(mpmath.besselj(0, s), mpmath.besselj(1, s))
    p = DunklParams(0.0)
    assert dunkl_kernel(p, s) == pytest.approx(expected, abs=1e-10)
    assert dunkl_kernel(p, s).imag == pytest.approx(0.519147, abs=1e-5)
    assert abs(dunkl_kernel(p, s).real) < 1e-5


@given(st.floats(-0.499, 3.0), st.floats(-50.0, 50.0))
@settings(max_examples=300, deadline=None)
def test_kernel_modulus_bound(kappa, s):
    assert abs(dunkl_kernel(DunklParams(kappa), s)) <= 1.0 + 1e-10


def test_kernel_conjugate_symmetry():
    p = DunklParams(0.9)
    s = np.linspace(-40, 40, 101)
    assert np.array_equal(kernel_values(p, -s), np.conj(kernel_values(p, s)))


def test_kernel_rejects_nonfinite():
    with pytest.raises(ValueError):
        dunkl_kernel(DunklParams(0.5), float("nan"))


def test_derivative_classical_is_plain_derivative():
    p = DunklParams(-0.5, classical=True)
    g = make_grid(p, 2.0, 256)
    d = dunkl_derivative(p, GridFunction(g, g.nodes**2))
    assert np.max(np.abs(d.values[1:-1] - 2.0 * g.nodes[1:-1])) < 1e-10


def test_derivative_even_function_drops_difference_term():
    p = DunklParams(1.2)
    g = make_grid(p, 2.0, 512)
    d = dunkl_derivative(p, GridFunction(g, np.cos(g.nodes)))
    assert np.max(np.abs(d.values[1:-1] + np.sin(g.nodes[1:-1]))) < 5e-5


@pytest.mark.parametrize("kappa,lam", [(0.5, 1.0), (1.5, 0.5), (0.0, 2.0)])
def test_derivative_eigenfunction_second_order(kappa, lam):
    p = DunklParams(kappa)
    errs = []
    for n in (256, 512, 1024):
        g = make_grid(p, 4.0, n)
        kv = kernel_values(p, lam * g.nodes)
        d = dunkl_derivative(p, GridFunction(g, kv.real))
        sel = slice(4, -4)
        errs.append(np.max(np.abs(d.values[sel] + lam * kv.imag[sel])))
    assert errs[1] < 0.3 * errs[0]
    assert errs[2] < 0.3 * errs[1]


def test_derivative_rejects_asymmetric_grid():
    p = DunklParams(0.5)
    g = make_grid(p, 2.0, 64)
    shifted = make_grid(p, 2.0, 64)
    object.__setattr__(shifted, "nodes", g.nodes + 0.01)
    with pytest.raises(ValueError):
        dunkl_derivative(p, GridFunction(shifted, np.ones(64)))
