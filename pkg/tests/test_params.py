import cmath
import math

import pytest
from hypothesis import given

from conftest import alphas, any_q, bs, nu0s
from qosc import (
    AlgebraParams,
    AlphaZero,
    InvalidLabel,
    NonRealB,
    QOutOfRange,
    RepLabel,
    b_from_gamma,
    casimir_values,
    make_params,
)
from qosc.params import k_eigenvalue, k_eigenvalue_from_gamma


def test_make_params_valid():
    p = make_params(2.0, 1.0)
    assert (p.q, p.alpha) == (2.0, 1.0)
    p = make_params(0.5, -0.25)
    assert (p.q, p.alpha) == (0.5, -0.25)


@pytest.mark.parametrize("q", [1.0, 0.0, -0.5, math.inf, math.nan])
def test_make_params_rejects_q(q):
    with pytest.raises(QOutOfRange):
        make_params(q, 1.0)


def test_make_params_rejects_alpha_zero():
    with pytest.raises(AlphaZero):
        make_params(2.0, 0.0)


def test_params_are_frozen():
    p = make_params(2.0, 1.0)
    with pytest.raises(AttributeError):
        p.q = 3.0


def test_label_rejects_negative_lambda0():
    with pytest.raises(InvalidLabel):
        RepLabel(0.0, 1.0, -0.1)
    with pytest.raises(InvalidLabel):
        RepLabel(0.0, 1j, 0.0)


def test_b_from_gamma_examples():
    assert b_from_gamma(0.5, 1.0, 0.0) == pytest.approx(1.0, abs=1e-15)
    # 2 * 0.5i * exp(-i pi/2) = i * (-i) = 1
    oracle = 2 * 0.5j * complex(math.cos(-math.pi / 2), math.sin(-math.pi / 2))
    assert b_from_gamma(0.5j, 1.0, 0.5) == pytest.approx(oracle.real, abs=1e-15)
    assert b_from_gamma(0.5j, 1.0, 0.5) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(NonRealB):
        b_from_gamma(0.5j, 1.0, 0.0)


def test_casimir_examples():
    c = casimir_values(make_params(2.0, 1.0), RepLabel(0.0, 1.0))
    assert c.c1 == pytest.approx(0.25)
    assert c.c2 == pytest.approx(0.5)
    assert c.c3 == pytest.approx(1.0)

    c = casimir_values(make_params(2.0, 1.0), RepLabel(0.25, 1.0))
    assert c.c3 == pytest.approx(1j, abs=1e-15)
    # c2 = gamma = 0.5 e^{i pi/4}; c2^2 = 0.25 i
    assert c.c2 ** 2 == pytest.approx(0.25j, abs=1e-15)
    assert c.c1 * c.c3 == pytest.approx(c.c2 ** 2, abs=1e-15)

    c = casimir_values(make_params(2.0, 0.5), RepLabel(1.0, -1.0))
    assert c.c2 == pytest.approx(1.0, abs=1e-15)
    assert c.c3 == pytest.approx(1.0, abs=1e-15)
    assert c.c1 == pytest.approx(1.0, abs=1e-15)


@given(q=any_q, alpha=alphas, nu0=nu0s, B=bs)
def test_casimir_identity(q, alpha, nu0, B):
    c = casimir_values(AlgebraParams(q, alpha), RepLabel(nu0, B))
    assert abs(abs(c.c3) - 1.0) <= 1e-12
    assert c.identity_residual() <= 1e-12


@given(q=any_q, alpha=alphas, nu0=nu0s, B=bs)
def test_b_gamma_round_trip(q, alpha, nu0, B):
    p = AlgebraParams(q, alpha)
    c = casimir_values(p, RepLabel(nu0, B))
    assert b_from_gamma(c.c2, alpha, nu0) == pytest.approx(B, abs=1e-12)


@given(q=any_q, alpha=alphas, nu0=nu0s, B=bs)
def test_k_eigenvalue_two_ways(q, alpha, nu0, B):
    p = AlgebraParams(q, alpha)
    label = RepLabel(nu0, B)
    for n in range(-7, 8):
        via_gamma = k_eigenvalue_from_gamma(p, label, n)
        assert abs(via_gamma - k_eigenvalue(p, label, n)) <= 1e-12 * max(1.0, abs(via_gamma))


def test_k_eigenvalue_brute_force():
    # gamma * exp(-i pi N) with N = nu0 + n, against the (-1)^n B / (2 alpha) rule
    p = make_params(0.7, 0.3)
    label = RepLabel(0.3, 1.7)
    gamma = label.B * cmath.exp(1j * math.pi * label.nu0) / (2 * p.alpha)
    for n in range(-4, 5):
        expected = gamma * cmath.exp(-1j * math.pi * (label.nu0 + n))
        assert k_eigenvalue(p, label, n) == pytest.approx(expected.real, abs=1e-12)
        assert abs(expected.imag) < 1e-12
