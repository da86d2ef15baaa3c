"""Algebra parameters, representation labels and Casimir data.

The algebra is generated by ``a``, ``a+``, ``N`` and ``K`` subject to::

    a a+ - q a+ a = q**(-N) (1 + 2 alpha K)
    [N, a] = -a,  [N, a+] = a+,  {K, a} = {K, a+} = 0,  [N, K] = 0

with ``q > 0`` and ``alpha != 0``.  An irreducible representation is
labelled by ``(nu0, B, lambda0)`` where ``nu0`` is the ``N`` eigenvalue of
the reference vector, ``lambda0`` the ``a+ a`` eigenvalue on it and
``B = 2 alpha gamma exp(-i pi nu0)`` is real.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

DEFAULT_IMAG_TOL = 1e-9


class QoscError(ValueError):
    """Base class for all errors raised by this package."""


class QOutOfRange(QoscError):
    pass


class AlphaZero(QoscError):
    pass


class NonRealB(QoscError):
    pass


class InvalidLabel(QoscError):
    pass


@dataclass(frozen=True)
class AlgebraParams:
    q: float
    alpha: float

    def __post_init__(self):
        q = float(self.q)
        alpha = float(self.alpha)
        if not math.isfinite(q) or q <= 0.0:
            raise QOutOfRange(f"q must be a positive real, got {q!r}")
        if q == 1.0:
            raise QOutOfRange("q = 1 is only reachable as a limit; use q > 1 or q < 1")
        if not math.isfinite(alpha):
            raise AlphaZero(f"alpha must be finite, got {alpha!r}")
        if alpha == 0.0:
            raise AlphaZero("alpha must be nonzero")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "alpha", alpha)

    @property
    def q_minus(self) -> float:
        """``q - 1/q``; negative exactly when ``q < 1``."""
        return self.q - 1.0 / self.q

    @property
    def q_plus(self) -> float:
        return self.q + 1.0 / self.q


@dataclass(frozen=True)
class RepLabel:
    nu0: float
    B: float
    lambda0: float = 0.0

    def __post_init__(self):
        for name in ("nu0", "B", "lambda0"):
            value = getattr(self, name)
            if isinstance(value, complex):
                raise InvalidLabel(f"{name} must be real, got {value!r}")
            value = float(value)
            if not math.isfinite(value):
                raise InvalidLabel(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.lambda0 < 0.0:
            raise InvalidLabel(f"lambda0 is an eigenvalue of a+a and must be >= 0, got {self.lambda0!r}")


@dataclass(frozen=True)
class CasimirValues:
    """Eigenvalues of ``K**2``, ``K exp(i pi N)`` and ``exp(2 i pi N)``."""

    c1: complex
    c2: complex
    c3: complex

    def identity_residual(self) -> float:
        """Relative size of ``c1 c3 - c2**2``."""
        scale = max(abs(self.c1 * self.c3), abs(self.c2) ** 2, 1e-300)
        return abs(self.c1 * self.c3 - self.c2 ** 2) / scale


def make_params(q: float, alpha: float) -> AlgebraParams:
    return AlgebraParams(q, alpha)


def b_from_gamma(gamma: complex, alpha: float, nu0: float, tol: float = DEFAULT_IMAG_TOL) -> float:
    """Real parameter ``B = 2 alpha gamma exp(-i pi nu0)``.

    Raises
    ------
    NonRealB
        If the product has an imaginary part larger than ``tol`` relative to
        its modulus (floored at 1), i.e. ``gamma`` is not admissible for this
        ``nu0``.
    """
    z = 2.0 * alpha * complex(gamma) * cmath.exp(-1j * math.pi * nu0)
    if abs(z.imag) > tol * max(1.0, abs(z)):
        raise NonRealB(f"2*alpha*gamma*exp(-i*pi*nu0) = {z!r} is not real")
    return z.real


def gamma_from_b(B: float, alpha: float, nu0: float) -> complex:
    return B * cmath.exp(1j * math.pi * nu0) / (2.0 * alpha)


def casimir_values(params: AlgebraParams, label: RepLabel) -> CasimirValues:
    gamma = gamma_from_b(label.B, params.alpha, label.nu0)
    k0 = label.B / (2.0 * params.alpha)
    return CasimirValues(
        c1=complex(k0 * k0),
        c2=gamma,
        c3=cmath.exp(2j * math.pi * label.nu0),
    )


def k_eigenvalue(params: AlgebraParams, label: RepLabel, n: int) -> float:
    """Eigenvalue of ``K`` on the ``n``-th basis vector, ``(-1)**n B / (2 alpha)``."""
    sign = -1.0 if n % 2 else 1.0
    return sign * label.B / (2.0 * params.alpha)


def k_eigenvalue_from_gamma(params: AlgebraParams, label: RepLabel, n: int) -> complex:
    # K = gamma exp(-i pi N) evaluated on N = nu0 + n
    gamma = gamma_from_b(label.B, params.alpha, label.nu0)
    return gamma * cmath.exp(-1j * math.pi * (label.nu0 + n))
