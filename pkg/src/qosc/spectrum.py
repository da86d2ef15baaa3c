"""Eigenvalue sequences of ``a+ a`` and ``a a+`` on the ladder basis.

``lam(n)`` is the ``a+ a`` eigenvalue on ``Psi_n`` and ``mu(n) = lam(n + 1)``
the ``a a+`` eigenvalue.  They obey the first-order recurrence::

    lam(n + 1) = q lam(n) + q**(-nu0 - n) (1 + (-1)**n B)

which has the closed-form solution evaluated by :func:`lambda_closed`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .params import AlgebraParams, QoscError, RepLabel

REL_TOL = 1e-9
ABS_TOL = 1e-12


class SpectrumOverflow(QoscError, OverflowError):
    pass


def _sign(n: int) -> float:
    return -1.0 if n % 2 else 1.0


def _source(params: AlgebraParams, label: RepLabel, n: int) -> float:
    """Inhomogeneous term ``q**(-nu0 - n) (1 + (-1)**n B)``."""
    return params.q ** (-label.nu0 - n) * (1.0 + _sign(n) * label.B)


def _finite(value: float, n: int) -> float:
    if not math.isfinite(value):
        raise SpectrumOverflow(f"lambda_{n} overflows double precision; shrink the index window")
    return value


def lambda_closed(params: AlgebraParams, label: RepLabel, n: int) -> float:
    q = params.q
    s = _sign(n)
    try:
        qn = q ** n
        qmn = q ** (-n)
        value = label.lambda0 * qn + q ** (-label.nu0) * (
            (qn - qmn) / params.q_minus + label.B * (qn - s * qmn) / params.q_plus
        )
    except OverflowError as exc:
        raise SpectrumOverflow(f"lambda_{n} overflows double precision") from exc
    return _finite(value, n)


def lambda_scale(params: AlgebraParams, label: RepLabel, n: int) -> float:
    """Magnitude of the largest term entering ``lambda_closed(n)``.

    Floating-point error in ``lam(n)`` is proportional to this, so it is the
    natural scale for deciding whether a computed value is "zero".
    """
    q = params.q
    try:
        grow = q ** (n - label.nu0)
        decay = q ** (-n - label.nu0)
    except OverflowError as exc:
        raise SpectrumOverflow(f"lambda_{n} overflows double precision") from exc
    head = abs(label.lambda0) * q ** label.nu0 + 1.0 / abs(params.q_minus) + abs(label.B) / params.q_plus
    tail = 1.0 / abs(params.q_minus) + abs(label.B) / params.q_plus
    return _finite(grow * head + decay * tail, n)


def is_nonnegative(value: float, scale: float, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> bool:
    return value >= -(abs_tol + rel_tol * scale)


def mu(params: AlgebraParams, label: RepLabel, n: int) -> float:
    """Eigenvalue of ``a a+`` on ``Psi_n``."""
    return lambda_closed(params, label, n + 1)


def ladder_relation_residual(params: AlgebraParams, label: RepLabel, n: int) -> float:
    """``mu(n) - q lam(n) - q**(-nu0 - n) (1 + (-1)**n B)``; zero on a valid spectrum."""
    return mu(params, label, n) - params.q * lambda_closed(params, label, n) - _source(params, label, n)


@dataclass(frozen=True)
class Spectrum:
    """Values ``lam(lo), ..., lam(hi)`` with positivity metadata."""

    lo: int
    values: tuple
    all_nonnegative: bool
    scales: tuple = field(default=(), repr=False, compare=False)

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    @property
    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def __getitem__(self, n: int) -> float:
        if not self.lo <= n <= self.hi:
            raise IndexError(f"index {n} outside window [{self.lo}, {self.hi}]")
        return self.values[n - self.lo]

    def mu(self, n: int) -> float:
        """``a a+`` eigenvalue; available for ``lo <= n < hi``."""
        return self[n + 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def negative_indices(self, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> list:
        return [
            n
            for n, v, s in zip(self.indices, self.values, self.scales)
            if not is_nonnegative(v, s, rel_tol, abs_tol)
        ]


def _make_spectrum(params, label, lo, values, rel_tol, abs_tol) -> Spectrum:
    scales = tuple(lambda_scale(params, label, n) for n in range(lo, lo + len(values)))
    ok = all(is_nonnegative(v, s, rel_tol, abs_tol) for v, s in zip(values, scales))
    return Spectrum(lo=lo, values=tuple(values), all_nonnegative=ok, scales=scales)


def lambda_recurrence(
    params: AlgebraParams,
    label: RepLabel,
    lo: int,
    hi: int,
    rel_tol: float = REL_TOL,
    abs_tol: float = ABS_TOL,
) -> Spectrum:
    """Fill ``[lo, hi]`` by iterating the recurrence outward from ``lam(0)``."""
    if not lo <= 0 <= hi:
        raise ValueError(f"window [{lo}, {hi}] must contain 0")
    q = params.q
    forward = [label.lambda0]
    for n in range(0, hi):
        forward.append(_finite(q * forward[-1] + _source(params, label, n), n + 1))
    backward = []
    current = label.lambda0
    for n in range(-1, lo - 1, -1):
        current = _finite((current - _source(params, label, n)) / q, n)
        backward.append(current)
    values = backward[::-1] + forward
    return _make_spectrum(params, label, lo, values, rel_tol, abs_tol)


def lambda_window(
    params: AlgebraParams,
    label: RepLabel,
    lo: int,
    hi: int,
    rel_tol: float = REL_TOL,
    abs_tol: float = ABS_TOL,
) -> Spectrum:
    """Closed-form values over ``[lo, hi]``; the window need not contain 0."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    values = [lambda_closed(params, label, n) for n in range(lo, hi + 1)]
    return _make_spectrum(params, label, lo, values, rel_tol, abs_tol)
