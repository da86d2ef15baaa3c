"""Explicit matrices for ``a``, ``a+``, ``N`` and ``K`` and relation checks.

Infinite families are truncated to a finite window of basis vectors.  Only
the main relation is sensitive to truncation (its edge rows miss an
out-of-window ``lam``), so it is checked on the interior block; the
commutators with ``N`` and the anticommutators with ``K`` hold on the full
block.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classifier import Family, RepClass
from .params import AlgebraParams, QoscError, RepLabel
from .spectrum import ABS_TOL, REL_TOL, is_nonnegative, lambda_closed, lambda_scale

MAX_DIM = 1024


class DimensionMismatch(QoscError):
    pass


class NegativeLambda(QoscError):
    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class OperatorQuad:
    a: np.ndarray
    a_dag: np.ndarray
    n_op: np.ndarray
    k_op: np.ndarray
    index_offset: int
    rep: RepClass
    label: RepLabel

    @property
    def dim(self) -> int:
        return self.a.shape[0]

    @property
    def indices(self) -> range:
        return range(self.index_offset, self.index_offset + self.dim)

    @property
    def is_truncated(self) -> bool:
        return not self.rep.family.is_finite


@dataclass(frozen=True)
class ResidualReport:
    rel1_norm: float
    comm_n_a: float
    comm_n_adag: float
    anticomm_k_a: float
    anticomm_k_adag: float
    comm_n_k: float
    casimir_residual: float
    interior_dim: int
    scale: float
    hermiticity: float = 0.0

    def max_residual(self) -> float:
        return max(
            self.rel1_norm,
            self.comm_n_a,
            self.comm_n_adag,
            self.anticomm_k_a,
            self.anticomm_k_adag,
            self.comm_n_k,
            self.casimir_residual,
        )

    def passes(self, tol: float) -> bool:
        """All residuals within ``tol`` relative to the entry scale (floored at 1).

        Truncated windows of geometric spectra have entries spanning many
        orders of magnitude, so an absolute threshold is meaningless there.
        """
        return self.max_residual() <= tol * max(1.0, self.scale)


def basis_window(rep: RepClass, dim: int, lo: Optional[int] = None) -> tuple:
    """``(first_index, dim)`` of the basis window for ``rep``."""
    family = rep.family
    if family.is_finite:
        expected = int(rep.dimension)
        if dim != expected:
            raise DimensionMismatch(f"{family.value} has dimension {expected}, got dim={dim}")
        return int(rep.index_lo), dim
    if not 1 <= dim <= MAX_DIM:
        raise DimensionMismatch(f"dim must be in [1, {MAX_DIM}], got {dim}")
    if family is Family.FOCK:
        return 0, dim
    if family is Family.ANTI_FOCK:
        return -(dim - 1), dim
    if lo is not None:
        return lo, dim
    return -(dim // 2), dim


def _finite_lambdas(params: AlgebraParams, label: RepLabel, rep: RepClass) -> dict:
    # exact entries for the finite families instead of the closed form
    q, nu0 = params.q, label.nu0
    if rep.family is Family.ONE_DIMENSIONAL:
        return {0: 0.0}
    if rep.family is Family.TWO_DIMENSIONAL_ODD:
        return {-1: 0.0, 0: 2.0 * q ** (-nu0) / (1.0 / q - q)}
    return {0: 0.0, 1: 2.0 * q ** (-nu0 - 1.0) / (1.0 / q - q)}


def build(
    params: AlgebraParams,
    label: RepLabel,
    rep: RepClass,
    dim: Optional[int] = None,
    lo: Optional[int] = None,
    rel_tol: float = REL_TOL,
    abs_tol: float = ABS_TOL,
) -> OperatorQuad:
    """Matrices of the generators on ``Psi_lo, ..., Psi_{lo + dim - 1}``.

    ``a`` carries ``sqrt(lam(n))`` from ``Psi_n`` to ``Psi_{n-1}`` and
    ``a_dag`` is its transpose.  For finite families ``dim`` defaults to
    the family's dimension; ``lo`` shifts the window of an unbounded
    representation.

    Raises
    ------
    DimensionMismatch
        For a finite family with the wrong ``dim`` or ``dim`` out of range.
    NegativeLambda
        If some ``lam(n)`` coupling two window vectors is below tolerance.
    """
    if dim is None:
        if not rep.family.is_finite:
            raise DimensionMismatch(f"dim is required for the {rep.family.value} family")
        dim = int(rep.dimension)
    offset, dim = basis_window(rep, dim, lo)
    indices = np.arange(offset, offset + dim)

    if rep.family.is_finite:
        lam = _finite_lambdas(params, label, rep)
    else:
        lam = {}
        for n in indices:
            n = int(n)
            value = lambda_closed(params, label, n)
            if not is_nonnegative(value, lambda_scale(params, label, n), rel_tol, abs_tol):
                raise NegativeLambda(f"lambda_{n} = {value!r} < 0 for label {label}", n)
            lam[n] = value

    a = np.zeros((dim, dim))
    for row in range(1, dim):
        n = offset + row
        a[row - 1, row] = math.sqrt(max(lam[n], 0.0))
    parity = np.where(indices % 2 == 0, 1.0, -1.0)
    return OperatorQuad(
        a=a,
        a_dag=a.conj().T.copy(),
        n_op=np.diag(label.nu0 + indices.astype(float)),
        k_op=np.diag(parity * label.B / (2.0 * params.alpha)),
        index_offset=offset,
        rep=rep,
        label=label,
    )


def _maxabs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def verify(quad: OperatorQuad, params: AlgebraParams) -> ResidualReport:
    """Max-norm residuals of the defining relations on ``quad``."""
    a, ad, n_op, k_op = quad.a, quad.a_dag, quad.n_op, quad.k_op
    dim = quad.dim
    q = params.q
    eye = np.eye(dim)

    aad = a @ ad
    ada = ad @ a
    q_pow = np.diag(q ** (-np.diag(n_op).real))
    rhs = q_pow @ (eye + 2.0 * params.alpha * k_op)
    main = aad - q * ada - rhs
    if quad.is_truncated:
        inner = slice(1, dim - 1)
        interior_dim = max(dim - 2, 0)
    else:
        inner = slice(0, dim)
        interior_dim = dim
    main_inner = main[inner, inner]
    # rounding in every residual below is bounded by a multiple of this
    a_max = _maxabs(a)
    n_max = _maxabs(n_op)
    k_max = _maxabs(k_op)
    scale = max(
        _maxabs(aad[inner, inner]),
        q * _maxabs(ada[inner, inner]),
        _maxabs(rhs[inner, inner]),
        a_max * max(1.0, n_max, k_max),
        k_max * k_max,
    )

    c1 = (quad.label.B / (2.0 * params.alpha)) ** 2
    return ResidualReport(
        rel1_norm=_maxabs(main_inner),
        comm_n_a=_maxabs(n_op @ a - a @ n_op + a),
        comm_n_adag=_maxabs(n_op @ ad - ad @ n_op - ad),
        anticomm_k_a=_maxabs(k_op @ a + a @ k_op),
        anticomm_k_adag=_maxabs(k_op @ ad + ad @ k_op),
        comm_n_k=_maxabs(n_op @ k_op - k_op @ n_op),
        casimir_residual=_maxabs(k_op @ k_op - c1 * eye),
        interior_dim=interior_dim,
        scale=scale,
        hermiticity=_maxabs(ad - a.conj().T),
    )


@dataclass(frozen=True)
class PositivityResult:
    ok: bool
    violation: Optional[int] = None

    def __bool__(self):
        return self.ok

    def __iter__(self):
        return iter((self.ok, self.violation))


def positivity_scan(
    params: AlgebraParams,
    label: RepLabel,
    rep: RepClass,
    window: int,
    rel_tol: float = REL_TOL,
    abs_tol: float = ABS_TOL,
) -> PositivityResult:
    """Check ``lam(n) >= 0`` over the class's index range clipped to ``[-window, window]``.

    The reported violation is the one with the smallest ``|n|``.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    lo, hi = rep.clipped_range(window)
    for n in sorted(range(lo, hi + 1), key=lambda k: (abs(k), k)):
        if not is_nonnegative(lambda_closed(params, label, n), lambda_scale(params, label, n), rel_tol, abs_tol):
            return PositivityResult(False, n)
    return PositivityResult(True, None)
