"""Classification of irreducible representations.

For fixed ``(q, alpha)`` the admissible representations depend on ``B``
through the threshold ``B* = (q + 1/q) / (q - 1/q)`` and on ``lambda0``
through the sign of ``e0 = lambda0 q**nu0 + 1/(q - 1/q) + B/(q + 1/q)``.
Every spectrum can be written as::

    lam(n) = q**(n - nu0) e0 - q**(-n - nu0) d(n)

with ``d(n) = d_plus`` for even ``n`` and ``d_minus`` for odd ``n``, which
is what makes the case analysis below exhaustive.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .params import AlgebraParams, QoscError, RepLabel
from .spectrum import SpectrumOverflow, is_nonnegative, lambda_closed, lambda_scale

BOUNDARY_EPS = 1e-12
LAMBDA_REL_TOL = 1e-9


class NoRepresentation(QoscError):
    """No irreducible representation carries the requested label.

    ``suggestion`` holds the canonically renumbered label when the
    spectrum of the given label vanishes at a nonzero index.
    """

    def __init__(self, message: str, suggestion: Optional[RepLabel] = None, negative_index: Optional[int] = None):
        super().__init__(message)
        self.suggestion = suggestion
        self.negative_index = negative_index


class NotUnbounded(QoscError):
    pass


class Family(str, enum.Enum):
    ONE_DIMENSIONAL = "OneDimensional"
    TWO_DIMENSIONAL_ODD = "TwoDimensionalOdd"
    TWO_DIMENSIONAL_EVEN = "TwoDimensionalEven"
    FOCK = "Fock"
    ANTI_FOCK = "AntiFock"
    UNBOUNDED = "Unbounded"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.replace("-", "").replace("_", "").lower()
        aliases = {
            "onedim": cls.ONE_DIMENSIONAL,
            "twodimodd": cls.TWO_DIMENSIONAL_ODD,
            "twodimeven": cls.TWO_DIMENSIONAL_EVEN,
            "antifock": cls.ANTI_FOCK,
        }
        if key in aliases:
            return aliases[key]
        for member in cls:
            if member.value.lower() == key:
                return member
        raise ValueError(f"unknown family {text!r}")

    @property
    def is_finite(self) -> bool:
        return self in (Family.ONE_DIMENSIONAL, Family.TWO_DIMENSIONAL_ODD, Family.TWO_DIMENSIONAL_EVEN)


_RANGES = {
    Family.ONE_DIMENSIONAL: (0, 0),
    Family.TWO_DIMENSIONAL_ODD: (-1, 0),
    Family.TWO_DIMENSIONAL_EVEN: (0, 1),
    Family.FOCK: (0, math.inf),
    Family.ANTI_FOCK: (-math.inf, 0),
    Family.UNBOUNDED: (-math.inf, math.inf),
}


@dataclass(frozen=True)
class RepClass:
    """A representation family together with what it forces on ``lambda0``.

    Bounded families fix ``lambda0`` (``forced_lambda0``); the unbounded
    family instead requires ``lambda0 >= lambda0_min`` (``>`` when
    ``lambda0_strict``).
    """

    family: Family
    index_lo: float
    index_hi: float
    forced_lambda0: Optional[float] = None
    lambda0_min: Optional[float] = None
    lambda0_strict: bool = False

    @property
    def dimension(self) -> float:
        return self.index_hi - self.index_lo + 1

    def admits(
        self, lambda0: float, e0: float, eps: float = BOUNDARY_EPS, rel_tol: float = LAMBDA_REL_TOL, scale: float = 0.0
    ) -> bool:
        """Whether ``lambda0`` (with threshold value ``e0``) belongs to this class.

        ``scale`` is the magnitude of the terms making up ``lam(0)``; a
        forced value is matched to within ``rel_tol`` of it, the same
        notion of zero used for spectra.
        """
        if self.forced_lambda0 is not None:
            return abs(lambda0 - self.forced_lambda0) <= eps + rel_tol * max(abs(self.forced_lambda0), scale)
        if self.lambda0_strict:
            return e0 > eps
        return e0 >= -eps

    def clipped_range(self, window: int) -> tuple:
        return int(max(self.index_lo, -window)), int(min(self.index_hi, window))

    def to_dict(self) -> dict:
        def bound(x):
            return x if math.isfinite(x) else ("-inf" if x < 0 else "inf")

        return {
            "family": self.family.value,
            "index_lo": bound(self.index_lo),
            "index_hi": bound(self.index_hi),
            "forced_lambda0": self.forced_lambda0,
            "lambda0_min": self.lambda0_min,
            "lambda0_strict": self.lambda0_strict,
        }


def _rep(family: Family, **kwargs) -> RepClass:
    lo, hi = _RANGES[family]
    return RepClass(family, lo, hi, **kwargs)


@dataclass(frozen=True)
class ThresholdSet:
    b_star: float
    d_plus: float
    d_minus: float
    e0: float


def b_star(params: AlgebraParams) -> float:
    return params.q_plus / params.q_minus


def thresholds(params: AlgebraParams, nu0: float, B: float, lambda0: float = 0.0) -> ThresholdSet:
    d_plus = 1.0 / params.q_minus + B / params.q_plus
    d_minus = 1.0 / params.q_minus - B / params.q_plus
    return ThresholdSet(
        b_star=b_star(params),
        d_plus=d_plus,
        d_minus=d_minus,
        e0=lambda0 * params.q ** nu0 + d_plus,
    )


def anti_fock_lambda0(params: AlgebraParams, nu0: float, B: float) -> float:
    """``lambda0`` making ``a+ Psi_0 = 0``, i.e. ``lam(1) = 0``."""
    return -params.q ** (-nu0 - 1.0) * (1.0 + B)


def enumerate_classes(
    params: AlgebraParams, nu0: float, B: float, eps: float = BOUNDARY_EPS, edge_unbounded: bool = False
) -> list:
    """All families admissible at ``(q, B)``; an empty list means none.

    For ``q < 1`` doubly-unbounded representations with all ``lam(n) > 0``
    also exist on the boundaries ``B = -1`` (``e0 >= 0``) and ``B = b_star``
    (``e0 > 0``).  They are left out of the default family sets, which
    report only the bounded family there; ``edge_unbounded=True`` adds them.
    """
    q = params.q

    def near(x, y):
        return abs(x - y) <= eps

    if q > 1.0:
        if near(B, -1.0):
            return [_rep(Family.ONE_DIMENSIONAL, forced_lambda0=0.0)]
        if B > -1.0:
            return [_rep(Family.FOCK, forced_lambda0=0.0)]
        return []

    bs = b_star(params)
    d_plus = thresholds(params, nu0, B).d_plus
    unbounded_min = max(-d_plus * q ** (-nu0), 0.0)
    if near(B, bs):
        found = [_rep(Family.TWO_DIMENSIONAL_ODD, forced_lambda0=2.0 * q ** (-nu0) / (1.0 / q - q))]
        if edge_unbounded:
            found.append(_rep(Family.UNBOUNDED, lambda0_min=unbounded_min, lambda0_strict=True))
        return found
    if B < bs:
        return [_rep(Family.ANTI_FOCK, forced_lambda0=anti_fock_lambda0(params, nu0, B))]
    if near(B, -1.0):
        found = [_rep(Family.ONE_DIMENSIONAL, forced_lambda0=0.0)]
        if edge_unbounded:
            found.append(_rep(Family.UNBOUNDED, lambda0_min=unbounded_min))
        return found
    if near(B, -bs):
        return [
            _rep(Family.TWO_DIMENSIONAL_EVEN, forced_lambda0=0.0),
            _rep(Family.UNBOUNDED, lambda0_min=0.0, lambda0_strict=True),
        ]
    if B > -bs:
        return []
    unbounded = _rep(Family.UNBOUNDED, lambda0_min=unbounded_min)
    if B > -1.0:
        return [_rep(Family.FOCK, forced_lambda0=0.0), unbounded]
    return [unbounded]


def family_set(params: AlgebraParams, nu0: float, B: float, eps: float = BOUNDARY_EPS, edge_unbounded: bool = False) -> tuple:
    return tuple(rc.family for rc in enumerate_classes(params, nu0, B, eps, edge_unbounded))


def is_boundary(params: AlgebraParams, B: float, eps: float = BOUNDARY_EPS) -> bool:
    """True when ``B`` sits on one of the classification boundaries."""
    if abs(B + 1.0) <= eps:
        return True
    if params.q < 1.0:
        bs = b_star(params)
        return abs(B - bs) <= eps or abs(B + bs) <= eps
    return False


def shift_label(params: AlgebraParams, label: RepLabel, n: int) -> RepLabel:
    """Relabel the same representation with ``Psi_n`` as reference vector."""
    lam = lambda_closed(params, label, n)
    return RepLabel(label.nu0 + n, label.B if n % 2 == 0 else -label.B, max(lam, 0.0))


def _diagnose(params: AlgebraParams, label: RepLabel, window: int = 60):
    """First negative index and, failing that, a zero to renumber from."""
    negative = None
    zero = None
    for n in sorted(range(-window, window + 1), key=lambda k: (abs(k), k)):
        try:
            lam = lambda_closed(params, label, n)
            scale = lambda_scale(params, label, n)
        except SpectrumOverflow:
            continue
        if negative is None and not is_nonnegative(lam, scale):
            negative = n
        if zero is None and n != 0 and abs(lam) <= 1e-12 + LAMBDA_REL_TOL * scale:
            zero = n
    return negative, zero


def classify_label(
    params: AlgebraParams,
    label: RepLabel,
    eps: float = BOUNDARY_EPS,
    rel_tol: float = LAMBDA_REL_TOL,
    edge_unbounded: bool = False,
) -> RepClass:
    """The unique family carrying ``label`` in canonical numbering.

    Raises
    ------
    NoRepresentation
        If ``lambda0`` matches neither a forced value nor the unbounded
        constraint.  Labels whose spectrum vanishes at some ``n != 0`` are
        not renumbered; the shifted canonical label is attached as
        ``suggestion`` instead.
    """
    candidates = enumerate_classes(params, label.nu0, label.B, eps, edge_unbounded)
    e0 = thresholds(params, label.nu0, label.B, label.lambda0).e0
    scale = lambda_scale(params, RepLabel(label.nu0, label.B, 0.0), 0)
    for rc in candidates:
        if rc.admits(label.lambda0, e0, eps, rel_tol, scale):
            return rc

    negative, zero = _diagnose(params, label)
    suggestion = None
    parts = [f"no representation with q={params.q!r}, nu0={label.nu0!r}, B={label.B!r}, lambda0={label.lambda0!r}"]
    if candidates:
        allowed = ", ".join(_describe(rc) for rc in candidates)
        parts.append(f"admissible here: {allowed}")
    else:
        parts.append("no family is admissible at this (q, B)")
    if negative is not None:
        parts.append(f"lambda_{negative} < 0")
    if zero is not None:
        # lam(zero) = 0 is either a lowest-weight head at `zero` or a
        # highest-weight head at `zero - 1`
        for shift in (zero, zero - 1):
            if shift == 0:
                continue
            candidate = shift_label(params, label, shift)
            if shift == zero:
                candidate = RepLabel(candidate.nu0, candidate.B, 0.0)
            try:
                classify_label(params, candidate, eps, rel_tol, edge_unbounded)
            except NoRepresentation:
                continue
            suggestion = candidate
            parts.append(
                f"spectrum vanishes at n={zero}; renumbered label is "
                f"(nu0={candidate.nu0!r}, B={candidate.B!r}, lambda0={candidate.lambda0!r})"
            )
            break
    raise NoRepresentation("; ".join(parts), suggestion=suggestion, negative_index=negative)


def _describe(rc: RepClass) -> str:
    if rc.forced_lambda0 is not None:
        return f"{rc.family.value} (lambda0={rc.forced_lambda0!r})"
    op = ">" if rc.lambda0_strict else ">="
    return f"{rc.family.value} (lambda0 {op} {rc.lambda0_min!r})"


def equivalence_shift(params: AlgebraParams, a: RepLabel, b: RepLabel, tol: float = LAMBDA_REL_TOL) -> Optional[int]:
    """Integer ``n`` relating two unbounded labels, or None if inequivalent."""
    for label in (a, b):
        try:
            rc = classify_label(params, label)
        except NoRepresentation as exc:
            raise NotUnbounded(str(exc)) from exc
        if rc.family is not Family.UNBOUNDED:
            raise NotUnbounded(f"label {label} belongs to the {rc.family.value} family")
    diff = b.nu0 - a.nu0
    n = round(diff)
    if abs(diff - n) > tol * max(1.0, abs(diff)):
        return None
    sign = 1.0 if n % 2 == 0 else -1.0
    if abs(b.B - sign * a.B) > tol * max(1.0, abs(a.B)):
        return None
    expected = lambda_closed(params, a, n)
    if abs(b.lambda0 - expected) > tol * max(1.0, lambda_scale(params, a, n)):
        return None
    return n


def equivalent(params: AlgebraParams, a: RepLabel, b: RepLabel, tol: float = LAMBDA_REL_TOL) -> bool:
    return equivalence_shift(params, a, b, tol) is not None
