"""Parameter-space scans and limit probes built on the classifier."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .classifier import BOUNDARY_EPS, Family, b_star, enumerate_classes, is_boundary
from .params import AlgebraParams, RepLabel
from .spectrum import lambda_closed

# Limit behaviour per family: does it survive q -> 1, and B -> 0 (which
# stands in for alpha -> 0 at fixed gamma)?
LIMIT_TABLE = {
    Family.ONE_DIMENSIONAL: (True, False),
    Family.TWO_DIMENSIONAL_ODD: (False, False),
    Family.TWO_DIMENSIONAL_EVEN: (False, False),
    Family.FOCK: (True, True),
    Family.ANTI_FOCK: (False, False),
    Family.UNBOUNDED: (False, True),
}


@dataclass(frozen=True)
class ScanGrid:
    q_values: tuple
    b_values: tuple
    cells: tuple  # cells[i][j] is the family tuple at (q_values[i], b_values[j])
    boundary_cells: tuple

    def rows(self):
        for i, q in enumerate(self.q_values):
            for j, B in enumerate(self.b_values):
                yield q, B, self.cells[i][j], (q, B) in self.boundary_cells


def scan_grid(
    q_values: Sequence[float],
    b_values: Sequence[float],
    nu0: float = 0.0,
    alpha: float = 1.0,
    eps: float = BOUNDARY_EPS,
    workers: int = 1,
    edge_unbounded: bool = False,
) -> ScanGrid:
    q_values = tuple(float(q) for q in q_values)
    b_values = tuple(float(b) for b in b_values)
    if not q_values or not b_values:
        raise ValueError("scan grid is empty")
    params = [AlgebraParams(q, alpha) for q in q_values]

    def row(p):
        return tuple(tuple(rc.family.value for rc in enumerate_classes(p, nu0, B, eps, edge_unbounded)) for B in b_values)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            cells = tuple(pool.map(row, params))
    else:
        cells = tuple(row(p) for p in params)
    boundary = tuple((p.q, B) for p in params for B in b_values if is_boundary(p, B, eps))
    return ScanGrid(q_values, b_values, cells, boundary)


def head_indices(family: Family, head: int) -> range:
    if family is Family.ONE_DIMENSIONAL:
        return range(0, 1)
    if family is Family.TWO_DIMENSIONAL_ODD:
        return range(-1, 1)
    if family is Family.TWO_DIMENSIONAL_EVEN:
        return range(0, 2)
    if family is Family.FOCK:
        return range(0, head)
    if family is Family.ANTI_FOCK:
        return range(-(head - 1), 1)
    return range(-(head // 2), head - head // 2)


def limit_probe(
    family: Family,
    q_path: Sequence[float] = (),
    B: Optional[float] = None,
    b_path: Sequence[float] = (),
    q: Optional[float] = None,
    track: Optional[str] = None,
    offset: float = 0.0,
    nu0: float = 0.0,
    alpha: float = 1.0,
    lambda0_excess: float = 1.0,
    head: int = 4,
    eps: float = BOUNDARY_EPS,
) -> list:
    """Follow ``family`` along a path of ``q`` (fixed or tracked ``B``) or of ``B`` (fixed ``q``).

    ``track`` pins ``B`` to ``b_star(q) + offset`` (``"b_star"``) or
    ``-b_star(q) + offset`` (``"minus_b_star"``).  Unbounded labels use
    ``lambda0 = lambda0_min + lambda0_excess``.
    """
    if bool(q_path) == bool(b_path):
        raise ValueError("give exactly one of a q path or a B path")
    if q_path:
        if (B is None) == (track is None):
            raise ValueError("a q path needs exactly one of a fixed B or a tracked threshold")
        if track not in (None, "b_star", "minus_b_star"):
            raise ValueError(f"unknown threshold {track!r}")
        points = []
        for qv in q_path:
            p = AlgebraParams(qv, alpha)
            if track is None:
                points.append((p, float(B)))
            else:
                bs = b_star(p)
                points.append((p, (bs if track == "b_star" else -bs) + offset))
        probe = "q->1"
    else:
        if q is None:
            raise ValueError("a B path needs a fixed q")
        p = AlgebraParams(q, alpha)
        points = [(p, float(b)) for b in b_path]
        probe = "B->0"

    rows = []
    for p, Bv in points:
        match = [rc for rc in enumerate_classes(p, nu0, Bv, eps) if rc.family is family]
        row = {
            "probe": probe,
            "q": p.q,
            "B": Bv,
            "b_star": b_star(p),
            "exists": bool(match),
            "lambda0": None,
            "head_lo": None,
            "head": [],
        }
        if match:
            rc = match[0]
            if rc.forced_lambda0 is not None:
                lam0 = rc.forced_lambda0
            else:
                lam0 = rc.lambda0_min + lambda0_excess
            label = RepLabel(nu0, Bv, lam0)
            idx = head_indices(family, head)
            row["lambda0"] = lam0
            row["head_lo"] = idx.start
            row["head"] = [lambda_closed(p, label, n) for n in idx]
        rows.append(row)
    return rows
