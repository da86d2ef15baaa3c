"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 no representation with the
requested data.
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import List, Optional

import numpy as np

from . import __version__
from . import report as rp
from .classifier import (
    BOUNDARY_EPS,
    Family,
    NoRepresentation,
    NotUnbounded,
    b_star,
    classify_label,
    enumerate_classes,
    equivalence_shift,
    thresholds,
)
from .matrixrep import build, verify
from .params import AlgebraParams, QoscError, RepLabel, casimir_values
from .scan import LIMIT_TABLE, limit_probe, scan_grid
from .spectrum import ABS_TOL, REL_TOL, lambda_closed, lambda_recurrence, lambda_window


EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NO_REP = 2

SCAN_COLUMNS = ["q", "B", "families", "boundary"]
SPECTRUM_COLUMNS = ["n", "lambda", "mu", "nonnegative"]
MATRIX_COLUMNS = ["n", "N", "K", "a_to_prev", "adag_to_next"]
LIMIT_COLUMNS = ["probe", "q", "B", "b_star", "exists", "lambda0", "head_lo", "head"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which would collide with EXIT_NO_REP
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def parse_real(text: str) -> float:
    """Float, or an exact fraction like ``-5/3``."""
    text = text.strip()
    try:
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a real number: {text!r}") from exc


def parse_values(text: str) -> List[float]:
    """Comma list (``0.5,2``) or inclusive linspace ``start:stop:count``."""
    text = text.strip()
    if not text:
        return []
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"range must be start:stop:count, got {text!r}")
        start, stop = parse_real(parts[0]), parse_real(parts[1])
        try:
            count = int(parts[2])
        except ValueError as exc:
            raise UsageError(f"count must be an integer, got {parts[2]!r}") from exc
        if count < 0:
            raise UsageError("count must be >= 0")
        return [float(v) for v in np.linspace(start, stop, count)]
    return [parse_real(tok) for tok in text.split(",") if tok.strip()]


def parse_index_range(text: str) -> tuple:
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError as exc:
        raise UsageError(f"index range must be lo:hi, got {text!r}") from exc
    if lo > hi:
        raise UsageError(f"empty index range {text!r}")
    return lo, hi


def parse_triple(text: str) -> RepLabel:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"label must be nu0,B,lambda0, got {text!r}")
    return RepLabel(*(parse_real(p) for p in parts))


def _common(p: argparse.ArgumentParser, label: bool = True):
    p.add_argument("--q", type=str, required=True, help="deformation parameter q > 0, q != 1")
    p.add_argument("--alpha", type=str, default="1", help="coupling alpha != 0 (default 1)")
    if label:
        p.add_argument("--nu0", type=str, default="0", help="N eigenvalue of the reference vector")
        p.add_argument("--B", dest="B", type=str, default=None, help="real Klein parameter B")
        p.add_argument("--lambda0", type=str, default=None, help="a+a eigenvalue of the reference vector")
    p.add_argument("--tol", type=float, default=None, help="relative tolerance (default 1e-9)")
    p.add_argument("--eps", type=float, default=BOUNDARY_EPS, help="boundary epsilon (default 1e-12)")
    p.add_argument("--edge-unbounded", action="store_true", help="also report unbounded reps at B = -1 and B = b_star")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None, help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qosc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"qosc {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify a label or list the families at (q, B)")
    _common(p)
    p.add_argument("--window", type=int, default=5, help="spectrum excerpt half-width")
    p.add_argument("--dim", type=int, default=16, help="truncation for the residual check")

    p = sub.add_parser("spectrum", help="lambda_n over an index window")
    _common(p)
    p.add_argument("--range", dest="index_range", default="-5:5", help="lo:hi (inclusive)")
    p.add_argument("--method", choices=["recurrence", "closed"], default=None)

    for name, text in (("matrix", "matrices of a, a+, N, K"), ("verify", "defining-relation residuals")):
        p = sub.add_parser(name, help=text)
        _common(p)
        p.add_argument("--family", default=None, help="one-dim, two-dim-odd, two-dim-even, fock, anti-fock, unbounded")
        p.add_argument("--dim", type=int, default=None)
        p.add_argument("--lo", type=int, default=None, help="first basis index (unbounded family only)")

    p = sub.add_parser("scan", help="family sets over a (q, B) grid")
    p.add_argument("--q", required=True, help="q values: comma list or start:stop:count")
    p.add_argument("--B", dest="B", required=True, help="B values: comma list or start:stop:count")
    p.add_argument("--nu0", default="0")
    p.add_argument("--alpha", default="1")
    p.add_argument("--eps", type=float, default=BOUNDARY_EPS)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--edge-unbounded", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out", default=None)

    p = sub.add_parser("equiv", help="equivalence of two doubly-unbounded labels")
    _common(p, label=False)
    p.add_argument("--a", dest="label_a", required=True, help="nu0,B,lambda0")
    p.add_argument("--b", dest="label_b", required=True, help="nu0,B,lambda0")

    p = sub.add_parser("limits", help="follow a family towards q -> 1 or B -> 0")
    p.add_argument("--family", required=True)
    p.add_argument("--q-path", default=None, help="q values approaching 1")
    p.add_argument("--B-path", dest="b_path", default=None, help="B values approaching 0 (needs --q)")
    p.add_argument("--q", default=None, help="fixed q for a B path")
    p.add_argument("--B", dest="B", default=None, help="fixed B for a q path")
    p.add_argument("--track", choices=["b_star", "minus_b_star"], default=None, help="pin B to +-b_star(q)")
    p.add_argument("--offset", default="0", help="added to the tracked threshold")
    p.add_argument("--nu0", default="0")
    p.add_argument("--alpha", default="1")
    p.add_argument("--lambda0-excess", dest="lambda0_excess", default="1")
    p.add_argument("--head", type=int, default=4)
    p.add_argument("--eps", type=float, default=BOUNDARY_EPS)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    return parser


def _value_flags(parser: argparse.ArgumentParser) -> tuple:
    flags, known = set(), set()
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sp in action.choices.values():
                f, k = _value_flags(sp)
                flags |= f
                known |= k
            continue
        known.update(action.option_strings)
        if action.nargs != 0:
            flags.update(action.option_strings)
    return flags, known


def glue_negative_values(argv: List[str], parser: argparse.ArgumentParser) -> List[str]:
    """Turn ``--B -5/3`` into ``--B=-5/3`` so argparse does not read it as a flag."""
    flags, known = _value_flags(parser)
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in flags and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1] not in known:
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _tolerances(args) -> dict:
    return {"rel_tol": args.tol if getattr(args, "tol", None) else REL_TOL, "abs_tol": ABS_TOL, "boundary_eps": args.eps}


def _params(args) -> AlgebraParams:
    return AlgebraParams(parse_real(args.q), parse_real(args.alpha))


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _classes_csv(classes) -> str:
    rows = []
    for rc in classes:
        d = rc.to_dict()
        rows.append([d["family"], d["index_lo"], d["index_hi"], d["forced_lambda0"], d["lambda0_min"], d["lambda0_strict"]])
    return rp.to_csv(["family", "index_lo", "index_hi", "forced_lambda0", "lambda0_min", "lambda0_strict"], rows)


def cmd_classify(args) -> int:
    params = _params(args)
    tol = _tolerances(args)
    if args.B is None:
        raise UsageError("classify needs --B")
    nu0, B = parse_real(args.nu0), parse_real(args.B)
    if args.lambda0 is None:
        classes = enumerate_classes(params, nu0, B, args.eps, args.edge_unbounded)
        label = RepLabel(nu0, B, 0.0)
        report = rp.make_report(
            "classify",
            params,
            None,
            tol,
            classes=[rc.to_dict() for rc in classes],
            thresholds=rp.thresholds_dict(thresholds(params, nu0, B)),
            casimir=rp.casimir_dict(casimir_values(params, label)),
        )
        text = rp.to_json(report) if args.format == "json" else _classes_csv(classes)
        _emit(args, text)
        return EXIT_OK

    label = RepLabel(nu0, B, parse_real(args.lambda0))
    rc = classify_label(params, label, args.eps, tol["rel_tol"], args.edge_unbounded)
    lo, hi = rc.clipped_range(args.window)
    sections = {
        "class": rc.to_dict(),
        "thresholds": rp.thresholds_dict(thresholds(params, nu0, B, label.lambda0)),
        "casimir": rp.casimir_dict(casimir_values(params, label)),
        "spectrum": rp.spectrum_dict(lambda_window(params, label, lo, hi)),
    }
    quad = build(params, label, rc, None if rc.family.is_finite else max(args.dim, 3))
    sections["residuals"] = rp.residuals_dict(verify(quad, params))
    report = rp.make_report("classify", params, label, tol, **sections)
    text = rp.to_json(report) if args.format == "json" else _classes_csv([rc])
    _emit(args, text)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    params = _params(args)
    tol = _tolerances(args)
    if args.B is None:
        raise UsageError("spectrum needs --B")
    label = RepLabel(parse_real(args.nu0), parse_real(args.B), parse_real(args.lambda0 or "0"))
    lo, hi = parse_index_range(args.index_range)
    method = args.method or ("recurrence" if lo <= 0 <= hi else "closed")
    if method == "recurrence":
        if not lo <= 0 <= hi:
            raise UsageError("the recurrence needs a window containing 0")
        spectrum = lambda_recurrence(params, label, lo, hi, tol["rel_tol"], tol["abs_tol"])
    else:
        spectrum = lambda_window(params, label, lo, hi, tol["rel_tol"], tol["abs_tol"])
    negative = set(spectrum.negative_indices(tol["rel_tol"], tol["abs_tol"]))
    if args.format == "csv":
        rows = [[n, v, lambda_closed(params, label, n + 1), n not in negative] for n, v in zip(spectrum.indices, spectrum.values)]
        _emit(args, rp.to_csv(SPECTRUM_COLUMNS, rows))
    else:
        report = rp.make_report("spectrum", params, label, tol, spectrum=rp.spectrum_dict(spectrum), method=method)
        _emit(args, rp.to_json(report))
    return EXIT_OK


_DEFAULT_B = {
    Family.ONE_DIMENSIONAL: lambda p: -1.0,
    Family.TWO_DIMENSIONAL_ODD: b_star,
    Family.TWO_DIMENSIONAL_EVEN: lambda p: -b_star(p),
}


def _select(args, params):
    """Resolve (label, RepClass) from --family/--B/--lambda0."""
    nu0 = parse_real(args.nu0)
    family = Family.parse(args.family) if args.family else None
    if args.B is not None:
        B = parse_real(args.B)
    elif family in _DEFAULT_B:
        B = _DEFAULT_B[family](params)
    else:
        raise UsageError("--B is required unless --family fixes it")
    lambda0 = parse_real(args.lambda0) if args.lambda0 is not None else None

    if family is None:
        label = RepLabel(nu0, B, lambda0 or 0.0)
        return label, classify_label(params, label, args.eps, edge_unbounded=args.edge_unbounded)

    matches = [rc for rc in enumerate_classes(params, nu0, B, args.eps, args.edge_unbounded) if rc.family is family]
    if not matches:
        raise NoRepresentation(f"no {family.value} representation at q={params.q!r}, B={B!r}")
    rc = matches[0]
    if lambda0 is None:
        if rc.forced_lambda0 is None:
            raise UsageError(f"the {family.value} family needs --lambda0")
        lambda0 = rc.forced_lambda0
    label = RepLabel(nu0, B, lambda0)
    e0 = thresholds(params, nu0, B, lambda0).e0
    if not rc.admits(lambda0, e0, args.eps):
        raise NoRepresentation(f"lambda0={lambda0!r} is not admissible for the {family.value} family here")
    return label, rc


def _matrix_csv(quad) -> str:
    n_diag = np.diag(quad.n_op)
    k_diag = np.diag(quad.k_op)
    rows = []
    for row, n in enumerate(quad.indices):
        down = float(quad.a[row - 1, row]) if row > 0 else None
        up = float(quad.a_dag[row + 1, row]) if row + 1 < quad.dim else None
        rows.append([n, float(n_diag[row]), float(k_diag[row]), down, up])
    return rp.to_csv(MATRIX_COLUMNS, rows)


def cmd_matrix(args) -> int:
    params = _params(args)
    label, rc = _select(args, params)
    quad = build(params, label, rc, args.dim, args.lo)
    if args.format == "csv":
        _emit(args, _matrix_csv(quad))
        return EXIT_OK
    report = rp.make_report(
        "matrix",
        params,
        label,
        _tolerances(args),
        **{"class": rc.to_dict()},
        index_offset=quad.index_offset,
        matrices={
            "a": quad.a.tolist(),
            "a_dag": quad.a_dag.tolist(),
            "N": quad.n_op.tolist(),
            "K": quad.k_op.tolist(),
        },
    )
    _emit(args, rp.to_json(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _params(args)
    tol = _tolerances(args)
    label, rc = _select(args, params)
    dim = args.dim if args.dim is not None or rc.family.is_finite else 32
    quad = build(params, label, rc, dim, args.lo)
    res = verify(quad, params)
    limit = tol["rel_tol"] if not rc.family.is_finite else 1e-12
    passed = res.passes(limit)
    if args.format == "csv":
        d = rp.residuals_dict(res)
        _emit(args, rp.to_csv(list(d) + ["passed"], [list(d.values()) + [passed]]))
    else:
        report = rp.make_report(
            "verify",
            params,
            label,
            tol,
            **{"class": rc.to_dict()},
            residuals=rp.residuals_dict(res),
            casimir=rp.casimir_dict(casimir_values(params, label)),
            passed=passed,
        )
        _emit(args, rp.to_json(report))
    return EXIT_OK


def cmd_scan(args) -> int:
    qs, bs = parse_values(args.q), parse_values(args.B)
    if not qs or not bs:
        raise UsageError("scan grid is empty")
    grid = scan_grid(qs, bs, parse_real(args.nu0), parse_real(args.alpha), args.eps, args.workers, args.edge_unbounded)
    if args.format == "csv":
        rows = [[q, B, "+".join(fams) if fams else "none", boundary] for q, B, fams, boundary in grid.rows()]
        _emit(args, rp.to_csv(SCAN_COLUMNS, rows))
    else:
        report = rp.make_report(
            "scan",
            None,
            None,
            {"boundary_eps": args.eps},
            grid={
                "q_values": list(grid.q_values),
                "b_values": list(grid.b_values),
                "cells": [[list(c) for c in row] for row in grid.cells],
                "boundary_cells": [list(c) for c in grid.boundary_cells],
            },
        )
        _emit(args, rp.to_json(report))
    return EXIT_OK


def cmd_equiv(args) -> int:
    params = _params(args)
    a, b = parse_triple(args.label_a), parse_triple(args.label_b)
    tol = _tolerances(args)
    shift = equivalence_shift(params, a, b, tol["rel_tol"])
    if args.format == "csv":
        _emit(args, rp.to_csv(["equivalent", "shift"], [[shift is not None, shift]]))
    else:
        report = rp.make_report(
            "equiv",
            params,
            None,
            tol,
            labels=[rp.label_dict(a), rp.label_dict(b)],
            equivalent=shift is not None,
            shift=shift,
        )
        _emit(args, rp.to_json(report))
    return EXIT_OK


def cmd_limits(args) -> int:
    family = Family.parse(args.family)
    q_path = parse_values(args.q_path) if args.q_path else []
    b_path = parse_values(args.b_path) if args.b_path else []
    if args.q_path is not None and not q_path or args.b_path is not None and not b_path:
        raise UsageError("limit path is empty")
    rows = limit_probe(
        family,
        q_path=q_path,
        B=parse_real(args.B) if args.B is not None else None,
        b_path=b_path,
        q=parse_real(args.q) if args.q is not None else None,
        track=args.track,
        offset=parse_real(args.offset),
        nu0=parse_real(args.nu0),
        alpha=parse_real(args.alpha),
        lambda0_excess=parse_real(args.lambda0_excess),
        head=args.head,
        eps=args.eps,
    )
    q_to_1, b_to_0 = LIMIT_TABLE[family]
    if args.format == "csv":
        out = [[r["probe"], r["q"], r["B"], r["b_star"], r["exists"], r["lambda0"], r["head_lo"],
                " ".join(rp.fmt_float(v) for v in r["head"])] for r in rows]
        _emit(args, rp.to_csv(LIMIT_COLUMNS, out))
    else:
        report = rp.make_report(
            "limits",
            None,
            None,
            {"boundary_eps": args.eps},
            family=family.value,
            table={"q->1": "exists" if q_to_1 else "does not exist", "B->0": "exists" if b_to_0 else "does not exist"},
            path=rows,
        )
        _emit(args, rp.to_json(report))
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "spectrum": cmd_spectrum,
    "matrix": cmd_matrix,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "equiv": cmd_equiv,
    "limits": cmd_limits,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(glue_negative_values(argv, parser))
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (NoRepresentation, NotUnbounded) as exc:
        if isinstance(exc, NotUnbounded):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        print(f"no representation: {exc}", file=sys.stderr)
        if exc.suggestion is not None:
            s = exc.suggestion
            print(f"hint: try --nu0 {s.nu0!r} --B {s.B!r} --lambda0 {s.lambda0!r}", file=sys.stderr)
        return EXIT_NO_REP
    except (UsageError, QoscError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
