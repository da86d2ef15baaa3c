"""Representations of the q-deformed Calogero-type oscillator algebra."""

__version__ = "0.1.0"

from .params import (  # noqa: E402
    AlgebraParams,
    AlphaZero,
    CasimirValues,
    InvalidLabel,
    NonRealB,
    QOutOfRange,
    QoscError,
    RepLabel,
    b_from_gamma,
    casimir_values,
    make_params,
)
from .spectrum import Spectrum, lambda_closed, lambda_recurrence, lambda_window, mu  # noqa: E402
from .classifier import (  # noqa: E402
    Family,
    NoRepresentation,
    NotUnbounded,
    RepClass,
    ThresholdSet,
    classify_label,
    enumerate_classes,
    equivalent,
    thresholds,
)
from .matrixrep import OperatorQuad, ResidualReport, build, positivity_scan, verify  # noqa: E402

__all__ = [
    "AlgebraParams",
    "AlphaZero",
    "CasimirValues",
    "Family",
    "InvalidLabel",
    "NoRepresentation",
    "NonRealB",
    "NotUnbounded",
    "OperatorQuad",
    "QOutOfRange",
    "QoscError",
    "RepClass",
    "RepLabel",
    "ResidualReport",
    "Spectrum",
    "ThresholdSet",
    "b_from_gamma",
    "build",
    "casimir_values",
    "classify_label",
    "enumerate_classes",
    "equivalent",
    "lambda_closed",
    "lambda_recurrence",
    "lambda_window",
    "make_params",
    "mu",
    "positivity_scan",
    "thresholds",
    "verify",
]
