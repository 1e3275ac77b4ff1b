from ._chebdesign import (
    Design,
    IntervalDomain,
    ModelSpec,
    check_chebyshev,
    compare,
    improve,
    info_matrix,
    model_from_dict,
    polynomial_model,
    rational_model,
)

__all__ = [
    "Design",
    "IntervalDomain",
    "ModelSpec",
    "check_chebyshev",
    "compare",
    "improve",
    "info_matrix",
    "model_from_dict",
    "polynomial_model",
    "rational_model",
]
