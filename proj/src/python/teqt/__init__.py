"""Python bindings for the teqt toolchain."""

from ._teqt import (
    ATerm,
    AType,
    Diagnostic,
    Formula,
    ParseError,
    ProofFailure,
    Sort,
    Term,
    Type,
    check_proofs,
    erase,
    erase_type,
    evaluate,
    formula_of,
    infer,
    is_value,
    joinable,
    obligation,
    run,
    sort_of,
    step,
    trans_term,
)

__all__ = [
    "ATerm",
    "AType",
    "Diagnostic",
    "Formula",
    "ParseError",
    "ProofFailure",
    "Sort",
    "Term",
    "Type",
    "check_proofs",
    "erase",
    "erase_type",
    "evaluate",
    "formula_of",
    "infer",
    "is_value",
    "joinable",
    "obligation",
    "run",
    "sort_of",
    "step",
    "trans_term",
]
