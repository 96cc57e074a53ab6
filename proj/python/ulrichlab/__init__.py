"""Exact invariants of graded modules over numerical semigroup rings.

The compiled core exposes a small expression language (``eval``,
``classify``), the registered theorem checkers (``verify``,
``verifier_ids``), the frozen example corpus (``paper_report``), and
session switches for the coefficient field and the degree-window cap.
Results are plain dicts with the same keys the CLI emits in --json mode;
exact rationals come back as ``fractions.Fraction``.
"""

from ._core import (
    Error,
    __version__,
    classify,
    eval,
    field,
    paper_report,
    set_field,
    set_window_margin,
    verifier_ids,
    verify,
    window_margin,
)

__all__ = [
    "Error",
    "__version__",
    "classify",
    "eval",
    "field",
    "paper_report",
    "set_field",
    "set_window_margin",
    "verifier_ids",
    "verify",
    "window_margin",
]
