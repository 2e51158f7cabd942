"""Cartan matrices of the classical Lie (super)algebras and their exact inverses.

Matrices are lists of rows of exact rational strings ("p/q", "/q" omitted for
integers); use `fractions.Fraction` to compute with them.
"""

from ._core import (
    InvalidParamsError,
    SingularError,
    build,
    check,
    describe,
    from_json,
    inverse,
    inverse_entry,
    invert,
    to_json,
    verify_window,
    window,
)

__all__ = [
    "InvalidParamsError",
    "SingularError",
    "build",
    "check",
    "describe",
    "from_json",
    "inverse",
    "inverse_entry",
    "invert",
    "to_json",
    "verify_window",
    "window",
]
