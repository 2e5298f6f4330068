"""Python access to the imcrystal core.

Elements are passed as text, e.g. ``"x[0]*x[2]"``; results come back in the
same grammar.
"""

import json

from ._imcrystal import (
    DEFAULT_SEED,
    ArithmeticError,
    DomainError,
    Error,
    ParseError,
    act,
    gram,
    normalize,
    omega,
    pair,
    suite_names,
    verify_json,
)


def verify(suite, **kwargs):
    """Run a verification suite and return its report as a dict."""
    return json.loads(verify_json(suite, **kwargs))


__all__ = [
    "DEFAULT_SEED",
    "ArithmeticError",
    "DomainError",
    "Error",
    "ParseError",
    "act",
    "gram",
    "normalize",
    "omega",
    "pair",
    "suite_names",
    "verify",
    "verify_json",
]
