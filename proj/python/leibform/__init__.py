"""Python access to the leibform engine.

Values cross the boundary as text in the form grammar (``"-1 dx3"``,
``"e[0,0,1] e1"``) so everything printed re-parses on either side.
"""

import json

from ._core import (
    EvalError,
    ParseError,
    divfree_dim,
    divfree_dim_formula,
    endo_dim_tensor,
    eval,
    intertwiner_dim,
    normalize,
    pairing_rank,
    suite_names,
    whitehead_h1,
)
from ._core import verify_json as _verify_json

__all__ = [
    "EvalError",
    "ParseError",
    "divfree_dim",
    "divfree_dim_formula",
    "endo_dim_tensor",
    "eval",
    "intertwiner_dim",
    "normalize",
    "pairing_rank",
    "suite_names",
    "verify",
    "whitehead_h1",
]


def verify(seed=1, ring="poly", suites=(), n=0, deg_cap=3, freq_cap=2):
    """Run invariant suites and return the report as a dict."""
    return json.loads(_verify_json(seed, ring, list(suites), n, deg_cap, freq_cap))
