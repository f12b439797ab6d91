"""Graph inverse semigroups and polycyclic monoids."""

import json

from ._core import Graph, InputError, poly_multiply, poly_reduce, prefix_code_word
from ._core import verify_confluence as _verify_confluence

__all__ = [
    "Graph",
    "InputError",
    "poly_multiply",
    "poly_reduce",
    "prefix_code_word",
    "verify",
    "verify_confluence",
]

__version__ = "0.1.0"


def verify(graph, suite="all", max_len=3, trunc=5, seed=1):
    """Run a verification suite and return its report as a dict."""
    return json.loads(graph.verify(suite, max_len, trunc, seed))


def verify_confluence(seed=1, samples=10000):
    """Run the rewriting suite and return its report as a dict."""
    return json.loads(_verify_confluence(seed, samples))
