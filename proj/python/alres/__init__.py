"""Exact extended-resolvent kernels of the Ablowitz-Ladik operator with
binary potential.

The heavy lifting lives in the C++ extension; this package adds thin JSON
decoding so results arrive as plain dicts and lists.
"""

import json as _json

try:
    from ._alres import (AlresError, Potential, describe_json, entry_json, eval_entry,
                         expand_json, region_classify, transition_json, verify_json)
except ImportError:  # in-tree test runs find the extension on sys.path
    from _alres import (AlresError, Potential, describe_json, entry_json, eval_entry,
                        expand_json, region_classify, transition_json, verify_json)

__all__ = [
    "AlresError",
    "Potential",
    "describe",
    "entry",
    "eval_entry",
    "expand",
    "region_classify",
    "transition",
    "verify",
]


def describe(potential):
    """Support borders, degenerate sites, Q, and the transition matrix."""
    return _json.loads(describe_json(potential))


def entry(potential, region, m, n, limit=False):
    """One exact kernel entry with its h-exponent."""
    return _json.loads(entry_json(potential, region, m, n, limit))


def expand(potential, window=None):
    """Pole order, residue kernels, and the regular part at the pole."""
    return _json.loads(expand_json(potential, window))


def verify(potential):
    """Run every identity suite; returns (reports, all_passed)."""
    text, ok = verify_json(potential)
    return _json.loads(text), ok


def transition(potential, regularized=True):
    return _json.loads(transition_json(potential, regularized))
