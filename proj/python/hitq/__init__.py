"""Hit problem, invariants and the algebraic transfer over F_2 (C++ core)."""

import json as _json

from ._hitq import *  # noqa: F401,F403
from ._hitq import _transfer_report_json, _verify


def transfer_report(q, n, use_cache=True):
    """Image of the transfer in degree n as a dict."""
    return _json.loads(_transfer_report_json(q, n, use_cache))


def verify(suite="all"):
    """Run a named check suite; returns a list of result dicts."""
    return _verify(suite)
