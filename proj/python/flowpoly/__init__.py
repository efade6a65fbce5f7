"""Flow polytopes, Kostant partition functions and the Morris constant term."""

import json

from ._flowpoly import *  # noqa: F401,F403
from ._flowpoly import _verify


def verify(suite, grid=""):
    """Run an identity suite; returns the decoded JSON report."""
    return json.loads(_verify(suite, grid))
