"""Mixed-graph cages: constructions, girth, canonical forms, bounds, searches."""

from ._mixcage import *  # noqa: F401,F403
from ._mixcage import MixedGraph, construct, girth, search  # noqa: F401
