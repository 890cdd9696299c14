"""Domination number versus least signless-Laplacian eigenvalue toolkit."""

from .errors import QdomError
from .graph import Graph, build, from_graph6, profile, to_graph6

__all__ = ["Graph", "QdomError", "build", "from_graph6", "profile", "to_graph6"]
__version__ = "0.1.0"
