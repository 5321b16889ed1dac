"""Binomial edge ideals of complete bipartite graphs: closed-form invariants and a linear-algebra oracle."""
from .errors import InvalidArgument, TooLarge, Unsupported

__version__ = "0.1.0"
