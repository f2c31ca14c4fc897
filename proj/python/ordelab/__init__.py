"""Posets, join-semilattices, ideal chains and their embeddings."""

from ._ordelab import *  # noqa: F401,F403
from ._ordelab import __doc__  # noqa: F401
