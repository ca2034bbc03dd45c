"""Exact hooks, cores and quotients on partitions, beta-sets and symbols.

Partitions and beta-sets cross the boundary as lists of ints, symbols as
lists of row lists, exact rationals as canonical strings ("p/q"), and big
integers as plain ints. See the individual function docstrings.
"""

from ._abacore import *  # noqa: F401,F403
