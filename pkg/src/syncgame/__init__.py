"""Synchronization games on finite automata.

Algebraic analysis of transition monoids (Green's relations, DS
membership, semilattice decomposition), exact game solving, a
constructive round-based winning strategy for the synchronizing player,
and an HTTP service plus CLI for interactive play.
"""

from .automata import Dfa, builtin, parse_dfa, serialize_dfa

__all__ = ["Dfa", "builtin", "parse_dfa", "serialize_dfa"]
