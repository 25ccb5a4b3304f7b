"""Brute-force oracles shared across test modules.

Everything here is deliberately independent of the engine's algorithms:
subword scans instead of the lifting recursion, plain dict arithmetic
instead of Character, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import random

from schubert import Character, WeylElement, e, from_word
from schubert.rootsys import RootSystem, Weight


def subword_bruhat_leq(rs: RootSystem, u: WeylElement, w: WeylElement) -> bool:
    """u <= w iff some subword of a fixed reduced word of w multiplies to u."""
    word = w.reduced_word()
    n = len(word)
    for mask in range(1 << n):
        sub = tuple(word[i] for i in range(n) if mask >> i & 1)
        if from_word(rs, sub) == u:
            return True
    return False


def random_small_character(rs: RootSystem, rng: random.Random,
                           max_terms: int = 4) -> Character:
    """Virtual character with fw coordinates in [-1, 1]; keeps sweeps cheap."""
    total = Character.zero()
    for _ in range(rng.randint(1, max_terms)):
        fw = tuple(rng.randint(-1, 1) for _ in range(rs.rank))
        total = total + e(Weight(fw), rng.choice((-2, -1, 1, 2)))
    return total


def random_element(rs: RootSystem, rng: random.Random,
                   max_letters: int = 12) -> WeylElement:
    word = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, max_letters)))
    return from_word(rs, word)
