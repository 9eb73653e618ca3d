"""Constructions and brute-force cross-checks that sit beside the engines.

Nothing here is used by the engines themselves; the functions build the
special word pairs the theory talks about and recompute quantities by
independent routes so tests can compare the two.
"""

from __future__ import annotations

from itertools import product
from typing import Optional

from .errors import InvalidInputError, NotRelatedError
from .presets import ab_family, bc_family, swap_ac, thue_preset
from .prs import ParikhRewritingSystem, prs_transforms
from .search import DEFAULT_STATE_CAP
from .thue import ThueSystem, dist, transforms
from .words import Alphabet, count_subword, project

__all__ = [
    "ambiguous_word",
    "ambiguous_word_holds",
    "build_ambiguous_pair",
    "incompleteness_witness",
    "projection_bound",
    "projection_systems",
    "subword_disagreement",
]


def build_ambiguous_pair(w1: str, w1p: str, n: int) -> tuple[str, str]:
    """Double a seed pair ``n - 1`` times: ``(w, w') -> (w w', w' w)``.

    For distinct seeds with equal Parikh vectors the results stay distinct
    and agree on every subword of length at most ``n``.
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    if w1 == w1p:
        raise InvalidInputError("seed words must differ")
    if sorted(w1) != sorted(w1p):
        raise InvalidInputError("seed words must have equal Parikh vectors")
    w, wp = w1, w1p
    for _ in range(n - 1):
        w, wp = w + wp, wp + w
    return w, wp


def subword_disagreement(w: str, w2: str, max_len: int) -> Optional[str]:
    """First ``u`` (by length, then glyph order) with ``|u| <= max_len`` whose
    count differs between ``w`` and ``w2``; None when all agree."""
    letters = sorted(set(w) | set(w2))
    for k in range(max_len + 1):
        for u in product(letters, repeat=k):
            u = "".join(u)
            if count_subword(w, u) != count_subword(w2, u):
                return u
    return None


def incompleteness_witness(alphabet, n: int) -> tuple[str, str]:
    """``(ab a^(n-1) ba, ba a^(n-1) ab)``: M-equivalent words whose factors of
    length <= ``n`` are all M-unambiguous, so no sound system whose rule
    words are at most ``n`` long can connect them."""
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    if n < 1:
        raise InvalidInputError("n must be positive")
    if alphabet.size < 2:
        raise InvalidInputError("need at least two letters")
    a, b = alphabet.letters[0], alphabet.letters[1]
    mid = a * (n - 1)
    return (a + b + mid + b + a, b + a + mid + a + b)


def ambiguous_word(prs: ParikhRewritingSystem) -> tuple[str, str]:
    """A pair of distinct transformable words, built by doubling the first
    rule's shortest instance up to the alphabet size."""
    rule = prs.system.rules[0]
    left, right = rule.left.instance(""), rule.right.instance("")
    return build_ambiguous_pair(left, right, prs.alphabet.size)


def projection_systems() -> dict[str, ThueSystem]:
    """The two-letter shadows of Salomaa's system on each letter pair."""
    return {
        "ab": ThueSystem("ab", [ab_family(infix="ab")]),
        "bc": ThueSystem("bc", [bc_family(infix="bc")]),
        "ac": ThueSystem("ac", [swap_ac()]),
    }


def projection_bound(w: str, w2: str, cap: int = DEFAULT_STATE_CAP) -> int:
    """Lower bound on the Salomaa distance: the sum of the distances between
    the projections onto ``{a,b}``, ``{b,c}`` and ``{a,c}``."""
    if not transforms(thue_preset("salomaa"), w, w2, cap):
        raise NotRelatedError(f"{w!r} does not rewrite to {w2!r}")
    total = 0
    for pair, system in projection_systems().items():
        d = dist(system, project(w, pair), project(w2, pair), cap)
        if d is None:
            raise NotRelatedError(f"projections onto {pair!r} are not related")
        total += d
    return total


def ambiguous_word_holds(prs: ParikhRewritingSystem) -> bool:
    w, wp = ambiguous_word(prs)
    return w != wp and prs_transforms(prs, w, wp)
