"""Parikh rewriting systems: a Thue system plus counter subwords.

``w`` transforms into ``w'`` when ``w'`` is reachable and every counter
(an ascending run of consecutive letters) occurs as a scattered subword
equally often in both.  Counter values are read off the Parikh matrix,
whose entry ``(i, j+1)`` is the count of the run ``letters[i..j]``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import kernels
from .errors import InvalidInputError, NotRelatedError
from .search import DEFAULT_STATE_CAP, Geometry
from .thue import (
    AuditReport,
    DirectStep,
    RuleFamily,
    ThueSystem,
    _collect,
    _map,
    _vector_jobs,
)
from .words import DEFAULT_CLASS_LIMIT, Alphabet, anagram_bytes, count_subword

__all__ = [
    "Irreducibility",
    "IrreducibleStep",
    "DerivedSystem",
    "ParikhRewritingSystem",
    "audit_prs_complete",
    "audit_prs_sound",
    "counter_delta",
    "decompose",
    "derive_thue_system",
    "irreducible",
    "irreducible_graph_path",
    "long_irreducible_pair",
    "prs_transforms",
]


def _entry_index(s: int, i: int, col: int) -> int:
    # position of matrix entry (i, col), col > i, in the strictly-upper row-major key
    return sum(s - r for r in range(i)) + (col - i - 1)


class ParikhRewritingSystem:
    """``(alphabet, rules, counters)`` with Parikh-vector-preserving rules."""

    def __init__(self, system: ThueSystem, counters: Iterable[str] = ()):
        self.system = system
        self.alphabet: Alphabet = system.alphabet
        if self.alphabet.size < 2:
            raise InvalidInputError("a Parikh rewriting system needs at least two letters")
        bad = system.vector_violations()
        if bad:
            raise InvalidInputError(
                f"rule {bad[0]} does not preserve the Parikh vector"
            )
        self.counters: tuple[str, ...] = tuple(dict.fromkeys(counters))
        s = self.alphabet.size
        slots = []
        for c in self.counters:
            if len(c) < 2 or not set(c) <= set(self.alphabet.letters):
                raise InvalidInputError(f"counter {c!r} is not an ascending run of length >= 2")
            i = self.alphabet.index(c[0])
            if self.alphabet.letters[i : i + len(c)] != c:
                raise InvalidInputError(f"counter {c!r} is not an ascending run of length >= 2")
            slots.append(_entry_index(s, i, i + len(c)))
        self._slots = tuple(slots)

    @classmethod
    def from_rules(cls, alphabet, rules: Iterable[RuleFamily], counters: Iterable[str] = ()):
        return cls(ThueSystem(alphabet, rules), counters)

    def __reduce__(self):
        return (ParikhRewritingSystem, (self.system, self.counters))

    def __eq__(self, other):
        if not isinstance(other, ParikhRewritingSystem):
            return NotImplemented
        return self.system == other.system and set(self.counters) == set(other.counters)

    def __hash__(self):
        return hash((self.system, frozenset(self.counters)))

    def __repr__(self):
        return (f"ParikhRewritingSystem({self.alphabet.letters!r}, "
                f"{len(self.system.rules)} rules, counters={list(self.counters)})")

    def counter_key(self, w: bytes) -> tuple[int, ...]:
        entries = kernels.parikh_entries(w, self.alphabet.size)
        return tuple(entries[k] for k in self._slots)

    def counter_values(self, w) -> dict[str, int]:
        key = self.counter_key(self.alphabet.encode(w))
        return dict(zip(self.counters, key))

    def to_dict(self) -> dict:
        out = self.system.to_dict()
        out["counters"] = list(self.counters)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "ParikhRewritingSystem":
        counters = d.get("counters") if isinstance(d, dict) else None
        if not isinstance(counters, list):
            raise InvalidInputError("PRS definition needs a 'counters' list")
        return cls(ThueSystem.from_dict(d), counters)


@dataclass(frozen=True)
class IrreducibleStep:
    source: str
    target: str
    order: int

    def to_dict(self) -> dict:
        return {"source": self.source, "target": self.target, "order": self.order}

    def __str__(self) -> str:
        return f"{self.source} =irr=> {self.target}  (order {self.order})"


@dataclass(frozen=True)
class Irreducibility:
    irreducible: bool
    distance: int
    order: Optional[int] = None
    splitter: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "irreducible": self.irreducible,
            "distance": self.distance,
            "order": self.order,
            "splitter": self.splitter,
        }


def prs_transforms(prs: ParikhRewritingSystem, w, w2, cap: int = DEFAULT_STATE_CAP) -> bool:
    a, b = prs.alphabet.encode(w), prs.alphabet.encode(w2)
    if a == b:
        return True
    if sorted(a) != sorted(b) or prs.counter_key(a) != prs.counter_key(b):
        return False
    return prs.system.geometry(cap).distance(a, b) is not None


def counter_delta(step: DirectStep, counter: str) -> int:
    """Change in the number of occurrences of ``counter`` made by ``step``."""
    return count_subword(step.result, counter) - count_subword(step.source, counter)


# irreducibility


class _Splitter:
    """Distance queries for one PRS, with balls memoized across calls."""

    def __init__(self, prs: ParikhRewritingSystem, cap: int):
        self.prs = prs
        self.geo = prs.system.geometry(cap)
        self._keys: dict[bytes, tuple] = {}

    def key(self, w: bytes) -> tuple:
        k = self._keys.get(w)
        if k is None:
            k = self._keys[w] = self.prs.counter_key(w)
        return k

    def related_distance(self, a: bytes, b: bytes) -> int:
        d = None
        if sorted(a) == sorted(b) and self.key(a) == self.key(b):
            d = self.geo.distance(a, b)
        if d is None:
            dec = self.prs.alphabet.decode
            raise NotRelatedError(f"{dec(a)!r} does not transform into {dec(b)!r}")
        return d

    def splitter(self, a: bytes, b: bytes, d: int) -> Optional[tuple[bytes, int]]:
        """Smallest counter-equal word strictly inside a shortest path."""
        ka = self.key(a)
        best = None
        for x, t in self.geo.interval(a, b, d).items():
            if x == a or x == b or self.key(x) != ka:
                continue
            if best is None or x < best[0]:
                best = (x, t)
        return best


def irreducible(prs: ParikhRewritingSystem, w, w2, cap: int = DEFAULT_STATE_CAP) -> Irreducibility:
    """Decide whether ``w => w2`` is irreducible.

    The pair is reducible exactly when some third word with the same counter
    values lies on a shortest rewriting path between them.  Returns the order
    (the distance) when irreducible, otherwise the smallest such word.
    """
    a, b = prs.alphabet.encode(w), prs.alphabet.encode(w2)
    if a == b:
        raise NotRelatedError("identity transformations are neither reducible nor irreducible")
    sp = _Splitter(prs, cap)
    d = sp.related_distance(a, b)
    found = sp.splitter(a, b, d)
    if found is None:
        return Irreducibility(True, d, order=d)
    return Irreducibility(False, d, splitter=prs.alphabet.decode(found[0]))


def _decompose(sp: _Splitter, a: bytes, b: bytes, d: int) -> list[IrreducibleStep]:
    found = sp.splitter(a, b, d)
    if found is None:
        dec = sp.prs.alphabet.decode
        return [IrreducibleStep(dec(a), dec(b), d)]
    x, t = found
    return _decompose(sp, a, x, t) + _decompose(sp, x, b, d - t)


def decompose(prs: ParikhRewritingSystem, w, w2, cap: int = DEFAULT_STATE_CAP) -> list[IrreducibleStep]:
    """Chain of irreducible transformations from ``w`` to ``w2`` whose orders
    add up to their distance; splits at the smallest splitter each time."""
    a, b = prs.alphabet.encode(w), prs.alphabet.encode(w2)
    if a == b:
        return []
    sp = _Splitter(prs, cap)
    return _decompose(sp, a, b, sp.related_distance(a, b))


def _irreducible_targets(sp: _Splitter, u: bytes, k: int) -> list[tuple[bytes, int]]:
    ball = sp.geo.ball(u, k)
    ku = sp.key(u)
    out = []
    for v, r in ball.items():
        if v == u or r > k or sp.key(v) != ku:
            continue
        if r == 1 or sp.splitter(u, v, r) is None:
            out.append((v, r))
    out.sort()
    return out


def irreducible_graph_path(prs: ParikhRewritingSystem, w, w2, max_order: int,
                           cap: int = DEFAULT_STATE_CAP) -> Optional[list[IrreducibleStep]]:
    """Shortest chain of irreducible transformations of order <= ``max_order``
    from ``w`` to ``w2``, or None when no such chain exists."""
    if max_order < 1:
        raise InvalidInputError("max_order must be at least 1")
    a, b = prs.alphabet.encode(w), prs.alphabet.encode(w2)
    if a == b:
        return []
    sp = _Splitter(prs, cap)
    sp.related_distance(a, b)
    parent: dict[bytes, Optional[tuple[bytes, int]]] = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for v, r in _irreducible_targets(sp, u, max_order):
            if v in parent:
                continue
            parent[v] = (u, r)
            if v == b:
                dec = prs.alphabet.decode
                steps = []
                while parent[v] is not None:
                    p, r = parent[v]
                    steps.append(IrreducibleStep(dec(p), dec(v), r))
                    v = p
                return steps[::-1]
            if len(parent) > sp.geo.cap:
                from .errors import CapExceededError

                raise CapExceededError(f"path search visited more than {sp.geo.cap} words",
                                       sp.geo.cap)
            queue.append(v)
    return None


def long_irreducible_pair(n: int) -> tuple[str, str]:
    """``(a^n bcb a^n a c^n ab, b a^n c a^n ab c^n ba)``: under Salomaa's system
    an irreducible transformation of order ``n + 1``."""
    if n < 1:
        raise InvalidInputError("n must be positive")
    a, c = "a" * n, "c" * n
    return (f"{a}bcb{a}a{c}ab", f"b{a}c{a}ab{c}ba")


# bounded audits


def _partition(prs: ParikhRewritingSystem, counts, class_limit: int, cap: int):
    """Words of one anagram class with their rewrite-class label and matrix key."""
    s = prs.alphabet.size
    geo = Geometry(prs.system.kernel, cap)
    label: dict[bytes, int] = {}
    words = list(anagram_bytes(counts, class_limit))
    n = 0
    for w in words:
        if w not in label:
            for x in geo.component(w):
                label[x] = n
            n += 1
    keys = {w: kernels.parikh_entries(w, s) for w in words}
    return words, label, keys


def _prs_sound_job(job):
    prs, counts, class_limit, cap = job
    words, label, keys = _partition(prs, counts, class_limit, cap)
    cells: dict = {}
    witness = None
    for w in words:
        kw = keys[w]
        cell = (label[w], tuple(kw[k] for k in prs._slots))
        first = cells.setdefault(cell, w)
        if keys[first] != kw:
            cand = (first, w)
            if witness is None or cand < witness:
                witness = cand
    return len(words), witness


def _prs_complete_job(job):
    prs, counts, class_limit, cap = job
    words, label, keys = _partition(prs, counts, class_limit, cap)
    first: dict = {}
    witness = None
    for w in words:
        m0 = first.setdefault(keys[w], w)
        if label[m0] != label[w]:
            cand = (m0, w)
            if witness is None or cand < witness:
                witness = cand
    return len(words), witness


def audit_prs_sound(prs: ParikhRewritingSystem, max_len: int, workers: int = 1,
                    cap: int = DEFAULT_STATE_CAP,
                    class_limit: int = DEFAULT_CLASS_LIMIT) -> AuditReport:
    """Within every rewrite class of words up to ``max_len``, words with equal
    counter values must share one Parikh matrix.  Witness: a reachable,
    counter-equal pair with different matrices."""
    jobs = [(prs, v, class_limit, cap) for v in _vector_jobs(prs.alphabet, max_len)]
    return _collect("prs-sound", prs.alphabet, max_len, _map(_prs_sound_job, jobs, workers))


def audit_prs_complete(prs: ParikhRewritingSystem, max_len: int, workers: int = 1,
                       cap: int = DEFAULT_STATE_CAP,
                       class_limit: int = DEFAULT_CLASS_LIMIT) -> AuditReport:
    """Every M-class of words up to ``max_len`` must sit inside one rewrite
    class.  Counters are Parikh-matrix entries, so M-equivalent words always
    agree on them."""
    jobs = [(prs, v, class_limit, cap) for v in _vector_jobs(prs.alphabet, max_len)]
    return _collect("prs-complete", prs.alphabet, max_len,
                    _map(_prs_complete_job, jobs, workers))


# derived Thue system


@dataclass
class DerivedSystem:
    """Irreducible transformations between words up to ``max_len``."""

    max_len: int
    steps: list[IrreducibleStep]
    histogram: dict[int, int] = field(default_factory=dict)
    system: Optional[ThueSystem] = None

    def pairs(self) -> set[frozenset]:
        return {frozenset((s.source, s.target)) for s in self.steps}

    def to_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "steps": [s.to_dict() for s in self.steps],
            "system": None if self.system is None else self.system.to_dict(),
        }


def _derive_job(job):
    prs, counts, class_limit, cap = job
    words, label, keys = _partition(prs, counts, class_limit, cap)
    geo = Geometry(prs.system.kernel, cap)
    cells: dict = {}
    for w in words:
        kw = keys[w]
        cells.setdefault((label[w], tuple(kw[k] for k in prs._slots)), []).append(w)
    found = []
    for members in cells.values():
        if len(members) < 2:
            continue
        maps = {u: geo.component(u) for u in members}
        for i, u in enumerate(members):
            du = maps[u]
            for v in members[i + 1:]:
                d = du[v]
                dv = maps[v]
                if not any(du[x] + dv[x] == d for x in members if x != u and x != v):
                    found.append((u, v, d))
    return found


def derive_thue_system(prs: ParikhRewritingSystem, max_len: int, workers: int = 1,
                       cap: int = DEFAULT_STATE_CAP,
                       class_limit: int = DEFAULT_CLASS_LIMIT) -> DerivedSystem:
    """All irreducible transformations among words of length <= ``max_len``,
    returned as a finite Thue system with an order histogram."""
    jobs = [(prs, v, class_limit, cap) for v in _vector_jobs(prs.alphabet, max_len)]
    dec = prs.alphabet.decode
    steps = []
    for found in _map(_derive_job, jobs, workers):
        steps.extend(IrreducibleStep(dec(u), dec(v), d) for u, v, d in found)
    histogram = dict(sorted(Counter(s.order for s in steps).items()))
    system = None
    if steps:
        system = ThueSystem(
            prs.alphabet,
            [RuleFamily.finite(f"irr{k}", s.source, s.target) for k, s in enumerate(steps)],
        )
    return DerivedSystem(max_len, steps, histogram, system)
