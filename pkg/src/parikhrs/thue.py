"""Thue systems with parametric rule families.

A rule family pairs two patterns ``u x v`` and ``u' x v'`` where the infix
``x`` ranges over the words of a sub-alphabet (or is absent, giving a single
finite rule).  Every pair yields two rewriting rules, one per direction.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from . import kernels
from .errors import InvalidInputError
from .search import DEFAULT_STATE_CAP, Geometry, bfs_path
from .words import DEFAULT_CLASS_LIMIT, Alphabet, anagram_bytes, parikh_vectors

FORWARD = "forward"
BACKWARD = "backward"

__all__ = [
    "AuditReport",
    "DirectStep",
    "Pattern",
    "RuleFamily",
    "ThueSystem",
    "audit_parikh_complete",
    "audit_parikh_sound",
    "direct_neighbors",
    "dist",
    "r_class",
    "shortest_path",
    "transforms",
]


@dataclass(frozen=True)
class Pattern:
    """``prefix x suffix`` with ``x`` over ``infix``; no infix means ``x`` is empty."""

    prefix: str = ""
    infix: Optional[str] = None
    suffix: str = ""

    @property
    def word(self) -> str:
        if self.infix is not None:
            raise ValueError("parametric pattern has no single word")
        return self.prefix + self.suffix

    def instance(self, x: str = "") -> str:
        return self.prefix + x + self.suffix

    def to_dict(self) -> dict:
        out = {"prefix": self.prefix}
        if self.infix is not None:
            out["infix"] = self.infix
        if self.suffix:
            out["suffix"] = self.suffix
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Pattern":
        if not isinstance(d, dict):
            raise InvalidInputError(f"pattern must be an object, got {d!r}")
        unknown = set(d) - {"prefix", "infix", "suffix"}
        if unknown:
            raise InvalidInputError(f"unknown pattern keys {sorted(unknown)}")
        return cls(d.get("prefix", ""), d.get("infix"), d.get("suffix", ""))

    def __str__(self) -> str:
        if self.infix is None:
            return self.prefix + self.suffix or "λ"
        return f"{self.prefix}[{self.infix}*]{self.suffix}"


@dataclass(frozen=True)
class RuleFamily:
    id: str
    left: Pattern
    right: Pattern

    @classmethod
    def finite(cls, id: str, left: str, right: str) -> "RuleFamily":
        return cls(id, Pattern(left), Pattern(right))

    @classmethod
    def family(cls, id: str, left: tuple[str, str], right: tuple[str, str],
               infix: str) -> "RuleFamily":
        """``left[0] x left[1] <-> right[0] x right[1]`` for ``x`` over ``infix``."""
        return cls(id, Pattern(left[0], infix, left[1]), Pattern(right[0], infix, right[1]))

    @property
    def is_finite(self) -> bool:
        return self.left.infix is None

    def to_dict(self) -> dict:
        return {"id": self.id, "left": self.left.to_dict(), "right": self.right.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> "RuleFamily":
        try:
            return cls(str(d["id"]), Pattern.from_dict(d["left"]), Pattern.from_dict(d["right"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed rule {d!r}: missing {exc}") from None

    def __str__(self) -> str:
        return f"{self.id}: {self.left} <-> {self.right}"


@dataclass(frozen=True)
class DirectStep:
    """One application of a rewriting rule at a position of ``source``."""

    rule: str
    direction: str
    position: int
    infix: str
    source: str
    result: str

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "direction": self.direction,
            "position": self.position,
            "infix": self.infix,
            "source": self.source,
            "result": self.result,
        }

    def __str__(self) -> str:
        arrow = "->" if self.direction == FORWARD else "<-"
        return (f"{self.source or '-'} => {self.result or '-'}  "
                f"[{self.rule} {arrow} at {self.position}, x={self.infix or '-'}]")


class ThueSystem:
    """An ordered alphabet with a nonempty list of rule families."""

    def __init__(self, alphabet, rules: Iterable[RuleFamily]):
        if isinstance(alphabet, str):
            alphabet = Alphabet(alphabet)
        self.alphabet: Alphabet = alphabet
        self.rules: tuple[RuleFamily, ...] = tuple(rules)
        if not self.rules:
            raise InvalidInputError("a Thue system needs at least one rule")
        ids = [r.id for r in self.rules]
        if len(set(ids)) != len(ids):
            raise InvalidInputError("rule ids must be unique")
        compiled = []
        self._slots: list[tuple[int, str]] = []
        for k, rule in enumerate(self.rules):
            (lp, ls), (rp, rs), gamma = self._check_rule(rule)
            compiled.append((lp, ls, rp, rs, gamma))
            compiled.append((rp, rs, lp, ls, gamma))
            self._slots.append((k, FORWARD))
            self._slots.append((k, BACKWARD))
        # kernel-level rules, two slots per family; any backend's RuleSet accepts them
        self.compiled_rules: tuple = tuple(compiled)
        self.kernel = kernels.RuleSet(compiled)

    def _check_rule(self, rule: RuleFamily):
        enc = self.alphabet.encode
        lf, rt = rule.left, rule.right
        if (lf.infix is None) != (rt.infix is None):
            raise InvalidInputError(f"rule {rule.id}: both sides must share the infix alphabet")
        if lf.infix is None:
            lw, rw = lf.prefix + lf.suffix, rt.prefix + rt.suffix
            if lw == rw:
                raise InvalidInputError(f"rule {rule.id}: left and right words are equal")
            return (enc(lw), b""), (enc(rw), b""), None
        if set(lf.infix) != set(rt.infix):
            raise InvalidInputError(f"rule {rule.id}: both sides must share the infix alphabet")
        gamma = enc("".join(sorted(set(lf.infix), key=self.alphabet.index)))
        return (enc(lf.prefix), enc(lf.suffix)), (enc(rt.prefix), enc(rt.suffix)), gamma

    def __reduce__(self):
        return (ThueSystem, (self.alphabet, self.rules))

    def __eq__(self, other):
        if not isinstance(other, ThueSystem):
            return NotImplemented
        return self.alphabet == other.alphabet and self.rules == other.rules

    def __hash__(self):
        return hash((self.alphabet, self.rules))

    def __repr__(self):
        return f"ThueSystem({self.alphabet.letters!r}, {len(self.rules)} rules)"

    def rule(self, rule_id: str) -> RuleFamily:
        for r in self.rules:
            if r.id == rule_id:
                return r
        raise KeyError(rule_id)

    def without(self, rule_id: str) -> "ThueSystem":
        self.rule(rule_id)
        return ThueSystem(self.alphabet, [r for r in self.rules if r.id != rule_id])

    def vector_violations(self) -> list[str]:
        """Ids of families whose two sides have different Parikh vectors."""
        bad = []
        for r in self.rules:
            lw = self.alphabet.encode(r.left.prefix + r.left.suffix)
            rw = self.alphabet.encode(r.right.prefix + r.right.suffix)
            if sorted(lw) != sorted(rw):
                bad.append(r.id)
        return bad

    @cached_property
    def preserves_parikh_vector(self) -> bool:
        return not self.vector_violations()

    # serialization

    def to_dict(self) -> dict:
        return {"alphabet": self.alphabet.letters, "rules": [r.to_dict() for r in self.rules]}

    @classmethod
    def from_dict(cls, d: dict) -> "ThueSystem":
        if not isinstance(d, dict) or "alphabet" not in d or "rules" not in d:
            raise InvalidInputError("system definition needs 'alphabet' and 'rules'")
        if not isinstance(d["rules"], list):
            raise InvalidInputError("'rules' must be a list")
        return cls(Alphabet(d["alphabet"]), [RuleFamily.from_dict(r) for r in d["rules"]])

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    # encoded-word primitives

    def _steps(self, w: bytes) -> list[DirectStep]:
        dec = self.alphabet.decode
        src = dec(w)
        out = []
        for result, slot, pos, xlen in self.kernel.expand(w):
            k, direction = self._slots[slot]
            pat = self.rules[k].left if direction == FORWARD else self.rules[k].right
            start = pos + len(pat.prefix)
            out.append(DirectStep(self.rules[k].id, direction, pos,
                                  dec(w[start:start + xlen]), src, dec(result)))
        return out

    def geometry(self, cap: int = DEFAULT_STATE_CAP) -> Geometry:
        return Geometry(self.kernel, cap)


def direct_neighbors(system: ThueSystem, w) -> list[DirectStep]:
    """Every non-identity rule application on ``w``, in rule, direction,
    position, infix-length order."""
    return system._steps(system.alphabet.encode(w))


def _related_quick(system: ThueSystem, a: bytes, b: bytes) -> bool:
    return not system.preserves_parikh_vector or sorted(a) == sorted(b)


def dist(system: ThueSystem, w, w2, cap: int = DEFAULT_STATE_CAP) -> Optional[int]:
    """Least number of direct steps from ``w`` to ``w2``; None if unreachable."""
    a, b = system.alphabet.encode(w), system.alphabet.encode(w2)
    if a == b:
        return 0
    if not _related_quick(system, a, b):
        return None
    return system.geometry(cap).distance(a, b)


def transforms(system: ThueSystem, w, w2, cap: int = DEFAULT_STATE_CAP) -> bool:
    return dist(system, w, w2, cap) is not None


def shortest_path(system: ThueSystem, w, w2, cap: int = DEFAULT_STATE_CAP) -> Optional[list[str]]:
    a, b = system.alphabet.encode(w), system.alphabet.encode(w2)
    if not _related_quick(system, a, b):
        return None
    path = bfs_path(system.kernel.successors, a, b, cap)
    return None if path is None else [system.alphabet.decode(x) for x in path]


def r_class(system: ThueSystem, w, cap: int = DEFAULT_STATE_CAP) -> list[str]:
    """The full rewrite class of ``w``, sorted by letter index."""
    comp = system.geometry(cap).component(system.alphabet.encode(w))
    return [system.alphabet.decode(x) for x in sorted(comp)]


# audits


@dataclass
class AuditReport:
    property: str
    holds: bool
    max_len: int
    witness: object = None
    words_checked: int = 0
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, DirectStep):
            w = w.to_dict()
        elif isinstance(w, tuple):
            w = list(w)
        return {
            "property": self.property,
            "holds": self.holds,
            "max_len": self.max_len,
            "witness": w,
            "words_checked": self.words_checked,
        }

    def __bool__(self) -> bool:
        return self.holds


def _map(fn, jobs: list, workers: int) -> list:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def _sound_length_job(job):
    system, length = job
    s = system.alphabet.size
    entries = kernels.parikh_entries
    expand = system.kernel.expand
    checked = 0
    for letters in itertools.product(range(s), repeat=length):
        w = bytes(letters)
        checked += 1
        key = None
        bad = None
        for idx, (result, _, _, _) in enumerate(expand(w)):
            if key is None:
                key = entries(w, s)
            if entries(result, s) != key:
                cand = (len(result), result, idx)
                if bad is None or cand < bad:
                    bad = cand
        if bad is not None:
            # words run in lexicographic order, so the first bad source is smallest
            return checked, w, bad[2]
    return checked, None, None


def audit_parikh_sound(system: ThueSystem, max_len: int, workers: int = 1) -> AuditReport:
    """Check that every direct step from a word of length <= ``max_len``
    preserves the Parikh matrix.

    M-equivalence is a congruence, so step-level preservation certifies
    that the whole rewrite relation restricted to these words is sound.
    The witness is the violating step with the shortlex-smallest source.
    """
    report = AuditReport("parikh-sound", True, max_len)
    for checked, src, bad in _map(_sound_length_job,
                                  [(system, n) for n in range(max_len + 1)], workers):
        report.words_checked += checked
        if src is not None and report.holds:
            report.holds = False
            report.witness = system._steps(src)[bad]
    return report


def _vector_jobs(alphabet: Alphabet, max_len: int) -> list[tuple[int, ...]]:
    return [v for n in range(max_len + 1) for v in parikh_vectors(alphabet.size, n)]


def _complete_vector_job(job):
    system, counts, class_limit, cap = job
    s = system.alphabet.size
    entries = kernels.parikh_entries
    by_key: dict = {}
    words = list(anagram_bytes(counts, class_limit))
    for w in words:
        by_key.setdefault(entries(w, s), []).append(w)
    geo = Geometry(system.kernel, cap)
    witness = None
    for members in by_key.values():
        if len(members) < 2:
            continue
        comp = geo.component(members[0])
        for m in members[1:]:
            if m not in comp:
                cand = (members[0], m)
                if witness is None or cand < witness:
                    witness = cand
                break
    return len(words), witness


def audit_parikh_complete(system: ThueSystem, max_len: int, workers: int = 1,
                          cap: int = DEFAULT_STATE_CAP,
                          class_limit: int = DEFAULT_CLASS_LIMIT) -> AuditReport:
    """Check that each M-class of words of length <= ``max_len`` lies inside
    one rewrite class.

    Classes are visited by length, then Parikh vector in ascending order; the
    witness ``(w, w')`` from the first failing vector pairs the smallest word
    of a split M-class with the smallest member it cannot reach.
    """
    jobs = [(system, v, class_limit, cap) for v in _vector_jobs(system.alphabet, max_len)]
    return _collect("parikh-complete", system.alphabet, max_len,
                    _map(_complete_vector_job, jobs, workers))


def _collect(prop: str, alphabet: Alphabet, max_len: int, results) -> AuditReport:
    # jobs arrive in (length, Parikh vector) order; the first witness wins
    report = AuditReport(prop, True, max_len)
    for checked, witness in results:
        report.words_checked += checked
        if witness is not None and report.holds:
            report.holds = False
            report.witness = (alphabet.decode(witness[0]), alphabet.decode(witness[1]))
    return report
