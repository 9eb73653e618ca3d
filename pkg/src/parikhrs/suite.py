"""One-shot runner for the worked examples the library is checked against.

Each entry recomputes a published value (a matrix, a witness pair, an order,
a distance) and compares it exactly.  Entries are independent; with several
workers they run in separate processes and the report is assembled in entry
order either way.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Callable, Optional

from .errors import CapExceededError
from .matrix import (
    m_equivalent,
    parikh_matrix,
    parikh_matrix_product,
    verify_matrix_theorem,
)
from .oracles import build_ambiguous_pair, projection_bound, subword_disagreement
from .presets import R1_PAIRS, R2_PAIRS, ab_family, prs_preset, r1r2_rules, thue_preset
from .prs import (
    ParikhRewritingSystem,
    audit_prs_complete,
    audit_prs_sound,
    counter_delta,
    decompose,
    derive_thue_system,
    irreducible,
    irreducible_graph_path,
    long_irreducible_pair,
    prs_transforms,
)
from .thue import (
    ThueSystem,
    audit_parikh_complete,
    audit_parikh_sound,
    direct_neighbors,
    dist,
)
from .words import Alphabet, count_subword

BUDGETS = ("zero", "default", "full")

# exit codes shared with the CLI
EXIT_OK, EXIT_VIOLATED, EXIT_CAP = 0, 1, 2


class Context:
    """Preset lookup with optional replacements (used for mutation runs)."""

    def __init__(self, overrides: Optional[dict] = None):
        self.overrides = dict(overrides or {})

    def thue(self, name: str) -> ThueSystem:
        return self.overrides.get(name) or thue_preset(name)

    def prs(self, name: str) -> ParikhRewritingSystem:
        return self.overrides.get(name) or prs_preset(name)


@dataclass
class Check:
    passed: bool
    witness: Any = None
    detail: str = ""


@dataclass(frozen=True)
class Entry:
    id: int
    anchor: str
    title: str
    limit: float
    run: Callable[[Context], Check]
    budget: str = "default"
    repeat: int = 1


def _all(*pairs) -> Check:
    # pairs of (label, ok); the first failing label becomes the detail
    for label, ok in pairs:
        if not ok:
            return Check(False, detail=label)
    return Check(True)


def _matrix_example(ctx):
    m = parikh_matrix(Alphabet("abc"), "abcbac").to_list()
    expected = [[1, 2, 2, 3], [0, 1, 2, 3], [0, 0, 1, 2], [0, 0, 0, 1]]
    return Check(m == expected, witness=m)


def _subword_counts(ctx):
    got = (count_subword("aabab", "ab"), count_subword("baacbc", "abc"),
           count_subword("abcbac", ""))
    return Check(got == (5, 2, 1), witness=list(got))


def _matrix_theorem(ctx):
    rng = random.Random(20240611)
    for _ in range(500):
        alphabet = Alphabet("abcd"[: rng.randint(2, 4)])
        u = "".join(rng.choice(alphabet.letters) for _ in range(rng.randint(0, 6)))
        v = "".join(rng.choice(alphabet.letters) for _ in range(rng.randint(0, 6)))
        w = u + v
        if not verify_matrix_theorem(alphabet, w):
            return Check(False, witness=w, detail="entry does not count its subword")
        if parikh_matrix(alphabet, w) != parikh_matrix_product(alphabet, u) @ parikh_matrix_product(alphabet, v):
            return Check(False, witness=[u, v], detail="morphism law fails")
    return Check(True)


def _audit_pair(report_s, report_c) -> Check:
    for r in (report_s, report_c):
        if not r.holds:
            return Check(False, witness=list(r.witness), detail=f"{r.property} fails")
    return Check(True)


def _binary_swap_prs(ctx):
    p = ctx.prs("binary-swap-ab")
    return _audit_pair(audit_prs_sound(p, 8), audit_prs_complete(p, 8))


def _binary_family_thue(ctx):
    t = ctx.thue("binary-ex1506b")
    return _audit_pair(audit_parikh_sound(t, 8), audit_parikh_complete(t, 8))


def _ternary_incomplete(ctx):
    t = ctx.thue("ternary-ex0701c")
    rep = audit_parikh_complete(t, 8)
    w = rep.witness and list(rep.witness)
    long_pair = ("babcbabcbabcbab", "bbacabbcabbcbba")
    return _all(
        (f"short witness {w}", w == ["abbcbacb", "bacbabbc"]),
        ("15-letter pair not M-equivalent", m_equivalent(t.alphabet, *long_pair)),
        ("15-letter pair reachable", dist(t, *long_pair) is None),
    )


def _salomaa_prs(ctx):
    p = ctx.prs("salomaa-abc")
    return _audit_pair(audit_prs_sound(p, 9), audit_prs_complete(p, 9))


def _binary_swap_derived(ctx):
    p = ctx.prs("binary-swap-ab")
    derived = derive_thue_system(p, 8)
    family = ThueSystem("ab", [ab_family()])
    expected = set()
    for n in range(9):
        for w in product("ab", repeat=n):
            for step in direct_neighbors(family, "".join(w)):
                expected.add(frozenset((step.source, step.result)))
    return _all(
        ("derived steps differ from the abxba family", derived.pairs() == expected),
        (f"orders {derived.histogram}", set(derived.histogram) == {2}),
    )


def _binary_subsets(ctx):
    rules = R1_PAIRS + R2_PAIRS
    checked = 0
    for r in range(2, len(rules) + 1):
        for subset in combinations(rules, r):
            k1 = sum(p in R1_PAIRS for p in subset)
            k2 = len(subset) - k1
            if not (k1 and k2 and max(k1, k2) >= 2):
                continue
            p = ParikhRewritingSystem(ThueSystem("ab", r1r2_rules(subset)), ["ab"])
            check = _audit_pair(audit_prs_sound(p, 7), audit_prs_complete(p, 7))
            if not check.passed:
                check.detail += f" for {subset}"
                return check
            checked += 1
    thin = ParikhRewritingSystem(
        ThueSystem("ab", r1r2_rules([("abb", "bab"), ("baa", "aba")])), ["ab"]
    )
    rep = audit_prs_complete(thin, 7)
    w = rep.witness and list(rep.witness)
    return _all(
        (f"thin system witness {w}", w == ["abba", "baab"]),
        (f"only {checked} subsets", checked == 40),
    )


def _binary_order_three(ctx):
    p = ctx.prs("binary-R1R2-ab")
    w, w2 = "bbaaabaab", "abbabaaba"
    res = irreducible(p, w, w2)
    path = irreducible_graph_path(p, w, w2, 2)
    return _all(
        (f"dist {res.distance}", res.distance == 3),
        ("reducible", res.irreducible and res.order == 3),
        ("no order-2 path", path is not None),
    )


def _long_pairs(ctx):
    p = ctx.prs("salomaa-abc")
    for n in (1, 2):
        w, w2 = long_irreducible_pair(n)
        if not prs_transforms(p, w, w2):
            return Check(False, witness=[w, w2], detail="not related")
        res = irreducible(p, w, w2)
        if not (res.irreducible and res.order == n + 1):
            return Check(False, witness=res.to_dict(), detail=f"n={n}")
    return Check(True)


def _order_three_isolated(ctx):
    p = ctx.prs("salomaa-abc")
    w, w2 = "aabcbaaaccab", "baacaaabccba"
    res = irreducible(p, w, w2)
    path = irreducible_graph_path(p, w, w2, 2)
    return _all(
        (f"irreducibility {res.to_dict()}", res.irreducible and res.order == 3),
        ("order-2 path exists", path is None),
    )


def _order_three_bridged(ctx):
    p = ctx.prs("salomaa-abc")
    w, w2 = "abcbcbacab", "bacabcbcba"
    res = irreducible(p, w, w2)
    path = irreducible_graph_path(p, w, w2, 2)
    return _all(
        (f"irreducibility {res.to_dict()}", res.irreducible and res.order == 3),
        ("no order-2 path", path is not None),
    )


def _projection(ctx):
    t = ctx.thue("salomaa")
    b1, d1 = projection_bound("abbcacb", "baacbbc"), dist(t, "abbcacb", "baacbbc")
    b2, d2 = (projection_bound("bcacabcabbca", "cabbcabcacab"),
              dist(t, "bcacabcabbca", "cabbcabcacab"))
    return _all(
        (f"bound {b1}, dist {d1}", b1 == 3 == d1),
        (f"bound {b2} not below dist {d2}", d2 is not None and b2 < d2),
    )


def _doubling(ctx):
    for n in range(1, 5):
        w, w2 = build_ambiguous_pair("ab", "ba", n)
        if w == w2:
            return Check(False, witness=[w, w2], detail="equal words")
        u = subword_disagreement(w, w2, n)
        if u is not None:
            return Check(False, witness=[w, w2, u], detail=f"counts of {u!r} differ")
    return Check(True)


def _derived_reaudit(ctx):
    derived = derive_thue_system(ctx.prs("binary-swap-ab"), 6)
    if derived.system is None:
        return Check(False, detail="no irreducible transformations")
    return _audit_pair(audit_parikh_sound(derived.system, 6),
                       audit_parikh_complete(derived.system, 6))


def _step(system, source, result):
    for step in direct_neighbors(system, source):
        if step.result == result:
            return step
    return None


def _counter_deltas(ctx):
    t = ctx.thue("salomaa")
    single = _step(t, "abbcacb", "abcbabc")
    chain = ["abbcacb", "abbaccb", "baabccb", "baacbbc", "bacabbc"]
    steps = [_step(t, a, b) for a, b in zip(chain, chain[1:])]
    if single is None or None in steps:
        return Check(False, detail="displayed step is not a direct step")
    deltas = [counter_delta(s, "abc") for s in steps]
    return _all(
        (f"single delta {counter_delta(single, 'abc')}", counter_delta(single, "abc") == 1),
        (f"chain deltas {deltas}", deltas == [0, 0, 0, 0]),
    )


def _twenty_letters(ctx):
    p = ctx.prs("salomaa-abc")
    w, w2 = "abcbabacababcbabacab", "bacababcbabacababcba"
    res = irreducible(p, w, w2)
    chain = decompose(p, w, w2)
    orders = [s.order for s in chain]
    return _all(
        (f"dist {res.distance}", res.distance == 4),
        ("irreducible", not res.irreducible),
        (f"orders {orders}", orders == [2, 2]),
    )


ENTRIES: tuple[Entry, ...] = (
    Entry(1, "matrix-worked-example", "Parikh matrix of abcbac", 0.001, _matrix_example, repeat=5),
    Entry(2, "subword-counts", "scattered subword counts", 0.001, _subword_counts, repeat=5),
    Entry(3, "matrix-entry-theorem", "500 random words: entries and morphism law", 1.0, _matrix_theorem),
    Entry(4, "binary-swap-prs", "binary swap PRS sound and complete to length 8", 10.0, _binary_swap_prs),
    Entry(5, "binary-family-thue", "abxba family Thue system sound and complete to length 8", 10.0, _binary_family_thue),
    Entry(6, "ternary-incompleteness", "bounded-infix ternary system incomplete at length 8", 60.0, _ternary_incomplete),
    Entry(7, "salomaa-prs", "Salomaa PRS sound and complete to length 9", 120.0, _salomaa_prs),
    Entry(8, "binary-swap-irreducibles", "binary swap irreducibles are the abxba steps", 30.0, _binary_swap_derived),
    Entry(9, "binary-r1r2-subsets", "R1/R2 subsets sound and complete to length 7", 120.0, _binary_subsets),
    Entry(10, "binary-order-three", "R1 u R2 order-3 transformation", 10.0, _binary_order_three),
    Entry(11, "long-irreducible-pairs", "order n+1 irreducible pairs for n = 1, 2", 30.0, _long_pairs),
    Entry(12, "order-three-isolated", "order 3 pair with no order-2 chain", 60.0, _order_three_isolated),
    Entry(13, "order-three-bridged", "order 3 pair with an order-2 chain", 30.0, _order_three_bridged),
    Entry(14, "projection-bound", "projection lower bound on distance", 60.0, _projection),
    Entry(15, "doubling-construction", "doubled pairs agree on short subwords", 5.0, _doubling),
    Entry(16, "derived-system-reaudit", "derived Thue system re-audits sound and complete", 30.0, _derived_reaudit),
    Entry(17, "counter-deltas", "abc deltas of displayed steps", 0.001, _counter_deltas, repeat=5),
    Entry(18, "twenty-letter-reducible", "20-letter pair: distance 4, splits 2 + 2", 60.0, _twenty_letters, budget="full"),
)


@dataclass
class EntryResult:
    id: int
    anchor: str
    title: str
    status: str  # pass | fail | skipped | error
    seconds: float = 0.0
    limit: float = 0.0
    witness: Any = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "title": self.title,
            "status": self.status,
            "seconds": round(self.seconds, 6),
            "limit": self.limit,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    budget: str
    entries: list[EntryResult] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        statuses = {e.status for e in self.entries}
        if statuses & {"fail", "error"}:
            return EXIT_VIOLATED
        if "skipped" in statuses or not self.entries:
            return EXIT_CAP
        return EXIT_OK

    def to_dict(self) -> dict:
        return {"budget": self.budget, "exit_code": self.exit_code,
                "entries": [e.to_dict() for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        lines = [f"{'id':>3}  {'status':<8} {'seconds':>9} {'limit':>7}  anchor"]
        for e in self.entries:
            line = f"{e.id:>3}  {e.status:<8} {e.seconds:>9.4f} {e.limit:>7g}  {e.anchor}"
            if e.detail:
                line += f"  ({e.detail})"
            lines.append(line)
        return "\n".join(lines)


def _skipped(entry: Entry, why: str) -> EntryResult:
    return EntryResult(entry.id, entry.anchor, entry.title, "skipped",
                       limit=entry.limit, detail=why)


def run_entry(entry: Entry, ctx: Optional[Context] = None) -> EntryResult:
    ctx = ctx or Context()
    best = float("inf")
    try:
        for _ in range(entry.repeat):
            t0 = time.perf_counter()
            check = entry.run(ctx)
            best = min(best, time.perf_counter() - t0)
            if not check.passed:
                break
    except CapExceededError as exc:
        return _skipped(entry, f"over budget: {exc}")
    except Exception as exc:  # a crash is reported, not raised
        return EntryResult(entry.id, entry.anchor, entry.title, "error",
                           limit=entry.limit, detail=f"{type(exc).__name__}: {exc}")
    status = "pass" if check.passed else "fail"
    detail = check.detail
    if check.passed and best > entry.limit:
        status, detail = "fail", f"took {best:.4f}s, limit {entry.limit:g}s"
    return EntryResult(entry.id, entry.anchor, entry.title, status, best,
                       entry.limit, check.witness, detail)


def _run_by_id(job) -> EntryResult:
    entry_id, overrides = job
    return run_entry(entry_by_id(entry_id), Context(overrides))


def entry_by_id(entry_id: int) -> Entry:
    for e in ENTRIES:
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


def verify_paper_suite(budget: str = "default", overrides: Optional[dict] = None,
                       workers: int = 1, only: Optional[list[int]] = None) -> SuiteReport:
    """Run every entry allowed by ``budget``; ``overrides`` swaps presets by name."""
    if budget not in BUDGETS:
        raise ValueError(f"unknown budget {budget!r}; choose from {', '.join(BUDGETS)}")
    report = SuiteReport(budget)
    # full-only entries are left out of smaller runs rather than skipped, so a
    # default run that passes exits cleanly
    chosen = [e for e in ENTRIES if (only is None or e.id in only)
              and (e.budget != "full" or budget in ("full", "zero"))]
    todo = []
    results: dict[int, EntryResult] = {}
    for e in chosen:
        if budget == "zero":
            results[e.id] = _skipped(e, "zero budget")
        else:
            todo.append(e.id)
    jobs = [(i, overrides) for i in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = list(pool.map(_run_by_id, jobs))
    else:
        done = [_run_by_id(j) for j in jobs]
    for r in done:
        results[r.id] = r
    report.entries = [results[e.id] for e in chosen]
    return report
