from __future__ import annotations

import itertools
from collections import deque

import pytest

from parikhrs import _pykernels, kernels
from parikhrs.kernels import backends

# acceptance results, printed one per line at the end of the run
CRITERIA: dict[int, tuple[str, float, str]] = {}


@pytest.fixture(params=sorted(backends()))
def backend(request):
    return backends()[request.param]


@pytest.fixture(params=sorted(backends()))
def any_backend(request, monkeypatch):
    """Run the engines on each importable kernel backend in turn."""
    mod = backends()[request.param]
    for name in ("count_subword", "parikh_entries", "RuleSet"):
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return request.param


@pytest.fixture
def pure_python(monkeypatch):
    for name in ("count_subword", "parikh_entries", "RuleSet"):
        monkeypatch.setattr(kernels, name, getattr(_pykernels, name))


def brute_count(w: str, u: str) -> int:
    """Occurrences of u as a scattered subword, by listing position sets."""
    return sum(
        1
        for pos in itertools.combinations(range(len(w)), len(u))
        if all(w[p] == c for p, c in zip(pos, u))
    )


def all_words(letters: str, max_len: int):
    for n in range(max_len + 1):
        for t in itertools.product(letters, repeat=n):
            yield "".join(t)


def naive_neighbors(system, w: str) -> set[str]:
    """Every rule instance tried at every position, by string slicing."""
    out = set()
    for rule in system.rules:
        for src, dst in ((rule.left, rule.right), (rule.right, rule.left)):
            infixes = [""]
            if src.infix is not None:
                infixes = list(all_words(src.infix, len(w)))
            for x in infixes:
                a, b = src.instance(x), dst.instance(x)
                for i in range(len(w) - len(a) + 1):
                    if w[i:i + len(a)] == a and a != b:
                        out.add(w[:i] + b + w[i + len(a):])
    out.discard(w)
    return out



def naive_class_distances(system, w: str) -> dict[str, dict[str, int]]:
    """All-pairs distances inside the rewrite class of w, one plain BFS per member."""
    def bfs(src):
        seen = {src: 0}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in naive_neighbors(system, x):
                if y not in seen:
                    seen[y] = seen[x] + 1
                    queue.append(y)
        return seen

    members = bfs(w)
    return {x: bfs(x) for x in members}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status, seconds, note = CRITERIA[n]
        line = f"criterion {n:>2}: {status}  ({seconds:.4f}s)"
        if note:
            line += f"  {note}"
        terminalreporter.write_line(line)
