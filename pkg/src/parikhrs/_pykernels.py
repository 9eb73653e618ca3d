"""Pure-Python kernels.

Words are ``bytes`` whose values are letter indices.  The compiled module
``_kernels`` implements the same functions with identical results and
iteration order; this module is the fallback when the extension is absent.
"""

from __future__ import annotations

from collections import deque

U64_MAX = (1 << 64) - 1

_OVERFLOW = "subword count exceeds 64-bit range"


def count_subword(w: bytes, u: bytes) -> int:
    m = len(u)
    if m == 0:
        return 1
    if m > len(w):
        return 0
    # positions of each letter inside u, highest first so each letter of w
    # extends only occurrences that end before it
    where: dict[int, list[int]] = {}
    for k in range(m - 1, -1, -1):
        where.setdefault(u[k], []).append(k)
    dp = [1] + [0] * m
    for c in w:
        ks = where.get(c)
        if ks is None:
            continue
        for k in ks:
            v = dp[k + 1] + dp[k]
            if v > U64_MAX:
                raise OverflowError(_OVERFLOW)
            dp[k + 1] = v
    return dp[m]


def parikh_entries(w: bytes, s: int) -> tuple[int, ...]:
    """Strictly-upper entries of the Parikh matrix, row-major."""
    m = [[int(i == j) for j in range(s + 1)] for i in range(s + 1)]
    for q in w:
        # right-multiplying by the elementary matrix of letter q adds
        # column q into column q+1; only rows 0..q are nonzero there
        for i in range(q + 1):
            row = m[i]
            v = row[q + 1] + row[q]
            if v > U64_MAX:
                raise OverflowError("Parikh matrix entry exceeds 64-bit range")
            row[q + 1] = v
    return tuple(m[i][j] for i in range(s + 1) for j in range(i + 1, s + 1))


class RuleSet:
    """Directed rewriting rules ``lp x ls -> rp x rs``.

    Each rule is a tuple ``(lp, ls, rp, rs, gamma)``; ``gamma`` is ``None``
    when the infix must be empty, otherwise the bytes of allowed infix letters.
    """

    def __init__(self, rules):
        self.rules = tuple(
            (bytes(lp), bytes(ls), bytes(rp), bytes(rs),
             None if g is None else frozenset(bytes(g)))
            for lp, ls, rp, rs, g in rules
        )

    def __len__(self):
        return len(self.rules)

    def _matches(self, w: bytes):
        n = len(w)
        for slot, (lp, ls, rp, rs, gamma) in enumerate(self.rules):
            llp, lls = len(lp), len(ls)
            for i in range(n - llp - lls + 1):
                if not w.startswith(lp, i):
                    continue
                j = i + llp
                while True:
                    if j + lls <= n and w.startswith(ls, j):
                        out = w[:i] + rp + w[i + llp:j] + rs + w[j + lls:]
                        if out != w:
                            yield out, slot, i, j - i - llp
                    if gamma is not None and j < n and w[j] in gamma:
                        j += 1
                    else:
                        break

    def expand(self, w: bytes) -> list:
        return list(self._matches(w))

    def successors(self, w: bytes) -> list:
        seen = set()
        out = []
        for r, _, _, _ in self._matches(w):
            if r not in seen:
                seen.add(r)
                out.append(r)
        return out

    def bfs(self, start: bytes, radius: int, cap: int):
        """Distance map from ``start`` up to ``radius`` (negative: unbounded).

        Returns ``(dist, complete)``; ``complete`` is False when the map
        outgrew ``cap`` and exploration stopped early.
        """
        dist = {start: 0}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            d = dist[w]
            if 0 <= radius <= d:
                continue
            for r in self.successors(w):
                if r not in dist:
                    dist[r] = d + 1
                    if len(dist) > cap:
                        return dist, False
                    queue.append(r)
        return dist, True
