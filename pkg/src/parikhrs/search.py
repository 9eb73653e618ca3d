"""Breadth-first search over encoded words.

All searches treat the rewriting graph as undirected, which holds for every
Thue system because each rule pair yields both directions.
"""

from __future__ import annotations

from typing import Optional

from .errors import CapExceededError

DEFAULT_STATE_CAP = 500_000
UNBOUNDED = -1


class Geometry:
    """Memoized distance balls and successor lists for one rule set.

    ``ball(src, r)`` returns a map covering at least every word within
    distance ``r`` of ``src``; entries beyond ``r`` may be present when a
    larger ball was cached earlier, so callers compare distances explicitly.
    """

    def __init__(self, ruleset, cap: int = DEFAULT_STATE_CAP):
        self.rules = ruleset
        self.cap = cap
        self._balls: dict[bytes, tuple[float, dict]] = {}
        self._succ: dict[bytes, list] = {}

    def successors(self, w: bytes) -> list:
        out = self._succ.get(w)
        if out is None:
            out = self._succ[w] = self.rules.successors(w)
        return out

    def ball(self, src: bytes, radius: int) -> dict:
        cached = self._balls.get(src)
        if cached is not None and (radius != UNBOUNDED and cached[0] >= radius
                                   or cached[0] == float("inf")):
            return cached[1]
        dist, complete = self.rules.bfs(src, radius, self.cap)
        if not complete:
            raise CapExceededError(
                f"search from a word of length {len(src)} visited more than "
                f"{self.cap} states",
                self.cap,
            )
        # a ball that stops short of its radius is the whole class
        deepest = max(dist.values())
        reach = float("inf") if radius == UNBOUNDED or deepest < radius else radius
        self._balls[src] = (reach, dist)
        return dist

    def component(self, src: bytes) -> dict:
        return self.ball(src, UNBOUNDED)

    def distance(self, a: bytes, b: bytes) -> Optional[int]:
        """Shortest path length, or None when ``b`` is not reachable."""
        if a == b:
            return 0
        for src, dst in ((a, b), (b, a)):
            cached = self._balls.get(src)
            if cached is not None:
                reach, dist = cached
                if dst in dist:
                    return dist[dst]
                if reach == float("inf"):
                    return None
        return bidirectional_distance(self.successors, a, b, self.cap)

    def interval(self, a: bytes, b: bytes, d: int) -> dict:
        """Words on some shortest path from ``a`` to ``b``, mapped to their
        distance from ``a``.  ``d`` must equal ``distance(a, b)``."""
        if d == 0:
            return {a: 0}
        h = (d + 1) // 2
        ball_a = self.ball(a, h)
        ball_b = self.ball(b, d - h)
        mid = {x for x, t in ball_a.items() if t == h and ball_b.get(x) == d - h}
        out = dict.fromkeys(mid, h)
        # walk back towards each endpoint; the triangle inequality makes
        # every neighbour one layer closer that is also one step further
        # from the other endpoint lie on a shortest path
        cur = mid
        for t in range(h - 1, -1, -1):
            cur = {z for y in cur for z in self.successors(y) if ball_a.get(z) == t}
            for z in cur:
                out[z] = t
        cur = mid
        for u in range(d - h - 1, -1, -1):
            cur = {z for y in cur for z in self.successors(y) if ball_b.get(z) == u}
            for z in cur:
                out[z] = d - u
        return out


def bidirectional_distance(successors, a: bytes, b: bytes, cap: int) -> Optional[int]:
    """Layer-synchronous bidirectional BFS.

    Expanding a whole layer of the smaller frontier means the first layer
    that touches the other side yields the exact distance.
    """
    if a == b:
        return 0
    seen = ({a: 0}, {b: 0})
    frontier = ([a], [b])
    while frontier[0] and frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        mine, other = seen[side], seen[1 - side]
        nxt = []
        best = None
        for w in frontier[side]:
            d = mine[w] + 1
            for r in successors(w):
                if r in mine:
                    continue
                mine[r] = d
                nxt.append(r)
                if r in other:
                    total = d + other[r]
                    if best is None or total < best:
                        best = total
        if best is not None:
            return best
        if len(seen[0]) + len(seen[1]) > cap:
            raise CapExceededError(
                f"distance search visited more than {cap} states", cap
            )
        frontier = (nxt, frontier[1]) if side == 0 else (frontier[0], nxt)
    return None


def bfs_path(successors, a: bytes, b: bytes, cap: int) -> Optional[list]:
    """A shortest path ``[a, ..., b]`` choosing the smallest word at each tie."""
    if a == b:
        return [a]
    parent = {a: None}
    layer = [a]
    while layer:
        nxt = []
        for w in layer:
            for r in sorted(successors(w)):
                if r in parent:
                    continue
                parent[r] = w
                if r == b:
                    path = [b]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(r)
        if len(parent) > cap:
            raise CapExceededError(f"path search visited more than {cap} states", cap)
        layer = nxt
    return None
