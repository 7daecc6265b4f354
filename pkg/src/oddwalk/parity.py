"""Odd-walk machinery via the parity double cover.

The double cover lives on pairs (vertex, parity); an edge flips the parity
bit.  Minimum odd/even walk lengths between vertex sets are plain BFS
distances there, which is the basis for the odd-walk property tests, the
bipartiteness certificate, and exact-length walk construction.

Because walks may repeat vertices and witnesses, an odd walk of length m can
be padded to any odd length >= m by bouncing on its first edge.  The
operations here rely on that padding fact; the test suite checks it against
brute-force walk enumeration rather than assuming it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ParseError
from .graphs import Coloring, Walk, WitnessedGraph, vertex_pair


@dataclass(frozen=True)
class PhiVerdict:
    """Outcome of the odd-walk test for a vertex set.

    min_odd_length is None when no odd walk has both endpoints in the set;
    otherwise it is the least odd length, and walks of every greater odd
    length exist too (padding), so no finite bound is obeyed.
    """

    min_odd_length: int | None = None

    @property
    def no_odd_walk(self) -> bool:
        return self.min_odd_length is None

    @property
    def kind(self) -> str:
        return "NoOddWalk" if self.no_odd_walk else "Unbounded"

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if not self.no_odd_walk:
            out["minOddLength"] = self.min_odd_length
        return out


def parity_distances(g: WitnessedGraph, sources) -> dict[tuple[str, int], int]:
    """Multi-source BFS distances in the parity double cover.

    Returns the least walk length from any source to each (vertex, parity)
    pair, parity 0 at the sources.
    """
    dist: dict[tuple[str, int], int] = {}
    queue: deque[tuple[str, int]] = deque()
    for s in sorted(set(sources)):
        dist[(s, 0)] = 0
        queue.append((s, 0))
    while queue:
        v, p = queue.popleft()
        d = dist[(v, p)]
        for u in g.neighbors(v):
            key = (u, 1 - p)
            if key not in dist:
                dist[key] = d + 1
                queue.append(key)
    return dist


def phi_bound(g: WitnessedGraph, a) -> PhiVerdict:
    """Least odd length of a walk with both endpoints in the set, if any."""
    aset = sorted(set(a))
    g.require_vertices(aset)
    if not aset:
        return PhiVerdict(None)
    dist = parity_distances(g, aset)
    best = None
    for v in aset:
        d = dist.get((v, 1))
        if d is not None and (best is None or d < best):
            best = d
    return PhiVerdict(best)


def phi_holds(g: WitnessedGraph, a, k: int) -> bool:
    """True iff every odd walk with endpoints in the set has length <= 2k-1.

    With walk padding this is independent of k: it holds iff no odd walk
    with endpoints in the set exists at all.
    """
    if not isinstance(k, int) or k < 0:
        raise ParseError(f"k must be a natural number, got {k!r}")
    return phi_bound(g, a).no_odd_walk


def vertex_odd_girth(g: WitnessedGraph, v: str) -> int | None:
    """Least odd length of a closed walk at v, or None."""
    g.require_vertices([v])
    return parity_distances(g, [v]).get((v, 1))


def is_bipartite(g: WitnessedGraph) -> bool:
    return not nonbipartite_vertices(g)


def nonbipartite_vertices(g: WitnessedGraph) -> frozenset:
    """Union of all connected components containing an odd closed walk."""
    out: set[str] = set()
    for comp in g.components():
        dist = parity_distances(g, [comp[0]])
        if any((v, 0) in dist and (v, 1) in dist for v in comp):
            out.update(comp)
    return frozenset(out)


def exact_reach(g: WitnessedGraph, end: str, length: int) -> list[set]:
    """reach[r] = vertices that start some walk to `end` of length exactly r."""
    g.require_vertices([end])
    reach: list[set] = [{end}]
    for _ in range(length):
        prev = reach[-1]
        cur = {y for x in prev for y in g.neighbors(x)}
        reach.append(cur)
    return reach


def exact_walk(g: WitnessedGraph, start: str, end: str, length: int) -> Walk | None:
    """Lexicographically least walk of exactly the given length, or None.

    Walks are compared by their vertex sequence, then by witness choices.
    """
    g.require_vertices([start, end])
    if length < 0:
        raise ParseError("walk length must be nonnegative")
    reach = exact_reach(g, end, length)
    if start not in reach[length]:
        return None
    verts = [start]
    wits = []
    cur = start
    for r in range(length, 0, -1):
        for z in g.neighbors(cur):
            if z in reach[r - 1]:
                wits.append(g.witnesses_between(cur, z)[0])
                verts.append(z)
                cur = z
                break
        else:
            raise AssertionError("reach sets promised a continuation")
    return Walk(tuple(verts), tuple(wits))


def min_odd_closed_walk(g: WitnessedGraph) -> Walk | None:
    """Minimum-length odd closed walk, lexicographically least; None if bipartite."""
    best_len = None
    best_v = None
    for v in g.vertices:
        d = vertex_odd_girth(g, v)
        if d is not None and (best_len is None or d < best_len):
            best_len = d
            best_v = v
    if best_len is None:
        return None
    return exact_walk(g, best_v, best_v, best_len)


def two_color_components(g: WitnessedGraph, comps) -> Coloring:
    """Parity 2-coloring of the given components via BFS from least vertices.

    Caller guarantees the components are bipartite.
    """
    colors: dict[str, int] = {}
    for comp in comps:
        root = comp[0]
        colors[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in colors:
                    colors[y] = 1 - colors[x]
                    queue.append(y)
    return Coloring(colors)


def bipartite_certificate(g: WitnessedGraph):
    """Proper 2-coloring if g has no odd closed walk, else a minimum one.

    Returns either a Coloring covering all vertices or a Walk.
    """
    walk = min_odd_closed_walk(g)
    if walk is not None:
        return walk
    return two_color_components(g, g.components())
