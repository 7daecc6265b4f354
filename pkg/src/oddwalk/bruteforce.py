"""Brute-force reference algorithms.

Everything here recomputes quantities of the main modules by a different
method (set iteration instead of double-cover BFS, backtracking instead of
profile propagation, matrix powers instead of path DP, subset search instead
of the component characterization, level-by-level gadget construction
instead of symbolic adjacency).  The check harness and the test suite use
these as oracles; production code never calls them.
"""

from __future__ import annotations

import itertools

from .gadget import PathGadget, build_gadget
from .graphs import WitnessedGraph
from .homset import ExplicitHomSet, Hom
from .limitgraph import LcVertex, project_level


def odd_walk_lengths(g: WitnessedGraph, a, max_len: int) -> list[int]:
    """All odd lengths up to max_len of walks with both endpoints in the set,
    by iterating neighborhoods level by level."""
    aset = {v for v in a}
    lengths = []
    frontier = set(aset)
    for step in range(1, max_len + 1):
        frontier = {u for v in frontier for u in g.neighbors(v)}
        if step % 2 == 1 and frontier & aset:
            lengths.append(step)
    return lengths


def min_odd_walk_length(g: WitnessedGraph, a, max_len: int) -> int | None:
    lengths = odd_walk_lengths(g, a, max_len)
    return lengths[0] if lengths else None


def count_walks_matrix(g: WitnessedGraph, length: int) -> int:
    """Total walks of the given length, counting witness choices, via powers
    of the witness-multiplicity matrix with exact integers."""
    n = len(g.vertices)
    index = {v: i for i, v in enumerate(g.vertices)}
    mat = [[0] * n for _ in range(n)]
    for w in g.witnesses:
        u, v = g.ends[w]
        mat[index[u]][index[v]] += 1
        mat[index[v]][index[u]] += 1
    vec = [1] * n
    for _ in range(length):
        vec = [sum(mat[i][j] * vec[j] for j in range(n)) for i in range(n)]
    return sum(vec)


def closed_walk_count_at(g: WitnessedGraph, v: str, length: int) -> int:
    """Closed walks of the given length at v, counting witness choices."""
    n = len(g.vertices)
    index = {u: i for i, u in enumerate(g.vertices)}
    mat = [[0] * n for _ in range(n)]
    for w in g.witnesses:
        a, b = g.ends[w]
        mat[index[a]][index[b]] += 1
        mat[index[b]][index[a]] += 1
    vec = [0] * n
    vec[index[v]] = 1
    for _ in range(length):
        vec = [sum(mat[i][j] * vec[j] for j in range(n)) for i in range(n)]
    return vec[index[v]]


def enumerate_homs_backtracking(gadget: PathGadget, target: WitnessedGraph,
                                cap: int | None = None) -> list[Hom]:
    """All homomorphisms in lex order by direct search over adjacency."""
    out: list[Hom] = []
    t = gadget.vertex_count
    vpath: list[str] = []

    def witness_products() -> bool:
        options = [target.witnesses_between(vpath[j], vpath[j + 1])
                   for j in range(t - 1)]
        for combo in itertools.product(*options):
            out.append(Hom(tuple(vpath), tuple(combo)))
            if cap is not None and len(out) >= cap:
                return True
        return False

    def rec(pos: int) -> bool:
        if pos == t:
            return witness_products()
        options = target.vertices if pos == 0 else target.neighbors(vpath[-1])
        for v in options:
            vpath.append(v)
            if rec(pos + 1):
                return True
            vpath.pop()
        return False

    rec(0)
    return out


def explicit_homset(gadget: PathGadget, target: WitnessedGraph,
                    cap: int | None = None) -> ExplicitHomSet:
    return ExplicitHomSet(gadget, target,
                          tuple(enumerate_homs_backtracking(gadget, target, cap)))


def tiny_by_definition(s: ExplicitHomSet, max_len: int | None = None) -> bool:
    """Some position's projection admits no odd walk, by walk enumeration."""
    g = s.target
    limit = max_len if max_len is not None else 2 * len(g.vertices) + 1
    for u in s.gadget.vertices:
        if min_odd_walk_length(g, s.project(u), limit) is None:
            return True
    return False


def small_by_cover_search(s: ExplicitHomSet) -> bool:
    """Definitional smallness: every member lies in some tiny subset.

    Scans subsets in increasing size per member; a union of such subsets is
    then a tiny cover.  Exponential, only for small explicit sets.
    """
    homs = list(s.homs)
    for hom in homs:
        rest = [h for h in homs if h != hom]
        found = False
        for size in range(0, len(rest) + 1):
            for extra in itertools.combinations(rest, size):
                candidate = ExplicitHomSet(s.gadget, s.target, (hom,) + extra)
                if tiny_by_definition(candidate):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def projections_adjacent_everywhere(a: LcVertex, b: LcVertex, prefix,
                                    up_to: int) -> bool:
    """Adjacency of the level-n projections for every n from max(m_a, m_b)
    to up_to, built gadget by gadget."""
    start = max(a.m, b.m)
    for n in range(start, up_to + 1):
        g = build_gadget(prefix[:n])
        pa = g.position[project_level(a, n, prefix)]
        pb = g.position[project_level(b, n, prefix)]
        if abs(pa - pb) != 1:
            return False
    return True
