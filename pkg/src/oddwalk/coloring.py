"""Coloring constructions on witnessed graphs.

Includes the component-closure machinery that turns odd-walk-free vertex sets
into 2-colorable invariant supersets, the piecewise 2-coloring assembled from
a cover by such sets, a greedy bounded coloring, and coloring pullback along
graph homomorphisms.
"""

from __future__ import annotations

from .errors import CoverIncomplete, NotHomomorphism, PhiFails, PieceNotTiny
from .graphs import Coloring, WitnessedGraph
from .parity import phi_bound, two_color_components


def invariant_closure(g: WitnessedGraph, a) -> tuple[str, ...]:
    """Union of all connected components meeting the set, sorted."""
    aset = set(a)
    g.require_vertices(aset)
    out: list[str] = []
    for comp in g.components():
        if aset.intersection(comp):
            out.extend(comp)
    return tuple(sorted(out))


def bipartite_superset_coloring(g: WitnessedGraph, a) -> tuple[tuple[str, ...], Coloring]:
    """Component closure of an odd-walk-free set with a proper 2-coloring.

    If some member of the set sat in a non-bipartite component it would have
    an odd closed walk through it, so odd-walk-freeness makes every touched
    component bipartite and the parity coloring proper.
    """
    verdict = phi_bound(g, a)
    if not verdict.no_odd_walk:
        raise PhiFails(
            f"set admits an odd walk of length {verdict.min_odd_length}")
    aset = set(a)
    comps = [comp for comp in g.components() if aset.intersection(comp)]
    closure = tuple(sorted(v for comp in comps for v in comp))
    return closure, two_color_components(g, comps)


def two_color_from_cover(g: WitnessedGraph, pieces) -> Coloring:
    """Proper 2-coloring assembled from odd-walk-free pieces.

    Each vertex takes its color from the first piece whose component closure
    contains it; the closures must jointly cover the graph.
    """
    pieces = [tuple(sorted(set(p))) for p in pieces]
    closures = []
    colorings = []
    for i, piece in enumerate(pieces):
        g.require_vertices(piece)
        verdict = phi_bound(g, piece)
        if not verdict.no_odd_walk:
            raise PieceNotTiny(
                f"piece {i} admits an odd walk of length {verdict.min_odd_length}")
        closure, col = bipartite_superset_coloring(g, piece)
        closures.append(set(closure))
        colorings.append(col)
    covered = set().union(*closures) if closures else set()
    missing = sorted(set(g.vertices) - covered)
    if missing:
        raise CoverIncomplete(
            f"closures miss vertices: {', '.join(map(repr, missing))}")
    colors: dict[str, int] = {}
    for x in g.vertices:
        for i, closure in enumerate(closures):
            if x in closure:
                colors[x] = colorings[i].of(x)
                break
    return Coloring(colors)


def greedy_coloring(g: WitnessedGraph) -> Coloring:
    """First-fit coloring in ascending id order; uses at most maxdegree+1 colors."""
    colors: dict[str, int] = {}
    for v in g.vertices:
        taken = {colors[u] for u in g.neighbors(v) if u in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(colors)


def check_homomorphism(h: WitnessedGraph, g: WitnessedGraph, vmap: dict) -> None:
    """Raise NotHomomorphism unless vmap sends every edge of h to an edge of g."""
    for v in h.vertices:
        if v not in vmap:
            raise NotHomomorphism(f"map is undefined at {v!r}")
        if not g.has_vertex(vmap[v]):
            raise NotHomomorphism(f"image {vmap[v]!r} of {v!r} is not a vertex")
    for w in h.witnesses:
        u, v = h.ends[w]
        if not g.adjacent(vmap[u], vmap[v]):
            raise NotHomomorphism(
                f"edge {w!r} maps to non-adjacent pair "
                f"({vmap[u]!r}, {vmap[v]!r})")


def pullback_coloring(h: WitnessedGraph, g: WitnessedGraph, vmap: dict,
                      col: Coloring) -> Coloring:
    """Compose a proper coloring of the target with a homomorphism into it."""
    check_homomorphism(h, g, vmap)
    return Coloring({v: col.of(vmap[v]) for v in h.vertices})
