"""Homomorphism sets from path gadgets into witnessed graphs.

A homomorphism assigns a target vertex to every gadget vertex and a target
witness to every gadget edge, with the witness ends matching the endpoint
images.  Sets of homomorphisms come in two representations: HomProfile (per
position vertex domains, per edge witness domains; exact on paths via arc
consistency) and ExplicitHomSet (a plain list, used as an oracle form).

On top of these sit the odd-walk smallness notions (tiny, small, large), the
doubling operator to the next gadget level, and the gluing construction that
extends a pinned homomorphism one level up along an odd closed walk.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernels
from .errors import (NotHomomorphism, NotLarge, NotMember, OddwalkError,
                     ParseError)
from .gadget import GadgetVertex, PathGadget, build_gadget
from .graphs import Walk, WitnessedGraph, vertex_pair
from .parity import exact_walk, nonbipartite_vertices, phi_bound, vertex_odd_girth


@dataclass(frozen=True, order=True)
class Hom:
    """One homomorphism: images by gadget path position and edge index."""

    vertex_images: tuple[str, ...]
    witness_images: tuple[str, ...]

    def image_of(self, gadget: PathGadget, v: GadgetVertex) -> str:
        return self.vertex_images[gadget.require_vertex(v)]

    def to_json_dict(self, gadget: PathGadget) -> dict:
        return {
            "vertexAssignments": {gadget.vertices[i].label: img
                                  for i, img in enumerate(self.vertex_images)},
            "witnessAssignments": {edge_label(gadget, j): wid
                                   for j, wid in enumerate(self.witness_images)},
        }


def edge_label(gadget: PathGadget, j: int) -> str:
    return f"{gadget.vertices[j].label}--{gadget.vertices[j + 1].label}"


def validate_hom(gadget: PathGadget, target: WitnessedGraph, hom: Hom) -> None:
    """Raise NotHomomorphism unless hom is a valid witnessed homomorphism."""
    if len(hom.vertex_images) != gadget.vertex_count:
        raise NotHomomorphism("wrong number of vertex images")
    if len(hom.witness_images) != gadget.edge_count:
        raise NotHomomorphism("wrong number of witness images")
    for img in hom.vertex_images:
        if not target.has_vertex(img):
            raise NotHomomorphism(f"image {img!r} is not a target vertex")
    for j, wid in enumerate(hom.witness_images):
        if wid not in target.ends:
            raise NotHomomorphism(f"unknown witness id {wid!r} at edge {j}")
        want = vertex_pair(hom.vertex_images[j], hom.vertex_images[j + 1])
        if target.ends[wid] != want:
            raise NotHomomorphism(
                f"edge {edge_label(gadget, j)}: witness {wid!r} joins "
                f"{target.ends[wid]}, images are {want}")


def copy_restriction(big: PathGadget, small: PathGadget, hom: Hom, bit: int) -> Hom:
    """Restriction of a level-(n+1) homomorphism to copy `bit` of level n."""
    vimgs = []
    for v in small.vertices:
        vimgs.append(hom.vertex_images[big.require_vertex(v.append(bit))])
    wimgs = []
    for j in range(small.edge_count):
        u, v = small.vertices[j], small.vertices[j + 1]
        jb = min(big.require_vertex(u.append(bit)), big.require_vertex(v.append(bit)))
        wimgs.append(hom.witness_images[jb])
    return Hom(tuple(vimgs), tuple(wimgs))


@dataclass(frozen=True)
class TinyVerdict:
    tiny: bool
    vertex: GadgetVertex | None = None

    def __bool__(self) -> bool:
        return self.tiny


@dataclass(frozen=True)
class LargeVerdict:
    large: bool
    witness: Hom | None = None

    def __bool__(self) -> bool:
        return self.large


class HomProfile:
    """Subset of Hom(gadget, target) given by per-position domains.

    Denotes every homomorphism whose vertex image at each position lies in
    that position's domain and whose witness at each edge lies in the edge's
    domain.  Profiles are normalized (arc-consistent) on construction, which
    never changes the denoted set and makes projections exact because the
    gadget is a path.
    """

    __slots__ = ("gadget", "target", "vmasks", "wmasks")

    def __init__(self, gadget: PathGadget, target: WitnessedGraph,
                 vmasks, wmasks, normalized: bool = False):
        self.gadget = gadget
        self.target = target
        if not normalized:
            ends_idx = [(target.vertex_index(a), target.vertex_index(b))
                        for a, b in (target.ends[w] for w in target.witnesses)]
            vmasks, wmasks = kernels.path_propagate(
                list(vmasks), list(wmasks), ends_idx,
                len(target.vertices), len(target.witnesses))
            if any(m == 0 for m in vmasks):
                vmasks = [0] * len(vmasks)
                wmasks = [0] * len(wmasks)
        self.vmasks = tuple(vmasks)
        self.wmasks = tuple(wmasks)

    # -- construction ------------------------------------------------------

    @classmethod
    def full(cls, gadget: PathGadget, target: WitnessedGraph) -> "HomProfile":
        allv = (1 << len(target.vertices)) - 1
        allw = (1 << len(target.witnesses)) - 1
        return cls(gadget, target,
                   [allv] * gadget.vertex_count,
                   [allw] * gadget.edge_count)

    # -- basic queries -----------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return any(m == 0 for m in self.vmasks)

    def _vertex_ids(self, mask: int) -> tuple[str, ...]:
        vs = self.target.vertices
        return tuple(vs[i] for i in range(len(vs)) if mask >> i & 1)

    def _witness_ids(self, mask: int) -> tuple[str, ...]:
        ws = self.target.witnesses
        return tuple(ws[i] for i in range(len(ws)) if mask >> i & 1)

    def project(self, u: GadgetVertex) -> tuple[str, ...]:
        """Exact vertex projection: the images of u over the denoted set."""
        return self._vertex_ids(self.vmasks[self.gadget.require_vertex(u)])

    def project_edge(self, j: int) -> tuple[str, ...]:
        return self._witness_ids(self.wmasks[j])

    def count(self) -> int:
        """Exact size of the denoted set (big integers, path DP)."""
        if self.is_empty:
            return 0
        ends_idx = self._ends_idx()
        counts = {i: 1 for i in _bits(self.vmasks[0])}
        for j in range(self.gadget.edge_count):
            right = self.vmasks[j + 1]
            new: dict[int, int] = {}
            for w in _bits(self.wmasks[j]):
                a, b = ends_idx[w]
                if a in counts and right >> b & 1:
                    new[b] = new.get(b, 0) + counts[a]
                if b in counts and right >> a & 1:
                    new[a] = new.get(a, 0) + counts[b]
            counts = new
        return sum(counts.values())

    def _ends_idx(self) -> list[tuple[int, int]]:
        t = self.target
        return [(t.vertex_index(a), t.vertex_index(b))
                for a, b in (t.ends[w] for w in t.witnesses)]

    # -- enumeration -------------------------------------------------------

    def _vertex_paths(self):
        """Yield index tuples of vertex assignments in ascending lex order."""
        ends_idx = self._ends_idx()
        t = self.gadget.vertex_count
        acc: list[int] = []

        def rec(pos: int):
            if pos == t:
                yield tuple(acc)
                return
            if pos == 0:
                options = _bits(self.vmasks[0])
            else:
                prev = acc[-1]
                right = self.vmasks[pos]
                opts = set()
                for w in _bits(self.wmasks[pos - 1]):
                    a, b = ends_idx[w]
                    if a == prev and right >> b & 1:
                        opts.add(b)
                    elif b == prev and right >> a & 1:
                        opts.add(a)
                options = sorted(opts)
            for choice in options:
                acc.append(choice)
                yield from rec(pos + 1)
                acc.pop()

        yield from rec(0)

    def enumerate_homs(self, cap: int) -> tuple["ExplicitHomSet", int]:
        """First `cap` homomorphisms in (vertex images, witness images) lex
        order, plus the exact total count of the denoted set."""
        if not isinstance(cap, int) or cap < 0:
            raise ParseError(f"cap must be a natural number, got {cap!r}")
        total = self.count()
        homs: list[Hom] = []
        if total and cap:
            ends_idx = self._ends_idx()
            vs = self.target.vertices
            ws = self.target.witnesses
            done = False
            for vpath in self._vertex_paths():
                wit_options = []
                for j in range(self.gadget.edge_count):
                    opts = [w for w in _bits(self.wmasks[j])
                            if {ends_idx[w][0], ends_idx[w][1]} == {vpath[j], vpath[j + 1]}]
                    wit_options.append(opts)
                vimgs = tuple(vs[i] for i in vpath)
                for combo in itertools.product(*wit_options):
                    homs.append(Hom(vimgs, tuple(ws[w] for w in combo)))
                    if len(homs) >= cap:
                        done = True
                        break
                if done:
                    break
        return ExplicitHomSet(self.gadget, self.target, tuple(homs)), total

    # -- restriction and membership ---------------------------------------

    def restricted(self, vmasks, wmasks) -> "HomProfile":
        return HomProfile(self.gadget, self.target, vmasks, wmasks)

    def member(self, hom: Hom) -> bool:
        try:
            validate_hom(self.gadget, self.target, hom)
        except NotHomomorphism:
            return False
        for i, img in enumerate(hom.vertex_images):
            if not self.vmasks[i] >> self.target.vertex_index(img) & 1:
                return False
        for j, wid in enumerate(hom.witness_images):
            if not self.wmasks[j] >> self.target.witness_index(wid) & 1:
                return False
        return True

    def to_json_dict(self) -> dict:
        gv = self.gadget.vertices
        return {
            "c": list(self.gadget.prefix),
            "vertexDomains": {gv[i].label: list(self._vertex_ids(m))
                              for i, m in enumerate(self.vmasks)},
            "witnessDomains": {edge_label(self.gadget, j): list(self._witness_ids(m))
                               for j, m in enumerate(self.wmasks)},
        }

    def __repr__(self) -> str:
        state = "empty" if self.is_empty else "nonempty"
        return (f"HomProfile(level={self.gadget.level}, "
                f"target={len(self.target.vertices)}v, {state})")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        mask ^= low
        out.append(low.bit_length() - 1)
    return out


@dataclass(frozen=True)
class ExplicitHomSet:
    """A literal list of homomorphisms over one gadget and target."""

    gadget: PathGadget
    target: WitnessedGraph
    homs: tuple[Hom, ...]

    def __post_init__(self):
        seen = set()
        for hom in self.homs:
            validate_hom(self.gadget, self.target, hom)
            if hom in seen:
                raise ParseError("duplicate homomorphism in explicit set")
            seen.add(hom)

    def __len__(self) -> int:
        return len(self.homs)

    def project(self, u: GadgetVertex) -> tuple[str, ...]:
        pos = self.gadget.require_vertex(u)
        return tuple(sorted({hom.vertex_images[pos] for hom in self.homs}))


def all_homs(gadget: PathGadget, target: WitnessedGraph) -> HomProfile:
    """The full (normalized) profile of every homomorphism."""
    return HomProfile.full(gadget, target)


def is_tiny(homs) -> TinyVerdict:
    """Some position's projection admits no odd walk; first such position wins.

    Accepts a HomProfile or an ExplicitHomSet.
    """
    gadget, target = homs.gadget, homs.target
    for u in gadget.vertices:
        if phi_bound(target, homs.project(u)).no_odd_walk:
            return TinyVerdict(True, u)
    return TinyVerdict(False, None)


def is_small(s: ExplicitHomSet) -> bool:
    """True iff the set is a finite union of tiny sets.

    Characterization: every member sends some gadget vertex into a bipartite
    component (each such singleton is tiny, and singletons cover the set).
    """
    nb = nonbipartite_vertices(s.target)
    for hom in s.homs:
        if all(img in nb for img in hom.vertex_images):
            return False
    return True


def is_large(p: HomProfile) -> LargeVerdict:
    """True iff some member avoids the 2-colorable components entirely."""
    nb = nonbipartite_vertices(p.target)
    nbmask = 0
    for v in nb:
        nbmask |= 1 << p.target.vertex_index(v)
    restricted = p.restricted([m & nbmask for m in p.vmasks], list(p.wmasks))
    if restricted.is_empty:
        return LargeVerdict(False, None)
    found, _ = restricted.enumerate_homs(1)
    return LargeVerdict(True, found.homs[0])


def double(p: HomProfile, join_length: int) -> HomProfile:
    """Profile one level up whose copy restrictions both lie in p.

    The two copies inherit p's domains; the fresh join path of join_length+2
    edges is unconstrained.
    """
    if not isinstance(join_length, int) or join_length < 1:
        raise ParseError(f"join length must be an integer >= 1, got {join_length!r}")
    small = p.gadget
    big = build_gadget(small.prefix + (join_length,))
    allv = (1 << len(p.target.vertices)) - 1
    allw = (1 << len(p.target.witnesses)) - 1
    vmasks = []
    for v in big.vertices:
        if v.t:
            parent = GadgetVertex(v.k, v.t[:-1])
            vmasks.append(p.vmasks[small.position[parent]])
        else:
            vmasks.append(allv)
    wmasks = []
    for j in range(big.edge_count):
        u, v = big.vertices[j], big.vertices[j + 1]
        if u.t and v.t:
            pu = GadgetVertex(u.k, u.t[:-1])
            pv = GadgetVertex(v.k, v.t[:-1])
            wmasks.append(p.wmasks[min(small.position[pu], small.position[pv])])
        else:
            wmasks.append(allw)
    return HomProfile(big, p.target, vmasks, wmasks)


def pin(p: HomProfile, hom: Hom) -> HomProfile:
    """The singleton profile denoting exactly {hom}."""
    if not p.member(hom):
        raise NotMember("homomorphism is not in the profile's denotation")
    vmasks = [1 << p.target.vertex_index(img) for img in hom.vertex_images]
    wmasks = [1 << p.target.witness_index(wid) for wid in hom.witness_images]
    return p.restricted(vmasks, wmasks)


def glue_hom(p: HomProfile, phi0: Hom, join_length: int, walk: Walk) -> Hom:
    """Level-(n+1) homomorphism with both copies equal to phi0 and the join
    path laid along the given closed walk at phi0's gluing image."""
    small = p.gadget
    big = build_gadget(small.prefix + (join_length,))
    if walk.length != join_length + 2:
        raise ParseError("walk length must be the join length plus 2")
    glue_value = phi0.vertex_images[-1]
    if walk.vertices[0] != glue_value or walk.vertices[-1] != glue_value:
        raise ParseError("walk must be closed at the gluing image")
    vimgs = []
    for v in big.vertices:
        if v.t:
            parent = GadgetVertex(v.k, v.t[:-1])
            vimgs.append(phi0.vertex_images[small.position[parent]])
        else:
            vimgs.append(walk.vertices[v.k + 1])
    wimgs = []
    for j in range(big.edge_count):
        u, v = big.vertices[j], big.vertices[j + 1]
        if u.t and v.t:
            pu = GadgetVertex(u.k, u.t[:-1])
            pv = GadgetVertex(v.k, v.t[:-1])
            wimgs.append(phi0.witness_images[min(small.position[pu], small.position[pv])])
        elif not u.t and not v.t:
            wimgs.append(walk.witnesses[u.k + 1])
        elif u.t:
            wimgs.append(walk.witnesses[0])
        else:
            wimgs.append(walk.witnesses[join_length + 1])
    hom = Hom(tuple(vimgs), tuple(wimgs))
    validate_hom(big, p.target, hom)
    return hom


def extend_witness(p: HomProfile, n_bound: int) -> tuple[int, Hom]:
    """Pick a largeness witness and glue two copies of it one level up.

    Returns the chosen odd join length d >= n_bound and a homomorphism in
    double(p, d) whose copy restrictions both equal the witness.  The join
    length is the least odd value >= max(n_bound, m - 2) where m is the
    least odd closed-walk length at the witness's gluing image; the join is
    laid along the lexicographically least closed walk of length d + 2.
    """
    if not isinstance(n_bound, int) or n_bound < 0:
        raise ParseError(f"bound must be a natural number, got {n_bound!r}")
    verdict = is_large(p)
    if not verdict.large:
        raise NotLarge("profile has no member avoiding 2-colorable components")
    phi0 = verdict.witness
    glue_value = phi0.vertex_images[-1]
    min_closed = vertex_odd_girth(p.target, glue_value)
    if min_closed is None:
        raise OddwalkError("largeness witness has no odd closed walk")
    d = max(n_bound, min_closed - 2)
    if d % 2 == 0:
        d += 1
    walk = exact_walk(p.target, glue_value, glue_value, d + 2)
    if walk is None:
        raise OddwalkError("no closed walk of the scheduled length")
    hom = glue_hom(p, phi0, d, walk)
    if not double(p, d).member(hom):
        raise OddwalkError("glued homomorphism fell outside the doubled profile")
    return d, hom


def preserve_largeness(p: HomProfile, n_bound: int) -> int:
    """Odd join length >= n_bound whose doubled profile is again large.

    Uses the gluing construction's join length; the glued homomorphism stays
    inside the non-2-colorable components, so the doubled profile is large.
    The largeness of the result is re-checked, not assumed.
    """
    d, _ = extend_witness(p, n_bound)
    if not is_large(double(p, d)).large:
        raise OddwalkError("doubled profile unexpectedly lost largeness")
    return d
