"""Two-coloring versus homomorphism-tower dichotomy driver.

For a bipartite input the driver returns a proper 2-coloring.  Otherwise it
grows a tower: pin a root homomorphism at the least vertex lying on an odd
closed walk, then repeatedly choose an odd join length meeting the caller's
schedule, glue two copies of the current pinned homomorphism along a closed
walk of that length plus two, and pin the result.  Pinning stands in for the
shrinking-closure step of the infinite construction: in a finite model a
diameter below one already forces singletons.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidIndex, OutOfTruncation, ParseError
from .gadget import GadgetVertex, build_gadget
from .graphs import Coloring, WitnessedGraph, vertex_pair
from .homset import Hom, all_homs, double, extend_witness, pin, validate_hom
from .limitgraph import level_quotient
from .parity import bipartite_certificate, nonbipartite_vertices


@dataclass(frozen=True)
class Tower:
    """Coherent pinned homomorphisms, one per gadget level.

    levels[n] is over the gadget with prefix[:n]; its copy restrictions at
    level n+1 both recover levels[n].  schedule_values records the lower
    bounds the join lengths had to meet.
    """

    prefix: tuple[int, ...]
    levels: tuple[Hom, ...]
    schedule_values: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.prefix)

    def to_json_dict(self) -> dict:
        return {
            "c": list(self.prefix),
            "levels": [hom.to_json_dict(build_gadget(self.prefix[:n]))
                       for n, hom in enumerate(self.levels)],
            "schedule": list(self.schedule_values),
        }


def unbounded_schedule_default():
    """The default lower-bound schedule: 1, 1, 3, 5, 7, ..."""
    return lambda n: max(1, 2 * n - 1)


def parse_schedule(text: str):
    """Schedule spec: "default" or an explicit comma-separated list."""
    body = text.strip()
    if body == "default":
        return unbounded_schedule_default()
    try:
        vals = [int(part) for part in body.split(",")]
    except ValueError:
        raise ParseError(f"bad schedule {text!r}; expected default or e.g. 1,3,5") from None
    if any(v < 0 for v in vals):
        raise ParseError("schedule values must be nonnegative")

    def sched(n: int) -> int:
        if n >= len(vals):
            raise ParseError(f"schedule list too short for level {n}")
        return vals[n]

    return sched


def decide(g: WitnessedGraph, depth: int, schedule=None):
    """Proper 2-coloring if g is bipartite, else a Tower of the given depth.

    Exactly one branch occurs.  Returns a Coloring or a Tower.
    """
    if not isinstance(depth, int) or depth < 0:
        raise ParseError(f"depth must be a natural number, got {depth!r}")
    if schedule is None:
        schedule = unbounded_schedule_default()
    cert = bipartite_certificate(g)
    if isinstance(cert, Coloring):
        return cert
    root_value = min(nonbipartite_vertices(g))
    gadget0 = build_gadget(())
    phi = Hom((root_value,), ())
    profile = pin(all_homs(gadget0, g), phi)
    prefix: list[int] = []
    levels = [phi]
    bounds: list[int] = []
    for n in range(depth):
        bound = schedule(n)
        if not isinstance(bound, int) or bound < 0:
            raise ParseError(f"schedule({n}) must be a natural number, got {bound!r}")
        d, phi = extend_witness(profile, bound)
        profile = pin(double(profile, d), phi)
        prefix.append(d)
        bounds.append(bound)
        levels.append(phi)
    return Tower(tuple(prefix), tuple(levels), tuple(bounds))


def evaluate(t: Tower, m: int, k: int, tbits) -> str:
    """Finite limit-map evaluation: the pinned image of (k, tbits) at level
    m + len(tbits).  Coherence makes the value stable under appending bits
    and raising the level together."""
    tbits = tuple(tbits)
    if not all(b in (0, 1) for b in tbits):
        raise ParseError(f"tbits must be 0/1, got {tbits!r}")
    if m < 0 or k < 0:
        raise InvalidIndex("m and k must be nonnegative")
    if m == 0:
        if k != 0:
            raise InvalidIndex(f"birth level 0 forces k = 0, got k = {k}")
    else:
        if m - 1 >= len(t.prefix):
            raise OutOfTruncation(
                f"birth level {m} beyond tower depth {t.depth}")
        if k > t.prefix[m - 1]:
            raise InvalidIndex(f"k = {k} exceeds c({m - 1}) = {t.prefix[m - 1]}")
    level = m + len(tbits)
    if level > t.depth:
        raise OutOfTruncation(f"level {level} beyond tower depth {t.depth}")
    gadget = build_gadget(t.prefix[:level])
    vertex = GadgetVertex(k, tbits)
    return t.levels[level].vertex_images[gadget.require_vertex(vertex)]


@dataclass(frozen=True)
class TowerReport:
    """Verification outcome; all violations are listed, none raised."""

    checks: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks,
                "violations": list(self.violations)}


def verify_tower(t: Tower, g: WitnessedGraph) -> TowerReport:
    """Re-check every Tower invariant against the target graph.

    Covers: homomorphism validity per level, coherence of consecutive
    levels, odd join lengths meeting the schedule, the largeness
    precondition (all pinned values avoid 2-colorable components), and
    adjacency of evaluated endpoints over every level-quotient edge of the
    depth-level truncation.
    """
    checks = 0
    bad: list[str] = []
    if len(t.levels) != t.depth + 1:
        bad.append(f"expected {t.depth + 1} levels, got {len(t.levels)}")
        return TowerReport(1, tuple(bad))
    for n, c in enumerate(t.prefix):
        checks += 1
        if c % 2 == 0 or c < 1:
            bad.append(f"c({n}) = {c} is not odd")
        if n < len(t.schedule_values) and c < t.schedule_values[n]:
            bad.append(f"c({n}) = {c} below schedule bound {t.schedule_values[n]}")
    shape_ok = True
    for n, hom in enumerate(t.levels):
        checks += 1
        expect = build_gadget(t.prefix[:n])
        if (len(hom.vertex_images) != expect.vertex_count
                or len(hom.witness_images) != expect.edge_count):
            bad.append(f"level {n}: wrong assignment shape")
            shape_ok = False
            continue
        try:
            validate_hom(expect, g, hom)
        except Exception as exc:
            bad.append(f"level {n}: {exc}")
    if not shape_ok:
        return TowerReport(checks, tuple(bad))
    nb = nonbipartite_vertices(g)
    for n, hom in enumerate(t.levels):
        checks += 1
        outside = sorted(set(hom.vertex_images) - nb)
        if outside:
            bad.append(
                f"level {n}: largeness precondition fails, images "
                f"{', '.join(map(repr, outside))} lie in 2-colorable components")
    for n in range(t.depth):
        small = build_gadget(t.prefix[:n])
        big = build_gadget(t.prefix[:n + 1])
        for bit in (0, 1):
            for v in small.vertices:
                checks += 1
                got = t.levels[n + 1].vertex_images[big.position[v.append(bit)]]
                want = t.levels[n].vertex_images[small.position[v]]
                if got != want:
                    bad.append(
                        f"coherence broken at level {n + 1}, copy {bit}, "
                        f"vertex {v.label}: {got!r} vs {want!r}")
    if not bad:
        quotient = level_quotient(t.prefix) if t.prefix else None
        top = t.levels[-1]
        if quotient is not None:
            gq = quotient.gadget
            for j in range(gq.edge_count):
                checks += 1
                u_img = top.vertex_images[j]
                v_img = top.vertex_images[j + 1]
                wid = top.witness_images[j]
                if not g.adjacent(u_img, v_img):
                    bad.append(
                        f"quotient edge {j}: images {u_img!r}, {v_img!r} not adjacent")
                elif g.ends[wid] != vertex_pair(u_img, v_img):
                    bad.append(
                        f"quotient edge {j}: witness {wid!r} inconsistent")
    return TowerReport(checks, tuple(bad))
