"""Recursive path gadgets.

Level 0 is a single root vertex.  Level n+1 joins two relabeled copies of
level n (append bit 0 / bit 1 to every copy history) by a fresh path of
c(n)+2 edges through c(n)+1 new join vertices.  The result is always a
simple path; vertices are identified by their structured label (join index
k, copy-history bits t), and positions along the path are derived.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NonOddPrefix, ParseError, PrefixMismatch, UnknownVertex


@dataclass(frozen=True, order=True)
class GadgetVertex:
    """Structured label (k, t): join index at birth, then copy-history bits."""

    k: int
    t: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        if not self.t:
            return f"p{self.k}"
        return f"p{self.k}." + "".join(str(b) for b in self.t)

    @classmethod
    def from_label(cls, text: str) -> "GadgetVertex":
        body = text.strip()
        if not body.startswith("p"):
            raise ParseError(f"vertex label must look like p2 or p0.011, got {text!r}")
        head, _, bits = body[1:].partition(".")
        try:
            k = int(head)
        except ValueError:
            raise ParseError(f"bad join index in label {text!r}") from None
        if k < 0:
            raise ParseError(f"negative join index in label {text!r}")
        if not all(ch in "01" for ch in bits):
            raise ParseError(f"bad history bits in label {text!r}")
        return cls(k, tuple(int(ch) for ch in bits))

    def append(self, bit: int) -> "GadgetVertex":
        return GadgetVertex(self.k, self.t + (bit,))

    def __str__(self) -> str:
        return self.label


def check_prefix(prefix) -> tuple[int, ...]:
    """Validate a parameter prefix: a tuple of integers >= 1."""
    vals = tuple(prefix)
    for c in vals:
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise ParseError(f"prefix values must be integers >= 1, got {c!r}")
    return vals


def parse_prefix(text: str) -> tuple[int, ...]:
    """Parse a comma-separated prefix; the empty string means level 0."""
    body = text.strip()
    if not body:
        return ()
    try:
        vals = tuple(int(part) for part in body.split(","))
    except ValueError:
        raise ParseError(f"bad prefix {text!r}; expected e.g. 1,3,5") from None
    return check_prefix(vals)


class PathGadget:
    """The level-n gadget: a labeled simple path."""

    __slots__ = ("prefix", "vertices", "position", "odd_prefix")

    def __init__(self, prefix: tuple[int, ...], vertices: tuple[GadgetVertex, ...]):
        self.prefix = prefix
        self.vertices = vertices
        self.position = {v: i for i, v in enumerate(vertices)}
        self.odd_prefix = all(c % 2 == 1 for c in prefix)

    @property
    def level(self) -> int:
        return len(self.prefix)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    def edges(self):
        """Consecutive vertex pairs along the path."""
        for i in range(self.edge_count):
            yield self.vertices[i], self.vertices[i + 1]

    def require_vertex(self, v: GadgetVertex) -> int:
        if v not in self.position:
            raise UnknownVertex(f"vertex {v.label} is not in the level-{self.level} gadget")
        return self.position[v]

    def birth_level(self, v: GadgetVertex) -> int:
        self.require_vertex(v)
        return self.level - len(v.t)

    def __repr__(self) -> str:
        return f"PathGadget(prefix={self.prefix}, vertices={self.vertex_count})"


@lru_cache(maxsize=16)
def _build(prefix: tuple[int, ...]) -> PathGadget:
    verts: tuple[GadgetVertex, ...] = (GadgetVertex(0, ()),)
    for c in prefix:
        copy0 = tuple(v.append(0) for v in verts)
        join = tuple(GadgetVertex(k, ()) for k in range(c + 1))
        copy1 = tuple(v.append(1) for v in reversed(verts))
        verts = copy0 + join + copy1
    return PathGadget(prefix, verts)


def build_gadget(prefix) -> PathGadget:
    """Build the gadget for the given parameter prefix."""
    return _build(check_prefix(prefix))


def endpoints(g: PathGadget) -> tuple[GadgetVertex, GadgetVertex]:
    """The two path ends; at level 0 both are the root."""
    return g.vertices[0], g.vertices[-1]


def endpoint_label(level: int, i: int) -> GadgetVertex:
    """Closed-form endpoint label: root with history 0^(n-1) then bit i."""
    if level == 0:
        return GadgetVertex(0, ())
    return GadgetVertex(0, (0,) * (level - 1) + (i,))


PATH_VERTEX = "path"
NON_PATH_VERTEX = "non-path"


def classify(g: PathGadget, v: GadgetVertex) -> str:
    """A vertex with empty copy history is a top-level path vertex."""
    g.require_vertex(v)
    return PATH_VERTEX if not v.t else NON_PATH_VERTEX


def copy_embed(g_small: PathGadget, g_big: PathGadget, bit: int) -> dict:
    """The injective embedding of a gadget onto copy `bit` of the next level."""
    if bit not in (0, 1):
        raise ParseError(f"copy bit must be 0 or 1, got {bit!r}")
    if g_big.level != g_small.level + 1 or g_big.prefix[:g_small.level] != g_small.prefix:
        raise PrefixMismatch(
            f"prefix {g_big.prefix} does not extend {g_small.prefix} by one level")
    return {v: v.append(bit) for v in g_small.vertices}


def gadget_distance(g: PathGadget, u: GadgetVertex, v: GadgetVertex) -> int:
    """Distance along the path: difference of positions."""
    return abs(g.require_vertex(u) - g.require_vertex(v))


@dataclass(frozen=True)
class SiblingReport:
    """Distances between all last-bit sibling pairs in one gadget."""

    pairs_checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def sibling_pairs(g: PathGadget):
    """All pairs (v^(0), v^(1)) present in the gadget, by position of the 0-copy."""
    for v in g.vertices:
        if v.t and v.t[-1] == 0:
            other = GadgetVertex(v.k, v.t[:-1] + (1,))
            yield v, other


def check_odd_distance_lemma(g: PathGadget) -> SiblingReport:
    """Verify every last-bit sibling pair sits at odd distance."""
    if not g.odd_prefix:
        raise NonOddPrefix(f"prefix {g.prefix} has an even value")
    checked = 0
    bad = []
    for a, b in sibling_pairs(g):
        checked += 1
        d = gadget_distance(g, a, b)
        if d % 2 == 0:
            bad.append(f"{a.label} and {b.label} at even distance {d}")
    return SiblingReport(checked, tuple(bad))
