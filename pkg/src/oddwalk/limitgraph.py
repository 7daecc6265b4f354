"""Symbolic truncation of the limit graph over a parameter sequence.

Vertices are triples (m, k, x): birth level m, join index k, and an infinite
binary continuation x restricted to eventually periodic sequences, the exact
decidable fragment.  A vertex projects to the level-n gadget vertex with
label (k, first n-m bits of x); two vertices are adjacent iff their
projections are adjacent at level max(m_a, m_b) and the correspondingly
shifted tails agree forever.  That characterization is validated against
brute-force gadget construction by the test suite rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (InvalidVertex, LevelOutOfRange, NonOddPrefix, ParseError,
                     UnknownVertex)
from .gadget import (GadgetVertex, PathGadget, build_gadget, check_prefix,
                     gadget_distance)


@dataclass(frozen=True)
class EpBits:
    """Eventually periodic binary sequence in canonical form.

    Canonical means the period is primitive and the prefix is shortest:
    a shared last bit of prefix and period is absorbed by rotating the
    period.  Two values denote the same sequence iff they are equal.
    """

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        pre, per = tuple(self.prefix), tuple(self.period)
        if not per:
            raise ParseError("period must be nonempty")
        for b in pre + per:
            if b not in (0, 1):
                raise ParseError(f"bits must be 0 or 1, got {b!r}")
        for d in range(1, len(per) + 1):
            if len(per) % d == 0 and per == per[:d] * (len(per) // d):
                per = per[:d]
                break
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1:] + per[:-1]
        object.__setattr__(self, "prefix", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def from_strings(cls, prefix: str, period: str) -> "EpBits":
        try:
            return cls(tuple(int(ch) for ch in prefix.strip()),
                       tuple(int(ch) for ch in period.strip()))
        except ValueError:
            raise ParseError(f"bad bit strings {prefix!r}, {period!r}") from None

    @classmethod
    def constant(cls, bit: int) -> "EpBits":
        return cls((), (bit,))

    def bit(self, i: int) -> int:
        if i < 0:
            raise ParseError("bit index must be nonnegative")
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def take(self, n: int) -> tuple[int, ...]:
        return tuple(self.bit(i) for i in range(n))

    def shift(self, j: int) -> "EpBits":
        """The tail after dropping the first j bits."""
        if j < 0:
            raise ParseError("shift must be nonnegative")
        if j <= len(self.prefix):
            return EpBits(self.prefix[j:], self.period)
        r = (j - len(self.prefix)) % len(self.period)
        return EpBits((), self.period[r:] + self.period[:r])

    def prepend(self, bits) -> "EpBits":
        return EpBits(tuple(bits) + self.prefix, self.period)

    def first_one(self) -> int | None:
        """Index of the first 1 bit, or None for the all-zero sequence."""
        for i, b in enumerate(self.prefix):
            if b:
                return i
        for i, b in enumerate(self.period):
            if b:
                return len(self.prefix) + i
        return None

    def sort_key(self) -> tuple:
        return (self.prefix, self.period)

    def to_json_dict(self) -> dict:
        return {"prefix": "".join(map(str, self.prefix)),
                "period": "".join(map(str, self.period))}

    def __str__(self) -> str:
        pre = "".join(map(str, self.prefix))
        per = "".join(map(str, self.period))
        return f"{pre}({per})"


EP_ZERO = EpBits((), (0,))


@dataclass(frozen=True)
class LcVertex:
    """Limit-graph vertex (m, k, x)."""

    m: int
    k: int
    x: EpBits

    @property
    def label(self) -> str:
        return f"({self.m},{self.k},{self.x})"

    def sort_key(self) -> tuple:
        return (self.m, self.k) + self.x.sort_key()

    def to_json_dict(self) -> dict:
        return {"m": self.m, "k": self.k, "x": self.x.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data) -> "LcVertex":
        try:
            x = data["x"]
            return cls(int(data["m"]), int(data["k"]),
                       EpBits.from_strings(x.get("prefix", ""), x["period"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad limit-graph vertex: {exc}") from None

    @classmethod
    def from_text(cls, text: str) -> "LcVertex":
        """Compact form m:k:prefix:period, e.g. 0:0::0 or 1:2:01:10."""
        parts = text.split(":")
        if len(parts) != 4:
            raise ParseError(f"vertex must look like m:k:prefix:period, got {text!r}")
        try:
            m, k = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad m or k in {text!r}") from None
        return cls(m, k, EpBits.from_strings(parts[2], parts[3]))


def validate_vertex(v: LcVertex, prefix) -> tuple[int, ...]:
    prefix = check_prefix(prefix)
    if v.m < 0 or v.k < 0:
        raise InvalidVertex(f"{v.label}: m and k must be nonnegative")
    if v.m == 0:
        if v.k != 0:
            raise InvalidVertex(f"{v.label}: birth level 0 forces k = 0")
    else:
        if v.m - 1 >= len(prefix):
            raise InvalidVertex(
                f"{v.label}: birth level {v.m} beyond prefix of length {len(prefix)}")
        if v.k > prefix[v.m - 1]:
            raise InvalidVertex(
                f"{v.label}: k = {v.k} exceeds c({v.m - 1}) = {prefix[v.m - 1]}")
    return prefix


def project_level(v: LcVertex, n: int, prefix) -> GadgetVertex:
    """The level-n gadget vertex (k, first n-m bits of x)."""
    prefix = validate_vertex(v, prefix)
    if not (v.m <= n <= len(prefix)):
        raise LevelOutOfRange(
            f"level {n} outside [{v.m}, {len(prefix)}] for {v.label}")
    return GadgetVertex(v.k, v.x.take(n - v.m))


def adjacent(a: LcVertex, b: LcVertex, prefix) -> bool:
    """Projections adjacent at level max(m_a, m_b) and tails equal onward."""
    prefix = validate_vertex(a, prefix)
    validate_vertex(b, prefix)
    n = max(a.m, b.m)
    if n == 0:
        return False
    g = build_gadget(prefix[:n])
    pa = g.position[project_level(a, n, prefix)]
    pb = g.position[project_level(b, n, prefix)]
    if abs(pa - pb) != 1:
        return False
    return a.x.shift(n - a.m) == b.x.shift(n - b.m)


def _e1_bits(level: int) -> tuple[int, ...]:
    """Copy-history bits of the right endpoint label at the given level."""
    if level == 0:
        return ()
    return (0,) * (level - 1) + (1,)


def neighbors(v: LcVertex, prefix) -> tuple[LcVertex, ...]:
    """Exact neighbors among vertices with birth level within the prefix.

    Join-path vertices see their index neighbors at the same birth level
    plus, at the ends of the join, the copied right-endpoint vertex they
    attach to.  A birth-level-0 vertex attaches upward at level 1
    unconditionally and additionally at level j+2 when its continuation
    starts with j zeros followed by a one.
    """
    prefix = validate_vertex(v, prefix)
    out: list[LcVertex] = []
    if v.m >= 1:
        c = prefix[v.m - 1]
        for kk in (v.k - 1, v.k + 1):
            if 0 <= kk <= c:
                out.append(LcVertex(v.m, kk, v.x))
        if v.k == 0:
            out.append(LcVertex(0, 0, v.x.prepend(_e1_bits(v.m - 1) + (0,))))
        if v.k == c:
            out.append(LcVertex(0, 0, v.x.prepend(_e1_bits(v.m - 1) + (1,))))
    else:
        if len(prefix) >= 1:
            i = v.x.bit(0)
            out.append(LcVertex(1, 0 if i == 0 else prefix[0], v.x.shift(1)))
        j = v.x.first_one()
        if j is not None and j + 2 <= len(prefix):
            i = v.x.bit(j + 1)
            out.append(LcVertex(j + 2, 0 if i == 0 else prefix[j + 1], v.x.shift(j + 2)))
    return tuple(sorted(out, key=LcVertex.sort_key))


def same_component(a: LcVertex, b: LcVertex, prefix=None) -> bool:
    """True iff finite head strings t0, t1 with |t0| - |t1| = m_b - m_a turn
    both continuations into a common tail.

    Decided by scanning relative shifts up to one period alignment window;
    the answer never depends on the parameter values themselves.
    """
    if prefix is not None:
        validate_vertex(a, prefix)
        validate_vertex(b, prefix)
    delta = b.m - a.m
    window = max(len(b.x.prefix), len(a.x.prefix) - delta, 0)
    window += math.lcm(len(a.x.period), len(b.x.period))
    for j in range(max(0, -delta), window + 1):
        if a.x.shift(j + delta) == b.x.shift(j):
            return True
    return False


@dataclass(frozen=True)
class LevelQuotient:
    """Bijection between depth-n vertex classes and the level-n gadget.

    The class of (m, k, x) is (m, k, first n-m bits of x); classes are
    listed in gadget path order, so the quotient edges are exactly the
    consecutive pairs.
    """

    prefix: tuple[int, ...]
    gadget: PathGadget

    @property
    def classes(self) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
        n = len(self.prefix)
        return tuple((n - len(gv.t), gv.k, gv.t) for gv in self.gadget.vertices)

    def class_of(self, v: LcVertex) -> int:
        """Position of v's class, i.e. of its level-n projection."""
        n = len(self.prefix)
        gv = project_level(v, n, self.prefix)
        return self.gadget.position[gv]

    def representative(self, position: int, tail: EpBits = EP_ZERO) -> LcVertex:
        """A member of the class at the given position, default tail zeros."""
        gv = self.gadget.vertices[position]
        n = len(self.prefix)
        return LcVertex(n - len(gv.t), gv.k, tail.prepend(gv.t))

    def to_json_dict(self) -> dict:
        return {
            "c": list(self.prefix),
            "classes": [{"m": m, "k": k, "bits": "".join(map(str, t))}
                        for m, k, t in self.classes],
            "edges": [[i, i + 1] for i in range(self.gadget.edge_count)],
        }


def level_quotient(prefix) -> LevelQuotient:
    prefix = check_prefix(prefix)
    return LevelQuotient(prefix, build_gadget(prefix))


@dataclass(frozen=True)
class SiblingObstruction:
    """Odd-distance report for one sibling pair in the level quotient."""

    left: GadgetVertex
    right: GadgetVertex
    distance: int

    @property
    def odd(self) -> bool:
        return self.distance % 2 == 1

    def to_json_dict(self) -> dict:
        return {"left": self.left.label, "right": self.right.label,
                "distance": self.distance, "odd": self.odd}


def odd_sibling_obstruction(prefix, k: int, t) -> SiblingObstruction:
    """Distance between the two last-bit siblings over (k, t) at the top level.

    An odd distance for every such pair is what rules out a 2-coloring that
    is stable under the copy maps.
    """
    prefix = check_prefix(prefix)
    if any(c % 2 == 0 for c in prefix):
        raise NonOddPrefix(f"prefix {prefix} has an even value")
    g = build_gadget(prefix)
    t = tuple(t)
    left = GadgetVertex(k, t + (0,))
    right = GadgetVertex(k, t + (1,))
    for gv in (left, right):
        if gv not in g.position:
            raise UnknownVertex(f"{gv.label} is not a level-{len(prefix)} vertex")
    return SiblingObstruction(left, right, gadget_distance(g, left, right))
