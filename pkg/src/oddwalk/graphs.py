"""Finite witnessed multigraphs.

A graph is presented by a witness set: every witness id names one edge via an
unordered pair of distinct endpoint vertices, and several witnesses may name
the same pair.  Homomorphisms elsewhere in the package must pick a witness
for every edge they use, so the multiplicity is semantically visible.

All iteration orders are ascending by id; nothing here depends on hash order.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import ParseError, UnknownVertex


def vertex_pair(u: str, v: str) -> tuple[str, str]:
    """Canonical (sorted) form of an unordered vertex pair."""
    return (u, v) if u <= v else (v, u)


class WitnessedGraph:
    """Immutable finite multigraph with witness-presented edges."""

    __slots__ = ("vertices", "witnesses", "ends", "_neighbors", "_between",
                 "_vindex", "_windex")

    def __init__(self, vertices, ends):
        vs = []
        for v in vertices:
            if not isinstance(v, str) or not v:
                raise ParseError(f"vertex id must be a nonempty string, got {v!r}")
            vs.append(v)
        self.vertices: tuple[str, ...] = tuple(sorted(set(vs)))
        vset = set(self.vertices)
        fixed = {}
        for w in sorted(ends):
            if not isinstance(w, str) or not w:
                raise ParseError(f"witness id must be a nonempty string, got {w!r}")
            pair = tuple(ends[w])
            if len(pair) != 2:
                raise ParseError(f"witness {w!r} must have exactly two ends")
            u, v = pair
            if u not in vset or v not in vset:
                raise ParseError(f"witness {w!r} has unknown endpoint")
            if u == v:
                raise ParseError(f"witness {w!r} is a loop at {u!r}")
            fixed[w] = vertex_pair(u, v)
        self.witnesses: tuple[str, ...] = tuple(sorted(fixed))
        self.ends: dict[str, tuple[str, str]] = fixed
        nbr: dict[str, set[str]] = {v: set() for v in self.vertices}
        between: dict[tuple[str, str], list[str]] = {}
        for w in self.witnesses:
            u, v = fixed[w]
            nbr[u].add(v)
            nbr[v].add(u)
            between.setdefault((u, v), []).append(w)
        self._neighbors = {v: tuple(sorted(s)) for v, s in nbr.items()}
        self._between = {p: tuple(sorted(ws)) for p, ws in between.items()}
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        self._windex = {w: i for i, w in enumerate(self.witnesses)}

    # -- constructors ------------------------------------------------------

    @classmethod
    def make(cls, vertices, pairs, id_prefix: str = "w") -> "WitnessedGraph":
        """Build from a list of endpoint pairs with auto-generated witness ids."""
        ends = {f"{id_prefix}{i}": tuple(p) for i, p in enumerate(pairs)}
        return cls(vertices, ends)

    @classmethod
    def from_json_dict(cls, data) -> "WitnessedGraph":
        if not isinstance(data, dict):
            raise ParseError("graph JSON must be an object")
        if "vertices" not in data or "witnesses" not in data:
            raise ParseError('graph JSON needs "vertices" and "witnesses" keys')
        if not isinstance(data["vertices"], list):
            raise ParseError('"vertices" must be a list')
        if not isinstance(data["witnesses"], list):
            raise ParseError('"witnesses" must be a list')
        ends = {}
        for entry in data["witnesses"]:
            if not isinstance(entry, dict) or "id" not in entry or "ends" not in entry:
                raise ParseError('each witness needs "id" and "ends"')
            wid = entry["id"]
            if wid in ends:
                raise ParseError(f"duplicate witness id {wid!r}")
            ends[wid] = tuple(entry["ends"])
        return cls(data["vertices"], ends)

    @classmethod
    def from_json_text(cls, text: str) -> "WitnessedGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)

    @classmethod
    def from_edge_text(cls, text: str) -> "WitnessedGraph":
        """Plain-text fallback: one "u v" pair per line, ids w0, w1, ... in order."""
        vertices: list[str] = []
        pairs = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) == 1:
                vertices.append(parts[0])
                continue
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
            pairs.append((parts[0], parts[1]))
        for u, v in pairs:
            vertices.extend((u, v))
        return cls.make(vertices, pairs)

    @classmethod
    def from_text(cls, text: str) -> "WitnessedGraph":
        """Sniff JSON vs. edge-list input."""
        if text.lstrip().startswith("{"):
            return cls.from_json_text(text)
        return cls.from_edge_text(text)

    # -- queries -----------------------------------------------------------

    def require_vertices(self, ids) -> None:
        bad = sorted(set(v for v in ids if v not in self._vindex))
        if bad:
            raise UnknownVertex(f"unknown vertex ids: {', '.join(map(repr, bad))}")

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def vertex_index(self, v: str) -> int:
        if v not in self._vindex:
            raise UnknownVertex(f"unknown vertex id: {v!r}")
        return self._vindex[v]

    def witness_index(self, w: str) -> int:
        if w not in self._windex:
            raise UnknownVertex(f"unknown witness id: {w!r}")
        return self._windex[w]

    def neighbors(self, v: str) -> tuple[str, ...]:
        self.require_vertices([v])
        return self._neighbors[v]

    def degree(self, v: str) -> int:
        """Number of incident witnesses (multigraph degree)."""
        self.require_vertices([v])
        return sum(len(self._between[vertex_pair(v, u)]) for u in self._neighbors[v])

    def max_neighbor_count(self) -> int:
        return max((len(self._neighbors[v]) for v in self.vertices), default=0)

    def adjacent(self, u: str, v: str) -> bool:
        self.require_vertices([u, v])
        return vertex_pair(u, v) in self._between

    def witnesses_between(self, u: str, v: str) -> tuple[str, ...]:
        self.require_vertices([u, v])
        return self._between.get(vertex_pair(u, v), ())

    def components(self) -> tuple[tuple[str, ...], ...]:
        """Connected components, each sorted, ordered by least member."""
        seen: set[str] = set()
        comps = []
        for root in self.vertices:
            if root in seen:
                continue
            queue = deque([root])
            seen.add(root)
            comp = []
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self._neighbors[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def component_of(self, v: str) -> tuple[str, ...]:
        self.require_vertices([v])
        for comp in self.components():
            if v in comp:
                return comp
        raise AssertionError("unreachable")

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "witnesses": [{"id": w, "ends": list(self.ends[w])}
                          for w in self.witnesses],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, WitnessedGraph):
            return NotImplemented
        return (self.vertices == other.vertices and self.ends == other.ends)

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.ends.items()))))

    def __repr__(self) -> str:
        return (f"WitnessedGraph({len(self.vertices)} vertices, "
                f"{len(self.witnesses)} witnesses)")


@dataclass(frozen=True)
class Walk:
    """A walk: vertex sequence plus the witness chosen for every step."""

    vertices: tuple[str, ...]
    witnesses: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.witnesses)

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def validate(self, g: WitnessedGraph) -> None:
        if len(self.vertices) != len(self.witnesses) + 1 or not self.vertices:
            raise ParseError("walk needs one more vertex than witnesses")
        g.require_vertices(self.vertices)
        for j, w in enumerate(self.witnesses):
            if w not in g.ends:
                raise UnknownVertex(f"unknown witness id: {w!r}")
            if g.ends[w] != vertex_pair(self.vertices[j], self.vertices[j + 1]):
                raise ParseError(
                    f"step {j}: witness {w!r} does not join "
                    f"{self.vertices[j]!r} and {self.vertices[j + 1]!r}")

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.vertices),
                "witnesses": list(self.witnesses),
                "length": self.length}


@dataclass(frozen=True)
class Coloring:
    """Map from vertex ids to color indices."""

    by_vertex: dict = field(default_factory=dict)

    def of(self, v: str) -> int:
        return self.by_vertex[v]

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(sorted(self.by_vertex))

    @property
    def colors_used(self) -> int:
        return len(set(self.by_vertex.values()))

    def covers(self, g: WitnessedGraph) -> bool:
        return all(v in self.by_vertex for v in g.vertices)

    def is_proper(self, g: WitnessedGraph) -> bool:
        """Endpoints of every witness with both ends in the domain differ."""
        for w in g.witnesses:
            u, v = g.ends[w]
            if u in self.by_vertex and v in self.by_vertex:
                if self.by_vertex[u] == self.by_vertex[v]:
                    return False
        return True

    def to_json_dict(self) -> dict:
        return {v: self.by_vertex[v] for v in sorted(self.by_vertex)}
