"""Deterministic graph and parameter generators for tests and checks."""

from __future__ import annotations

import itertools
import random

from .graphs import WitnessedGraph
from .limitgraph import EpBits


def cycle_graph(n: int, tag: str = "c") -> WitnessedGraph:
    names = [f"{tag}{i}" for i in range(n)]
    pairs = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return WitnessedGraph.make(names, pairs)


def complete_graph(n: int, tag: str = "k") -> WitnessedGraph:
    names = [f"{tag}{i}" for i in range(n)]
    pairs = list(itertools.combinations(names, 2))
    return WitnessedGraph.make(names, pairs)


def path_graph(n: int, tag: str = "p") -> WitnessedGraph:
    names = [f"{tag}{i}" for i in range(n)]
    pairs = [(names[i], names[i + 1]) for i in range(n - 1)]
    return WitnessedGraph.make(names, pairs)


def single_edge() -> WitnessedGraph:
    return WitnessedGraph.make(["u", "v"], [("u", "v")])


def petersen_graph() -> WitnessedGraph:
    outer = [f"o{i}" for i in range(5)]
    inner = [f"i{i}" for i in range(5)]
    pairs = [(outer[i], outer[(i + 1) % 5]) for i in range(5)]
    pairs += [(outer[i], inner[i]) for i in range(5)]
    pairs += [(inner[i], inner[(i + 2) % 5]) for i in range(5)]
    return WitnessedGraph.make(outer + inner, pairs)


def disjoint_union(a: WitnessedGraph, b: WitnessedGraph,
                   tags: tuple[str, str] = ("a:", "b:")) -> WitnessedGraph:
    ta, tb = tags
    ends = {}
    for w in a.witnesses:
        u, v = a.ends[w]
        ends[f"{ta}{w}"] = (f"{ta}{u}", f"{ta}{v}")
    for w in b.witnesses:
        u, v = b.ends[w]
        ends[f"{tb}{w}"] = (f"{tb}{u}", f"{tb}{v}")
    vertices = [f"{ta}{v}" for v in a.vertices] + [f"{tb}{v}" for v in b.vertices]
    return WitnessedGraph(vertices, ends)


def random_graph(rng: random.Random, n: int, p: float = 0.5,
                 multi: float = 0.0, tag: str = "v") -> WitnessedGraph:
    """Random simple graph, optionally duplicating witnesses with rate multi."""
    names = [f"{tag}{i}" for i in range(n)]
    pairs = []
    for u, v in itertools.combinations(names, 2):
        if rng.random() < p:
            pairs.append((u, v))
            if multi and rng.random() < multi:
                pairs.append((u, v))
    return WitnessedGraph.make(names, pairs)


def random_bipartite_graph(rng: random.Random, n: int, p: float = 0.5,
                           tag: str = "v") -> WitnessedGraph:
    names = [f"{tag}{i}" for i in range(n)]
    side = {v: rng.random() < 0.5 for v in names}
    pairs = [(u, v) for u, v in itertools.combinations(names, 2)
             if side[u] != side[v] and rng.random() < p]
    return WitnessedGraph.make(names, pairs)


def all_graphs_upto(max_vertices: int, tag: str = "v"):
    """Every simple graph on 1..max_vertices labeled vertices, in a fixed order."""
    for n in range(1, max_vertices + 1):
        names = [f"{tag}{i}" for i in range(n)]
        slots = list(itertools.combinations(names, 2))
        for bits in range(1 << len(slots)):
            pairs = [slots[i] for i in range(len(slots)) if bits >> i & 1]
            yield WitnessedGraph.make(names, pairs)


def random_odd_prefix(rng: random.Random, length: int, high: int = 15) -> tuple[int, ...]:
    return tuple(rng.randrange(1, high + 1, 2) for _ in range(length))


def random_ep_bits(rng: random.Random, max_prefix: int = 4,
                   max_period: int = 4) -> EpBits:
    pre = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, max_prefix)))
    per = tuple(rng.randint(0, 1) for _ in range(rng.randint(1, max_period)))
    return EpBits(pre, per)
