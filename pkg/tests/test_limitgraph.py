import math
import random

import pytest

from oddwalk import bruteforce
from oddwalk.errors import (InvalidVertex, LevelOutOfRange, NonOddPrefix,
                            ParseError, UnknownVertex)
from oddwalk.gadget import GadgetVertex, build_gadget, gadget_distance
from oddwalk.generators import random_ep_bits, random_odd_prefix
from oddwalk.limitgraph import (EP_ZERO, EpBits, LcVertex, LevelQuotient,
                                adjacent, level_quotient, neighbors,
                                odd_sibling_obstruction, project_level,
                                same_component, validate_vertex)


def v(m, k, pre=(), per=(0,)):
    return LcVertex(m, k, EpBits(pre, per))


def test_epbits_canonical_forms():
    assert EpBits((0,), (0,)) == EP_ZERO
    assert EpBits((), (0, 1, 0, 1)) == EpBits((), (0, 1))
    assert EpBits((1, 0), (0,)) == EpBits((1,), (0,))
    # absorbing a shared last bit rotates the period
    assert EpBits((1,), (0, 1)) == EpBits((), (1, 0))
    assert str(EP_ZERO) == "(0)"
    assert str(EpBits((1,), (0,))) == "1(0)"


def test_epbits_validation():
    with pytest.raises(ParseError):
        EpBits((0,), ())
    with pytest.raises(ParseError):
        EpBits((2,), (0,))
    with pytest.raises(ParseError):
        EpBits.from_strings("01", "x")


def test_epbits_bit_take_shift():
    x = EpBits((0, 1), (1, 0))
    assert x.take(6) == (0, 1, 1, 0, 1, 0)
    assert [x.bit(i) for i in range(5)] == [0, 1, 1, 0, 1]
    assert x.shift(1) == EpBits((1,), (1, 0))
    assert x.shift(2) == EpBits((), (1, 0))
    assert x.shift(3) == EpBits((), (0, 1))
    # shifting by a whole period past the prefix is the identity
    assert x.shift(4) == x.shift(2)
    with pytest.raises(ParseError):
        x.bit(-1)
    with pytest.raises(ParseError):
        x.shift(-1)


def test_epbits_prepend_first_one():
    assert EP_ZERO.prepend((1,)) == EpBits((1,), (0,))
    assert EP_ZERO.first_one() is None
    assert EpBits((0, 1), (0,)).first_one() == 1
    assert EpBits((), (0, 0, 1)).first_one() == 2
    assert EpBits.constant(1).first_one() == 0


def test_lc_vertex_parsing():
    zero = LcVertex.from_text("0:0::0")
    assert zero == v(0, 0)
    parsed = LcVertex.from_text("1:2:01:10")
    assert parsed == v(1, 2, (0, 1), (1, 0))
    assert LcVertex.from_json_dict(parsed.to_json_dict()) == parsed
    with pytest.raises(ParseError):
        LcVertex.from_text("1:2:01")
    with pytest.raises(ParseError):
        LcVertex.from_text("a:0::0")
    with pytest.raises(ParseError):
        LcVertex.from_json_dict({"m": 0, "k": 0})


def test_validate_vertex():
    prefix = (1, 3)
    validate_vertex(v(0, 0), prefix)
    validate_vertex(v(2, 3), prefix)  # k may equal c(m-1)
    for bad in [v(-1, 0), v(0, -1), v(0, 1), v(3, 0), v(2, 4)]:
        with pytest.raises(InvalidVertex):
            validate_vertex(bad, prefix)


def test_project_level_examples():
    assert project_level(v(0, 0), 2, (1, 3)) == GadgetVertex(0, (0, 0))
    assert project_level(v(1, 0), 1, (1,)) == GadgetVertex(0, ())
    # (01)-periodic continuation contributes bits 0, 1 at levels 3, 4
    assert project_level(v(2, 3, (), (0, 1)), 4, (1, 3, 5, 7)) == \
        GadgetVertex(3, (0, 1))
    with pytest.raises(LevelOutOfRange):
        project_level(v(2, 3), 1, (1, 3))
    with pytest.raises(LevelOutOfRange):
        project_level(v(0, 0), 3, (1, 3))


def test_adjacent_examples():
    assert adjacent(v(0, 0), v(1, 0), (1,))
    # two birth-0 vertices are never adjacent; their level-1 projections
    # already sit at distance 3
    assert not adjacent(v(0, 0), v(0, 0, (1,)), (1,))
    g = build_gadget((1,))
    assert gadget_distance(g, GadgetVertex(0, (0,)), GadgetVertex(0, (1,))) == 3
    assert adjacent(v(0, 0, (1,)), v(1, 1), (1,))


def test_adjacent_needs_matching_tails():
    # projections touch at level 1 but the continuations disagree afterwards
    assert not adjacent(v(0, 0, (0, 1)), v(1, 0), (1, 3))
    assert adjacent(v(0, 0), v(1, 0), (1, 3))


def test_neighbors_of_zero_vertex():
    for prefix in [(1,), (1, 3), (3, 5, 7)]:
        assert neighbors(v(0, 0), prefix) == (v(1, 0),)


def test_neighbors_examples():
    got = neighbors(v(1, 0), (1,))
    assert len(got) == 2
    assert v(0, 0) in got
    assert got == (v(0, 0), v(1, 1))

    # continuation 0 1 0 0 ... attaches at level 1 and at level 3
    got = neighbors(v(0, 0, (0, 1)), (1, 3, 5))
    assert got == (v(1, 0, (1,)), v(3, 0))


def test_neighbors_consistent_with_adjacent():
    rng = random.Random(80)
    prefix = (1, 3, 5, 1, 3, 5, 1)
    pool = []
    for m in range(0, 3):
        kmax = 0 if m == 0 else prefix[m - 1]
        for k in range(kmax + 1):
            for x in [EP_ZERO, EpBits((), (1,)), EpBits((1,), (0,)),
                      EpBits((0, 1), (0,)), EpBits((), (0, 1))]:
                pool.append(LcVertex(m, k, x))
    for a in pool:
        ns = neighbors(a, prefix)
        for b in ns:
            assert adjacent(a, b, prefix) and adjacent(b, a, prefix)
        # no neighbor with small birth level is missing from the answer
        found = {b for b in pool if adjacent(a, b, prefix)}
        assert found <= set(ns)


def test_adjacent_agrees_with_gadget_construction():
    rng = random.Random(81)
    prefix = (1, 3, 5, 1, 3, 5, 1)
    for _ in range(120):
        pair = []
        for _ in range(2):
            m = rng.randint(0, 2)
            k = 0 if m == 0 else rng.randint(0, prefix[m - 1])
            pair.append(LcVertex(m, k, random_ep_bits(rng, 2, 2)))
        a, b = pair
        want = bruteforce.projections_adjacent_everywhere(a, b, prefix, len(prefix))
        if max(a.m, b.m) == 0:
            want = False
        assert adjacent(a, b, prefix) == want
    # positive cases via the neighbor map
    for _ in range(40):
        m = rng.randint(0, 2)
        k = 0 if m == 0 else rng.randint(0, prefix[m - 1])
        a = LcVertex(m, k, random_ep_bits(rng, 2, 2))
        for b in neighbors(a, prefix):
            assert bruteforce.projections_adjacent_everywhere(a, b, prefix,
                                                              len(prefix))


def test_same_component_examples():
    assert same_component(v(0, 0), v(0, 0, (1,)))
    assert not same_component(v(0, 0), v(0, 0, (), (1,)))
    # equal birth levels force equal head lengths, so the two phases of the
    # alternating sequence never meet; a birth-level gap of one aligns them
    assert not same_component(v(0, 0, (), (0, 1)), v(0, 0, (), (1, 0)))
    assert same_component(v(0, 0, (), (0, 1)), v(1, 0, (), (1, 0)))
    assert not same_component(v(0, 0, (), (0, 1)), v(0, 0))
    assert same_component(v(0, 0), v(2, 1), prefix=(1, 3))


def test_same_component_is_an_equivalence():
    xs = [EP_ZERO, EpBits((), (1,)), EpBits((1,), (0,)), EpBits((), (0, 1)),
          EpBits((0, 0, 1), (0,)), EpBits((1, 1), (0, 1))]
    pool = [LcVertex(m, k, x) for x in xs
            for m, k in [(0, 0), (1, 0), (1, 1), (2, 2)]]
    for a in pool:
        assert same_component(a, a)
        for b in pool:
            assert same_component(a, b) == same_component(b, a)
    for a in pool:
        for b in pool:
            if not same_component(a, b):
                continue
            for c in pool:
                if same_component(b, c):
                    assert same_component(a, c)


def test_adjacency_implies_same_component():
    prefix = (1, 3, 5)
    rng = random.Random(82)
    for _ in range(50):
        m = rng.randint(0, 3)
        k = 0 if m == 0 else rng.randint(0, prefix[m - 1])
        a = LcVertex(m, k, random_ep_bits(rng, 2, 2))
        for b in neighbors(a, prefix):
            assert same_component(a, b, prefix)


def test_level_quotient_sizes():
    assert len(level_quotient(()).classes) == 1
    assert len(level_quotient((1,)).classes) == 4
    q = level_quotient((1, 3))
    assert len(q.classes) == 12
    d = q.to_json_dict()
    assert d["c"] == [1, 3]
    assert len(d["edges"]) == 11
    assert d["edges"][0] == [0, 1]
    assert d["classes"][0] == {"m": 0, "k": 0, "bits": "00"}


def test_level_quotient_round_trip():
    for prefix in [(1,), (1, 3), (3, 1, 5)]:
        q = level_quotient(prefix)
        for pos in range(len(q.classes)):
            rep = q.representative(pos)
            assert q.class_of(rep) == pos
            tail = EpBits((1,), (0, 1))
            assert q.class_of(q.representative(pos, tail)) == pos


def test_level_quotient_edges_are_adjacent_pairs():
    prefix = (1, 3)
    q = level_quotient(prefix)
    reps = [q.representative(pos) for pos in range(len(q.classes))]
    for i in range(len(reps) - 1):
        assert adjacent(reps[i], reps[i + 1], prefix)
    # same-tail representatives two steps apart never touch
    for i in range(len(reps) - 2):
        assert not adjacent(reps[i], reps[i + 2], prefix)


def test_odd_sibling_obstruction_examples():
    ob = odd_sibling_obstruction((1,), 0, ())
    assert (ob.left, ob.right) == (GadgetVertex(0, (0,)), GadgetVertex(0, (1,)))
    assert ob.distance == 3 and ob.odd

    ob = odd_sibling_obstruction((1, 3), 0, (0,))
    assert ob.distance == 11 and ob.odd
    assert ob.to_json_dict() == {"left": "p0.00", "right": "p0.01",
                                 "distance": 11, "odd": True}

    with pytest.raises(NonOddPrefix):
        odd_sibling_obstruction((2,), 0, ())
    with pytest.raises(UnknownVertex):
        odd_sibling_obstruction((1,), 5, ())
    with pytest.raises(UnknownVertex):
        odd_sibling_obstruction((1, 3), 0, (0, 0))


def test_odd_sibling_obstruction_random_prefixes():
    rng = random.Random(83)
    for _ in range(20):
        prefix = random_odd_prefix(rng, rng.randint(1, 5), high=5)
        g = build_gadget(prefix)
        # pick a random sibling pair present at the top level
        candidates = [gv for gv in g.vertices if gv.t and gv.t[-1] == 0]
        gv = rng.choice(candidates)
        ob = odd_sibling_obstruction(prefix, gv.k, gv.t[:-1])
        assert ob.odd
