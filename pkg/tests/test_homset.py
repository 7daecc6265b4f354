import random

import pytest

import oracles
from oddwalk import bruteforce
from oddwalk.errors import (NotHomomorphism, NotLarge, NotMember, OddwalkError,
                            ParseError)
from oddwalk.gadget import build_gadget
from oddwalk.generators import (all_graphs_upto, complete_graph, cycle_graph,
                                disjoint_union, path_graph, single_edge)
from oddwalk.graphs import WitnessedGraph, Walk
from oddwalk.homset import (ExplicitHomSet, Hom, all_homs, copy_restriction,
                            double, edge_label, extend_witness, glue_hom,
                            is_large, is_small, is_tiny, pin,
                            preserve_largeness, validate_hom)
from oddwalk.parity import nonbipartite_vertices


def k3():
    return complete_graph(3)


def test_count_base_gadget_is_vertex_count():
    # the one-vertex gadget maps onto each target vertex
    assert all_homs(build_gadget(()), k3()).count() == 3
    assert all_homs(build_gadget(()), cycle_graph(5)).count() == 5


def test_count_level_one_triangle():
    # 24 = 3 starts * 2 choices per step over 3 steps
    p = all_homs(build_gadget((1,)), k3())
    assert p.count() == 24
    assert p.count() == oracles.walk_count(k3(), 3)


def test_empty_profile_on_edgeless_target():
    g = WitnessedGraph.make(["a", "b"], [])
    p = all_homs(build_gadget((1,)), g)
    assert p.is_empty
    assert p.count() == 0
    for u in p.gadget.vertices:
        assert p.project(u) == ()
    homs, total = p.enumerate_homs(5)
    assert len(homs) == 0 and total == 0


def test_count_level_two_single_edge():
    # the 11-edge path zigzags across the lone edge: 2 walks, one per start
    assert all_homs(build_gadget((1, 3)), single_edge()).count() == 2


def test_project_matches_walk_positions():
    g = cycle_graph(5)
    p = all_homs(build_gadget((1,)), g)
    walks = oracles.vertex_walks(g, 3)
    for j, u in enumerate(p.gadget.vertices):
        assert set(p.project(u)) == {w[j] for w in walks}
    assert set(p.project_edge(0)) == set(g.witnesses)


def test_enumerate_is_lex_least():
    p = all_homs(build_gadget((1,)), k3())
    homs, total = p.enumerate_homs(5)
    assert total == 24 and len(homs) == 5
    # least vertex path walks k0-k1-k0-k1; each hop uses the only witness w0
    assert homs.homs[0] == Hom(("k0", "k1", "k0", "k1"), ("w0", "w0", "w0"))
    assert list(homs.homs) == sorted(homs.homs)
    assert all(p.member(h) for h in homs.homs)

    none, total = p.enumerate_homs(0)
    assert len(none) == 0 and total == 24
    with pytest.raises(ParseError):
        p.enumerate_homs(-1)


def test_enumerate_matches_backtracking_oracle():
    g = k3()
    gadget = build_gadget((1,))
    homs, total = all_homs(gadget, g).enumerate_homs(100)
    want = bruteforce.enumerate_homs_backtracking(gadget, g)
    assert total == len(want) == 24
    assert sorted(homs.homs) == sorted(want)


def test_is_tiny_full_square_profile():
    # every projection is the whole 4-cycle, which has walks of length 1,
    # so no position certifies tininess even though the target is bipartite
    p = all_homs(build_gadget((1,)), cycle_graph(4))
    assert not is_tiny(p)
    assert is_tiny(p).vertex is None


def test_is_tiny_cases():
    assert not is_tiny(all_homs(build_gadget((1,)), k3()))
    empty = all_homs(build_gadget((1,)), WitnessedGraph.make(["a", "b"], []))
    verdict = is_tiny(empty)
    assert verdict.tiny and verdict.vertex == empty.gadget.vertices[0]
    # pinning into the bipartite component makes the projection odd-walk-free
    g = disjoint_union(cycle_graph(4), complete_graph(3))
    pinned = pin(all_homs(build_gadget(()), g), Hom(("a:c0",), ()))
    assert is_tiny(pinned)


def test_is_small_cases():
    assert is_small(bruteforce.explicit_homset(build_gadget(()), cycle_graph(4)))
    assert not is_small(bruteforce.explicit_homset(build_gadget(()), k3()))
    assert is_small(ExplicitHomSet(build_gadget(()), k3(), ()))


def test_square_full_set_is_small_but_not_tiny():
    g = cycle_graph(4)
    s = bruteforce.explicit_homset(build_gadget((1,)), g)
    assert is_small(s)
    assert not is_tiny(s)


def test_smallness_characterization_matches_cover_search():
    rng = random.Random(60)
    targets = [cycle_graph(4), k3(), single_edge(),
               disjoint_union(single_edge(), complete_graph(3))]
    for g in targets:
        for prefix in [(), (1,)]:
            gadget = build_gadget(prefix)
            full = bruteforce.enumerate_homs_backtracking(gadget, g)
            for _ in range(6):
                size = rng.randint(0, min(6, len(full)))
                subset = tuple(sorted(rng.sample(full, size)))
                s = ExplicitHomSet(gadget, g, subset)
                want = bruteforce.small_by_cover_search(s)
                assert is_small(s) == want
                if bruteforce.tiny_by_definition(s):
                    assert want


def test_smallness_ideal_laws():
    # downward closed and closed under finite unions
    rng = random.Random(61)
    g = disjoint_union(single_edge(), complete_graph(3))
    gadget = build_gadget((1,))
    full = bruteforce.enumerate_homs_backtracking(gadget, g)
    smalls = []
    for _ in range(20):
        subset = tuple(sorted(rng.sample(full, rng.randint(0, 8))))
        s = ExplicitHomSet(gadget, g, subset)
        if is_small(s):
            smalls.append(subset)
            sub = tuple(sorted(rng.sample(subset, len(subset) // 2)))
            assert is_small(ExplicitHomSet(gadget, g, sub))
    for i in range(len(smalls) - 1):
        union = tuple(sorted(set(smalls[i]) | set(smalls[i + 1])))
        assert is_small(ExplicitHomSet(gadget, g, union))


def test_is_large_cases():
    verdict = is_large(all_homs(build_gadget(()), k3()))
    assert verdict.large and verdict.witness == Hom(("k0",), ())
    square = is_large(all_homs(build_gadget(()), cycle_graph(4)))
    assert not square.large and square.witness is None


def test_is_large_witness_avoids_bipartite_parts():
    g = disjoint_union(complete_graph(3), cycle_graph(4))
    verdict = is_large(all_homs(build_gadget((1,)), g))
    assert verdict.large
    assert all(img.startswith("a:") for img in verdict.witness.vertex_images)
    assert all(wid.startswith("a:") for wid in verdict.witness.witness_images)


def test_double_full_base_profile():
    p = all_homs(build_gadget(()), k3())
    d1 = double(p, 1)
    assert d1.gadget.prefix == (1,)
    assert d1.count() == all_homs(build_gadget((1,)), k3()).count() == 24


def test_double_pinned_five_cycle():
    g = cycle_graph(5)
    p = pin(all_homs(build_gadget(()), g), Hom(("c0",), ()))
    d3 = double(p, 3)
    # both copies sit at c0, the join walks 5 steps back to c0: one walk
    # per direction around the cycle
    assert d3.count() == 2
    assert d3.count() == oracles.closed_walks_at(g, "c0", 5)


def test_double_of_full_counts_longer_walks():
    for g in [k3(), cycle_graph(5)]:
        p = all_homs(build_gadget((1,)), g)
        d3 = double(p, 3)
        assert d3.gadget.edge_count == 11
        assert d3.count() == oracles.walk_count(g, 11)


def test_double_join_length_validation():
    p = all_homs(build_gadget(()), k3())
    for bad in [0, -1, "3", 1.5]:
        with pytest.raises(ParseError):
            double(p, bad)


def test_pin_round_trip():
    p = all_homs(build_gadget((1,)), k3())
    homs, _ = p.enumerate_homs(2)
    first, second = homs.homs
    pinned = pin(p, first)
    assert pinned.count() == 1
    only, total = pinned.enumerate_homs(2)
    assert total == 1 and only.homs == (first,)
    for j, u in enumerate(p.gadget.vertices):
        assert pinned.project(u) == (first.vertex_images[j],)
    with pytest.raises(NotMember):
        pin(pinned, second)


def test_pin_rejects_foreign_hom():
    p = all_homs(build_gadget(()), k3())
    with pytest.raises(NotMember):
        pin(p, Hom(("c0",), ()))


def test_extend_witness_on_triangle():
    p = all_homs(build_gadget(()), k3())
    d, hom = extend_witness(p, 1)
    # odd girth 3 at k0 gives join length max(1, 3 - 2) = 1; the join is
    # laid along the least closed 3-walk k0-k1-k2-k0
    assert d == 1
    assert hom == Hom(("k0", "k1", "k2", "k0"), ("w0", "w2", "w1"))
    big = build_gadget((1,))
    validate_hom(big, k3(), hom)
    assert double(p, d).member(hom)
    phi0 = is_large(p).witness
    assert copy_restriction(big, p.gadget, hom, 0) == phi0
    assert copy_restriction(big, p.gadget, hom, 1) == phi0


def test_extend_witness_join_lengths():
    g = cycle_graph(5)
    p = pin(all_homs(build_gadget(()), g), Hom(("c0",), ()))
    d, hom = extend_witness(p, 1)
    # the shortest odd closed walk in the 5-cycle has length 5
    assert d == 3
    assert double(p, 3).member(hom)

    d, _ = extend_witness(all_homs(build_gadget(()), k3()), 4)
    # the bound 4 is even, so the join length rounds up to 5
    assert d == 5


def test_extend_witness_errors():
    with pytest.raises(NotLarge):
        extend_witness(all_homs(build_gadget(()), cycle_graph(4)), 1)
    p = all_homs(build_gadget(()), k3())
    for bad in [-1, "1", 1.0]:
        with pytest.raises(ParseError):
            extend_witness(p, bad)


def test_preserve_largeness_values():
    assert preserve_largeness(all_homs(build_gadget(()), k3()), 1) == 1
    assert preserve_largeness(all_homs(build_gadget(()), cycle_graph(5)), 1) == 3
    with pytest.raises(NotLarge):
        preserve_largeness(all_homs(build_gadget(()), cycle_graph(4)), 1)


def test_preserve_largeness_doubled_profile_is_large():
    p = all_homs(build_gadget(()), k3())
    d = preserve_largeness(p, 1)
    assert is_large(double(p, d))


def test_glue_hom_validation():
    g = k3()
    p = all_homs(build_gadget(()), g)
    phi0 = Hom(("k0",), ())
    good = Walk(("k0", "k1", "k2", "k0"), ("w0", "w2", "w1"))
    with pytest.raises(ParseError):
        glue_hom(p, phi0, 3, good)  # walk length must be join length + 2
    shifted = Walk(("k1", "k2", "k0", "k1"), ("w2", "w1", "w0"))
    with pytest.raises(ParseError):
        glue_hom(p, phi0, 1, shifted)  # not closed at the gluing image


def test_validate_hom_errors():
    g = k3()
    gadget = build_gadget((1,))
    good = Hom(("k0", "k1", "k0", "k1"), ("w0", "w0", "w0"))
    validate_hom(gadget, g, good)
    with pytest.raises(NotHomomorphism):
        validate_hom(gadget, g, Hom(("k0", "k1", "k0"), ("w0", "w0", "w0")))
    with pytest.raises(NotHomomorphism):
        validate_hom(gadget, g, Hom(("k0", "k1", "k0", "k1"), ("w0", "w0")))
    with pytest.raises(NotHomomorphism):
        validate_hom(gadget, g, Hom(("k0", "k1", "k0", "zz"), ("w0", "w0", "w0")))
    with pytest.raises(NotHomomorphism):
        validate_hom(gadget, g, Hom(("k0", "k1", "k0", "k1"), ("w0", "w0", "zz")))
    with pytest.raises(NotHomomorphism):
        # w1 joins k0-k2, not k0-k1
        validate_hom(gadget, g, Hom(("k0", "k1", "k0", "k1"), ("w0", "w1", "w0")))


def test_explicit_homset_rejects_duplicates():
    g = k3()
    gadget = build_gadget(())
    hom = Hom(("k0",), ())
    with pytest.raises(ParseError):
        ExplicitHomSet(gadget, g, (hom, hom))
    with pytest.raises(NotHomomorphism):
        ExplicitHomSet(gadget, g, (Hom(("zz",), ()),))


def test_profile_json_shape():
    p = all_homs(build_gadget((1,)), k3())
    d = p.to_json_dict()
    assert d["c"] == [1]
    assert set(d["vertexDomains"]) == {"p0.0", "p0", "p1", "p0.1"}
    assert d["witnessDomains"]["p0.0--p0"] == ["w0", "w1", "w2"]
    assert edge_label(p.gadget, 0) == "p0.0--p0"
    h = Hom(("k0", "k1", "k0", "k1"), ("w0", "w0", "w0"))
    hd = h.to_json_dict(p.gadget)
    assert hd["vertexAssignments"]["p0"] == "k1"
    assert hd["witnessAssignments"]["p0--p1"] == "w0"


def test_profile_agrees_with_enumeration_on_small_graphs():
    prefixes = [(), (1,), (1, 1), (1, 1, 1)]
    for g in all_graphs_upto(3):
        for prefix in prefixes:
            gadget = build_gadget(prefix)
            p = all_homs(gadget, g)
            total = p.count()
            assert total == oracles.walk_count(g, gadget.edge_count)
            if total > 3000:
                continue
            explicit = bruteforce.explicit_homset(gadget, g)
            assert total == len(explicit)
            for u in gadget.vertices:
                assert p.project(u) == explicit.project(u)
            assert is_tiny(p).tiny == bruteforce.tiny_by_definition(explicit)
            nb = nonbipartite_vertices(g)
            large_by_scan = any(all(v in nb for v in h.vertex_images)
                                for h in explicit.homs)
            assert is_large(p).large == large_by_scan
