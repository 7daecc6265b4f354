import json
import os
import random
import subprocess
import sys

import pytest

import oracles
from oddwalk import kernels
from oddwalk.gadget import build_gadget
from oddwalk.generators import cycle_graph, random_graph
from oddwalk.homset import all_homs
from oddwalk.kernels import pure


def random_instance(rng, n_vertices, n_witnesses, length):
    wit_ends = []
    for _ in range(n_witnesses):
        a = rng.randrange(n_vertices)
        b = rng.randrange(n_vertices - 1)
        if b >= a:
            b += 1
        wit_ends.append((a, b))
    vmasks = [rng.randrange(1 << n_vertices) for _ in range(length)]
    wmasks = [rng.randrange(1 << n_witnesses) for _ in range(length - 1)]
    return vmasks, wmasks, wit_ends


def test_pure_propagation_is_arc_consistent():
    rng = random.Random(50)
    for _ in range(100):
        n, w = rng.randint(2, 6), rng.randint(1, 8)
        vmasks, wmasks, wit_ends = random_instance(rng, n, w, rng.randint(1, 7))
        out_v, out_w = pure.path_propagate(vmasks, wmasks, wit_ends)
        # outputs shrink the inputs
        assert all(o & ~i == 0 for o, i in zip(out_v, vmasks))
        assert all(o & ~i == 0 for o, i in zip(out_w, wmasks))
        # a second pass is a fixpoint
        again = pure.path_propagate(out_v, out_w, wit_ends)
        assert (list(out_v), list(out_w)) == (list(again[0]), list(again[1]))
        # every surviving witness has both endpoints available
        for j, mask in enumerate(out_w):
            for idx in range(w):
                if mask >> idx & 1:
                    a, b = wit_ends[idx]
                    left, right = out_v[j], out_v[j + 1]
                    assert (left >> a & 1 and right >> b & 1) or \
                           (left >> b & 1 and right >> a & 1)


def test_pure_propagation_preserves_denotation():
    # count assignments by brute force before and after propagation
    rng = random.Random(51)
    for _ in range(50):
        n, w = rng.randint(2, 4), rng.randint(1, 5)
        vmasks, wmasks, wit_ends = random_instance(rng, n, w, rng.randint(1, 5))
        out_v, out_w = pure.path_propagate(vmasks, wmasks, wit_ends)

        def denotation(vm, wm):
            full = [[i] for i in range(n) if vm[0] >> i & 1]
            for pos in range(1, len(vm)):
                nxt = []
                for p in full:
                    for widx in range(w):
                        if not wm[pos - 1] >> widx & 1:
                            continue
                        a, b = wit_ends[widx]
                        if a == p[-1] and vm[pos] >> b & 1:
                            nxt.append(p + [b])
                        elif b == p[-1] and vm[pos] >> a & 1:
                            nxt.append(p + [a])
                full = nxt
            return len(full)

        assert denotation(vmasks, wmasks) == denotation(out_v, out_w)


@pytest.mark.skipif(not kernels.native_available(),
                    reason="compiled kernel not built")
def test_native_matches_pure():
    from oddwalk.kernels import _native
    rng = random.Random(52)
    for _ in range(200):
        n, w = rng.randint(2, 8), rng.randint(1, 10)
        vmasks, wmasks, wit_ends = random_instance(rng, n, w, rng.randint(1, 9))
        got = _native.path_propagate(list(vmasks), list(wmasks), wit_ends)
        want = pure.path_propagate(vmasks, wmasks, wit_ends)
        assert (list(got[0]), list(got[1])) == (list(want[0]), list(want[1]))


def test_backend_selection_limits():
    if kernels.native_available():
        assert kernels.backend_for(10, 10) == "native"
        assert kernels.backend_for(kernels.NATIVE_LIMIT, kernels.NATIVE_LIMIT) == "native"
    assert kernels.backend_for(kernels.NATIVE_LIMIT + 1, 3) == "pure"
    assert kernels.backend_for(3, kernels.NATIVE_LIMIT + 1) == "pure"


def test_large_targets_use_pure_path_and_agree():
    # 70 vertices exceeds the word limit, forcing the pure kernel
    g = cycle_graph(70)
    p = all_homs(build_gadget((1,)), g)
    assert p.count() == oracles.walk_count(g, 3)


def test_profile_counts_match_under_forced_pure_kernel():
    rng = random.Random(53)
    graphs = [random_graph(rng, 6, 0.5, multi=0.3) for _ in range(3)]
    script = (
        "from oddwalk.homset import all_homs\n"
        "from oddwalk.gadget import build_gadget\n"
        "from oddwalk.graphs import WitnessedGraph\n"
        "import json, sys\n"
        "g = WitnessedGraph.from_json_text(sys.stdin.read())\n"
        "print(all_homs(build_gadget((1, 3)), g).count())\n"
    )
    for g in graphs:
        payload = json.dumps(g.to_json_dict())
        outs = []
        for forced in ("0", "1"):
            env = dict(os.environ, ODDWALK_PURE=forced)
            run = subprocess.run([sys.executable, "-c", script],
                                 input=payload, capture_output=True,
                                 text=True, env=env, check=True)
            outs.append(run.stdout)
        assert outs[0] == outs[1]
        assert int(outs[0]) == oracles.walk_count(g, build_gadget((1, 3)).edge_count)
