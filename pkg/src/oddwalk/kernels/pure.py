"""Pure-Python profile propagation kernel.

Domains are bitmasks held in Python ints, so there is no size limit on the
target graph.  The compiled kernel in _native.pyx implements the same
contract for targets with at most 64 vertices and 64 witnesses.
"""

from __future__ import annotations


def path_propagate(vmasks, wmasks, wit_ends):
    """Make a path profile arc-consistent.

    vmasks: per-position vertex-domain bitmasks (length T).
    wmasks: per-edge witness-domain bitmasks (length T-1).
    wit_ends: per target witness index, its endpoint vertex indices (a, b).

    Returns new (vmasks, wmasks) lists.  One forward and one backward sweep
    reach full arc consistency because the constraint graph is a path; the
    backward sweep also tightens each witness domain against both final
    endpoint domains.  The denoted homomorphism set never changes.
    """
    vmasks = list(vmasks)
    wmasks = list(wmasks)
    edges = len(wmasks)
    for i in range(edges):
        left = vmasks[i]
        allowed = 0
        keep = 0
        m = wmasks[i]
        while m:
            low = m & -m
            m ^= low
            a, b = wit_ends[low.bit_length() - 1]
            hit = False
            if left >> a & 1:
                allowed |= 1 << b
                hit = True
            if left >> b & 1:
                allowed |= 1 << a
                hit = True
            if hit:
                keep |= low
        wmasks[i] = keep
        vmasks[i + 1] &= allowed
    for i in range(edges - 1, -1, -1):
        right = vmasks[i + 1]
        allowed = 0
        m = wmasks[i]
        while m:
            low = m & -m
            m ^= low
            a, b = wit_ends[low.bit_length() - 1]
            if right >> a & 1:
                allowed |= 1 << b
            if right >> b & 1:
                allowed |= 1 << a
        vmasks[i] &= allowed
        left = vmasks[i]
        keep = 0
        m = wmasks[i]
        while m:
            low = m & -m
            m ^= low
            a, b = wit_ends[low.bit_length() - 1]
            if (left >> a & 1 and right >> b & 1) or (left >> b & 1 and right >> a & 1):
                keep |= low
        wmasks[i] = keep
    return vmasks, wmasks
