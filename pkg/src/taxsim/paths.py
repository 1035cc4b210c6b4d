"""Pairwise hierarchy geometry.

For a concept pair this module computes the least common subsumer, the three
Wu-Palmer depths, the plain shortest up-then-down distance, and the
direction-penalised walk length used by the penalised edge-counting measure:
every edge costs 1, and an edge whose direction (up towards the root, or down
towards the leaves) differs from the previous edge costs 1 more.
"""

import heapq
from dataclasses import dataclass

from taxsim.taxonomy import ConceptId

_NONE, _UP, _DOWN = 0, 1, 2


@dataclass(frozen=True)
class PathInfo:
    c1: ConceptId
    c2: ConceptId
    lcs: ConceptId
    n: int
    n1: int
    n2: int
    raw_l: int
    effective_l: int
    path_len: int


def lcs(tax, c1, c2) -> ConceptId:
    """Least common subsumer of ``c1`` and ``c2``.

    Among the common ancestors that have no other common ancestor below them,
    the deepest is returned; remaining ties go to the smallest id.  On a tree
    this is simply the deepest common ancestor.
    """
    up1 = tax.up_distances(c1)
    up2 = tax.up_distances(c2)
    if len(up1) > len(up2):
        up1, up2 = up2, up1
    common = [a for a in up1 if a in up2]
    if len(common) == 1:
        return common[0]
    covered = set()
    for a in common:
        for b in tax.up_distances(a):
            if b != a:
                covered.add(b)
    best = None
    for a in common:
        if a in covered:
            continue
        key = (-tax.depth[a], a)
        if best is None or key < best:
            best = key
    return best[1]


def path_len(tax, c1, c2) -> int:
    """Fewest edges on a walk that climbs from ``c1`` to a common ancestor and descends to ``c2``."""
    up1 = tax.up_distances(c1)
    up2 = tax.up_distances(c2)
    if len(up1) > len(up2):
        up1, up2 = up2, up1
    return min(k + up2[a] for a, k in up1.items() if a in up2)


def _penalized_search(tax, source, target=None):
    """Dijkstra over (concept, direction of the last edge) states."""
    n = len(tax.labels)
    inf = 4 * n + 4
    dist = [[inf, inf, inf] for _ in range(n)]
    dist[source][_NONE] = 0
    heap = [(0, source, _NONE)]
    parents, children = tax.parents, tax.children
    while heap:
        d, u, last = heapq.heappop(heap)
        if d > dist[u][last]:
            continue
        if u == target:
            return d
        for step, nbrs in ((_UP, parents[u]), (_DOWN, children[u])):
            cost = d + (1 if last == _NONE or last == step else 2)
            for v in nbrs:
                if cost < dist[v][step]:
                    dist[v][step] = cost
                    heapq.heappush(heap, (cost, v, step))
    if target is not None:
        raise AssertionError("target unreachable in a rooted taxonomy")
    return [min(row) for row in dist]


def penalized_len(tax, c1, c2) -> int:
    """Least total weight of an up/down walk from ``c1`` to ``c2``, with a +1 surcharge per direction change."""
    c1, c2 = tax.resolve(c1), tax.resolve(c2)
    if c1 == c2:
        return 0
    return _penalized_search(tax, c1, c2)


def penalized_lengths_from(tax, c1):
    """``penalized_len(tax, c1, x)`` for every concept ``x``, from a single search."""
    return _penalized_search(tax, tax.resolve(c1))


def _assemble(tax, c1, c2, raw_l):
    a = lcs(tax, c1, c2)
    n1, n2 = tax.depth[c1], tax.depth[c2]
    # a shortcut edge in a DAG can leave the subsumer deeper than its descendant
    n = min(tax.depth[a], n1, n2)
    related = c1 in tax.up_distances(c2) or c2 in tax.up_distances(c1)
    return PathInfo(c1=c1, c2=c2, lcs=a, n=n, n1=n1, n2=n2, raw_l=raw_l,
                    effective_l=0 if related else raw_l,
                    path_len=path_len(tax, c1, c2))


def path_info(tax, c1, c2) -> PathInfo:
    c1, c2 = tax.resolve(c1), tax.resolve(c2)
    return _assemble(tax, c1, c2, penalized_len(tax, c1, c2))


def path_infos_from(tax, c1, targets=None):
    """PathInfo for ``c1`` against each target (all concepts by default), sharing one search."""
    c1 = tax.resolve(c1)
    raw = _penalized_search(tax, c1)
    if targets is None:
        targets = range(len(tax.labels))
    return [_assemble(tax, c1, c2, raw[c2]) for c2 in map(tax.resolve, targets)]
