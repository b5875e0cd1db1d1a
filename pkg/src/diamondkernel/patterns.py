"""Detection of forbidden induced subgraphs, core membership, greedy
edge-disjoint packing, and the maximal clique partitioning of diamond-free
graphs.

Search strategy: an s-diamond is an edge {x, y} plus s+1 pairwise
non-adjacent common neighbors, so every search walks the edges and inspects
N(x) & N(y) instead of enumerating vertex subsets.  Occurrence order is
fixed globally (smallest sorted vertex tuple, s-diamonds before cliques) so
the greedy packing and everything built on it are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .checks import debug_check, debug_assertions_enabled
from .errors import FamilyError, NotDiamondFreeError
from .family import FamilySpec
from .graph import Graph, edge_key


@dataclass(frozen=True)
class PatternOccurrence:
    """An induced copy of a family pattern inside a host graph."""

    kind: str                      # "sdiamond" or "clique"
    param: int                     # s for sdiamond, t for clique
    vertices: tuple[int, ...]      # sorted
    edges: frozenset[tuple[int, int]]


def _sdiamond_occurrence(x: int, y: int, independent: tuple[int, ...], s: int) -> PatternOccurrence:
    edges = {edge_key(x, y)}
    for z in independent:
        edges.add(edge_key(x, z))
        edges.add(edge_key(y, z))
    return PatternOccurrence("sdiamond", s, tuple(sorted((x, y) + independent)),
                             frozenset(edges))


def _clique_occurrence(vertices: tuple[int, ...], t: int) -> PatternOccurrence:
    edges = frozenset(edge_key(u, v) for u, v in combinations(vertices, 2))
    return PatternOccurrence("clique", t, tuple(sorted(vertices)), edges)


def _independent_subsets(g: Graph, pool: list[int], size: int) -> Iterator[tuple[int, ...]]:
    """All size-subsets of pool that are pairwise non-adjacent, ascending."""
    def extend(chosen: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == size:
            yield chosen
            return
        for i in range(start, len(pool)):
            z = pool[i]
            if all(z not in g.neighbors(c) for c in chosen):
                yield from extend(chosen + (z,), i + 1)
    yield from extend((), 0)


def iter_sdiamond_occurrences(g: Graph, s: int,
                              avoid_edges: frozenset | set | None = None) -> Iterator[PatternOccurrence]:
    """All induced s-diamonds of g, optionally only those edge-disjoint from avoid_edges."""
    avoid = avoid_edges or ()
    for x, y in g.edges():
        if (x, y) in avoid:
            continue
        common = sorted(g.neighbors(x) & g.neighbors(y))
        if avoid:
            common = [z for z in common
                      if edge_key(x, z) not in avoid and edge_key(y, z) not in avoid]
        if len(common) < s + 1:
            continue
        for group in _independent_subsets(g, common, s + 1):
            yield _sdiamond_occurrence(x, y, group, s)


def iter_clique_occurrences(g: Graph, t: int,
                            avoid_edges: frozenset | set | None = None) -> Iterator[PatternOccurrence]:
    """All induced K_t of g (edge-disjoint from avoid_edges when given), ascending tuples."""
    avoid = avoid_edges or ()
    verts = g.vertices

    def extend(chosen: tuple[int, ...], candidates: list[int]) -> Iterator[tuple[int, ...]]:
        if len(chosen) == t:
            yield chosen
            return
        for i, v in enumerate(candidates):
            if avoid and any(edge_key(v, c) in avoid for c in chosen):
                continue
            nxt = [w for w in candidates[i + 1:] if w in g.neighbors(v)]
            if len(chosen) + 1 + len(nxt) >= t:
                yield from extend(chosen + (v,), nxt)

    yield from (_clique_occurrence(c, t) for c in extend((), verts))


def _iter_occurrences(g: Graph, fam: FamilySpec,
                      avoid_edges: frozenset | set | None = None) -> Iterator[PatternOccurrence]:
    if fam.sdiamond is not None:
        yield from iter_sdiamond_occurrences(g, fam.sdiamond, avoid_edges)
    if fam.clique is not None:
        yield from iter_clique_occurrences(g, fam.clique, avoid_edges)


def find_induced_occurrence(g: Graph, fam: FamilySpec,
                            avoid_edges: frozenset | set | None = None) -> PatternOccurrence | None:
    """Lexicographically first induced occurrence of any pattern in fam.

    s-diamond items are searched before clique items; within an item the
    occurrence with the smallest sorted vertex tuple wins.  avoid_edges
    restricts the search to occurrences edge-disjoint from that set.
    """
    if fam.sdiamond is not None:
        best = min(iter_sdiamond_occurrences(g, fam.sdiamond, avoid_edges),
                   key=lambda o: o.vertices, default=None)
        if best is not None:
            return best
    if fam.clique is not None:
        return min(iter_clique_occurrences(g, fam.clique, avoid_edges),
                   key=lambda o: o.vertices, default=None)
    return None


def is_family_free(g: Graph, fam: FamilySpec) -> bool:
    return find_induced_occurrence(g, fam) is None


# -- core membership (not-necessarily-induced containment) ------------------

def _require_core_family(fam: FamilySpec) -> None:
    if fam.sdiamond != 1:
        raise FamilyError(
            f"core membership is implemented for the plain diamond families, got {fam.token()}")


def _has_clique_within(g: Graph, pool: list[int], size: int) -> bool:
    """True iff g[pool] contains a clique on `size` vertices."""
    if size <= 0:
        return True

    def extend(chosen_last: int, candidates: list[int], need: int) -> bool:
        if need == 0:
            return True
        for i, v in enumerate(candidates):
            nxt = [w for w in candidates[i + 1:] if w in g.neighbors(v)]
            if len(nxt) >= need - 1 and extend(v, nxt, need - 1):
                return True
        return False

    return extend(-1, pool, size)


def is_core_member_edge(g: Graph, e: tuple[int, int], fam: FamilySpec) -> bool:
    """True iff e lies in a diamond subgraph (or a K_t when the family has one).

    A 4-vertex span with at least 5 edges is a diamond or a K4, and either
    way every one of its edges lies in a diamond subgraph, so the diamond
    test reduces to edge counting over {x, y, a, b}.
    """
    _require_core_family(fam)
    x, y = e
    if not g.has_edge(x, y):
        raise ValueError(f"edge {e} not in graph")
    pool = sorted((g.neighbors(x) | g.neighbors(y)) - {x, y})
    for a, b in combinations(pool, 2):
        count = 1  # the edge xy itself
        for p, q in ((x, a), (x, b), (y, a), (y, b), (a, b)):
            if g.has_edge(p, q):
                count += 1
        if count >= 5:
            return True
    if fam.clique is not None:
        common = sorted(g.neighbors(x) & g.neighbors(y))
        if _has_clique_within(g, common, fam.clique - 2):
            return True
    return False


def is_core_member_vertex(g: Graph, v: int, fam: FamilySpec) -> bool:
    """True iff v lies in a diamond (or K_t) subgraph.

    Every vertex of a diamond or K_t has an incident edge inside the copy,
    so this reduces to the edge test over v's incident edges.
    """
    _require_core_family(fam)
    return any(is_core_member_edge(g, edge_key(v, u), fam) for u in sorted(g.neighbors(v)))


# -- greedy edge-disjoint packing -------------------------------------------

@dataclass
class PackingResult:
    """Either budget_exceeded (k+1 disjoint occurrences found), or a maximal packing."""

    budget_exceeded: bool
    packing_edges: set[tuple[int, int]] = field(default_factory=set)
    occurrences: list[PatternOccurrence] = field(default_factory=list)


def max_edges_per_occurrence(fam: FamilySpec) -> int:
    worst = 0
    if fam.sdiamond is not None:
        worst = max(worst, 2 * (fam.sdiamond + 1) + 1)
    if fam.clique is not None:
        worst = max(worst, fam.clique * (fam.clique - 1) // 2)
    return worst


def greedy_packing(g: Graph, k: int, fam: FamilySpec) -> PackingResult:
    """Pack pairwise edge-disjoint induced occurrences of fam in g.

    Each iteration takes the lexicographically first induced occurrence of
    g that shares no edge with the packing so far.  Stops with
    budget_exceeded as soon as k+1 occurrences are packed; otherwise the
    packing is maximal, so every induced occurrence of g intersects it.

    Note the candidates are induced occurrences of g itself, not of the
    edge-deleted remainder: an induced diamond of g - X whose missing pair
    is an edge of g sitting in X is a K4 of g, and a solution need not
    touch it, so counting it toward the k+1 threshold would flip yes
    instances to no.
    """
    fam.require_kernelizable()
    packing_edges: set[tuple[int, int]] = set()
    occurrences: list[PatternOccurrence] = []
    while True:
        occ = find_induced_occurrence(g, fam, avoid_edges=packing_edges)
        if occ is None:
            break
        occurrences.append(occ)
        packing_edges |= occ.edges
        if len(occurrences) >= k + 1:
            return PackingResult(True, packing_edges, occurrences)
    result = PackingResult(False, packing_edges, occurrences)
    debug_check(len(packing_edges) <= max_edges_per_occurrence(fam) * max(k, 0),
                "packing edge count exceeds the per-occurrence bound")
    if debug_assertions_enabled():
        for occ in _iter_occurrences(g, fam):
            debug_check(bool(occ.edges & packing_edges),
                        f"occurrence {occ.vertices} is edge-disjoint from a maximal packing")
    return result


# -- maximal clique partitioning --------------------------------------------

def clique_partition(g: Graph) -> list[set[int]]:
    """The unique maximal-clique partitioning of a diamond-free graph.

    Every edge lies in exactly one returned set; isolated vertices appear
    as singletons.  Sets are ordered by their sorted vertex tuples.
    """
    witness = find_induced_occurrence(g, FamilySpec.diamond())
    if witness is not None:
        raise NotDiamondFreeError(witness)
    cliques: list[set[int]] = []
    covered: set[tuple[int, int]] = set()
    for u, v in g.edges():
        if (u, v) in covered:
            continue
        # In a diamond-free graph the common neighborhood of an edge is a
        # clique, and together with the endpoints it is the unique maximal
        # clique containing the edge.
        clique = {u, v} | (g.neighbors(u) & g.neighbors(v))
        for a, b in combinations(sorted(clique), 2):
            debug_check(g.has_edge(a, b), f"non-edge {a}-{b} inside a computed clique")
            covered.add((a, b))
        cliques.append(clique)
    for v in g.vertices:
        if g.degree(v) == 0:
            cliques.append({v})
    cliques.sort(key=lambda c: tuple(sorted(c)))
    if debug_assertions_enabled():
        _validate_partition(g, cliques)
    return cliques


def _validate_partition(g: Graph, cliques: list[set[int]]) -> None:
    seen: set[tuple[int, int]] = set()
    for clique in cliques:
        for a, b in combinations(sorted(clique), 2):
            debug_check((a, b) not in seen, f"edge {a}-{b} in two cliques")
            seen.add((a, b))
    debug_check(seen == g.edge_set(), "clique partitioning does not cover the edge set")
    for c1, c2 in combinations(cliques, 2):
        shared = c1 & c2
        debug_check(len(shared) <= 1, f"cliques intersect in {sorted(shared)}")
        if len(shared) == 1:
            (v,) = shared
            debug_check(
                not any(g.has_edge(a, b) for a in c1 - {v} for b in c2 - {v}),
                "edge between two cliques outside their shared vertex")
