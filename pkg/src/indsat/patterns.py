"""Small plain graphs used as forbidden induced patterns.

A pattern is a simple undirected graph on 2..8 vertices, stored as a
pair bitmask in the same colex order as trigraphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .trigraph import all_pairs, index_pair, pair_count, pair_index

MAX_PATTERN_VERTICES = 8


@dataclass(frozen=True, slots=True)
class PatternGraph:
    """Simple graph on k vertices; edges as a colex pair bitmask."""

    k: int
    edges: int

    def __post_init__(self) -> None:
        if not 2 <= self.k <= MAX_PATTERN_VERTICES:
            raise ValueError(f"pattern must have 2..{MAX_PATTERN_VERTICES} vertices, got {self.k}")
        if self.edges & ~((1 << pair_count(self.k)) - 1):
            raise ValueError("edge mask has bits outside the pair range")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.edges >> pair_index(u, v) & 1)

    def degree(self, v: int) -> int:
        return sum(1 for u in range(self.k) if u != v and self.has_edge(u, v))

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in range(self.k))

    def edge_count(self) -> int:
        return self.edges.bit_count()

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [index_pair(i) for i in range(pair_count(self.k)) if self.edges >> i & 1]

    def complement(self) -> "PatternGraph":
        full = (1 << pair_count(self.k)) - 1
        return PatternGraph(self.k, full & ~self.edges)


def from_edges(k: int, edges) -> PatternGraph:
    mask = 0
    for u, v in edges:
        if not (0 <= u < k and 0 <= v < k):
            raise ValueError(f"edge ({u}, {v}) out of range for k={k}")
        mask |= 1 << pair_index(u, v)
    return PatternGraph(k, mask)


def path_graph(k: int) -> PatternGraph:
    """The path v0 v1 ... v(k-1)."""
    return from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> PatternGraph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> PatternGraph:
    return PatternGraph(k, (1 << pair_count(k)) - 1)


def complete_minus_edge(k: int) -> PatternGraph:
    """Complete graph on k vertices with exactly one nonedge."""
    if k < 3:
        raise ValueError("complete-minus-an-edge needs at least 3 vertices")
    return PatternGraph(k, ((1 << pair_count(k)) - 1) & ~1)


P3 = path_graph(3)
P4 = path_graph(4)
C4 = cycle_graph(4)
K3 = complete_graph(3)

_PATTERN_ID = re.compile(r"^(p|c|k)(\d+)$")
_KHMINUS_ID = re.compile(r"^khminus:(\d+)$")


def parse_pattern_id(name: str) -> PatternGraph:
    """Resolve pattern ids like p4, k3, c4, khminus:5."""
    s = name.strip().lower()
    m = _KHMINUS_ID.match(s)
    if m:
        return complete_minus_edge(int(m.group(1)))
    m = _PATTERN_ID.match(s)
    if m:
        kind, num = m.group(1), int(m.group(2))
        if kind == "p":
            return path_graph(num)
        if kind == "c":
            return cycle_graph(num)
        return complete_graph(num)
    raise ValueError(f"unknown pattern id {name!r}")


def isomorphic(g: PatternGraph, h: PatternGraph) -> bool:
    """Graph isomorphism by permutation search with degree pruning."""
    if g.k != h.k:
        return False
    if g.edges == h.edges:
        return True
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    gdeg, hdeg = g.degrees(), h.degrees()
    for perm in permutations(range(g.k)):
        if any(gdeg[v] != hdeg[perm[v]] for v in range(g.k)):
            continue
        if all(
            g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
            for u, v in all_pairs(g.k)
        ):
            return True
    return False


@lru_cache(maxsize=None)
def is_path4(h: PatternGraph) -> bool:
    return h.k == 4 and isomorphic(h, P4)


@lru_cache(maxsize=None)
def is_self_complementary(h: PatternGraph) -> bool:
    return isomorphic(h, h.complement())


@lru_cache(maxsize=None)
def induced_placements(n: int, h: PatternGraph) -> tuple[tuple[int, int], ...]:
    """All distinct induced placements of h into n labeled vertices.

    Each placement is a pair of pair-index masks (edge_pairs, nonedge_pairs)
    over the n-vertex pair set: an induced copy of h sits exactly on the
    placements' edge pairs with the nonedge pairs absent.  Two labelings
    differing by an automorphism of h give the same mask pair and are
    deduplicated.  Order of first generation is kept, so the result is
    deterministic.
    """
    if n > 8:
        raise ValueError("placement tables are only built for n <= 8")
    out: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for subset in combinations(range(n), h.k):
        for perm in permutations(range(h.k)):
            pos = neg = 0
            for a, b in all_pairs(h.k):
                bit = 1 << pair_index(subset[perm[a]], subset[perm[b]])
                if h.has_edge(a, b):
                    pos |= bit
                else:
                    neg |= bit
            key = (pos, neg)
            if key not in seen:
                seen.add(key)
                out.append(key)
    return tuple(out)
