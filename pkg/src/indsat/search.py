"""Exact minimum-gray computation by exhaustive, symmetry-reduced search.

Candidates are enumerated by ascending gray-set size.  For a fixed gray
set, every black/white coloring of the remaining pairs is screened by a
vectorized no-realization filter (a coloring survives iff no induced
placement of the pattern is satisfiable, which is condition (a) of the
saturation predicate).  Survivors are deduplicated by canonical form —
and, for self-complementary patterns, against the canonical form of
their complement — and only class representatives run the flip check.
The first gray count with a witness is therefore the exact minimum.

A deliberately simple sweep over all 3^C(n,2) trigraphs, with no
symmetry reduction or filtering, is kept as the agreement oracle.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .errors import ResourceLimitError
from .patterns import PatternGraph, induced_placements, is_self_complementary
from .saturation import flips_all_create, is_indsat
from .trigraph import Trigraph, _bits, index_pair, pair_count, pair_index

CANONICAL_MAX_VERTICES = 8
NAIVE_MAX_VERTICES = 5
ENUMERATE_MAX_VERTICES = 5
SEARCH_MAX_VERTICES = 7
DEFAULT_SEEN_CAP = 1 << 24


def default_seen_cap() -> int:
    """Dedup-set size cap; INDSAT_SEEN_CAP overrides the built-in default."""
    raw = os.environ.get("INDSAT_SEEN_CAP")
    if raw is None:
        return DEFAULT_SEEN_CAP
    cap = int(raw)
    if cap < 0:
        raise ValueError("INDSAT_SEEN_CAP must be nonnegative")
    return cap


@dataclass(frozen=True, order=True, slots=True)
class CanonicalForm:
    """Lexicographically minimal (gray mask, black mask) over all relabelings."""

    n: int
    gray: int
    black: int

    def to_trigraph(self) -> Trigraph:
        return Trigraph(self.n, self.black, self.gray)


@lru_cache(maxsize=None)
def _perm_pair_table(n: int) -> np.ndarray:
    """Row r maps each colex pair index to its image under permutation r."""
    perms = list(permutations(range(n)))
    m = pair_count(n)
    table = np.empty((len(perms), m), dtype=np.int64)
    for r, p in enumerate(perms):
        for i in range(m):
            u, v = index_pair(i)
            table[r, i] = pair_index(p[u], p[v])
    return table


def canonical_key(t: Trigraph) -> int:
    """Minimal (gray << m) | black over all vertex permutations."""
    n = t.n
    if n > CANONICAL_MAX_VERTICES:
        raise ResourceLimitError(
            f"canonical form uses full permutation search, capped at n={CANONICAL_MAX_VERTICES}"
        )
    m = pair_count(n)
    if m == 0:
        return 0
    table = _perm_pair_table(n)
    rows = table.shape[0]
    gray_arr = np.zeros(rows, dtype=np.int64)
    black_arr = np.zeros(rows, dtype=np.int64)
    one = np.int64(1)
    for i in _bits(t.gray):
        gray_arr |= one << table[:, i]
    for i in _bits(t.black):
        black_arr |= one << table[:, i]
    keys = (gray_arr << np.int64(m)) | black_arr
    return int(keys.min())


def canonical_form(t: Trigraph) -> CanonicalForm:
    key = canonical_key(t)
    m = pair_count(t.n)
    return CanonicalForm(t.n, key >> m, key & ((1 << m) - 1))


@dataclass
class SearchResult:
    """Outcome of a minimum-gray search."""

    n: int
    pattern: str
    min_gray: int | None
    witnesses: list[CanonicalForm]
    k_max: int
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "min_gray": self.min_gray,
            "searched_up_to_k": self.k_max,
            "witness_count": len(self.witnesses),
            "witnesses": [
                {"n": w.n, "gray_mask": w.gray, "black_mask": w.black} for w in self.witnesses
            ],
            "stats": self.stats,
        }


# -- vectorized screening ----------------------------------------------


def _black_array(m: int, gray_mask: int) -> np.ndarray:
    """All black masks over the non-gray pair positions, ascending."""
    free = [i for i in range(m) if not gray_mask >> i & 1]
    x = np.arange(1 << len(free), dtype=np.int64)
    black = np.zeros(x.shape, dtype=np.int64)
    for j, pos in enumerate(free):
        black |= ((x >> np.int64(j)) & np.int64(1)) << np.int64(pos)
    return black


def _no_realization_survivors(
    black: np.ndarray, gray_mask: int, clauses: tuple[tuple[int, int], ...]
) -> np.ndarray:
    """Colorings for which no induced placement is satisfiable."""
    surv = black
    for pos, neg in clauses:
        if surv.size == 0:
            break
        need_b = np.int64(pos & ~gray_mask)
        need_w = np.int64(neg & ~gray_mask)
        sat = ((surv & need_b) == need_b) & ((surv & need_w) == 0)
        if sat.any():
            surv = surv[~sat]
    return surv


def _scan_gray_sets(args) -> tuple[int, set[int]]:
    """Screen a batch of gray sets; return (candidates examined, witness keys)."""
    n, h, gray_masks, clauses, selfcomp, seen_cap = args
    m = pair_count(n)
    seen: set[int] = set()
    witness_keys: set[int] = set()
    candidates = 0
    for gray_mask in gray_masks:
        black = _black_array(m, gray_mask)
        candidates += black.size
        for b in _no_realization_survivors(black, gray_mask, clauses).tolist():
            t = Trigraph(n, int(b), gray_mask)
            key = canonical_key(t)
            if key in seen:
                continue
            comp_key = canonical_key(t.complement()) if selfcomp else None
            if len(seen) < seen_cap:
                seen.add(key)
                if comp_key is not None:
                    seen.add(comp_key)
            failing, _ = flips_all_create(t, h)
            if failing is None:
                witness_keys.add(key)
                if comp_key is not None:
                    witness_keys.add(comp_key)
    return candidates, witness_keys


def _scan_level(
    n: int,
    h: PatternGraph,
    k: int,
    clauses: tuple[tuple[int, int], ...],
    selfcomp: bool,
    seen_cap: int,
    workers: int,
) -> tuple[int, set[int]]:
    m = pair_count(n)
    gray_masks = [sum(1 << i for i in combo) for combo in combinations(range(m), k)]
    if workers <= 1 or len(gray_masks) < 2 * workers:
        return _scan_gray_sets((n, h, gray_masks, clauses, selfcomp, seen_cap))
    chunks = [gray_masks[w::workers] for w in range(workers)]
    candidates = 0
    witness_keys: set[int] = set()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for cand, keys in pool.map(
            _scan_gray_sets,
            [(n, h, chunk, clauses, selfcomp, seen_cap) for chunk in chunks],
        ):
            candidates += cand
            witness_keys |= keys
    return candidates, witness_keys


def _keys_to_forms(n: int, keys: set[int]) -> list[CanonicalForm]:
    m = pair_count(n)
    return sorted(CanonicalForm(n, key >> m, key & ((1 << m) - 1)) for key in keys)


def isat_min(
    n: int,
    h: PatternGraph,
    k_max: int | None = None,
    workers: int = 1,
    seen_cap: int | None = None,
    label: str | None = None,
) -> SearchResult:
    """Least gray count of an induced-h-saturated trigraph on n vertices.

    Scans gray-set sizes 0..k_max; returns min_gray=None if no witness
    exists up to k_max (flagged, not an error).
    """
    if not 2 <= n <= SEARCH_MAX_VERTICES:
        raise ResourceLimitError(f"search supports 2 <= n <= {SEARCH_MAX_VERTICES}, got {n}")
    m = pair_count(n)
    if k_max is None:
        k_max = m
    if not 0 <= k_max <= m:
        raise ValueError(f"k_max must be within 0..{m}")
    if seen_cap is None:
        seen_cap = default_seen_cap()
    clauses = induced_placements(n, h)
    selfcomp = is_self_complementary(h)
    start = time.perf_counter()
    total_candidates = 0
    for k in range(k_max + 1):
        candidates, keys = _scan_level(n, h, k, clauses, selfcomp, seen_cap, workers)
        total_candidates += candidates
        if keys:
            witnesses = _keys_to_forms(n, keys)
            return SearchResult(
                n,
                label or f"pattern(k={h.k})",
                k,
                witnesses,
                k_max,
                {
                    "candidates": total_candidates,
                    "indsat_found": len(witnesses),
                    "wall_time_s": time.perf_counter() - start,
                },
            )
    return SearchResult(
        n,
        label or f"pattern(k={h.k})",
        None,
        [],
        k_max,
        {
            "candidates": total_candidates,
            "indsat_found": 0,
            "wall_time_s": time.perf_counter() - start,
        },
    )


def isat_min_naive(n: int, h: PatternGraph, label: str | None = None) -> SearchResult:
    """Agreement oracle: scan all 3^C(n,2) trigraphs, no pruning of any kind."""
    if not 2 <= n <= NAIVE_MAX_VERTICES:
        raise ResourceLimitError(
            f"the naive sweep is only feasible for 2 <= n <= {NAIVE_MAX_VERTICES}"
        )
    m = pair_count(n)
    start = time.perf_counter()
    hits: list[Trigraph] = []
    for code in range(3**m):
        black = gray = 0
        c = code
        for i in range(m):
            c, digit = divmod(c, 3)
            if digit == 1:
                black |= 1 << i
            elif digit == 2:
                gray |= 1 << i
        t = Trigraph(n, black, gray)
        if is_indsat(t, h).is_indsat:
            hits.append(t)
    min_gray = min((t.gray_count for t in hits), default=None)
    witnesses = sorted({canonical_form(t) for t in hits if t.gray_count == min_gray})
    return SearchResult(
        n,
        label or f"pattern(k={h.k})",
        min_gray,
        witnesses,
        m,
        {
            "candidates": 3**m,
            "indsat_found": len(witnesses),
            "wall_time_s": time.perf_counter() - start,
        },
    )


def enumerate_indsat(n: int, h: PatternGraph, k: int) -> list[CanonicalForm]:
    """All canonical induced-h-saturated trigraphs with exactly k gray pairs."""
    if not 0 <= n <= ENUMERATE_MAX_VERTICES:
        raise ResourceLimitError(
            f"exhaustive enumeration is only feasible for n <= {ENUMERATE_MAX_VERTICES}"
        )
    m = pair_count(n)
    if not 0 <= k <= m:
        raise ValueError(f"k must be within 0..{m}")
    clauses = induced_placements(n, h)
    _, keys = _scan_level(n, h, k, clauses, is_self_complementary(h), default_seen_cap(), 1)
    return _keys_to_forms(n, keys)


def all_indsat_witnesses(n: int, h: PatternGraph) -> list[CanonicalForm]:
    """Every canonical induced-h-saturated trigraph on n vertices (all gray counts)."""
    out: list[CanonicalForm] = []
    for k in range(pair_count(n) + 1):
        out.extend(enumerate_indsat(n, h, k))
    return sorted(out)
