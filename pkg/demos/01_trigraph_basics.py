#!/usr/bin/env python3
"""Trigraphs, realizations, and the induced-pattern detector.

A trigraph colors every vertex pair black (forced edge), white (forced
nonedge), or gray (free).  Resolving each gray pair independently gives
a realization — a plain graph — and the central question is whether some
realization contains a fixed pattern as an induced subgraph.
"""

from indsat import (
    GRAY,
    P4,
    complete_gray,
    find_embedding,
    from_pairs,
    has_realization_brute,
    has_realization_of,
    realizations,
)
from indsat.trigraph import dumps, loads

print("== a small trigraph ==")
t = from_pairs(4, black=[(0, 1), (1, 2)], gray=[(2, 3)])
print(dumps(t), end="")
print("colors of pair (2,3):", t.color(2, 3).value)
print("realizations:", len(list(realizations(t))), "(one per subset of gray pairs)")

print()
print("== does some realization contain an induced 4-path? ==")
print("this trigraph:", has_realization_of(t, P4))
emb = find_embedding(t, P4)
print("witness image:", emb.vertices)
print("gray pairs resolved black:", sorted(emb.gray_as_black))
print("gray pairs resolved white:", sorted(emb.gray_as_white))

print()
print("== the all-gray trigraph has every graph as a realization ==")
g5 = complete_gray(5)
print("all-gray on 5 vertices:", has_realization_of(g5, P4))
print("brute-force agreement over all 2^10 realizations:", has_realization_brute(g5, P4))

print()
print("== the text format round-trips ==")
doc = dumps(t)
assert loads(doc) == t
print("parsed == original:", loads(doc) == t)

print()
print("== components by color palette ==")
print("gray components:", t.components({GRAY}))
