import random
from itertools import permutations

import pytest

from indsat.constructions import construct_tn
from indsat.errors import ResourceLimitError
from indsat.patterns import K3, P4
from indsat.search import (
    CanonicalForm,
    all_indsat_witnesses,
    canonical_form,
    canonical_key,
    enumerate_indsat,
    isat_min,
    isat_min_naive,
)
from indsat.trigraph import Trigraph, all_pairs, complete_gray, pair_count, pair_index

from conftest import all_trigraphs, trigraph_from_code


def test_canonical_invariant_under_relabeling():
    rng = random.Random(7)
    for _ in range(40):
        t = trigraph_from_code(4, rng.randrange(3**6))
        perm = list(range(4))
        rng.shuffle(perm)
        assert canonical_key(t) == canonical_key(t.permute(perm))


def test_canonical_separates_nonisomorphic():
    a = Trigraph(3, black=0b001)  # one black pair
    b = Trigraph(3, black=0b011)  # two black pairs
    assert canonical_key(a) != canonical_key(b)


def test_canonical_form_of_all_gray_is_itself():
    t = complete_gray(4)
    form = canonical_form(t)
    assert form.to_trigraph() == t
    for perm in permutations(range(4)):
        assert canonical_form(t.permute(perm)) == form


def test_canonical_size_cap():
    with pytest.raises(ResourceLimitError):
        canonical_key(complete_gray(9))


def _burnside_count(n, colors=3):
    """Independent oracle: classes of pair colorings under vertex relabeling."""
    total = 0
    m = pair_count(n)
    for perm in permutations(range(n)):
        image = {}
        for u, v in all_pairs(n):
            image[pair_index(u, v)] = pair_index(perm[u], perm[v])
        seen, cycles = set(), 0
        for start in range(m):
            if start in seen:
                continue
            cycles += 1
            x = start
            while x not in seen:
                seen.add(x)
                x = image[x]
        total += colors**cycles
    count, rem = divmod(total, len(list(permutations(range(n)))))
    assert rem == 0
    return count


def test_canonical_class_count_matches_burnside():
    assert _burnside_count(4) == 66
    keys = {canonical_key(t) for t in all_trigraphs(4)}
    assert len(keys) == 66


# -- minimum-gray search ----------------------------------------------------


def test_isat_min_p4_small_values():
    assert isat_min(4, P4).min_gray == 2
    assert isat_min(5, P4).min_gray == 2


def test_isat_min_witness_counts_are_stable():
    assert len(isat_min(4, P4).witnesses) == 3
    assert len(isat_min(5, P4).witnesses) == 2


def test_witnesses_are_saturated_with_min_gray():
    from indsat.saturation import is_indsat

    res = isat_min(5, P4)
    for w in res.witnesses:
        t = w.to_trigraph()
        assert t.gray_count == res.min_gray
        assert is_indsat(t, P4).is_indsat


def test_isat_min_k3():
    assert isat_min(4, K3, k_max=5).min_gray == 3


def test_isat_min_respects_kmax():
    res = isat_min(4, P4, k_max=1)
    assert res.min_gray is None
    assert res.witnesses == []
    assert res.k_max == 1


def test_isat_min_argument_errors():
    with pytest.raises(ResourceLimitError):
        isat_min(8, P4)
    with pytest.raises(ResourceLimitError):
        isat_min(1, P4)
    with pytest.raises(ValueError):
        isat_min(4, P4, k_max=7)


def test_naive_agrees_at_n4():
    pruned = isat_min(4, P4)
    naive = isat_min_naive(4, P4)
    assert pruned.min_gray == naive.min_gray
    assert pruned.witnesses == naive.witnesses


def test_naive_size_cap():
    with pytest.raises(ResourceLimitError):
        isat_min_naive(6, P4)


def test_workers_do_not_change_results():
    r1 = isat_min(4, P4, workers=1)
    r2 = isat_min(4, P4, workers=2)
    assert (r1.min_gray, r1.witnesses, r1.stats["candidates"]) == (
        r2.min_gray,
        r2.witnesses,
        r2.stats["candidates"],
    )


def test_seen_cap_zero_only_costs_work():
    capped = isat_min(4, P4, seen_cap=0)
    free = isat_min(4, P4)
    assert capped.min_gray == free.min_gray
    assert capped.witnesses == free.witnesses


def test_result_dict_schema():
    d = isat_min(4, P4).to_dict()
    assert set(d) == {
        "n",
        "pattern",
        "min_gray",
        "searched_up_to_k",
        "witness_count",
        "witnesses",
        "stats",
    }
    assert d["witnesses"][0].keys() == {"n", "gray_mask", "black_mask"}


# -- enumeration ------------------------------------------------------------


def test_enumerate_no_grayless_witness_on_4():
    assert enumerate_indsat(4, P4, 0) == []


def test_enumerate_contains_the_construction():
    forms = enumerate_indsat(4, P4, 2)
    assert canonical_form(construct_tn(4)[0]) in forms
    assert len(forms) == 3


def test_enumerate_three_vertices_is_all_gray_only():
    for k in range(3):
        assert enumerate_indsat(3, P4, k) == []
    assert enumerate_indsat(3, P4, 3) == [canonical_form(complete_gray(3))]


def test_enumerate_bounds():
    with pytest.raises(ResourceLimitError):
        enumerate_indsat(6, P4, 2)
    with pytest.raises(ValueError):
        enumerate_indsat(4, P4, 7)


def test_all_witnesses_counts():
    assert len(all_indsat_witnesses(2, P4)) == 1
    assert len(all_indsat_witnesses(3, P4)) == 1
    assert len(all_indsat_witnesses(4, P4)) == 7
    assert len(all_indsat_witnesses(5, P4)) == 11


def test_naive_and_enumeration_find_same_minimum_witnesses():
    naive = isat_min_naive(4, P4)
    assert enumerate_indsat(4, P4, naive.min_gray) == naive.witnesses


def test_canonical_forms_order():
    forms = enumerate_indsat(4, P4, 2)
    assert forms == sorted(forms)
    assert all(isinstance(f, CanonicalForm) for f in forms)
