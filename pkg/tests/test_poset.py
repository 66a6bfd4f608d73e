import itertools
import random

import numpy as np
import pytest

from hochlat.errors import (
    CycleDetected,
    NotBounded,
    NotCover,
    NotGraded,
    NotInterval,
    TooLarge,
)
from hochlat.poset import (
    FinitePoset,
    IntervalRef,
    are_isomorphic,
    doubling,
    lagrange_eval,
)


def chain(k):
    return FinitePoset.closure([(i, i + 1) for i in range(k - 1)], k)


def antichain(k):
    return FinitePoset.closure([], k)


def boolean(n):
    """Subset lattice on bitmask ids, built from single-bit covers."""
    covers = []
    for s in range(1 << n):
        for i in range(n):
            if not s >> i & 1:
                covers.append((s, s | 1 << i))
    return FinitePoset.closure(covers, 1 << n)


def pentagon():
    # 0 < 1 < 2 < 4 and 0 < 3 < 4: maximal chains of two different lengths
    return FinitePoset.closure([(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], 5)


def brute_leq(covers, m):
    """Independent reflexive-transitive closure by fixpoint iteration."""
    rel = {(a, a) for a in range(m)} | {(a, b) for a, b in covers}
    while True:
        extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
        if not extra:
            return rel
        rel |= extra


def test_closure_three_chain_has_six_pairs():
    p = chain(3)
    assert int(np.count_nonzero(p.leq)) == 6
    assert p.covers == ((0, 1), (1, 2))


def test_closure_matches_brute_force_closure():
    rng = random.Random(7)
    for _ in range(25):
        m = rng.randrange(2, 9)
        edges = set()
        for a in range(m):
            for b in range(a + 1, m):
                if rng.random() < 0.3:
                    edges.add((a, b))
        rel = brute_leq(edges, m)
        # keep only the covers of the generated order
        cov = [
            (a, b)
            for a, b in edges
            if not any((a, c) in rel and (c, b) in rel and c not in (a, b) for c in range(m))
        ]
        p = FinitePoset.closure(cov, m)
        expect = brute_leq(cov, m)
        got = {(a, b) for a in range(m) for b in range(m) if p.leq[a, b]}
        assert got == expect


def test_closure_rejects_cycles_and_non_covers():
    with pytest.raises(CycleDetected):
        FinitePoset.closure([(0, 1), (1, 0)], 2)
    with pytest.raises(CycleDetected):
        FinitePoset.closure([(0, 0)], 1)
    with pytest.raises(NotCover):
        FinitePoset.closure([(0, 1), (1, 2), (0, 2)], 3)


def test_bounds_and_length():
    p = boolean(3)
    assert p.bottom() == 0 and p.top() == 7
    assert p.length() == 3
    assert chain(4).length() == 3
    with pytest.raises(NotBounded):
        antichain(2).bottom()


def test_mobius_boolean_is_alternating():
    p = boolean(3)
    for s in range(8):
        for t in range(8):
            expect = 0
            if s & t == s:
                expect = (-1) ** bin(t ^ s).count("1")
            assert p.mobius(s, t) == expect
    assert p.mobius(0, 7) == -1


def test_mobius_incomparable_is_zero():
    p = antichain(3)
    assert p.mobius(0, 1) == 0


def test_mobius_dual_sum_identity():
    # for a < b the interval sums of mu(a, .) telescope to zero
    for p in (boolean(3), chain(5), pentagon()):
        for a in range(p.n):
            for b in range(p.n):
                if a != b and p.le(a, b):
                    assert sum(p.mobius(a, c) for c in p.interval(a, b)) == 0


def brute_multichains(p, k):
    if k == 0:
        return 1
    total = 0
    for tup in itertools.product(range(p.n), repeat=k):
        if all(p.le(tup[i], tup[i + 1]) for i in range(k - 1)):
            total += 1
    return total


def test_zeta_counts_multichains():
    for p in (chain(2), chain(3), boolean(2), pentagon()):
        for q in range(1, 5):
            assert p.zeta(q) == brute_multichains(p, q - 1)
        assert p.zeta(1) == 1
        assert p.zeta(2) == p.n


def test_zeta_polynomial_extends_to_all_sampled_counts():
    for p in (boolean(3), chain(4), pentagon()):
        pts = p.zeta_points()
        for q in range(1, p.length() + 4):
            assert lagrange_eval(pts, q) == p.zeta(q)


def test_mobius_invariant_via_zeta_matches_recursion():
    for p in (chain(2), chain(5), boolean(2), boolean(3), boolean(4), pentagon()):
        assert p.mobius_invariant_via_zeta() == p.mobius(p.bottom(), p.top())


def test_rank_profile():
    assert boolean(4).rank_profile() == [1, 4, 6, 4, 1]
    assert chain(3).rank_profile() == [1, 1, 1]
    with pytest.raises(NotGraded):
        pentagon().rank_profile()


def test_count_maximal_chains():
    assert boolean(3).count_maximal_chains() == 6
    assert chain(6).count_maximal_chains() == 1
    assert pentagon().count_maximal_chains() == 2


def test_antichains():
    assert len(antichain(3).antichains()) == 8
    assert len(chain(4).antichains()) == 5
    # Dedekind count for the free distributive lattice side: antichains of 2^[3]
    assert len(boolean(3).antichains()) == 20
    for a in boolean(3).antichains():
        for x, y in itertools.combinations(sorted(a), 2):
            assert not boolean(3).le(x, y) and not boolean(3).le(y, x)


def test_interval_and_induced():
    p = boolean(3)
    assert p.interval(0, 7) == list(range(8))
    assert p.interval(1, 1) == [1]
    sub = p.induced(p.interval(0, 3))  # square on {0,1,2,3}
    assert sub.n == 4 and len(sub.covers) == 4


def test_dual_flips_covers():
    p = chain(3).dual()
    assert p.covers == ((1, 0), (2, 1))
    assert p.bottom() == 2


def test_doubling_singleton_gives_two_chain():
    single = FinitePoset.closure([], 1)
    d = doubling(single, IntervalRef(0, 0))
    assert d.n == 2 and d.covers == ((0, 1),)


def test_doubling_size_formula():
    for p, (lo, hi) in [
        (chain(2), (0, 1)),
        (boolean(2), (1, 3)),
        (boolean(3), (1, 5)),
        (chain(4), (1, 2)),
    ]:
        d = doubling(p, (lo, hi))
        ideal = sum(1 for a in range(p.n) if p.le(a, hi))
        members = len(p.interval(lo, hi))
        assert d.n == ideal + (p.n - ideal) + members


def test_doubling_requires_interval():
    with pytest.raises(NotInterval):
        doubling(antichain(2), (0, 1))


def test_doubling_chain_by_full_is_grid():
    d = doubling(chain(2), (0, 1))
    cert = are_isomorphic(d, boolean(2))
    assert cert.verified


def test_are_isomorphic_positive_cases():
    assert are_isomorphic(chain(4), chain(4)).verified
    assert are_isomorphic(boolean(3), boolean(3).dual()).verified
    cert = are_isomorphic(boolean(4), boolean(4))
    assert cert.verified
    # verified mapping preserves and reflects covers
    perm = cert.mapping
    p = boolean(4)
    assert {(perm[a], perm[b]) for a, b in p.covers} == set(p.covers)


def test_are_isomorphic_random_relabelings():
    rng = random.Random(11)
    base = boolean(3)
    for _ in range(5):
        perm = list(range(base.n))
        rng.shuffle(perm)
        covers = [(perm[a], perm[b]) for a, b in base.covers]
        q = FinitePoset.closure(covers, base.n)
        assert are_isomorphic(base, q).verified
        assert are_isomorphic(q, base).verified


def test_are_isomorphic_negative_cases():
    assert not are_isomorphic(chain(4), antichain(4)).verified
    assert not are_isomorphic(chain(3), chain(4)).verified
    # same size and cover count, different shape
    v = FinitePoset.closure([(0, 2), (1, 2), (2, 3)], 4)
    y = FinitePoset.closure([(0, 1), (1, 2), (1, 3)], 4)
    assert not are_isomorphic(v, y).verified


def test_are_isomorphic_too_large():
    with pytest.raises(TooLarge):
        are_isomorphic(chain(5), chain(5), max_elements=4)


def test_json_and_dot_exports_are_deterministic():
    p = chain(3)
    data = p.to_json()
    assert data == {"n_elements": 3, "covers": [[0, 1], [1, 2]], "labels": ["0", "1", "2"]}
    dot = p.to_dot()
    assert dot == p.to_dot()
    assert "0 -> 1;" in dot and "rankdir=BT" in dot
