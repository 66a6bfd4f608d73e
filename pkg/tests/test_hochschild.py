import itertools

import pytest

from hochlat.errors import MalformedLabelSet, NotGraded, SizeBound
from hochlat.hochschild import (
    a_irr,
    atom_irreducibles,
    b_irr,
    build_hoch,
    build_hoch_by_doubling,
    canrep_formula,
    core_labels_formula,
    cover_label_formula,
    enumerate_triwords,
    f0,
    format_triword,
    hoch_join,
    hoch_meet,
    irreducible_of_triword,
    irreducibles,
    is_triword,
    l1,
    lower_cover_triwords,
    nucleus_formula,
    parse_triword,
    psi_inverse,
    triword_count,
)
from hochlat.lattice import canonical_joinrep, core_label_set, is_extremal, jsd_labeling

# 12 elements and 18 labeled cover relations of the length-3 lattice.
HASSE_3 = {
    ((0, 0, 0), (1, 0, 0)): "a1",
    ((0, 0, 0), (0, 2, 0)): "b2",
    ((0, 0, 0), (0, 0, 2)): "b3",
    ((1, 0, 0), (1, 1, 0)): "a2",
    ((1, 0, 0), (1, 0, 2)): "b3",
    ((1, 1, 0), (1, 2, 0)): "b2",
    ((1, 1, 0), (1, 1, 1)): "a3",
    ((0, 2, 0), (1, 2, 0)): "a1",
    ((0, 2, 0), (0, 2, 2)): "b3",
    ((0, 0, 2), (1, 0, 2)): "a1",
    ((0, 0, 2), (0, 2, 2)): "b2",
    ((1, 2, 0), (1, 2, 1)): "a3",
    ((1, 1, 1), (1, 2, 1)): "b2",
    ((1, 1, 1), (1, 1, 2)): "b3",
    ((1, 0, 2), (1, 1, 2)): "a2",
    ((1, 2, 1), (1, 2, 2)): "b3",
    ((1, 1, 2), (1, 2, 2)): "b2",
    ((0, 2, 2), (1, 2, 2)): "a1",
}


def brute_lower_covers(words, u):
    below = [v for v in words if v != u and all(x <= y for x, y in zip(v, u))]
    out = []
    for v in below:
        between = [
            w
            for w in below
            if w != v and all(x <= y for x, y in zip(v, w)) and all(x <= y for x, y in zip(w, u))
        ]
        if not between:
            out.append(v)
    return sorted(out)


def test_counts_match_closed_formula():
    sizes = []
    for n in range(1, 11):
        words = enumerate_triwords(n)
        assert len(set(words)) == len(words)
        assert list(words) == sorted(words)
        assert all(is_triword(u) and len(u) == n for u in words)
        assert len(words) == triword_count(n)
        sizes.append(len(words))
    assert sizes[0] == 2
    assert sizes[-1] == 3328
    for n in range(2, 11):
        assert sizes[n - 1] == 2 * sizes[n - 2] + 2 ** (n - 2)


def test_triword_predicate_rejects_bad_words():
    assert not is_triword((2, 0))
    assert not is_triword((0, 1))
    assert not is_triword((1, 0, 1))
    assert not is_triword((0, 3))
    assert is_triword((0, 2, 2))
    assert is_triword(())


def test_size_bound():
    with pytest.raises(SizeBound):
        enumerate_triwords(11)
    with pytest.raises(SizeBound):
        build_hoch(0)


def test_parse_format_roundtrip():
    for u in enumerate_triwords(4):
        assert parse_triword(format_triword(u)) == u
    assert parse_triword("1,2,0") == (1, 2, 0)
    with pytest.raises(ValueError):
        parse_triword("(2,0)")


def test_hasse_diagram_n3():
    lat = build_hoch(3)
    assert lat.n == 12
    lab = jsd_labeling(lat.lattice)
    seen = {}
    for a, b in lat.covers:
        j = irreducible_of_triword(lat.triword(lab.label(a, b)))
        seen[(lat.triword(a), lat.triword(b))] = str(j)
    assert seen == HASSE_3
    for (u, v), name in HASSE_3.items():
        assert str(cover_label_formula(u, v)) == name


@pytest.mark.parametrize("n", range(1, 6))
def test_order_is_componentwise(n):
    lat = build_hoch(n)
    for a in range(lat.n):
        for b in range(lat.n):
            expected = all(x <= y for x, y in zip(lat.triword(a), lat.triword(b)))
            assert lat.poset.leq[a, b] == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_covers_match_brute_force(n):
    lat = build_hoch(n)
    words = lat.triwords
    for b in range(lat.n):
        mine = sorted(lat.triword(a) for a in lat.poset.lower_covers(b))
        assert mine == brute_lower_covers(words, words[b])
        assert mine == sorted(lower_cover_triwords(words[b]))
    for a, b in lat.covers:
        diffs = [i for i, (x, y) in enumerate(zip(words[a], words[b])) if x != y]
        assert len(diffs) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_join_meet_formulas_match_tables(n):
    lat = build_hoch(n)
    for a in range(lat.n):
        for b in range(a, lat.n):
            u, v = lat.triword(a), lat.triword(b)
            assert lat.triword(lat.join[a, b]) == hoch_join(u, v)
            assert lat.triword(lat.meet[a, b]) == hoch_meet(u, v)


def test_meet_repairs_one_after_zero():
    assert hoch_meet((1, 0, 2), (1, 2, 1)) == (1, 0, 0)
    assert hoch_meet((1, 1, 2), (0, 2, 2)) == (0, 0, 2)
    assert hoch_meet((1, 1, 0), (0, 2, 2)) == (0, 0, 0)
    assert hoch_join((1, 0, 0), (0, 2, 0)) == (1, 2, 0)


def test_not_graded_but_bounded_length():
    for n in range(1, 7):
        lat = build_hoch(n)
        assert lat.poset.length() == 2 * n - 1 if n > 1 else 1
    with pytest.raises(NotGraded):
        build_hoch(3).poset.rank_profile()


@pytest.mark.parametrize("n", range(1, 5))
def test_doubling_construction_matches_direct(n):
    direct = build_hoch(n)
    doubled = build_hoch_by_doubling(n)
    assert sorted(doubled.triwords) == list(direct.triwords)
    perm = [doubled.id_of(u) for u in direct.triwords]
    for a in range(direct.n):
        for b in range(direct.n):
            assert direct.poset.leq[a, b] == doubled.poset.leq[perm[a], perm[b]]


@pytest.mark.parametrize("n", range(1, 7))
def test_irreducibles(n):
    lat = build_hoch(n)
    opts = irreducibles(n)
    assert len(opts) == max(2 * n - 1, 1)
    join_irr = {
        lat.triword(a): lat.lattice.j_star(a) for a in lat.lattice.join_irreducibles()
    }
    assert set(join_irr) == {j.triword(n) for j in opts}
    for j in opts:
        star = join_irr[j.triword(n)]
        if j.kind == "a" and j.index > 1:
            assert lat.triword(star) == a_irr(j.index - 1).triword(n)
        else:
            assert lat.triword(star) == (0,) * n
    assert is_extremal(lat.lattice)
    atom_words = {lat.triword(a) for a in lat.lattice.atoms()}
    assert atom_words == {j.triword(n) for j in atom_irreducibles(n)}
    assert {str(irreducible_of_triword(w)) for w in atom_words} == {"a1"} | {
        f"b{i}" for i in range(2, n + 1)
    }


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_joinreps(n):
    lat = build_hoch(n)
    for a in range(lat.n):
        u = lat.triword(a)
        rep = {irreducible_of_triword(lat.triword(c)) for c in canonical_joinrep(lat.lattice, a)}
        assert rep == set(canrep_formula(u))
        parts = [j.triword(n) for j in rep]
        joined = (0,) * n
        for p in parts:
            joined = hoch_join(joined, p)
        assert joined == u
        assert len(rep) == len(lat.poset.lower_covers(a))


@pytest.mark.parametrize("n", range(1, 6))
def test_nucleus_and_core_labels(n):
    lat = build_hoch(n)
    for a in range(lat.n):
        u = lat.triword(a)
        core = core_label_set(lat.lattice, a)
        assert lat.triword(core.nucleus) == nucleus_formula(u)
        labels = {irreducible_of_triword(lat.triword(c)) for c in core.labels}
        assert labels == set(core_labels_formula(u))


def test_long_word_fixture():
    u = (1, 2, 1, 1, 2, 2, 0, 2, 0)
    assert is_triword(u)
    assert l1(u) == 4
    assert f0(u) == 7
    assert nucleus_formula(u) == (1, 1, 1, 0, 0, 0, 0, 0, 0)
    expect = {a_irr(4), a_irr(5), a_irr(6), b_irr(2), b_irr(5), b_irr(6), b_irr(8)}
    assert set(core_labels_formula(u)) == expect
    assert psi_inverse(9, expect) == u


@pytest.mark.parametrize("n", range(1, 7))
def test_core_label_sets_are_distinct_and_invertible(n):
    seen = {}
    for u in enumerate_triwords(n):
        labels = core_labels_formula(u)
        assert labels not in seen
        seen[labels] = u
        assert psi_inverse(n, labels) == u


def test_psi_inverse_rejects_malformed_sets():
    with pytest.raises(MalformedLabelSet):
        psi_inverse(3, {a_irr(1), b_irr(2)})
    with pytest.raises(MalformedLabelSet):
        psi_inverse(3, {a_irr(1), a_irr(3)})
    with pytest.raises(MalformedLabelSet):
        psi_inverse(3, {a_irr(2), b_irr(2)})
    with pytest.raises(MalformedLabelSet):
        psi_inverse(3, {a_irr(4)})
    with pytest.raises(MalformedLabelSet):
        psi_inverse(3, {b_irr(5)})


def test_small_cases():
    one = build_hoch(1)
    assert one.triwords == ((0,), (1,))
    two = build_hoch(2)
    assert two.n == 5
    assert set(two.triwords) == {(0, 0), (1, 0), (1, 1), (0, 2), (1, 2)}


def test_cover_count_equals_canrep_size():
    for n in range(1, 7):
        lat = build_hoch(n)
        for a in range(lat.n):
            assert len(lower_cover_triwords(lat.triword(a))) == len(
                canrep_formula(lat.triword(a))
            )
