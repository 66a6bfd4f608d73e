"""Agreement tests between the independent routes to each polynomial."""

from itertools import combinations

import pytest

from hochlat.errors import NotGraded, SizeBound
from hochlat.hochschild import build_hoch, canrep_formula, enumerate_triwords, l1, triword_count
from hochlat.lattice import build_bool, canonical_joinrep, core_label_set
from hochlat.polynomials import BiPoly
from hochlat.poset import FinitePoset
from hochlat.shuffles import clo, shuffle_lattice
from hochlat.triangles import (
    JPoset,
    PartialCore,
    boolean_baselines,
    char_poly,
    char_poly_closed,
    f_closed,
    f_coefficient,
    f_from_cores,
    f_from_m,
    f_tilde,
    f_transform,
    face_count_closed,
    face_vector,
    g_conjecture_check,
    g_conjecture_closed,
    g_triangle,
    h_closed,
    h_from_antichains,
    h_from_m,
    h_tilde,
    h_transform,
    j_poset,
    m_closed,
    m_triangle,
    neg_stat,
    partial_cores,
    rank_poly,
    rank_poly_closed,
    shuffle_char_closed,
)

X = BiPoly.x()
Y = BiPoly.y()
ONE = BiPoly.const(1)

# Ten terms, fixed by hand once and for all.
M3 = (
    ONE
    + 5 * X * Y
    + 5 * X**2 * Y**2
    + X**3 * Y**3
    - 5 * Y
    + 7 * Y**2
    - 3 * Y**3
    - 12 * X * Y**2
    + 7 * X * Y**3
    - 5 * X**2 * Y**3
)

# (canonical joinand count, atom joinand count) per length-3 triword.
STATS_3 = {
    (0, 0, 0): (0, 0),
    (0, 0, 2): (1, 1),
    (0, 2, 0): (1, 1),
    (0, 2, 2): (2, 2),
    (1, 0, 0): (1, 1),
    (1, 0, 2): (2, 2),
    (1, 1, 0): (1, 0),
    (1, 1, 1): (1, 0),
    (1, 1, 2): (2, 1),
    (1, 2, 0): (2, 2),
    (1, 2, 1): (2, 1),
    (1, 2, 2): (3, 3),
}


def clo_of(n):
    return clo(build_hoch(n).lattice)


def at_y1(p):
    terms = {}
    for (i, j), c in p.terms.items():
        terms[(i, 0)] = terms.get((i, 0), 0) + c
    return BiPoly(terms)


def x_section(p):
    """Terms of p with no x, re-read as a polynomial in one variable."""
    return BiPoly({(j, 0): c for (i, j), c in p.terms.items() if i == 0})


# -- rank and characteristic ---------------------------------------------------


def test_rank_poly_matches_closed():
    for n in range(1, 7):
        assert rank_poly(clo_of(n)) == rank_poly_closed(n)
    assert rank_poly_closed(3) == X**3 + 5 * X**2 + 5 * X + ONE


def test_char_poly_matches_closed():
    for n in range(1, 7):
        assert char_poly(clo_of(n)) == char_poly_closed(n)
    assert char_poly_closed(3) == (ONE - X) ** 2 * (ONE - 3 * X)
    assert char_poly_closed(3) == -3 * X**3 + 7 * X**2 - 5 * X + ONE


def test_shuffle_char_matches_definitional():
    for a, b in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]:
        assert char_poly(shuffle_lattice(a, b)) == shuffle_char_closed(a, b)


def test_shuffle_char_special_cases():
    assert shuffle_char_closed(0, 0) == ONE
    assert shuffle_char_closed(1, 1) == 2 * X**2 - 3 * X + ONE
    for n in range(1, 5):
        assert shuffle_char_closed(n, 0) == (ONE - X) ** n
    for n in range(2, 7):
        assert shuffle_char_closed(n - 1, 1) == char_poly_closed(n)


# -- M-triangle ----------------------------------------------------------------


def test_m_triangle_matches_closed():
    for n in range(1, 6):
        assert m_triangle(clo_of(n)) == m_closed(n)


def test_m3_pinned():
    assert m_closed(3) == M3
    assert m_triangle(clo_of(3)) == M3


def test_m_triangle_small_posets():
    single = FinitePoset.closure([], 1)
    assert m_triangle(single) == ONE
    assert m_triangle(build_bool(3).poset) == (X * Y - Y + ONE) ** 3


def test_m_triangle_rejects_ungraded():
    with pytest.raises(NotGraded):
        m_triangle(build_hoch(3).poset)


def test_m_x0_section_is_char_poly():
    for n in range(1, 6):
        assert x_section(m_closed(n)) == char_poly_closed(n)


def test_m_at_one_one():
    # Sum of mu over all intervals of a bounded poset telescopes to 1.
    for n in range(1, 9):
        assert m_closed(n).eval_at(1, 1) == 1
    assert M3.eval_at(1, 1) == 1


def test_m_decomposes_over_upper_intervals():
    # Each element contributes its interval-to-top characteristic polynomial,
    # and that interval is a smaller core label order or a Boolean lattice
    # depending on whether the word still has a 1 in it.
    for n in range(2, 6):
        h = build_hoch(n)
        c = clo_of(n)
        ranks = c.poset.rank_vector()
        top = c.poset.top()
        total = BiPoly()
        for u in range(c.poset.n):
            k = ranks[u]
            got = BiPoly()
            for v in c.poset.interval(u, top):
                got += c.poset.mobius(u, v) * Y ** ranks[v]
            if l1(h.triword(u)) == 0:
                base = char_poly_closed(n - k)
            else:
                base = (ONE - X) ** (n - k)
            want = Y**k * BiPoly({(0, e): co for (e, _), co in base.terms.items()})
            assert got == want
            total += (X * Y) ** k * BiPoly(
                {(0, e): co for (e, _), co in base.terms.items()}
            )
        assert total == m_closed(n)


# -- F-triangle ----------------------------------------------------------------


def test_f_four_ways_agree():
    for n in range(1, 6):
        closed = f_closed(n)
        assert f_from_m(n) == closed
        assert f_tilde(n) == closed
        assert f_from_cores(n) == closed


def test_f3_pinned():
    want = (X + Y + ONE) * (3 * X**2 + 2 * X * Y + 4 * X + (Y + ONE) ** 2)
    assert f_closed(3) == want
    assert f_closed(3).coeff(1, 1) == 8
    assert f_closed(3).eval_at(0, 0) == 1


def test_f_coefficient_closed():
    assert f_coefficient(3, 0, 0) == 1
    assert f_coefficient(3, 1, 1) == 8
    assert f_coefficient(3, 3, 0) == 3
    for n in range(1, 6):
        closed = f_closed(n)
        for k in range(n + 1):
            for l in range(n - k + 1):
                assert f_coefficient(n, k, l) == closed.coeff(k, l)


def test_f_tilde_term_by_term_n3():
    want = (
        X**3
        + 3 * X**2 * (Y + ONE)
        + 3 * X * (Y + ONE) ** 2
        + (Y + ONE) ** 3
        + 2 * X**2 * (X + ONE)
        + 2 * X * (X + ONE) * (Y + ONE)
    )
    assert f_tilde(3) == want


def test_transforms_send_boolean_m_to_boolean_f_and_h():
    for n in range(1, 5):
        m_bool = (X * Y - Y + ONE) ** n
        assert f_transform(m_bool, n) == (X + Y + ONE) ** n
        assert h_transform(m_bool, n) == (X * Y + ONE) ** n


# -- H-triangle ----------------------------------------------------------------


def test_h_four_ways_agree():
    for n in range(1, 6):
        closed = h_closed(n)
        assert h_from_m(n) == closed
        assert h_tilde(n) == closed
        assert h_from_antichains(n) == closed


def test_h_pinned_values():
    want3 = X**3 * Y**3 + 3 * X**2 * Y**2 + 2 * X**2 * Y + 3 * X * Y + 2 * X + ONE
    assert h_closed(3) == want3
    assert h_closed(3) == (X * Y + ONE) * ((X * Y + ONE) ** 2 + 2 * X)
    assert h_closed(4) == (X * Y + ONE) ** 2 * ((X * Y + ONE) ** 2 + 3 * X)


def test_h_at_y1_is_rank_poly():
    for n in range(1, 7):
        assert at_y1(h_closed(n)) == rank_poly_closed(n)


# -- triword statistics --------------------------------------------------------


def test_stat_table_n3():
    assert set(enumerate_triwords(3)) == set(STATS_3)
    for u, (c, g) in STATS_3.items():
        assert len(canrep_formula(u)) == c
        assert neg_stat(u) == g


def test_neg_stat_counts_atom_joinands():
    for n in range(1, 6):
        h = build_hoch(n)
        lat = h.lattice
        atomset = set(lat.atoms())
        for e in range(lat.n):
            can = canonical_joinrep(lat, e)
            assert len(can & atomset) == neg_stat(h.triword(e))


# -- partial cores and the face vector ------------------------------------------


def test_partial_core_invariants():
    h = build_hoch(3)
    lat = h.lattice
    cores = partial_cores(lat)
    assert len(cores) == 39
    assert len(cores) == sum(face_vector(3))
    by_elem = {}
    for core in cores:
        by_elem.setdefault(core.element, []).append(core)
    for u, group in by_elem.items():
        lows = set(lat.poset.lower_covers(u))
        assert {c.covers for c in group} == {
            frozenset(s)
            for r in range(len(lows) + 1)
            for s in combinations(sorted(lows), r)
        }
        for core in group:
            if not core.covers:
                assert core.nucleus == u
            if core.covers == frozenset(lows):
                assert core.nucleus == core_label_set(lat, u).nucleus


def test_partial_core_example():
    h = build_hoch(3)
    u = h.id_of((1, 2, 1))
    acc = BiPoly()
    for core in partial_cores(h.lattice):
        if core.element == u:
            acc += X ** (3 - len(core.covers) - core.neg) * Y**core.neg
    assert acc == X**2 * Y + X * Y + X**2 + X
    assert acc == X * (X + ONE) * (Y + ONE)


def test_face_vector_matches_closed():
    for n in range(1, 9):
        got = face_vector(n)
        assert got == [face_count_closed(n, i) for i in range(n + 1)]
        assert got[0] == triword_count(n)
        assert got[n] == 1
        assert sum((-1) ** i * f for i, f in enumerate(got)) == 1


def test_face_vector_pinned():
    assert face_vector(3) == [12, 18, 8, 1]
    assert face_count_closed(6, 1) == 432
    assert face_count_closed(8, 1) == 2816


# -- antichain route to H --------------------------------------------------------


def test_j_poset_shape():
    jp = j_poset(4)
    p = jp.poset
    name = {i: p.labels[i] for i in range(p.n)}
    covers = {(name[a], name[b]) for a, b in p.covers}
    assert covers == {("a1", "a2"), ("a2", "a3"), ("a3", "a4"), ("b2", "a2")}
    assert {name[i] for i in jp.atoms} == {"a1", "b2", "b3", "b4"}


def test_j_poset_antichain_counts():
    assert len(j_poset(1).poset.antichains()) == 2
    assert len(j_poset(3).poset.antichains()) == 12
    assert len(j_poset(4).poset.antichains()) == 28
    for n in range(1, 7):
        assert len(j_poset(n).poset.antichains()) == triword_count(n)


# -- G-triangle -------------------------------------------------------------------


def test_g_triangle_closed_cases():
    assert g_triangle(1, 0) == X + Y + ONE
    for n in range(1, 5):
        assert g_triangle(n, 0) == (X + Y + ONE) ** n
    assert g_conjecture_closed(1) == X + Y + ONE


def test_g_conjecture_reported_not_asserted(capsys):
    for n in range(2, 7):
        report = g_conjecture_check(n)
        assert set(report) == {"n", "match", "computed", "conjectured"}
        verdict = "matches" if report["match"] else "MISMATCH"
        print(f"G-triangle conjecture at n={n}: {verdict}")
    out = capsys.readouterr().out
    assert out.count("G-triangle conjecture") == 5


def test_g_triangle_size_guard():
    with pytest.raises(SizeBound):
        g_triangle(12, 1)


# -- Boolean baselines -------------------------------------------------------------


def test_boolean_baselines():
    for n in range(0, 6):
        bb = boolean_baselines(n)
        assert bb["m"] == bb["m_closed"] == (X * Y - Y + ONE) ** n
        assert bb["f"] == bb["f_closed"] == (X + Y + ONE) ** n
        assert bb["h"] == bb["h_closed"] == (X * Y + ONE) ** n
