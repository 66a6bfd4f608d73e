"""Re-runnable property battery behind ``check all`` and the acceptance tests.

Each function verifies one bundle of guarantees at a single size n and
returns a plain bool.  The registry at the bottom pairs every bundle with
the largest n it is meant to run at; callers outside that range should skip
rather than fail.
"""

from __future__ import annotations

from math import comb

from .complexes import cjc, is_vertex_decomposable
from .galois import galois_graph, hoch_galois_characterization, max_ortho_pairs_lattice
from .hochschild import (
    build_hoch,
    build_hoch_by_doubling,
    enumerate_triwords,
    hoch_join,
    hoch_meet,
    irreducible_of_triword,
    parse_triword,
    triword_count,
)
from .lattice import (
    build_bool,
    has_intersection_property,
    is_extremal,
    is_semidistributive,
    is_spherical,
)
from .polynomials import BiPoly
from .poset import are_isomorphic
from .shuffles import clo, clo_rank_counts, shuffle_lattice, shuffle_stats, shuffle_stats_closed, sigma
from .triangles import (
    boolean_baselines,
    char_poly_closed,
    f_closed,
    f_from_cores,
    f_from_m,
    f_tilde,
    face_count_closed,
    face_vector,
    g_conjecture_check,
    h_closed,
    h_from_antichains,
    h_from_m,
    h_tilde,
    m_closed,
    m_triangle,
    rank_poly_closed,
)


def _x_section(p):
    return BiPoly({(j, 0): c for (i, j), c in p.terms.items() if i == 0})


def _at_y1(p):
    terms = {}
    for (i, j), c in p.terms.items():
        terms[(i, 0)] = terms.get((i, 0), 0) + c
    return BiPoly(terms)


def check_cardinality(n):
    words = enumerate_triwords(n)
    return len(words) == len(set(words)) == triword_count(n)


def check_lattice_law(n):
    h = build_hoch(n)
    lat = h.lattice
    for a in range(lat.n):
        u = h.triword(a)
        for b in range(lat.n):
            v = h.triword(b)
            if h.triword(lat.join_of(a, b)) != hoch_join(u, v):
                return False
            if h.triword(lat.meet_of(a, b)) != hoch_meet(u, v):
                return False
    for a, b in lat.covers:
        changed = sum(1 for x, y in zip(h.triword(a), h.triword(b)) if x != y)
        if changed != 1:
            return False
    return True


def check_structure(n):
    lat = build_hoch(n).lattice
    return (
        is_extremal(lat)
        and is_semidistributive(lat)
        and is_spherical(lat)
        and has_intersection_property(lat)
    )


def check_doubling(n):
    direct = build_hoch(n)
    doubled = build_hoch_by_doubling(n)
    return bool(are_isomorphic(doubled.poset, direct.poset))


def check_galois(n):
    geo = galois_graph(build_hoch(n).lattice)
    want = hoch_galois_characterization(n)

    def irr_name(v):
        return str(irreducible_of_triword(parse_triword(geo.graph.labels[v])))

    got = {(irr_name(s), irr_name(t)) for s, t in geo.graph.edges}
    expected = {(want.labels[s], want.labels[t]) for s, t in want.edges}
    return got == expected and len(got) == (n - 1) + comb(n, 2)


def check_mo_reconstruction(n):
    lat = build_hoch(n).lattice
    mo = max_ortho_pairs_lattice(galois_graph(lat).graph)
    return bool(are_isomorphic(mo.lattice.poset, lat.poset))


def check_cjc(n):
    lat = build_hoch(n).lattice
    cx = cjc(lat)
    return cx.face_count() == lat.n and is_vertex_decomposable(cx)


def check_sigma(n):
    h = build_hoch(n)
    c = clo(h.lattice)
    sl = shuffle_lattice(n - 1, 1)
    images = [sigma(h.triword(e)) for e in range(c.poset.n)]
    if sorted(images) != sorted(sl.words):
        return False
    mapped = {(sl.id_of(images[a]), sl.id_of(images[b])) for a, b in c.poset.covers}
    if mapped != set(sl.poset.covers):
        return False
    return c.poset.rank_profile() == clo_rank_counts(n)


def check_shuffle_stats(n):
    return shuffle_stats(n) == shuffle_stats_closed(n)


def check_m_triangle(n):
    closed = m_closed(n)
    return (
        m_triangle(clo(build_hoch(n).lattice)) == closed
        and _x_section(closed) == char_poly_closed(n)
        and closed.eval_at(1, 1) == 1
    )


def check_f_triangle(n):
    closed = f_closed(n)
    return f_from_m(n) == closed and f_tilde(n) == closed and f_from_cores(n) == closed


def check_h_triangle(n):
    closed = h_closed(n)
    return (
        h_from_m(n) == closed
        and h_tilde(n) == closed
        and h_from_antichains(n) == closed
        and _at_y1(closed) == rank_poly_closed(n)
    )


def check_faces(n):
    got = face_vector(n)
    if got != [face_count_closed(n, i) for i in range(n + 1)]:
        return False
    alternating = sum((-1) ** i * f for i, f in enumerate(got))
    return got[0] == triword_count(n) and got[n] == 1 and alternating == 1


def check_baselines(n):
    bb = boolean_baselines(n)
    if not (bb["m"] == bb["m_closed"] and bb["f"] == bb["f_closed"] and bb["h"] == bb["h_closed"]):
        return False
    lat = build_bool(n)
    return bool(are_isomorphic(clo(lat).poset, lat.poset))


def conjecture_report(n):
    """Verdict of the closed-form guess for the (n-1, 1) G-triangle: news, not a test."""
    return g_conjecture_check(n)


CHECKS = [
    ("triword count", 10, check_cardinality),
    ("componentwise join/meet", 6, check_lattice_law),
    ("extremal/semidistributive/spherical/intersection", 6, check_structure),
    ("doubling reconstruction", 4, check_doubling),
    ("galois characterization", 8, check_galois),
    ("orthogonal-pair reconstruction", 5, check_mo_reconstruction),
    ("canonical join complex", 6, check_cjc),
    ("sigma order isomorphism", 6, check_sigma),
    ("shuffle statistics", 6, check_shuffle_stats),
    ("m-triangle", 5, check_m_triangle),
    ("f-triangle", 5, check_f_triangle),
    ("h-triangle", 5, check_h_triangle),
    ("face vector", 8, check_faces),
    ("boolean baselines", 5, check_baselines),
]


def run_all(n, write=print):
    """Run every bundle at size n; True iff nothing in range failed."""
    ok = True
    for name, bound, fn in CHECKS:
        if n > bound:
            write(f"skip {name} (checked up to n={bound})")
            continue
        good = fn(n)
        ok = ok and good
        write(("ok   " if good else "FAIL ") + name)
    if n <= 6:
        report = conjecture_report(n)
        verdict = "matches" if report["match"] else "MISMATCH"
        write(f"note g-triangle conjecture at n={n}: {verdict}")
    return ok
