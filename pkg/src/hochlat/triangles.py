"""Rank, characteristic, and triangle polynomials of the triword lattices.

Everything here is exact integer/rational arithmetic on BiPoly values.  The
M-triangle lives on the core label order (which is graded), and the F- and
H-triangles are reached along several independent routes: rational
substitution into M (done by grid evaluation plus interpolation, never by
symbolic division), closed product formulas, statistics summed over triwords,
partial-core enumeration, and antichain counting in a small auxiliary poset.
Agreement of the routes is what the test suite checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .hochschild import build_hoch, canrep_formula, enumerate_triwords, l1
from .lattice import build_bool, canonical_joinrep, jsd_labeling
from .polynomials import BiPoly, interpolate_from_grid
from .poset import FinitePoset
from .shuffles import shuffle_lattice, word_rank

X = BiPoly.x()
Y = BiPoly.y()
ONE = BiPoly.const(1)


def _poset_of(p):
    return getattr(p, "poset", p)


# -- rank and characteristic polynomials ------------------------------------


def rank_poly(p):
    """Sum of x^rank over a graded poset."""
    terms = {}
    for r in _poset_of(p).rank_vector():
        terms[(r, 0)] = terms.get((r, 0), 0) + 1
    return BiPoly(terms)


def char_poly(p):
    """Sum of mu(bottom, v) x^rank(v) over a graded bounded poset."""
    p = _poset_of(p)
    ranks = p.rank_vector()
    bot = p.bottom()
    terms = {}
    for v in range(p.n):
        key = (ranks[v], 0)
        terms[key] = terms.get(key, 0) + p.mobius(bot, v)
    return BiPoly(terms)


def rank_poly_closed(n):
    """Rank polynomial of the triword core label order, as a product."""
    if n == 1:
        return X + ONE
    return (X + ONE) ** (n - 2) * (X**2 + (n + 1) * X + ONE)


def char_poly_closed(n):
    """Characteristic polynomial of the triword core label order."""
    return (ONE - X) ** (n - 1) * (ONE - n * X)


def shuffle_char_closed(a, b):
    """Characteristic polynomial of the shuffle lattice on (a, b)."""
    acc = BiPoly()
    for j in range(min(a, b) + 1):
        acc += comb(a, j) * comb(b, j) * (X - ONE) ** (a + b - j) * X**j
    return (-1) ** (a + b) * acc


# -- the M-triangle ----------------------------------------------------------


def m_triangle(p):
    """Mobius values of all comparable pairs, graded by rank on both sides.

    The intended input is a core label order; any graded poset works.
    """
    p = _poset_of(p)
    ranks = p.rank_vector()
    terms = {}
    for b in range(p.n):
        for a in range(p.n):
            if not p.leq[a, b]:
                continue
            key = (ranks[a], ranks[b])
            terms[key] = terms.get(key, 0) + p.mobius(a, b)
    return BiPoly(terms)


def m_closed(n):
    """Closed product form of the M-triangle of the triword core label order."""
    if n == 1:
        return ONE - Y + X * Y
    bracket = (n + 1) * ((X - ONE) * Y - X * Y**2) + (n * ONE + X**2) * Y**2 + ONE
    return (X * Y - Y + ONE) ** (n - 2) * bracket


# -- F and H via rational substitution ---------------------------------------


def f_transform(m, n):
    """y^n * m((y+1)/(y-x), (y-x)/y), recovered exactly by interpolation.

    Sampled on an integer grid with y > x >= 0, so no denominator vanishes.
    """

    def value(x0, y0):
        fx = Fraction(y0 + 1, y0 - x0)
        fy = Fraction(y0 - x0, y0)
        return Fraction(y0) ** n * m.eval_at(fx, fy)

    xs = list(range(n + 2))
    ys = list(range(n + 2, 2 * n + 4))
    return interpolate_from_grid(xs, ys, value)


def h_transform(m, n):
    """(x(y-1)+1)^n * m(y/(y-1), x(y-1)/(x(y-1)+1)), by interpolation.

    Sampled with x >= 0 and y >= 2, keeping both denominators nonzero.
    """

    def value(x0, y0):
        base = x0 * (y0 - 1) + 1
        fx = Fraction(y0, y0 - 1)
        fy = Fraction(x0 * (y0 - 1), base)
        return Fraction(base) ** n * m.eval_at(fx, fy)

    xs = list(range(n + 2))
    ys = list(range(2, n + 4))
    return interpolate_from_grid(xs, ys, value)


def f_from_m(n):
    return f_transform(m_closed(n), n)


def h_from_m(n):
    return h_transform(m_closed(n), n)


def f_closed(n):
    """Closed product form of the F-triangle."""
    if n == 1:
        return X + Y + ONE
    bracket = n * X**2 + 2 * X * Y + (n + 1) * X + (Y + ONE) ** 2
    return (X + Y + ONE) ** (n - 2) * bracket


def h_closed(n):
    """Closed product form of the H-triangle."""
    if n == 1:
        return X * Y + ONE
    return (X * Y + ONE) ** (n - 2) * ((X * Y + ONE) ** 2 + (n - 1) * X)


def f_coefficient(n, k, l):
    """Coefficient of x^k y^l in the F-triangle; the division by n is exact."""
    v = Fraction(comb(n, k) * comb(n - k, l) * (n * (k + 1) - k * (l + 1)), n)
    assert v.denominator == 1
    return int(v)


# -- F and H via triword statistics ------------------------------------------


def neg_stat(u):
    """Number of 2s in the word, plus one when the last 1 sits in slot 1.

    Equivalently: how many canonical joinands of the word are atoms.
    """
    return sum(1 for c in u if c == 2) + (1 if l1(u) == 1 else 0)


def f_tilde(n):
    """F-triangle as a sum of (x, x+1, y+1)-products over all triwords."""
    acc = BiPoly()
    for u in enumerate_triwords(n):
        c = len(canrep_formula(u))
        g = neg_stat(u)
        acc += X ** (n - c) * (X + ONE) ** (c - g) * (Y + ONE) ** g
    return acc


def h_tilde(n):
    """H-triangle from the (canonical joinand count, atom count) statistics."""
    terms = {}
    for u in enumerate_triwords(n):
        key = (len(canrep_formula(u)), neg_stat(u))
        terms[key] = terms.get(key, 0) + 1
    return BiPoly(terms)


# -- partial cores -----------------------------------------------------------


@dataclass(frozen=True)
class PartialCore:
    """One element together with a chosen subset of its lower covers.

    ``nucleus`` is the meet of the element with the chosen covers, and
    ``neg`` counts the atoms among the element's canonical joinands whose
    cover was NOT chosen (the cover itself is never an atom; its label is
    what gets tested).
    """

    element: int
    covers: frozenset
    nucleus: int
    neg: int


def partial_cores(lat):
    """All (element, cover subset) pairs of a join-semidistributive lattice."""
    lab = jsd_labeling(lat)
    atomset = set(lat.atoms())
    out = []
    for u in range(lat.n):
        lows = lat.poset.lower_covers(u)
        total = sum(1 for a in lows if lab.label(a, u) in atomset)
        for r in range(len(lows) + 1):
            for chosen in combinations(lows, r):
                drop = sum(1 for a in chosen if lab.label(a, u) in atomset)
                out.append(
                    PartialCore(
                        element=u,
                        covers=frozenset(chosen),
                        nucleus=lat.meet_all([u, *chosen]),
                        neg=total - drop,
                    )
                )
    return out


def f_from_cores(n):
    """F-triangle by enumerating partial cores of the triword lattice."""
    lat = build_hoch(n).lattice
    terms = {}
    for core in partial_cores(lat):
        key = (n - len(core.covers) - core.neg, core.neg)
        terms[key] = terms.get(key, 0) + 1
    return BiPoly(terms)


def face_vector(n):
    """Partial-core counts grouped by how many covers were chosen."""
    lat = build_hoch(n).lattice
    out = [0] * (n + 1)
    for core in partial_cores(lat):
        out[len(core.covers)] += 1
    return out


def face_count_closed(n, i):
    """Closed count of partial cores with i chosen covers; exact rationals."""
    v = Fraction(2) ** (n - i - 2) * Fraction(comb(n, i) * (n * (n + 3) - i * (i - 1)), n)
    assert v.denominator == 1
    return int(v)


# -- H via antichains of the extended irreducible poset -----------------------


@dataclass(frozen=True)
class JPoset:
    """Irreducible poset of the triword lattice with b2 pushed below the a-chain.

    ``atoms`` holds the ids of a1 and every b; antichains weighted by size and
    atom content realize the H-triangle.
    """

    poset: FinitePoset
    atoms: frozenset


def j_poset(n):
    """Chain a1 < ... < an, b2 below a2 (hence below the whole upper chain),
    and b3 .. bn isolated."""
    labels = [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(2, n + 1)]
    covers = [(i, i + 1) for i in range(n - 1)]
    if n >= 2:
        covers.append((n, 1))
    poset = FinitePoset.closure(covers, 2 * n - 1, labels=labels)
    return JPoset(poset=poset, atoms=frozenset({0} | set(range(n, 2 * n - 1))))


def h_from_antichains(n):
    """H-triangle by weighting every antichain of the extended poset."""
    jp = j_poset(n)
    terms = {}
    for anti in jp.poset.antichains():
        key = (len(anti), len(anti & jp.atoms))
        terms[key] = terms.get(key, 0) + 1
    return BiPoly(terms)


# -- the G-triangle of shuffle lattices ---------------------------------------


def g_triangle(a, b):
    """Comparable pairs of a shuffle lattice, graded by rank and corank."""
    sl = shuffle_lattice(a, b)
    ranks = [word_rank(w, a) for w in sl.words]
    leq = sl.poset.leq
    terms = {}
    for j in range(sl.n):
        for i in range(sl.n):
            if leq[i, j]:
                key = (ranks[i], a + b - ranks[j])
                terms[key] = terms.get(key, 0) + 1
    return BiPoly(terms)


def g_conjecture_closed(n):
    """Conjectured product form for the G-triangle of the (n-1, 1) shuffle."""
    if n == 1:
        return X + Y + ONE
    bracket = X**2 + Y**2 + ONE + (n + 1) * (X * Y + X + Y)
    return (X + Y + ONE) ** (n - 2) * bracket


def g_conjecture_check(n):
    """Compare the computed G-triangle with the conjectured product.

    Returns a report; callers must treat a mismatch as news, not as an error.
    """
    computed = g_triangle(n - 1, 1)
    conjectured = g_conjecture_closed(n)
    return {
        "n": n,
        "match": computed == conjectured,
        "computed": computed,
        "conjectured": conjectured,
    }


# -- Boolean baselines ---------------------------------------------------------


def boolean_baselines(n):
    """Definitional M/F/H of the Boolean lattice next to their closed powers."""
    lat = build_bool(n)
    p = lat.poset
    ranks = p.rank_vector()

    f_terms = {}
    for b in range(p.n):
        for a in range(p.n):
            if p.leq[a, b]:
                key = (ranks[a], n - ranks[b])
                f_terms[key] = f_terms.get(key, 0) + 1

    atomset = set(lat.atoms())
    h_terms = {}
    for e in range(p.n):
        can = canonical_joinrep(lat, e)
        key = (len(can), len(can & atomset))
        h_terms[key] = h_terms.get(key, 0) + 1

    return {
        "m": m_triangle(p),
        "f": BiPoly(f_terms),
        "h": BiPoly(h_terms),
        "m_closed": (X * Y - Y + ONE) ** n,
        "f_closed": (X + Y + ONE) ** n,
        "h_closed": (X * Y + ONE) ** n,
    }
