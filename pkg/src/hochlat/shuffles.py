"""Shuffle lattices, the core label order, and the word bijection.

Words mix letters from an ascending alphabet A = {2..a+1} (stored as
positive ints) and marker letters (stored as -1..-b, rendered 𝟙).  A word is
valid when its A-part and its marker part each appear in ascending order.
Going up in the order removes an A-letter or inserts a marker.

The core label order of a semidistributive lattice compares elements by
inclusion of core label sets; for the triword lattices it is again a
lattice and matches the one-marker shuffle lattice under an explicit
letter-by-letter bijection.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .errors import MalformedWord, NotSemidistributive, SizeBound
from .hochschild import l1
from .lattice import as_lattice, is_semidistributive, psi_map
from .polynomials import interpolate_univariate
from .poset import FinitePoset

MAX_ELEMENTS = 5000


def shuffle_count(a, b):
    return sum(comb(a, k) * comb(b, m) * comb(k + m, k) for k in range(a + 1) for m in range(b + 1))


def shuffle_words(a, b):
    """Every shuffle of a subword of 2..a+1 with a subword of the markers."""
    out = []
    letters_a = list(range(2, a + 2))
    letters_b = [-(j + 1) for j in range(b)]
    for ka in range(a + 1):
        for sub_a in combinations(letters_a, ka):
            for kb in range(b + 1):
                for sub_b in combinations(letters_b, kb):
                    ordered_b = sorted(sub_b, reverse=True)
                    for slots in combinations(range(ka + kb), ka):
                        word, ia, ib = [], 0, 0
                        for pos in range(ka + kb):
                            if pos in slots:
                                word.append(sub_a[ia])
                                ia += 1
                            else:
                                word.append(ordered_b[ib])
                                ib += 1
                        out.append(tuple(word))
    return sorted(set(out), key=lambda w: (word_rank(w, a), w))


def word_rank(w, a):
    """Steps above the bottom word: missing A-letters plus present markers."""
    pos = sum(1 for x in w if x > 0)
    neg = len(w) - pos
    return a - pos + neg


def is_shuffle_word(w, a, b):
    pos = [x for x in w if x > 0]
    neg = [-x for x in w if x < 0]
    if any(x == 0 or x == 1 or x > a + 1 or -x > b for x in w):
        return False
    return sorted(set(pos)) == pos and sorted(set(neg)) == neg


def render_word(w, ascii_mode=False):
    if not w:
        return "eps" if ascii_mode else "ε"
    parts = []
    for x in w:
        if x > 0:
            parts.append(str(x))
        elif ascii_mode:
            parts.append("1*" if x == -1 else f"1*{-x}")
        else:
            parts.append("\U0001d7d9" if x == -1 else f"\U0001d7d9{-x}")
    if any(len(p) > 1 for p in parts):
        return " ".join(parts)
    return "".join(parts)


class ShuffleLattice:
    """Lattice of shuffle words plus the id <-> word decoding."""

    def __init__(self, lattice, words, a, b):
        self.lattice = lattice
        self.words = tuple(words)
        self.index = {w: i for i, w in enumerate(self.words)}
        self.a, self.b = a, b

    def __getattr__(self, name):
        return getattr(self.lattice, name)

    def word(self, i):
        return self.words[i]

    def id_of(self, w):
        return self.index[w]

    def __repr__(self):
        return f"ShuffleLattice(a={self.a}, b={self.b}, elements={len(self.words)})"


def _up_steps(w, a, b):
    """Single-step larger words: drop one A-letter or insert one marker."""
    out = []
    for i, x in enumerate(w):
        if x > 0:
            out.append(w[:i] + w[i + 1 :])
    present = {-x for x in w if x < 0}
    for j in range(1, b + 1):
        if j in present:
            continue
        lo = max((i + 1 for i, x in enumerate(w) if x < 0 and -x < j), default=0)
        hi = min((i for i, x in enumerate(w) if x < 0 and -x > j), default=len(w))
        for slot in range(lo, hi + 1):
            out.append(w[:slot] + (-j,) + w[slot:])
    return out


def shuffle_lattice(a, b, max_elements=MAX_ELEMENTS):
    assert a >= 0 and b >= 0
    total = shuffle_count(a, b)
    if total > max_elements:
        raise SizeBound(f"shuffle lattice would have {total} elements (cap {max_elements})")
    words = shuffle_words(a, b)
    index = {w: i for i, w in enumerate(words)}
    covers = set()
    for w in words:
        for w2 in _up_steps(w, a, b):
            covers.add((index[w], index[w2]))
    poset = FinitePoset.closure(sorted(covers), len(words), labels=[render_word(w) for w in words])
    return ShuffleLattice(as_lattice(poset), words, a, b)


def shuffle_stats(n):
    """Brute-force chain count, zeta coefficients, and Mobius value."""
    assert n >= 1
    lat = shuffle_lattice(n - 1, 1)
    poset = lat.lattice.poset
    zeta_pts = [(q, poset.zeta(q)) for q in range(1, poset.length() + 3)]
    mobius = poset.mobius(poset.bottom(), poset.top())
    assert mobius == poset.mobius_invariant_via_zeta()
    return {
        "elements": poset.n,
        "maximal_chains": poset.count_maximal_chains(),
        "zeta_coefficients": interpolate_univariate(zeta_pts),
        "mobius": mobius,
    }


def shuffle_stats_closed(n):
    """The same three quantities from the closed formulas."""
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(n + 1, 2)
    coeffs[n - 1] += Fraction(-(n - 1), 2)
    return {
        "elements": 2 ** (n - 2) * (n + 3) if n >= 2 else 2,
        "maximal_chains": factorial(n + 1) // 2,
        "zeta_coefficients": [int(c) if c.denominator == 1 else c for c in coeffs],
        "mobius": (-1) ** n * n,
    }


# -- the word bijection ------------------------------------------------------


def sigma(u):
    """Triword to one-marker shuffle word.

    The positions in 2..n carrying no 2 form the A-part; the marker lands
    right after the letter equal to the last-1 position, at the front when
    that position is 1, nowhere when there is no 1 at all.
    """
    n = len(u)
    tau = [i for i in range(2, n + 1) if u[i - 1] != 2]
    last1 = l1(u)
    if last1 == 0:
        return tuple(tau)
    if last1 == 1:
        return tuple([-1] + tau)
    k = tau.index(last1)
    return tuple(tau[: k + 1] + [-1] + tau[k + 1 :])


def sigma_inverse(n, w):
    """Rebuild the triword: marker position fixes where the 1-run ends."""
    if not is_shuffle_word(w, n - 1, 1):
        raise MalformedWord(f"{w!r} is not a valid one-marker shuffle word for n={n}")
    present = [x for x in w if x > 0]
    u = [None] * n
    for i in range(2, n + 1):
        if i not in present:
            u[i - 1] = 2
    if -1 not in w:
        u[0] = 0
        for i in present:
            u[i - 1] = 0
    else:
        k = w.index(-1)
        prev = w[k - 1] if k > 0 else 1
        u[0] = 1
        for i in present:
            u[i - 1] = 1 if i <= prev else 0
    out = tuple(u)
    if sigma(out) != tuple(w):
        raise MalformedWord(f"{w!r} does not come from a triword of length {n}")
    return out


# -- core label order --------------------------------------------------------


class CloPoset:
    """Core label order of a lattice, with the original element ids."""

    def __init__(self, poset, source):
        self.poset = poset
        self.source = source

    def __getattr__(self, name):
        return getattr(self.poset, name)


def clo(lat):
    """Order the elements by inclusion of their core label sets."""
    if not is_semidistributive(lat):
        raise NotSemidistributive("core label order needs a semidistributive lattice")
    psi = psi_map(lat)
    assert len(set(psi)) == lat.n
    m = lat.n
    leq = [[psi[a] <= psi[b] for b in range(m)] for a in range(m)]
    poset = FinitePoset.from_leq(leq, labels=list(lat.poset.labels))
    return CloPoset(poset, lat)


def clo_rank_counts(n):
    """Closed rank sizes of the triword core label order."""
    return [
        comb(n, k) + ((n - k) * comb(n - 1, k - 1) if k >= 1 else 0)
        for k in range(n + 1)
    ]
