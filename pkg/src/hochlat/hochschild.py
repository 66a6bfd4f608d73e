"""Triwords and the lattices they form.

A triword of length n is a word over {0, 1, 2} whose first letter is not 2
and in which no 1 appears after a 0.  Under the componentwise order these
words form a lattice: joins are componentwise maxima, meets are
componentwise minima with every 1 that lands after a 0 lowered to 0.

Two builders are provided: ``build_hoch`` (direct, covers generated by the
one-position-change rule) and ``build_hoch_by_doubling`` (iterated interval
doublings starting from the singleton, which certifies congruence
uniformity).  The closed-form combinatorics of the lattice lives here too:
canonical join representations, the nucleus, core label sets, and the
inverse of the core labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering

from .errors import MalformedLabelSet, SizeBound
from .lattice import as_lattice
from .poset import FinitePoset, IntervalRef, doubling

MAX_N = 10


def _check_n(n, lo=1):
    if not lo <= n <= MAX_N:
        raise SizeBound(f"length n must satisfy {lo} <= n <= {MAX_N}, got {n}")


def is_triword(u):
    if any(x not in (0, 1, 2) for x in u):
        return False
    if u and u[0] == 2:
        return False
    seen_zero = False
    for x in u:
        if x == 0:
            seen_zero = True
        elif x == 1 and seen_zero:
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_triwords(n):
    """All triwords of length n in lexicographic order."""
    _check_n(n)
    words = []

    def grow(prefix, seen_zero):
        if len(prefix) == n:
            words.append(prefix)
            return
        for x in (0, 1, 2):
            if x == 2 and not prefix:
                continue
            if x == 1 and seen_zero:
                continue
            grow(prefix + (x,), seen_zero or x == 0)

    grow((), False)
    return tuple(words)


def triword_count(n):
    """Closed count 2^(n-2) (n+3); exact for n = 1 as well."""
    _check_n(n)
    value = Fraction(2) ** (n - 2) * (n + 3)
    assert value.denominator == 1
    return int(value)


def l1(u):
    """Position of the last 1 (1-based), 0 if none."""
    out = 0
    for i, x in enumerate(u, start=1):
        if x == 1:
            out = i
    return out


def f0(u):
    """Position of the first 0 (1-based), n+1 if none."""
    for i, x in enumerate(u, start=1):
        if x == 0:
            return i
    return len(u) + 1


def hoch_join(u, v):
    """Componentwise maximum (always again a triword)."""
    return tuple(max(a, b) for a, b in zip(u, v))


def hoch_meet(u, v):
    """Componentwise minimum, then every 1 sitting after a 0 drops to 0."""
    w = [min(a, b) for a, b in zip(u, v)]
    seen_zero = False
    for i, x in enumerate(w):
        if x == 0:
            seen_zero = True
        elif x == 1 and seen_zero:
            w[i] = 0
    return tuple(w)


def format_triword(u):
    return "(" + ",".join(str(x) for x in u) + ")"


def parse_triword(text):
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    u = tuple(int(part) for part in body.split(",") if part.strip() != "")
    if not is_triword(u):
        raise ValueError(f"not a triword: {text!r}")
    return u


# -- irreducibles ----------------------------------------------------------


@total_ordering
@dataclass(frozen=True)
class HochIrreducible:
    """A join-irreducible triword: kind 'a' (prefix of 1s) or 'b' (single 2)."""

    kind: str
    index: int

    def __post_init__(self):
        assert self.kind in ("a", "b")
        assert self.index >= 1 + (self.kind == "b")

    def triword(self, n):
        assert self.index <= n
        if self.kind == "a":
            return (1,) * self.index + (0,) * (n - self.index)
        return tuple(2 if i == self.index else 0 for i in range(1, n + 1))

    def is_atom(self):
        return self.kind == "b" or self.index == 1

    def __lt__(self, other):
        return (self.kind, self.index) < (other.kind, other.index)

    def __str__(self):
        return f"{self.kind}{self.index}"


def a_irr(i):
    return HochIrreducible("a", i)


def b_irr(i):
    return HochIrreducible("b", i)


def irreducibles(n):
    """The 2n - 1 join-irreducible labels a1..an, b2..bn."""
    return [a_irr(i) for i in range(1, n + 1)] + [b_irr(i) for i in range(2, n + 1)]


def atom_irreducibles(n):
    return frozenset([a_irr(1)] + [b_irr(i) for i in range(2, n + 1)])


# -- lattice builders -------------------------------------------------------


def lower_cover_triwords(u):
    """Lower covers by the one-position-change rule."""
    last1, first0 = l1(u), f0(u)
    out = []
    if last1 > 0:
        out.append(u[: last1 - 1] + (0,) + u[last1:])
    for i, x in enumerate(u, start=1):
        if x == 2:
            drop = 1 if i < first0 else 0
            out.append(u[: i - 1] + (drop,) + u[i:])
    return out


class HochLattice:
    """Lattice of triwords plus the id <-> triword decoding."""

    def __init__(self, lattice, triwords):
        self.lattice = lattice
        self.triwords = tuple(triwords)
        self.index = {u: i for i, u in enumerate(self.triwords)}

    def __getattr__(self, name):
        return getattr(self.lattice, name)

    def triword(self, a):
        return self.triwords[a]

    def id_of(self, u):
        return self.index[u]

    def __repr__(self):
        return f"HochLattice(n={len(self.triwords[0])}, elements={len(self.triwords)})"


@lru_cache(maxsize=None)
def build_hoch(n):
    """The triword lattice of length n on lexicographic ids."""
    _check_n(n)
    words = enumerate_triwords(n)
    index = {u: i for i, u in enumerate(words)}
    covers = []
    for u in words:
        for v in lower_cover_triwords(u):
            covers.append((index[v], index[u]))
    poset = FinitePoset.closure(covers, len(words), labels=[format_triword(u) for u in words])
    return HochLattice(as_lattice(poset), words)


def build_hoch_by_doubling(n):
    """Rebuild the triword lattice by iterated interval doublings.

    Starting from the singleton: append 0 to every word; the first step
    doubles by the whole (one-element) lattice, flipping the new copy's last
    letter to 1.  Every later step doubles by the whole lattice (flip 0 to
    2), then by the interval of words with a unique zero, in last position
    (flip 0 to 1).  Reaching the lattice this way is a congruence-uniformity
    certificate.
    """
    _check_n(n)
    words = [()]
    poset = FinitePoset.closure([], 1)

    def double_and_decode(lo_word, hi_word, flip_to):
        nonlocal words, poset
        lo, hi = words.index(lo_word), words.index(hi_word)
        members = set(poset.interval(lo, hi))
        doubled = doubling(poset, IntervalRef(lo, hi))
        index = {id(lbl): a for a, lbl in enumerate(poset.labels)}
        fresh = []
        for lbl, copy in doubled.labels:
            a = index[id(lbl)]
            flips = copy == 1 and a in members
            fresh.append(words[a][:-1] + (flip_to,) if flips else words[a])
        words, poset = fresh, doubled

    for step in range(1, n + 1):
        words = [u + (0,) for u in words]
        if step == 1:
            double_and_decode((0,), (0,), 1)
            continue
        double_and_decode((0,) * step, max(words), 2)
        double_and_decode((1,) * (step - 1) + (0,), (1,) + (2,) * (step - 2) + (0,), 1)
    relabeled = FinitePoset(poset.leq, poset.covers, labels=[format_triword(u) for u in words])
    return HochLattice(as_lattice(relabeled), words)


# -- closed-form combinatorics ----------------------------------------------


def irreducible_of_triword(u):
    """The HochIrreducible a triword represents, or None if reducible."""
    twos = [i for i, x in enumerate(u, start=1) if x == 2]
    ones = [i for i, x in enumerate(u, start=1) if x == 1]
    if len(twos) == 1 and not ones:
        return b_irr(twos[0])
    if not twos and ones == list(range(1, len(ones) + 1)) and ones:
        return a_irr(len(ones))
    return None


def cover_label_formula(u, v):
    """Join-irreducible labeling a cover: the single raised position decides."""
    for i, (x, y) in enumerate(zip(u, v), start=1):
        if x != y:
            return a_irr(i) if y == 1 else b_irr(i)
    raise ValueError(f"{u} -> {v} is not a cover")


def canrep_formula(u):
    """Canonical join representation read off the word directly."""
    out = set()
    last1 = l1(u)
    if last1 > 0:
        out.add(a_irr(last1))
    for i, x in enumerate(u, start=1):
        if x == 2:
            out.add(b_irr(i))
    return frozenset(out)


def nucleus_formula(u):
    """Meet of u with all its lower covers, in closed form."""
    last1 = l1(u)
    w = []
    for i, x in enumerate(u, start=1):
        if i == last1:
            w.append(x - 1)
        elif x == 2 and i < last1:
            w.append(1)
        elif x == 2 and i > last1:
            w.append(0)
        else:
            w.append(x)
    return tuple(w)


def core_labels_formula(u):
    """Core label set: a-run from the last 1 up to the first 0, plus all b's."""
    out = set()
    last1, first0 = l1(u), f0(u)
    if last1 > 0:
        for i in range(last1, first0):
            out.add(a_irr(i))
    for i, x in enumerate(u, start=1):
        if x == 2:
            out.add(b_irr(i))
    return frozenset(out)


def psi_inverse(n, labels):
    """The unique triword whose core label set is ``labels``.

    Raises MalformedLabelSet when no triword has that label set.
    """
    _check_n(n)
    labels = frozenset(labels)
    a_idx = sorted(j.index for j in labels if j.kind == "a")
    b_idx = sorted(j.index for j in labels if j.kind == "b")
    if any(not 1 <= j.index <= n for j in labels):
        raise MalformedLabelSet(f"label index out of range for n={n}")
    w = [None] * n
    for i in b_idx:
        if w[i - 1] is not None:
            raise MalformedLabelSet("repeated position")
        w[i - 1] = 2
    if a_idx:
        last1 = a_idx[0]
        if w[last1 - 1] is not None:
            raise MalformedLabelSet("a-run begins on an occupied position")
        w[last1 - 1] = 1
        for i in range(1, last1):
            if w[i - 1] is None:
                w[i - 1] = 1
    u = tuple(0 if x is None else x for x in w)
    if not is_triword(u) or core_labels_formula(u) != labels:
        raise MalformedLabelSet(f"no triword has core label set {sorted(labels)}")
    return u
