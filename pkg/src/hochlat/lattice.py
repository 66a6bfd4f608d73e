"""Finite lattices: eager join/meet tables plus the order-theoretic toolkit.

A :class:`Lattice` wraps a bounded :class:`~hochlat.poset.FinitePoset` and
materializes both m x m bound tables up front (``as_lattice`` fails with a
witness pair when a least upper bound or greatest lower bound is missing).
On top of that live the irreducible elements, semidistributivity checks, the
join-semidistributive cover labeling, canonical join representations, and
core label sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NoUniqueMin, NotALattice, NotSemidistributive
from .poset import FinitePoset


def _lub_by_scan(leq, topo):
    """Candidate least-upper-bound table: first topo element dominating both."""
    n = len(leq)
    table = np.zeros((n, n), dtype=np.int64)
    unassigned = np.ones((n, n), dtype=bool)
    for c in topo:
        dominated = leq[:, c]
        block = np.logical_and.outer(dominated, dominated)
        block &= unassigned
        table[block] = c
        unassigned &= ~block
    if unassigned.any():
        a, b = (int(x[0]) for x in np.nonzero(unassigned))
        raise NotALattice(f"pair ({a}, {b}) has no common bound", pair=(a, b))
    return table


def _lub_by_irr_masks(leq, topo, irrs):
    """Candidate table via irreducible bitmasks (for <= 20 irreducibles).

    Every element of a lattice is the join of the irreducibles below it, so
    the candidate for (a, b) is the topologically least element whose
    irreducible set contains both of theirs; a subset-closure sweep over the
    2^k masks makes each pair an O(1) lookup.
    """
    n = len(leq)
    k = len(irrs)
    masks = np.zeros(n, dtype=np.int64)
    for idx, j in enumerate(irrs):
        masks[leq[j]] |= np.int64(1 << idx)
    topo_pos = np.empty(n, dtype=np.int64)
    topo_pos[np.asarray(topo)] = np.arange(n)
    size = 1 << k
    cl = np.full(size, -1, dtype=np.int64)
    pos = np.full(size, np.iinfo(np.int64).max, dtype=np.int64)
    for e in topo:
        s = int(masks[e])
        if cl[s] < 0:
            cl[s] = e
            pos[s] = topo_pos[e]
    for bit in range(k):
        step = 1 << bit
        low = np.nonzero((np.arange(size) & step) == 0)[0]
        high = low + step
        better = pos[high] < pos[low]
        cl[low[better]] = cl[high[better]]
        pos[low[better]] = pos[high[better]]
    table = cl[masks[:, None] | masks[None, :]]
    if (table < 0).any():
        a, b = (int(x[0]) for x in np.nonzero(table < 0))
        raise NotALattice(f"pair ({a}, {b}) has no common bound", pair=(a, b))
    return table


def _verify_lub(leq, table):
    """Check each table entry really is the least common upper bound.

    The candidate j dominates both arguments, and up(j) is a subset of the
    common upper bounds; counting |up(a) & up(b)| with one matrix product
    and comparing against |up(j)| proves set equality, hence minimality.
    """
    f = leq.astype(np.float32)
    gram = f @ f.T
    upsize = f.sum(axis=1)
    above_a = np.take_along_axis(leq, table, axis=1)
    above_b = np.take_along_axis(leq, table.T, axis=1).T
    ok = above_a & above_b & (gram == upsize[table])
    if not ok.all():
        a, b = (int(x[0]) for x in np.nonzero(~ok))
        raise NotALattice(f"pair ({a}, {b}) has no least bound", pair=(a, b))


def _bound_table(leq, topo, irrs):
    table = _lub_by_irr_masks(leq, topo, irrs) if len(irrs) <= 20 else _lub_by_scan(leq, topo)
    _verify_lub(leq, table)
    return table.astype(np.int32)


class Lattice:
    """A finite lattice with eager join and meet tables."""

    def __init__(self, poset, join, meet):
        self.poset = poset
        self.join = join
        self.meet = meet
        self.bottom = poset.bottom()
        self.top = poset.top()

    @property
    def n(self):
        return self.poset.n

    @property
    def covers(self):
        return self.poset.covers

    @property
    def labels(self):
        return self.poset.labels

    def le(self, a, b):
        return self.poset.le(a, b)

    def join_of(self, a, b):
        return int(self.join[a, b])

    def meet_of(self, a, b):
        return int(self.meet[a, b])

    def join_all(self, elems):
        out = self.bottom
        for a in elems:
            out = int(self.join[out, a])
        return out

    def meet_all(self, elems):
        out = self.top
        for a in elems:
            out = int(self.meet[out, a])
        return out

    # -- irreducibles -----------------------------------------------------

    @cached_property
    def _join_irr(self):
        irr = {}
        for a in range(self.n):
            lows = self.poset.lower_covers(a)
            if len(lows) == 1:
                irr[a] = lows[0]
        return irr

    @cached_property
    def _meet_irr(self):
        irr = {}
        for a in range(self.n):
            ups = self.poset.upper_covers(a)
            if len(ups) == 1:
                irr[a] = ups[0]
        return irr

    def join_irreducibles(self):
        """Elements with exactly one lower cover, ascending by id."""
        return sorted(self._join_irr)

    def j_star(self, j):
        """The unique lower cover of a join-irreducible element."""
        return self._join_irr[j]

    def meet_irreducibles(self):
        return sorted(self._meet_irr)

    def m_star(self, m):
        """The unique upper cover of a meet-irreducible element."""
        return self._meet_irr[m]

    def atoms(self):
        return sorted(self.poset.upper_covers(self.bottom))

    def to_json(self):
        data = self.poset.to_json()
        data["join_irreducibles"] = self.join_irreducibles()
        try:
            lab = jsd_labeling(self)
        except NoUniqueMin:
            return data
        data["cover_labels"] = [lab.label(a, b) for a, b in self.poset.covers]
        return data

    def __repr__(self):
        return f"Lattice(n={self.n}, covers={len(self.covers)})"


def as_lattice(p):
    """Check that the poset is a lattice and build its tables.

    Raises NotALattice with a witness pair otherwise.
    """
    mins = p.minimal_elements()
    if len(mins) > 1:
        raise NotALattice(
            f"pair ({mins[0]}, {mins[1]}) has no lower bound", pair=(mins[0], mins[1])
        )
    maxs = p.maximal_elements()
    if len(maxs) > 1:
        raise NotALattice(
            f"pair ({maxs[0]}, {maxs[1]}) has no upper bound", pair=(maxs[0], maxs[1])
        )
    topo = p._topo
    join_irrs = [a for a in range(p.n) if len(p.lower_covers(a)) == 1]
    meet_irrs = [a for a in range(p.n) if len(p.upper_covers(a)) == 1]
    join = _bound_table(p.leq, topo, join_irrs)
    meet = _bound_table(np.ascontiguousarray(p.leq.T), list(reversed(topo)), meet_irrs)
    return Lattice(p, join, meet)


def is_extremal(lat):
    """Both irreducible counts equal the length of a longest chain."""
    k = lat.poset.length()
    return len(lat.join_irreducibles()) == k and len(lat.meet_irreducibles()) == k


def is_join_semidistributive(lat):
    """a v b = a v c implies a v (b ^ c) = a v b, checked over all triples."""
    join, meet = lat.join, lat.meet
    for a in range(lat.n):
        row = join[a]
        same = row[:, None] == row[None, :]
        folded = row[meet]
        if np.any(same & (folded != row[:, None])):
            return False
    return True


def is_meet_semidistributive(lat):
    join, meet = lat.join, lat.meet
    for a in range(lat.n):
        row = meet[a]
        same = row[:, None] == row[None, :]
        folded = row[join]
        if np.any(same & (folded != row[:, None])):
            return False
    return True


def is_semidistributive(lat):
    return is_join_semidistributive(lat) and is_meet_semidistributive(lat)


def is_spherical(lat):
    """Whether the atoms join to the top; requires semidistributivity.

    Cross-checks the Mobius invariant: in a semidistributive lattice it lies
    in {-1, 0, 1} and vanishes exactly when the atom join stays below the top.
    """
    if not is_semidistributive(lat):
        raise NotSemidistributive("sphericity test is only meaningful here for semidistributive lattices")
    result = lat.join_all(lat.atoms()) == lat.top
    mu = lat.poset.mobius(lat.bottom, lat.top)
    assert mu in (-1, 0, 1) and (mu != 0) == result
    return result


@dataclass(frozen=True)
class JsdLabeling:
    """Cover labeling of a join-semidistributive lattice.

    Each cover (a, b) gets the minimum element c with a v c = b; that
    minimum is always join-irreducible.
    """

    lattice: Lattice
    by_cover: dict

    def label(self, a, b):
        return self.by_cover[(a, b)]


def jsd_labeling(lat):
    cached = getattr(lat, "_jsd_cache", None)
    if cached is not None:
        return cached
    leq = lat.poset.leq
    by_cover = {}
    irr = set(lat.join_irreducibles())
    for a, b in lat.covers:
        cands = np.nonzero(lat.join[a] == b)[0]
        inner = leq[np.ix_(cands, cands)]
        mins = np.nonzero(inner.all(axis=1))[0]
        if len(mins) != 1:
            raise NoUniqueMin(f"cover ({a}, {b}) has no unique minimal join complement")
        c = int(cands[mins[0]])
        assert c in irr
        by_cover[(a, b)] = c
    out = JsdLabeling(lat, by_cover)
    lat._jsd_cache = out
    return out


def canonical_joinrep(lat, a):
    """Canonical join representation: the labels of the lower covers of a."""
    lab = jsd_labeling(lat)
    return frozenset(lab.label(b, a) for b in lat.poset.lower_covers(a))


@dataclass(frozen=True)
class CoreLabelSet:
    element: int
    nucleus: int
    labels: frozenset


def core_label_set(lat, a):
    """Nucleus (meet of a with all its lower covers) and the labels in between."""
    lab = jsd_labeling(lat)
    nucleus = lat.meet_all([a] + lat.poset.lower_covers(a))
    leq = lat.poset.leq
    labels = frozenset(
        lab.label(b, c) for b, c in lat.covers if leq[nucleus, b] and leq[c, a]
    )
    return CoreLabelSet(a, nucleus, labels)


def psi_map(lat):
    """Core label sets for every element, as a list indexed by element id."""
    return [core_label_set(lat, a).labels for a in range(lat.n)]


def has_intersection_property(lat):
    """Every pairwise intersection of core label sets is again one."""
    psi = psi_map(lat)
    seen = set(psi)
    for i, pa in enumerate(psi):
        for pb in psi[i + 1 :]:
            if pa & pb not in seen:
                return False
    return True


def build_bool(n):
    """The subset lattice of {1..n} on bitmask ids."""
    covers = []
    for s in range(1 << n):
        for i in range(n):
            if not s >> i & 1:
                covers.append((s, s | 1 << i))
    labels = [
        "{" + ",".join(str(i + 1) for i in range(n) if s >> i & 1) + "}" for s in range(1 << n)
    ]
    return as_lattice(FinitePoset.closure(covers, 1 << n, labels=labels))
