"""Finite posets on dense integer element ids.

Elements are the integers 0..n-1.  The order relation is stored as a dense
read-only boolean matrix ``leq`` (leq[a, b] iff a <= b), covers as a sorted
tuple of pairs.  Instances are immutable once built; every derived quantity
is computed from ``leq`` and ``covers`` alone, so the same object can be
shared freely.

Construction goes through :meth:`FinitePoset.closure` (reflexive-transitive
closure of a cover list, with cycle and cover validation) or through
:meth:`FinitePoset.from_leq` (transitive reduction of an explicit order
matrix).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import (
    CycleDetected,
    NotBounded,
    NotCover,
    NotGraded,
    NotInterval,
    TooLarge,
)


@dataclass(frozen=True)
class IntervalRef:
    """An interval [lo, hi] named by its endpoints' element ids."""

    lo: int
    hi: int


@dataclass(frozen=True)
class IsoCertificate:
    """Result of an isomorphism search.

    ``mapping[a]`` is the image of element a when ``verified`` is true;
    otherwise ``mapping`` is None.
    """

    mapping: tuple | None
    verified: bool

    def __bool__(self):
        return self.verified


def _toposort(m, up_adj, in_deg):
    order = []
    queue = deque(a for a in range(m) if in_deg[a] == 0)
    in_deg = list(in_deg)
    while queue:
        a = queue.popleft()
        order.append(a)
        for b in up_adj[a]:
            in_deg[b] -= 1
            if in_deg[b] == 0:
                queue.append(b)
    if len(order) != m:
        raise CycleDetected("cover relation contains a cycle")
    return order


def _transitive_reduction(leq):
    """Cover matrix of an order matrix: strict order minus two-step reachability."""
    lt = leq & ~np.eye(len(leq), dtype=bool)
    two_step = (lt.astype(np.float32) @ lt.astype(np.float32)) > 0.5
    return lt & ~two_step


def lagrange_eval(points, at):
    """Evaluate the interpolating polynomial through exact ``points`` at ``at``.

    points: list of (x, y) pairs with distinct x; all arithmetic in Fraction.
    """
    at = Fraction(at)
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        xi = Fraction(xi)
        term = Fraction(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term *= (at - Fraction(xj)) / (xi - Fraction(xj))
        total += term
    return total


class FinitePoset:
    """A finite partial order with dense integer ids and decoded labels."""

    def __init__(self, leq, covers, labels=None):
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        assert leq.shape == (n, n)
        leq.setflags(write=False)
        self.n = n
        self.leq = leq
        self.covers = tuple(sorted((int(a), int(b)) for a, b in covers))
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        assert len(self.labels) == n

    # -- construction ---------------------------------------------------

    @classmethod
    def closure(cls, covers, m, labels=None):
        """Build the poset generated by a list of cover pairs on m elements.

        Raises CycleDetected if the pairs are cyclic and NotCover if some
        input pair (a, b) is not a cover of the order it generates (i.e. an
        element sits strictly between a and b).
        """
        pairs = set()
        for a, b in covers:
            a, b = int(a), int(b)
            if not (0 <= a < m and 0 <= b < m):
                raise ValueError(f"element id out of range: ({a}, {b})")
            if a == b:
                raise CycleDetected(f"loop at element {a}")
            pairs.add((a, b))
        up_adj = [[] for _ in range(m)]
        in_deg = [0] * m
        for a, b in pairs:
            up_adj[a].append(b)
            in_deg[b] += 1
        order = _toposort(m, up_adj, in_deg)
        leq = np.zeros((m, m), dtype=bool)
        for a in reversed(order):
            row = leq[a]
            row[a] = True
            for b in up_adj[a]:
                np.logical_or(row, leq[b], out=row)
        for a, b in pairs:
            between = int(np.count_nonzero(leq[a] & leq[:, b]))
            if between != 2:
                raise NotCover(f"({a}, {b}) is not a cover: interval has {between} elements")
        return cls(leq, pairs, labels)

    @classmethod
    def from_leq(cls, leq, labels=None):
        """Build a poset from an explicit order matrix (covers are recomputed)."""
        leq = np.asarray(leq, dtype=bool)
        n = len(leq)
        if not leq.diagonal().all():
            raise ValueError("order matrix is not reflexive")
        if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
            raise CycleDetected("order matrix is not antisymmetric")
        closed = (leq.astype(np.float32) @ leq.astype(np.float32)) > 0.5
        if np.any(closed & ~leq):
            raise ValueError("order matrix is not transitive")
        red = _transitive_reduction(leq)
        covers = [(int(a), int(b)) for a, b in zip(*np.nonzero(red))]
        return cls(leq, covers, labels)

    # -- basic queries ---------------------------------------------------

    def le(self, a, b):
        return bool(self.leq[a, b])

    def label(self, a):
        return self.labels[a]

    @cached_property
    def _up_adj(self):
        adj = [[] for _ in range(self.n)]
        for a, b in self.covers:
            adj[a].append(b)
        return adj

    @cached_property
    def _down_adj(self):
        adj = [[] for _ in range(self.n)]
        for a, b in self.covers:
            adj[b].append(a)
        return adj

    def upper_covers(self, a):
        return list(self._up_adj[a])

    def lower_covers(self, a):
        return list(self._down_adj[a])

    @cached_property
    def _topo(self):
        in_deg = [len(self._down_adj[a]) for a in range(self.n)]
        return _toposort(self.n, self._up_adj, in_deg)

    def minimal_elements(self):
        return [a for a in range(self.n) if not self._down_adj[a]]

    def maximal_elements(self):
        return [a for a in range(self.n) if not self._up_adj[a]]

    def is_bounded(self):
        return len(self.minimal_elements()) == 1 and len(self.maximal_elements()) == 1

    def bottom(self):
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise NotBounded(f"poset has {len(mins)} minimal elements")
        return mins[0]

    def top(self):
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise NotBounded(f"poset has {len(maxs)} maximal elements")
        return maxs[0]

    @cached_property
    def heights(self):
        """heights[a] = longest chain ending at a, counted in cover steps."""
        h = [0] * self.n
        for a in self._topo:
            for b in self._up_adj[a]:
                h[b] = max(h[b], h[a] + 1)
        return h

    def length(self):
        """Longest chain length of the whole poset (cover steps)."""
        return max(self.heights, default=0)

    def interval(self, a, b):
        """Elements c with a <= c <= b, ascending by id."""
        return [int(c) for c in np.nonzero(self.leq[a] & self.leq[:, b])[0]]

    def dual(self):
        return FinitePoset(self.leq.T.copy(), [(b, a) for a, b in self.covers], self.labels)

    def induced(self, elements):
        """Subposet on the given elements (ids renumbered in the given order)."""
        idx = list(elements)
        sub = self.leq[np.ix_(idx, idx)]
        return FinitePoset.from_leq(sub, labels=[self.labels[a] for a in idx])

    # -- Mobius function and zeta polynomial -----------------------------

    def mobius(self, a, b):
        """Mobius function mu(a, b); 0 when a and b are incomparable."""
        if a == b:
            return 1
        if not self.leq[a, b]:
            return 0
        memo = self._mobius_memo
        key = (a, b)
        if key in memo:
            return memo[key]
        # Resolve the whole interval bottom-up so recursion depth stays flat.
        chain = [c for c in self.interval(a, b)]
        chain.sort(key=lambda c: self.heights[c], reverse=True)
        for c in chain:
            ck = (c, b)
            if ck in memo:
                continue
            if c == b:
                memo[ck] = 1
                continue
            total = 0
            for d in self.interval(c, b):
                if d != c:
                    total += memo[(d, b)]
            memo[ck] = -total
        return memo[key]

    @cached_property
    def _mobius_memo(self):
        return {}

    def zeta(self, q):
        """Number of weakly increasing (q-1)-tuples; zeta(1) = 1, zeta(2) = n."""
        if q < 1:
            raise ValueError("zeta is a counting function only for q >= 1")
        k = q - 1
        if k == 0:
            return 1
        counts = [1] * self.n
        for _ in range(k - 1):
            nxt = [0] * self.n
            for b in range(self.n):
                below = np.nonzero(self.leq[:, b])[0]
                nxt[b] = sum(counts[int(a)] for a in below)
            counts = nxt
        return sum(counts)

    def zeta_points(self, extra=0):
        """Exact samples (q, zeta(q)) for q = 1 .. length+2+extra."""
        top_q = self.length() + 2 + extra
        return [(q, self.zeta(q)) for q in range(1, top_q + 1)]

    def mobius_invariant_via_zeta(self):
        """Extrapolate the zeta polynomial to -1 (equals mu(bottom, top))."""
        self.bottom(), self.top()
        value = lagrange_eval(self.zeta_points(), -1)
        assert value.denominator == 1
        return int(value)

    # -- grading ----------------------------------------------------------

    def rank_vector(self):
        """Ranks when graded (all maximal chains share one length); NotGraded otherwise."""
        h = self.heights
        for a, b in self.covers:
            if h[b] != h[a] + 1:
                raise NotGraded(f"cover ({a}, {b}) skips a rank")
        tops = {h[a] for a in self.maximal_elements()}
        if len(tops) > 1:
            raise NotGraded(f"maximal elements at distinct ranks {sorted(tops)}")
        return list(h)

    def rank_profile(self):
        """Count of elements of each rank, index 0 = minimal rank."""
        ranks = self.rank_vector()
        profile = [0] * (max(ranks) + 1 if ranks else 1)
        for r in ranks:
            profile[r] += 1
        return profile

    # -- chains and antichains --------------------------------------------

    def count_maximal_chains(self):
        """Number of maximal chains from bottom to top (poset must be bounded)."""
        bot, top = self.bottom(), self.top()
        paths = [0] * self.n
        paths[bot] = 1
        for a in self._topo:
            for b in self._up_adj[a]:
                paths[b] += paths[a]
        return paths[top]

    def antichains(self):
        """All antichains (as frozensets), the empty one included."""
        incomparable = ~(self.leq | self.leq.T)
        out = []
        chosen = []

        def grow(start):
            out.append(frozenset(chosen))
            for a in range(start, self.n):
                if all(incomparable[a, c] for c in chosen):
                    chosen.append(a)
                    grow(a + 1)
                    chosen.pop()

        grow(0)
        return out

    # -- export ------------------------------------------------------------

    def to_json(self):
        return {
            "n_elements": self.n,
            "covers": [[a, b] for a, b in self.covers],
            "labels": [str(lbl) for lbl in self.labels],
        }

    def to_dot(self, name="poset"):
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for a in range(self.n):
            text = str(self.labels[a]).replace('"', '\\"')
            lines.append(f'  {a} [label="{text}"];')
        for a, b in self.covers:
            lines.append(f"  {a} -> {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"FinitePoset(n={self.n}, covers={len(self.covers)})"


def doubling(p, b):
    """Double the poset along the interval ``b`` (an IntervalRef or (lo, hi) pair).

    The result lives on pairs (a, 0) for a in the down-set of hi and (a, 1)
    for a outside it or inside the interval itself, ordered componentwise.
    Labels become (old label, copy). The input should be a lattice for the
    output to be one.
    """
    if not isinstance(b, IntervalRef):
        b = IntervalRef(*b)
    if not p.leq[b.lo, b.hi]:
        raise NotInterval(f"({b.lo}, {b.hi}) is not an interval: lo is not below hi")
    members = set(p.interval(b.lo, b.hi))
    ideal = {int(a) for a in np.nonzero(p.leq[:, b.hi])[0]}
    ground = [(a, 0) for a in sorted(ideal)]
    ground += [(a, 1) for a in sorted((set(range(p.n)) - ideal) | members)]
    ids = np.array([a for a, _ in ground])
    copies = np.array([c for _, c in ground])
    leq = p.leq[np.ix_(ids, ids)] & (copies[:, None] <= copies[None, :])
    labels = [(p.labels[a], c) for a, c in ground]
    return FinitePoset.from_leq(leq, labels=labels)


def _color_refine(p):
    colors = [(p.heights[a], len(p._up_adj[a]), len(p._down_adj[a])) for a in range(p.n)]
    palette = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [palette[c] for c in colors]
    while True:
        signatures = [
            (
                colors[a],
                tuple(sorted(colors[b] for b in p._up_adj[a])),
                tuple(sorted(colors[b] for b in p._down_adj[a])),
            )
            for a in range(p.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(signatures)))}
        refined = [palette[s] for s in signatures]
        if refined == colors:
            return colors
        colors = refined


def are_isomorphic(p1, p2, max_elements=500):
    """Search for a poset isomorphism; returns an IsoCertificate.

    Cover-preserving-and-reflecting bijections are exactly the order
    isomorphisms, so matching is done on the cover digraph after a color
    refinement pass. Raises TooLarge beyond ``max_elements``.
    """
    if max(p1.n, p2.n) > max_elements:
        raise TooLarge(f"isomorphism search capped at {max_elements} elements")
    fail = IsoCertificate(None, False)
    if p1.n != p2.n or len(p1.covers) != len(p2.covers):
        return fail
    c1, c2 = _color_refine(p1), _color_refine(p2)
    if sorted(c1) != sorted(c2):
        return fail
    by_color = {}
    for x, c in enumerate(c2):
        by_color.setdefault(c, []).append(x)

    n = p1.n
    mapping = [-1] * n
    inverse = [-1] * n
    up1 = [set(adj) for adj in p1._up_adj]
    down1 = [set(adj) for adj in p1._down_adj]
    up2 = [set(adj) for adj in p2._up_adj]
    down2 = [set(adj) for adj in p2._down_adj]

    def pick_next():
        best, best_key = -1, None
        for a in range(n):
            if mapping[a] >= 0:
                continue
            anchored = sum(1 for b in up1[a] | down1[a] if mapping[b] >= 0)
            key = (-anchored, len(by_color[c1[a]]), a)
            if best_key is None or key < best_key:
                best, best_key = a, key
        return best

    def consistent(a, x):
        # assigned cover-neighbors of a must land on cover-neighbors of x ...
        for b in up1[a]:
            if mapping[b] >= 0 and mapping[b] not in up2[x]:
                return False
        for b in down1[a]:
            if mapping[b] >= 0 and mapping[b] not in down2[x]:
                return False
        # ... and cover-neighbors of x that are already images must come from
        # cover-neighbors of a (reflection)
        for y in up2[x]:
            if inverse[y] >= 0 and inverse[y] not in up1[a]:
                return False
        for y in down2[x]:
            if inverse[y] >= 0 and inverse[y] not in down1[a]:
                return False
        return True

    def extend(depth):
        if depth == n:
            return True
        a = pick_next()
        for x in by_color[c1[a]]:
            if inverse[x] >= 0 or not consistent(a, x):
                continue
            mapping[a], inverse[x] = x, a
            if extend(depth + 1):
                return True
            mapping[a], inverse[x] = -1, -1
        return False

    if not extend(0):
        return fail
    perm = tuple(mapping)
    # verification pass: covers map onto covers bijectively
    image = {(perm[a], perm[b]) for a, b in p1.covers}
    if image != set(p2.covers):
        return fail
    return IsoCertificate(perm, True)
