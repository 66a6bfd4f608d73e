"""Galois graphs of extremal lattices and the reconstruction going back.

An extremal lattice of length k has exactly k join-irreducibles and k
meet-irreducibles, and any maximal-length chain meets one new irreducible of
each kind at every step.  Pairing them up gives a directed graph on k
vertices; the lattice of maximal orthogonal pairs of that graph recovers the
lattice, which the tests exercise in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ChainOrderingFailed, NotALattice, NotExtremal, SizeBound
from .lattice import Lattice, as_lattice, is_extremal
from .poset import FinitePoset

MAX_GRAPH = 22


class DiGraph:
    """Directed graph on vertices 0..k-1 with display labels."""

    def __init__(self, k, edges, labels=None):
        self.k = int(k)
        self.edges = frozenset((int(s), int(t)) for s, t in edges)
        for s, t in self.edges:
            assert 0 <= s < self.k and 0 <= t < self.k and s != t
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.k)]
        assert len(self.labels) == self.k

    def out_neighbors(self, s):
        return sorted(t for a, t in self.edges if a == s)

    def in_neighbors(self, t):
        return sorted(s for s, b in self.edges if b == t)

    def edge_labels(self):
        return {(self.labels[s], self.labels[t]) for s, t in self.edges}

    def to_json(self):
        return {
            "vertices": [str(lbl) for lbl in self.labels],
            "edges": sorted([s, t] for s, t in self.edges),
        }

    def to_dot(self, name="digraph_out"):
        lines = [f"digraph {name} {{"]
        for a in range(self.k):
            text = str(self.labels[a]).replace('"', '\\"')
            lines.append(f'  {a} [label="{text}"];')
        for s, t in sorted(self.edges):
            lines.append(f"  {s} -> {t};")
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self):
        return f"DiGraph(k={self.k}, edges={len(self.edges)})"


@dataclass
class GaloisGraph:
    """Galois graph plus the chain data that produced it.

    Vertex s of ``graph`` stands for the pair (joins[s], meets[s]): the
    join-irreducible first seen at chain step s+1 and the meet-irreducible
    last seen at that same step.
    """

    graph: DiGraph
    chain: tuple
    joins: tuple
    meets: tuple


def _longest_chain(poset):
    """Lexicographically least maximum-length chain from bottom to top."""
    up_height = [0] * poset.n
    for a in reversed(poset._topo):
        ups = poset.upper_covers(a)
        up_height[a] = 1 + max(up_height[b] for b in ups) if ups else 0
    chain = [poset.bottom()]
    while chain[-1] != poset.top():
        here = chain[-1]
        nxt = min(b for b in poset.upper_covers(here) if up_height[b] == up_height[here] - 1)
        chain.append(nxt)
    return tuple(chain)


def galois_graph(lat):
    """Galois graph of an extremal lattice, built from one longest chain."""
    if not is_extremal(lat):
        raise NotExtremal("lattice is not extremal: irreducible counts differ from length")
    poset = lat.poset
    chain = _longest_chain(poset)
    k = len(chain) - 1
    leq = poset.leq
    join_irr = lat.join_irreducibles()
    meet_irr = lat.meet_irreducibles()
    joins, meets = [], []
    for s in range(1, k + 1):
        fresh_j = [j for j in join_irr if leq[j, chain[s]] and not leq[j, chain[s - 1]]]
        fresh_m = [m for m in meet_irr if leq[chain[s - 1], m] and not leq[chain[s], m]]
        if len(fresh_j) != 1 or len(fresh_m) != 1:
            raise ChainOrderingFailed(
                f"chain step {s} exposes {len(fresh_j)} join- and "
                f"{len(fresh_m)} meet-irreducibles instead of one each"
            )
        joins.append(fresh_j[0])
        meets.append(fresh_m[0])
    edges = [
        (s, t)
        for s in range(k)
        for t in range(k)
        if s != t and not leq[joins[s], meets[t]]
    ]
    labels = [str(poset.labels[j]) for j in joins]
    return GaloisGraph(DiGraph(k, edges, labels), chain, tuple(joins), tuple(meets))


def galois_graph_by_joins(lat):
    """Chain-free form: j -> j' when j' lies below j'_* v j.

    Agrees with the chain construction on congruence-uniform lattices, which
    gives the tests a second, independent route to the same graph.
    """
    if not is_extremal(lat):
        raise NotExtremal("lattice is not extremal: irreducible counts differ from length")
    join_irr = lat.join_irreducibles()
    leq = lat.poset.leq
    edges = []
    for s, j in enumerate(join_irr):
        for t, j2 in enumerate(join_irr):
            if j != j2 and leq[j2, lat.join[lat.j_star(j2), j]]:
                edges.append((s, t))
    labels = [str(lat.poset.labels[j]) for j in join_irr]
    return DiGraph(len(join_irr), edges, labels)


def hoch_galois_characterization(n):
    """The triword lattice's Galois graph written down directly.

    Vertices a1..an then b2..bn; edges b_t -> a_t and a_t -> a_t' for t > t'.
    """
    labels = [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(2, n + 1)]
    pos = {lbl: i for i, lbl in enumerate(labels)}
    edges = [(pos[f"b{t}"], pos[f"a{t}"]) for t in range(2, n + 1)]
    edges += [
        (pos[f"a{t}"], pos[f"a{u}"]) for t in range(1, n + 1) for u in range(1, t)
    ]
    return DiGraph(len(labels), edges, labels)


def _set_label(labels, mask):
    names = [str(labels[i]) for i in range(len(labels)) if mask >> i & 1]
    return "{" + ",".join(names) + "}"


@dataclass
class OrthoPairLattice:
    """Lattice of maximal orthogonal pairs, with the pair behind each id."""

    lattice: Lattice
    pairs: tuple
    graph: DiGraph

    def __getattr__(self, name):
        return getattr(self.lattice, name)

    def pair_sets(self, a):
        mask_a, mask_b = self.pairs[a]
        k = self.graph.k
        return (
            frozenset(i for i in range(k) if mask_a >> i & 1),
            frozenset(i for i in range(k) if mask_b >> i & 1),
        )


def max_ortho_pairs_lattice(g):
    """All maximal pairs (A, B) with no edge from A into B, ordered by A.

    A pair is orthogonal when no edge leaves A and lands in B (A and B
    disjoint), and maximal when neither side can grow.  These are exactly
    the fixed points of the antitone maps A -> {t : no in-edge from A} and
    B -> {s : no out-edge into B}, so seeds of one side enumerate them all.
    """
    k = g.k
    if k > MAX_GRAPH:
        raise SizeBound(f"orthogonal-pair enumeration capped at {MAX_GRAPH} vertices, got {k}")
    out_mask = np.zeros(k, dtype=np.int64)
    in_mask = np.zeros(k, dtype=np.int64)
    for s, t in g.edges:
        out_mask[s] |= 1 << t
        in_mask[t] |= 1 << s
    seeds = np.arange(1 << k, dtype=np.int64)
    best_a = np.zeros_like(seeds)
    for s in range(k):
        keep = (seeds >> s & 1 == 0) & (seeds & int(out_mask[s]) == 0)
        best_a |= keep.astype(np.int64) << s
    back_b = np.zeros_like(seeds)
    for t in range(k):
        keep = (best_a >> t & 1 == 0) & (best_a & int(in_mask[t]) == 0)
        back_b |= keep.astype(np.int64) << t
    fixed = np.nonzero(back_b == seeds)[0]
    pairs = sorted(
        ((int(best_a[b]), int(b)) for b in fixed),
        key=lambda ab: (bin(ab[0]).count("1"), ab[0]),
    )
    a_vals = np.array([a for a, _ in pairs], dtype=np.int64)
    b_vals = np.array([b for _, b in pairs], dtype=np.int64)
    leq = (a_vals[:, None] & ~a_vals[None, :]) == 0
    labels = [
        f"({_set_label(g.labels, a)},{_set_label(g.labels, b)})" for a, b in pairs
    ]
    lat = as_lattice(FinitePoset.from_leq(leq, labels=labels))
    joined_b = b_vals[lat.join]
    if not (joined_b == (b_vals[:, None] & b_vals[None, :])).all():
        raise NotALattice("join of orthogonal pairs is not intersection on the B side")
    met_a = a_vals[lat.meet]
    if not (met_a == (a_vals[:, None] & a_vals[None, :])).all():
        raise NotALattice("meet of orthogonal pairs is not intersection on the A side")
    return OrthoPairLattice(lat, tuple(pairs), g)
