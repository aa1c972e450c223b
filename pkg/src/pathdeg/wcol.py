"""Weak reachability, weak coloring numbers, and the linear order built
from an exact-ear reduction certificate.

A vertex u is weakly x-reachable from v under an order when u <= v in the
order and some u-v path of length at most x keeps all its internal
vertices above u.  The order constructed by `weak_order` places each
deleted ear's midpoint before everything known so far and the ear's
interior after everything, which caps |WReach_x| by the target function
`wcol_target` for all x up to r whenever the ear length is 2q with
q >= r+1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .graph import Graph
from .reduction import EAR, NotPathDegenerate, greedy_reduce


@dataclass(frozen=True)
class LinearOrder:
    """Bijection vertex -> rank 0..n-1."""

    ranks: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq) -> "LinearOrder":
        seq = list(seq)
        n = len(seq)
        if sorted(seq) != list(range(n)):
            raise ValueError("order must list each vertex 0..n-1 exactly once")
        ranks = [0] * n
        for pos, v in enumerate(seq):
            ranks[v] = pos
        return cls(ranks=tuple(ranks))

    @property
    def sequence(self) -> tuple[int, ...]:
        out = [0] * len(self.ranks)
        for v, pos in enumerate(self.ranks):
            out[pos] = v
        return tuple(out)

    def __len__(self) -> int:
        return len(self.ranks)


@dataclass(frozen=True)
class WcolBoundParams:
    """Radius r and half ear length q, q >= r+1; the reduction parameter
    is p = 2q."""

    r: int
    q: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.q < self.r + 1:
            raise ValueError("q must be at least r+1")

    @property
    def p(self) -> int:
        return 2 * self.q


def wreach_all(g: Graph, pi: LinearOrder, x: int) -> list[set[int]]:
    """WReach_x sets for every vertex: one rank-restricted BFS per source
    u covers all targets v above it."""
    if x < 0:
        raise ValueError("x must be >= 0")
    ranks = pi.ranks
    reach: list[set[int]] = [{v} for v in range(g.n)]
    for u in range(g.n):
        ru = ranks[u]
        dist = {u: 0}
        frontier = [u]
        d = 0
        while frontier and d < x:
            d += 1
            nxt = []
            for a in frontier:
                for b in g.adj[a]:
                    if b not in dist and ranks[b] > ru:
                        dist[b] = d
                        nxt.append(b)
            frontier = nxt
        for v in dist:
            if v != u:
                reach[v].add(u)
    return reach


def wreach_set(g: Graph, pi: LinearOrder, x: int, v: int) -> set[int]:
    """Vertices u <= v (under pi) joined to v by a path of length <= x
    whose internal vertices all lie above u; always contains v."""
    return wreach_all(g, pi, x)[v]


def wcol_under_order(g: Graph, pi: LinearOrder, r: int) -> int:
    if g.n == 0:
        return 0
    return max(len(s) for s in wreach_all(g, pi, r))


def wcol_exact(g: Graph, r: int, max_n: int = 9) -> int:
    """Exact weak r-coloring number by brute force over all vertex orders;
    guarded against factorial blowup."""
    if g.n > max_n:
        raise ValueError(f"brute force limited to {max_n} vertices")
    if g.n == 0:
        return 0
    best = g.n + 1
    for seq in permutations(range(g.n)):
        pi = LinearOrder.from_sequence(seq)
        val = wcol_under_order(g, pi, r)
        if val < best:
            best = val
            if best == 1:
                break
    return best


def wcol_target(x: int, params: WcolBoundParams) -> float:
    """Bound on |WReach_x| along the constructed order: 1 at x=0, then
    x+2 (+ log2((q-1)/(q-x)) when q < 2r)."""
    if x < 0 or x > params.r:
        raise ValueError("x must satisfy 0 <= x <= r")
    if x == 0:
        return 1.0
    if params.q < 2 * params.r:
        return x + 2 + math.log2((params.q - 1) / (params.q - x))
    return float(x + 2)


def wreach_bound_ok(size: int, x: int, params: WcolBoundParams) -> bool:
    """Exact integer test of size <= wcol_target(x): the log2 comparison
    is done by exponentiation, no floating point at the boundary."""
    if x == 0:
        return size <= 1
    t = size - (x + 2)
    if params.q >= 2 * params.r:
        return t <= 0
    if t <= 0:
        return True
    # size <= x+2+log2((q-1)/(q-x))  <=>  (q-x) * 2^t <= q-1
    return (params.q - x) * (1 << t) <= params.q - 1


def weak_order(g: Graph, params: WcolBoundParams) -> LinearOrder:
    """Linear order certifying |WReach_x| <= wcol_target(x) for all
    0 <= x <= r.  Requires g to be 2q-path degenerate; the certificate is
    computed internally with ears of length exactly 2q."""
    p = params.p
    cert, residual = greedy_reduce(g, p, exact_ears=True)
    if residual.n:
        raise NotPathDegenerate(f"graph is not {p}-path degenerate "
                                f"({residual.n} vertices stay irreducible)")
    q = params.q
    seq: list[int] = []
    for step in reversed(cert.steps):
        if step.kind == EAR:
            ear = step.vertices           # length 2q: a_0 .. a_2q
            w = ear[q]
            side1 = list(ear[1:q])        # interiors from the first endpoint
            side2 = [ear[2 * q - z] for z in range(1, q)]  # from the second
            seq = [w] + seq + side1 + side2
        else:
            seq.extend(step.vertices)
    return LinearOrder.from_sequence(seq)


def wcol_order_bound(params: WcolBoundParams) -> int:
    """Integer weak-coloring bound achieved by the constructed order:
    r+2+floor(log2((q-1)/(q-r))) when r < q < 2r, else r+2."""
    r, q = params.r, params.q
    if q >= 2 * r:
        return r + 2
    return r + 2 + math.floor(math.log2((q - 1) / (q - r)))
