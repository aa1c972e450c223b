"""The ear-reduction engine.

A step removes an isolated vertex, a degree-1 vertex, or the interior of a
strict ear of length at least p (exactly p in exact-ear mode).  A graph is
p-path degenerate when some sequence of steps empties it; since any
subgraph of a degenerate graph is degenerate, greedy maximal reduction
decides the property, and the order-insensitive backtracking oracle here
exists to keep that assumption honest.

Certificates are replayable: each step records the vertices it deletes,
and an independent checker validates applicability step by step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, induced_subgraph, from_edges

ISOLATED = "I"
LEAF = "L"
EAR = "E"


class SearchBudgetExceeded(RuntimeError):
    """Backtracking oracle ran out of its state budget (not a verdict)."""


class NotPathDegenerate(ValueError):
    """An operation required a p-path degenerate input."""


class CertificateError(ValueError):
    """A reduction certificate failed to replay."""


@dataclass(frozen=True)
class ReductionStep:
    kind: str                    # ISOLATED, LEAF or EAR
    vertices: tuple[int, ...]    # one vertex, or the full ear sequence

    @property
    def deleted(self) -> tuple[int, ...]:
        if self.kind == EAR:
            return self.vertices[1:-1]
        return self.vertices

    def to_line(self) -> str:
        return f"{self.kind} {' '.join(str(v) for v in self.vertices)}"


@dataclass(frozen=True)
class ReductionSequence:
    p: int
    steps: tuple[ReductionStep, ...]
    exact_ears: bool = False

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class DegeneracyVerdict:
    degenerate: bool
    certificate: ReductionSequence | None = None
    witness: Graph | None = None
    witness_vertices: tuple[int, ...] = field(default=())


def _work_adj(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.adj[v]) for v in range(g.n)}


def _delete_vertices(adj: dict[int, set[int]], vs) -> None:
    for v in vs:
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]


def _ear_key(path: list[int]) -> tuple[int, ...]:
    if path[0] > path[-1]:
        path = list(reversed(path))
    return (path[0], path[-1], *path[1:-1])


def _best_ear(adj: dict[int, set[int]], p: int, exact: bool) -> tuple[int, ...] | None:
    """Deterministically smallest applicable ear: walk out of every
    directed edge through degree-2 vertices; in exact mode take the prefix
    of length exactly p, otherwise the maximal prefix (if long enough).
    Candidates are compared by (endpoint pair, interior)."""
    best_key = None
    best_path = None
    for a0 in adj:
        for a1 in adj[a0]:
            path = [a0, a1]
            while True:
                last = path[-1]
                if exact and len(path) - 1 == p:
                    break
                if len(adj[last]) != 2:
                    break
                nxt = next(iter(adj[last] - {path[-2]}))
                if nxt == a0:
                    break
                path.append(nxt)
            length = len(path) - 1
            if length < p or (exact and length != p):
                continue
            key = _ear_key(path)
            if best_key is None or key < best_key:
                best_key = key
                best_path = (key[0], *key[2:], key[1])
    return best_path


def _find_step(adj: dict[int, set[int]], p: int, exact: bool) -> ReductionStep | None:
    isolated = [v for v, nb in adj.items() if not nb]
    if isolated:
        return ReductionStep(ISOLATED, (min(isolated),))
    leaves = [v for v, nb in adj.items() if len(nb) == 1]
    if leaves:
        return ReductionStep(LEAF, (min(leaves),))
    ear = _best_ear(adj, p, exact)
    if ear is not None:
        return ReductionStep(EAR, ear)
    return None


def find_p_reduction(g: Graph, p: int, exact_ears: bool = False) -> ReductionStep | None:
    """Some applicable step, or None iff g is p-irreducible.  The choice
    is deterministic: isolated < leaf < ear, ties to the smallest vertex,
    ears to the smallest (endpoint pair, interior)."""
    if p < 2:
        raise ValueError("p must be >= 2")
    return _find_step(_work_adj(g), p, exact_ears)


def _run_greedy(adj: dict[int, set[int]], p: int, exact: bool) -> list[ReductionStep]:
    steps = []
    while adj:
        step = _find_step(adj, p, exact)
        if step is None:
            break
        _delete_vertices(adj, step.deleted)
        steps.append(step)
    return steps


def greedy_reduce(g: Graph, p: int, exact_ears: bool = False):
    """Apply steps until the graph is p-irreducible.

    Returns (prefix, residual): the recorded ReductionSequence and the
    residual graph, relabeled over its surviving vertices in increasing
    original-id order.  The residual is empty exactly when g is p-path
    degenerate.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    adj = _work_adj(g)
    steps = _run_greedy(adj, p, exact_ears)
    residual = induced_subgraph(g, adj.keys())
    return ReductionSequence(p=p, steps=tuple(steps), exact_ears=exact_ears), residual


def is_p_path_degenerate(g: Graph, p: int, exact_ears: bool = False) -> DegeneracyVerdict:
    """Decide p-path degeneracy with a certificate either way: a replayable
    reduction sequence, or a p-irreducible witness subgraph."""
    if p < 2:
        raise ValueError("p must be >= 2")
    adj = _work_adj(g)
    steps = _run_greedy(adj, p, exact_ears)
    if not adj:
        return DegeneracyVerdict(
            degenerate=True,
            certificate=ReductionSequence(p=p, steps=tuple(steps), exact_ears=exact_ears),
        )
    survivors = tuple(sorted(adj))
    return DegeneracyVerdict(
        degenerate=False,
        witness=induced_subgraph(g, survivors),
        witness_vertices=survivors,
    )


def _ear_interiors(adj: dict[int, set[int]], p: int) -> set[frozenset[int]]:
    """Interior sets of every strict ear of length >= p (all sub-ear
    lengths), for the exhaustive oracle."""
    out: set[frozenset[int]] = set()
    for a0 in adj:
        for a1 in adj[a0]:
            path = [a0, a1]
            while True:
                if len(path) - 1 >= p:
                    out.add(frozenset(path[1:-1]))
                last = path[-1]
                if len(adj[last]) != 2:
                    break
                nxt = next(iter(adj[last] - {path[-2]}))
                if nxt == a0:
                    break
                path.append(nxt)
    return out


def backtrack_degenerate(g: Graph, p: int, budget: int = 500_000) -> bool:
    """Ground truth by exploring all reduction orders: True iff SOME
    sequence of p-reductions empties g.  Memoized on the alive vertex set;
    raises SearchBudgetExceeded when the state budget runs out."""
    if p < 2:
        raise ValueError("p must be >= 2")
    memo: dict[frozenset[int], bool] = {}
    explored = 0

    def solve(alive: frozenset[int]) -> bool:
        nonlocal explored
        if not alive:
            return True
        cached = memo.get(alive)
        if cached is not None:
            return cached
        explored += 1
        if explored > budget:
            raise SearchBudgetExceeded(f"more than {budget} states explored")
        adj = {v: {w for w in g.adj[v] if w in alive} for v in alive}
        deletions: set[frozenset[int]] = set()
        for v, nb in adj.items():
            if len(nb) <= 1:
                deletions.add(frozenset((v,)))
        deletions |= _ear_interiors(adj, p)
        result = any(solve(alive - d) for d in sorted(deletions, key=lambda s: (-len(s), sorted(s))))
        memo[alive] = result
        return result

    return solve(frozenset(range(g.n)))


def replay_certificate(g: Graph, cert: ReductionSequence) -> None:
    """Independent checker: validate every step against the evolving graph
    and require the final graph to be empty.  Raises CertificateError."""
    adj = _work_adj(g)
    for idx, step in enumerate(cert.steps):
        where = f"step {idx + 1} ({step.to_line()})"
        if step.kind == ISOLATED:
            (v,) = step.vertices
            if v not in adj:
                raise CertificateError(f"{where}: vertex {v} not present")
            if adj[v]:
                raise CertificateError(f"{where}: vertex {v} is not isolated")
            _delete_vertices(adj, (v,))
        elif step.kind == LEAF:
            (v,) = step.vertices
            if v not in adj:
                raise CertificateError(f"{where}: vertex {v} not present")
            if len(adj[v]) != 1:
                raise CertificateError(f"{where}: vertex {v} has degree {len(adj[v])}, not 1")
            _delete_vertices(adj, (v,))
        elif step.kind == EAR:
            seq = step.vertices
            length = len(seq) - 1
            if length < cert.p:
                raise CertificateError(f"{where}: ear length {length} < p={cert.p}")
            if cert.exact_ears and length != cert.p:
                raise CertificateError(f"{where}: ear length {length} != p={cert.p}")
            if seq[0] == seq[-1]:
                raise CertificateError(f"{where}: ear endpoints coincide")
            if len(set(seq)) != len(seq):
                raise CertificateError(f"{where}: repeated vertex on ear")
            for v in seq:
                if v not in adj:
                    raise CertificateError(f"{where}: vertex {v} not present")
            for a, b in zip(seq, seq[1:]):
                if b not in adj[a]:
                    raise CertificateError(f"{where}: {a} and {b} not adjacent")
            for v in seq[1:-1]:
                if len(adj[v]) != 2:
                    raise CertificateError(f"{where}: interior vertex {v} has degree {len(adj[v])}")
            _delete_vertices(adj, seq[1:-1])
        else:
            raise CertificateError(f"{where}: unknown step kind {step.kind!r}")
    if adj:
        raise CertificateError(f"{len(adj)} vertices remain after replaying all steps")


def certificate_replays(g: Graph, cert: ReductionSequence) -> bool:
    try:
        replay_certificate(g, cert)
    except CertificateError:
        return False
    return True


def minimal_irreducible_witness_edges(g: Graph, p: int) -> frozenset[tuple[int, int]]:
    """Edge set (in g's labels) of an edge-minimal non-degenerate subgraph:
    deleting any one of its edges leaves a p-path degenerate graph."""
    if p < 2:
        raise ValueError("p must be >= 2")

    def degenerate(edge_set) -> bool:
        if not edge_set:
            return True
        h = from_edges(edge_set)
        return is_p_path_degenerate(h, p).degenerate

    if degenerate(g.edges):
        raise NotPathDegenerate("input graph is p-path degenerate; no witness exists")
    current = set(g.edges)
    improved = True
    while improved:
        improved = False
        for e in sorted(current):
            trial = current - {e}
            if not degenerate(trial):
                current = trial
                improved = True
                break
    return frozenset(current)


def minimal_irreducible_witness(g: Graph, p: int) -> Graph:
    """A p-irreducible subgraph of g such that removing any edge makes the
    remainder p-path degenerate.  Connected, minimum degree >= 2,
    relabeled over its incident vertices."""
    return from_edges(minimal_irreducible_witness_edges(g, p))
