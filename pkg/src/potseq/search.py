"""Exhaustive search machinery: realization construction, the brute-force
potential-subgraph oracle, graphic-sequence enumeration, sigma thresholds,
and decider-vs-oracle verification.

The oracle enumerates every labeled realization of a sequence by saturating
one vertex at a time (largest residual first, neighbor sets in lexicographic
order) with an Erdos-Gallai feasibility check on the residual demand after
each step.  Unsaturated vertices are never adjacent to each other, so the
residual check is exact and no branch is a dead end: the search tree visits
exactly the labeled realizations, once each.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import Callable, Iterator, Sequence

from .characterize import K5C4, K6C4, Verdict, decide_k5c4, decide_k6c4
from .graphs import (
    Graph,
    K5_MINUS_C4,
    K6_MINUS_C4,
    PatternWitness,
    TargetPattern,
    _contains_pattern_adj,
    _find_km_minus_c4_adj,
    degree_sequence_of,
)
from .sequences import DegreeSequence, _eg_ok, is_graphic, render_notation

__all__ = [
    "DEFAULT_ORACLE_BOUND",
    "ORACLE_BOUND_ENV",
    "OracleBoundError",
    "NotPotentialError",
    "EmbeddingFailure",
    "RealizationCertificate",
    "Mismatch",
    "VerificationReport",
    "SigmaSearchResult",
    "realize_graphic",
    "realize_with_k6c4",
    "realize_with_k5c4",
    "oracle_decide_k6c4",
    "oracle_realization_k6c4",
    "oracle_decide_pattern",
    "enumerate_graphic_sequences",
    "count_graphic_sequences",
    "sigma_search",
    "verify_range",
]

DEFAULT_ORACLE_BOUND = 10
ORACLE_BOUND_ENV = "POTSEQ_ORACLE_BOUND"


class OracleBoundError(RuntimeError):
    """Refusal to run an exhaustive search above the configured bound."""


class NotPotentialError(ValueError):
    """Constructor called on a sequence the decider rejected."""

    def __init__(self, verdict: Verdict) -> None:
        self.verdict = verdict
        super().__init__(f"sequence is not potentially {verdict.target}-graphic: {verdict.reason}")


class EmbeddingFailure(RuntimeError):
    """No embedded realization completes; a bug signal on decider-yes input."""


def resolve_oracle_bound(bound: int | None) -> int:
    if bound is not None:
        return bound
    env = os.environ.get(ORACLE_BOUND_ENV)
    return int(env) if env else DEFAULT_ORACLE_BOUND


# ---------------------------------------------------------------------------
# plain realization (greedy, highest degree first)


def realize_graphic(seq: DegreeSequence) -> Graph:
    """Deterministic realization of a graphic sequence.

    Saturates the vertex with the largest remaining demand by connecting it
    to the vertices with the next-largest demands.
    """
    if not is_graphic(seq):
        raise ValueError(f"not graphic: {render_notation(seq)}")
    n = seq.n
    residual = list(seq.terms)
    adj = [0] * n
    while True:
        u = max(range(n), key=lambda v: (residual[v], -v), default=-1)
        if u < 0 or residual[u] == 0:
            break
        partners = sorted(
            (v for v in range(n) if v != u and residual[v] > 0),
            key=lambda v: (-residual[v], v),
        )[: residual[u]]
        if len(partners) < residual[u]:
            raise AssertionError("greedy realization starved on graphic input")
        for v in partners:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            residual[v] -= 1
        residual[u] = 0
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# exhaustive realization search


def _positive_sorted(residual: list[int]) -> list[int]:
    rem = [x for x in residual if x > 0]
    rem.sort(reverse=True)
    return rem


def _find_realization(
    terms: Sequence[int],
    accept: Callable[[list[int], int], bool] | None,
) -> list[int] | None:
    """First labeled realization satisfying ``accept`` (or any realization
    when ``accept`` is None); None when no realization satisfies it.

    ``accept`` must be monotone under edge addition: once a partial graph
    satisfies it, the branch is completed greedily and returned.
    """
    n = len(terms)
    residual = list(terms)
    adj = [0] * n

    def pivot() -> int:
        u = -1
        best = 0
        for i in range(n):
            if residual[i] > best:
                best = residual[i]
                u = i
        return u

    def complete_any() -> None:
        # residual is Erdos-Gallai-feasible here, so a first valid branch
        # always exists all the way down
        u = pivot()
        if u < 0:
            return
        r = residual[u]
        cands = [v for v in range(n) if v != u and residual[v] > 0]
        residual[u] = 0
        for combo in combinations(cands, r):
            for v in combo:
                residual[v] -= 1
            if _eg_ok(_positive_sorted(residual)):
                for v in combo:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                complete_any()
                return
            for v in combo:
                residual[v] += 1
        raise AssertionError("feasible residual had no extension")

    def search() -> bool:
        u = pivot()
        if u < 0:
            return accept is None or accept(adj, n)
        r = residual[u]
        cands = [v for v in range(n) if v != u and residual[v] > 0]
        if r > len(cands):
            return False
        residual[u] = 0
        for combo in combinations(cands, r):
            for v in combo:
                residual[v] -= 1
            if _eg_ok(_positive_sorted(residual)):
                for v in combo:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                if accept is not None and accept(adj, n):
                    complete_any()
                    return True
                if search():
                    return True
                for v in combo:
                    adj[u] &= ~(1 << v)
                    adj[v] &= ~(1 << u)
            for v in combo:
                residual[v] += 1
        residual[u] = r
        return False

    if sum(terms) % 2:
        return None
    return adj if search() else None


def _check_oracle_pre(seq: DegreeSequence, bound: int | None) -> int:
    limit = resolve_oracle_bound(bound)
    if seq.n > limit:
        raise OracleBoundError(
            f"n = {seq.n} exceeds the exhaustive-search bound {limit}; "
            f"raise it explicitly to force the run"
        )
    if not is_graphic(seq):
        raise ValueError(f"oracle requires a graphic sequence, got {render_notation(seq)}")
    return limit


def _dominates(terms: Sequence[int], pattern_degrees: Sequence[int]) -> bool:
    if len(terms) < len(pattern_degrees):
        return False
    return all(terms[i] >= pattern_degrees[i] for i in range(len(pattern_degrees)))


def oracle_realization_k6c4(seq: DegreeSequence, bound: int | None = None) -> Graph | None:
    """Some realization containing K6 - C4, or None if none exists.

    Short-circuits when the sorted sequence does not dominate the pattern
    degrees (5,5,3,3,3,3): any graph containing the pattern has at least
    two vertices of degree >= 5 and six of degree >= 3.
    """
    _check_oracle_pre(seq, bound)
    if not _dominates(seq.terms, K6_MINUS_C4.degree_multiset):
        return None
    adj = _find_realization(seq.terms, lambda a, n: _find_km_minus_c4_adj(a, n, 2) is not None)
    if adj is None:
        return None
    return Graph(seq.n, tuple(adj))


def oracle_decide_k6c4(seq: DegreeSequence, bound: int | None = None) -> bool:
    """Exhaustive ground truth for "potentially K6-C4-graphic"."""
    return oracle_realization_k6c4(seq, bound=bound) is not None


def oracle_decide_pattern(
    seq: DegreeSequence, pattern: TargetPattern, bound: int | None = None
) -> bool:
    """Exhaustive ground truth for "potentially ``pattern``-graphic".

    Pure search over every labeled realization with the generic injective
    containment test; no sequence-level shortcuts.
    """
    _check_oracle_pre(seq, bound)
    adj = _find_realization(seq.terms, lambda a, n: _contains_pattern_adj(a, n, pattern))
    return adj is not None


# ---------------------------------------------------------------------------
# embedded realization (pattern placed on the top-degree vertices)


@dataclass
class RealizationCertificate:
    """A realization with K_m - C4 placed on the first m vertices."""

    graph: Graph
    hosts: tuple[int, ...]
    hubs: tuple[int, ...]
    pairs: tuple[tuple[int, int], tuple[int, int]]
    checked: bool = False

    def role_edges(self) -> list[tuple[int, int]]:
        edges = set()
        for h in self.hubs:
            for x in self.hosts:
                if x != h:
                    edges.add((min(h, x), max(h, x)))
        for a, b in self.pairs:
            edges.add((min(a, b), max(a, b)))
        return sorted(edges)

    def revalidate(self, seq: DegreeSequence) -> None:
        """Check degrees and the stated embedding; sets ``checked``."""
        if degree_sequence_of(self.graph).terms != seq.terms:
            raise EmbeddingFailure("certificate degrees do not match the sequence")
        for u, v in self.role_edges():
            if not self.graph.has_edge(u, v):
                raise EmbeddingFailure(f"certificate is missing role edge ({u},{v})")
        self.checked = True


def _role_assignments(d: Sequence[int], m: int) -> list[tuple[tuple[int, ...], tuple]]:
    """Candidate (hubs, matched pairs) placements on hosts 0..m-1, deduplicated.

    Two placements with equal hub residual multisets and equal multisets of
    per-pair residual pairs yield isomorphic completion problems, so only the
    first of each class is kept.
    """
    hubs_count = m - 4
    out = []
    seen = set()
    for hubs in combinations(range(m), hubs_count):
        if any(d[h] < m - 1 for h in hubs):
            continue
        quad = [v for v in range(m) if v not in hubs]
        if any(d[q] < m - 3 for q in quad):
            continue
        # diagonal pairing first so a zero-demand completion reproduces the
        # pattern constant exactly
        for a, b, c, e in ((0, 2, 1, 3), (0, 1, 2, 3), (0, 3, 1, 2)):
            pairs = ((quad[a], quad[b]), (quad[c], quad[e]))
            hub_key = tuple(sorted(d[h] - (m - 1) for h in hubs))
            pair_key = tuple(
                sorted(tuple(sorted((d[p] - (m - 3), d[q] - (m - 3)))) for p, q in pairs)
            )
            key = (hub_key, pair_key)
            if key in seen:
                continue
            seen.add(key)
            out.append((hubs, pairs))
    return out


def _complete_with_demands(n: int, demand: Sequence[int], base_adj: Sequence[int]) -> list[int] | None:
    """Backtracking edge completion: degrees ``demand`` on top of ``base_adj``
    without duplicating existing edges.  Returns the added-edge adjacency."""
    if sum(demand) % 2:
        return None
    residual = list(demand)
    extra = [0] * n

    def rec() -> bool:
        u = -1
        best = 0
        for i in range(n):
            if residual[i] > best:
                best = residual[i]
                u = i
        if u < 0:
            return True
        blocked = base_adj[u] | extra[u]
        cands = [v for v in range(n) if v != u and residual[v] > 0 and not blocked >> v & 1]
        r = residual[u]
        if r > len(cands):
            return False
        residual[u] = 0
        for combo in combinations(cands, r):
            for v in combo:
                residual[v] -= 1
            # optimistic check: ignores blocked pairs, still necessary
            if _eg_ok(_positive_sorted(residual)):
                for v in combo:
                    extra[u] |= 1 << v
                    extra[v] |= 1 << u
                if rec():
                    return True
                for v in combo:
                    extra[u] &= ~(1 << v)
                    extra[v] &= ~(1 << u)
            for v in combo:
                residual[v] += 1
        residual[u] = r
        return False

    return extra if rec() else None


def _realize_with_km_c4(seq: DegreeSequence, m: int) -> RealizationCertificate:
    n = seq.n
    if n < m:
        raise EmbeddingFailure(f"need at least {m} positive terms, have {n}")
    d = seq.terms
    pattern_degree = {True: m - 1, False: m - 3}
    for hubs, pairs in _role_assignments(d, m):
        hub_set = set(hubs)
        base = [0] * n
        demand = list(d)
        for v in range(m):
            demand[v] -= pattern_degree[v in hub_set]
        for h in hubs:
            for x in range(m):
                if x != h:
                    base[h] |= 1 << x
                    base[x] |= 1 << h
        for a, b in pairs:
            base[a] |= 1 << b
            base[b] |= 1 << a
        if min(demand) < 0:
            continue
        extra = _complete_with_demands(n, demand, base)
        if extra is None:
            continue
        graph = Graph(n, tuple(base[v] | extra[v] for v in range(n)))
        hubs_sorted = tuple(sorted(hubs))
        pairs_sorted = tuple(sorted(tuple(sorted(p)) for p in pairs))
        cert = RealizationCertificate(
            graph=graph,
            hosts=tuple(range(m)),
            hubs=hubs_sorted,
            pairs=pairs_sorted,
        )
        cert.revalidate(seq)
        return cert
    raise EmbeddingFailure(
        f"no embedded realization of {render_notation(seq)} completes on the top {m} vertices"
    )


def realize_with_k6c4(seq: DegreeSequence, unchecked: bool = False) -> RealizationCertificate:
    """Realization with K6 - C4 on the six largest-degree vertices.

    Enforces the closed-form decider first; ``unchecked=True`` bypasses it
    (used to probe the completeness claim).  Raises EmbeddingFailure when no
    placement completes, which for decider-yes input indicates a bug.
    """
    if not unchecked:
        verdict = decide_k6c4(seq)
        if not verdict.is_yes:
            raise NotPotentialError(verdict)
    return _realize_with_km_c4(seq, 6)


def realize_with_k5c4(seq: DegreeSequence, unchecked: bool = False) -> RealizationCertificate:
    """Realization with K5 - C4 on the five largest-degree vertices."""
    if not unchecked:
        verdict = decide_k5c4(seq)
        if not verdict.is_yes:
            raise NotPotentialError(verdict)
    return _realize_with_km_c4(seq, 5)


# ---------------------------------------------------------------------------
# enumeration, sigma search, verification


def _descending_tuples(n: int, cap: int, min_term: int) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []

    def rec(remaining: int, top: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for v in range(top, min_term - 1, -1):
            prefix.append(v)
            yield from rec(remaining - 1, v)
            prefix.pop()

    yield from rec(n, cap)


def enumerate_graphic_sequences(n: int, min_term: int = 1) -> Iterator[DegreeSequence]:
    """All graphic sequences with n positive terms, lexicographically decreasing."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if min_term < 1:
        raise ValueError("min_term must be >= 1")
    for terms in _descending_tuples(n, n - 1, min_term):
        if sum(terms) % 2 == 0 and _eg_ok(terms):
            yield DegreeSequence(terms)


def count_graphic_sequences(n: int) -> int:
    return sum(1 for _ in enumerate_graphic_sequences(n))


@dataclass(frozen=True)
class SigmaSearchResult:
    n: int
    target: str
    value: int
    witness: DegreeSequence | None

    @property
    def witness_sigma(self) -> int | None:
        return None if self.witness is None else self.witness.sigma


def sigma_search(n: int, target: TargetPattern = K6_MINUS_C4, bound: int | None = None) -> SigmaSearchResult:
    """Smallest even s such that every n-term positive graphic sequence with
    sum >= s is potentially target-graphic, plus an extremal witness at s - 2.

    Uses the closed-form decider for K6-C4 and the exhaustive oracle for
    other targets.
    """
    minimum = 6 if target.name == K6C4 else 5
    if n < minimum:
        raise ValueError(f"sigma search for {target.name} requires n >= {minimum}")
    limit = resolve_oracle_bound(bound)
    if n > limit:
        raise OracleBoundError(f"n = {n} exceeds the exhaustive-search bound {limit}")
    best: DegreeSequence | None = None
    for seq in enumerate_graphic_sequences(n):
        if target.name == K6C4:
            potential = decide_k6c4(seq).is_yes
        else:
            potential = oracle_decide_pattern(seq, target, bound=limit)
        if not potential and (best is None or seq.sigma > best.sigma):
            best = seq
    value = 0 if best is None else best.sigma + 2
    return SigmaSearchResult(n=n, target=target.name, value=value, witness=best)


@dataclass(frozen=True)
class Mismatch:
    sequence: str
    decider: str
    decider_reason: str
    oracle: bool

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence,
            "decider": self.decider,
            "decider_reason": self.decider_reason,
            "oracle": "yes" if self.oracle else "no",
        }


@dataclass
class VerificationReport:
    """Per-length comparison of the closed-form decider with the oracle."""

    n: int
    target: str
    total_sequences: int
    agreements: int
    mismatches: list[Mismatch] = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "target": self.target,
            "total_sequences": self.total_sequences,
            "agreements": self.agreements,
            "mismatches": [m.to_dict() for m in self.mismatches],
            "wall_time": self.wall_time,
        }

    def summary(self) -> str:
        return (
            f"n={self.n} target={self.target}: {self.total_sequences} sequences checked, "
            f"{len(self.mismatches)} mismatches"
        )


def _verify_one(args: tuple[tuple[int, ...], str, int]) -> tuple[str, str, bool]:
    terms, target_name, bound = args
    seq = DegreeSequence(terms)
    if target_name == K6C4:
        verdict = decide_k6c4(seq)
        oracle = oracle_decide_k6c4(seq, bound=bound)
    elif target_name == K5C4:
        verdict = decide_k5c4(seq)
        oracle = oracle_decide_pattern(seq, K5_MINUS_C4, bound=bound)
    else:
        raise ValueError(f"no decider for target {target_name!r}")
    return (verdict.decision, verdict.reason, oracle)


def verify_range(
    n: int,
    target: TargetPattern = K6_MINUS_C4,
    bound: int | None = None,
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> VerificationReport:
    """Run decider and oracle on every graphic sequence of length n.

    Results are merged in enumeration order, so reports are identical for
    any ``jobs`` value.
    """
    limit = resolve_oracle_bound(bound)
    if n > limit:
        raise OracleBoundError(f"n = {n} exceeds the exhaustive-search bound {limit}")
    start = time.perf_counter()
    seqs = list(enumerate_graphic_sequences(n))
    tasks = [(s.terms, target.name, limit) for s in seqs]
    mismatches: list[Mismatch] = []
    done = 0
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            results = pool.imap(_verify_one, tasks, chunksize=8)
            for seq, (decision, reason, oracle) in zip(seqs, results):
                if (decision == "yes") != oracle:
                    mismatches.append(Mismatch(render_notation(seq), decision, reason, oracle))
                done += 1
                if progress is not None:
                    progress(done, len(seqs))
    else:
        for seq, task in zip(seqs, tasks):
            decision, reason, oracle = _verify_one(task)
            if (decision == "yes") != oracle:
                mismatches.append(Mismatch(render_notation(seq), decision, reason, oracle))
            done += 1
            if progress is not None:
                progress(done, len(seqs))
    return VerificationReport(
        n=n,
        target=target.name,
        total_sequences=len(seqs),
        agreements=len(seqs) - len(mismatches),
        mismatches=mismatches,
        wall_time=time.perf_counter() - start,
    )
