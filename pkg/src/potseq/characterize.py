"""Closed-form deciders for potentially K6-C4- and K5-C4-graphic sequences.

A graphic sequence with at least 6 terms is potentially K6-C4-graphic iff

  (1) d2 >= 5 and d6 >= 3;
  (2) if every term after the third is at most 3, writing the sequence as
      (d1,d2,d3,3^k,2^t,1^...), then d1 + d2 + d3 <= n + 2k + t + 1;
  (3) it is none of 23 fixed exceptional sequences (shipped as a data file)
      and belongs to neither family (n-1,5,3^5,1^(n-7)) nor
      (n-1,5,3^6,1^(n-8));
  (2') in the shape case of (2), for some choice of two hub positions among
      the first three terms (hub degree >= 5), the head demands left after
      placing the target on the six largest-degree vertices embed into the
      tail: a simple bipartite graph from the three head vertices (demands
      d-5, d-5, d-3) into the tail vertices (at most one edge per pair,
      tail vertex capacity = its degree) must exist whose unused tail
      capacities form a graphic sequence.

Condition (2') is the exact form of the counting bound (2); the count alone
admits a handful of boundary sequences, the smallest being (6,5^2,3^4), that
have no realization containing the target.  The exhaustive oracle
(search module) adjudicates: decider and oracle agree on every graphic
sequence the sweeps cover.

A graphic sequence with at least 5 terms is potentially K5-C4-graphic iff
d1 >= 4, d5 >= 2, and it is none of (4,2^5), (4,2^6), ((n-2)^2,2^(n-2)) and
(n-k,k+i,2^i,1^(n-i-2)) for i = 3..n-2k, k = 1..floor((n-1)/2)-1.

Verdicts report the first failed check in a fixed evaluation order:
graphic, length, condition (1), count form of (2), condition (3) fixed
list, condition (3) families, exact form (2').
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .sequences import (
    DegreeSequence,
    _eg_ok,
    is_graphic,
    parse_notation,
    render_notation,
    shape_of,
)

__all__ = [
    "Verdict",
    "ExceptionTable",
    "k6c4_exceptions",
    "decide_k6c4",
    "decide_k5c4",
    "sigma_formula_k6c4",
    "explain",
]

K6C4 = "K6-C4"
K5C4 = "K5-C4"

_MIN_LENGTH = {K6C4: 6, K5C4: 5}


@dataclass(frozen=True)
class Verdict:
    """Decision plus a machine-readable reason code for the first failure.

    ``decision`` is "yes" iff ``reason`` is "OK".  Optional fields carry the
    numbers behind the reason: ``lhs``/``rhs`` for threshold failures,
    ``exception_index``/``matched_exception`` for fixture hits, and
    ``family_k``/``family_i`` for the parameterized K5-C4 family.
    """

    target: str
    decision: str
    reason: str
    n: int = 0
    matched_exception: str | None = None
    exception_index: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    family_k: int | None = None
    family_i: int | None = None

    def __post_init__(self) -> None:
        if (self.decision == "yes") != (self.reason == "OK"):
            raise ValueError(f"decision {self.decision!r} inconsistent with reason {self.reason!r}")

    @property
    def is_yes(self) -> bool:
        return self.decision == "yes"


@dataclass(frozen=True)
class ExceptionTable:
    """The fixed exceptional sequences of the K6-C4 characterization."""

    fixed: tuple[DegreeSequence, ...]

    @classmethod
    def load(cls) -> "ExceptionTable":
        text = resources.files("potseq.data").joinpath("k6c4_exceptions.txt").read_text()
        entries = tuple(parse_notation(line) for line in text.splitlines() if line.strip())
        if len(entries) != len({e.terms for e in entries}):
            raise ValueError("exception table has duplicate entries")
        for e in entries:
            if e.sigma % 2:
                raise ValueError(f"exception table entry has odd sum: {render_notation(e)}")
            if not is_graphic(e):
                raise ValueError(f"exception table entry is not graphic: {render_notation(e)}")
        return cls(entries)

    def match(self, seq: DegreeSequence) -> int | None:
        for i, e in enumerate(self.fixed):
            if e.terms == seq.terms:
                return i
        return None


_table: ExceptionTable | None = None


def k6c4_exceptions() -> ExceptionTable:
    global _table
    if _table is None:
        _table = ExceptionTable.load()
    return _table


def _long_tail_family_terms(n: int, threes: int) -> tuple[int, ...] | None:
    """(n-1,5,3^threes,1^rest) when the rest count is nonnegative, else None."""
    rest = n - 2 - threes
    if rest < 0:
        return None
    return (n - 1, 5) + (3,) * threes + (1,) * rest


def _residual_embeddable(p: tuple[int, int, int], threes: int, twos: int, ones: int) -> bool:
    """Can head demands ``p`` be met by a simple bipartite graph into a tail
    of ``threes``/``twos``/``ones`` vertices, leaving a graphic remainder?

    Each tail vertex can send at most one edge to each head vertex and at
    most its capacity in total; the unused capacities must themselves form
    a graphic sequence (they are realized among the tail vertices).
    """
    p = tuple(sorted(p, reverse=True))
    if p[-1] < 0:
        return False
    cap1 = threes + twos + ones
    cap2 = 2 * threes + 2 * twos + ones
    cap3 = 3 * threes + 2 * twos + ones
    demand = sum(p)
    if p[0] > cap1 or p[0] + p[1] > cap2 or demand > cap3:
        return False
    slack = cap3 - demand
    if slack >= 12:
        # any transportation solution leaves a sum->=12 remainder with terms
        # <= 3 and even sum, which is always graphic
        return True
    # small remainder: enumerate how much capacity each tail class keeps
    for x3 in range(min(threes, slack // 3) + 1):
        for x2 in range(min(threes - x3, (slack - 3 * x3) // 2) + 1):
            for x1 in range(min(threes - x3 - x2, slack - 3 * x3 - 2 * x2) + 1):
                rest3 = slack - 3 * x3 - 2 * x2 - x1
                for y2 in range(min(twos, rest3 // 2) + 1):
                    for y1 in range(min(twos - y2, rest3 - 2 * y2) + 1):
                        z1 = rest3 - 2 * y2 - y1
                        if z1 > ones:
                            continue
                        leftover = (3,) * x3 + (2,) * (x2 + y2) + (1,) * (x1 + y1 + z1)
                        if not _eg_ok(leftover):
                            continue
                        # used capacities q = degree - leftover, by count
                        q3 = threes - x3 - x2 - x1
                        q2 = x1 + (twos - y2 - y1)
                        q1 = x2 + y1 + (ones - z1)
                        s1 = q3 + q2 + q1
                        s2 = 2 * q3 + 2 * q2 + q1
                        if p[0] <= s1 and p[0] + p[1] <= s2:
                            return True
    return False


def _shape_case_potential(d: tuple[int, ...], k: int, t: int, ones: int) -> bool:
    """Exact decision for shape-matching sequences passing condition (1):
    try every hub pair among the first three positions."""
    d1, d2, d3 = d[0], d[1], d[2]
    if k < 3:
        raise AssertionError("shape case with d6 >= 3 must have k >= 3")
    choices = [(d1 - 5, d2 - 5, d3 - 3)]
    if d3 >= 5:
        choices.append((d1 - 5, d3 - 5, d2 - 3))
        choices.append((d2 - 5, d3 - 5, d1 - 3))
    return any(_residual_embeddable(p, k - 3, t, ones) for p in choices)


def decide_k6c4(seq: DegreeSequence) -> Verdict:
    """Decide whether ``seq`` is potentially K6-C4-graphic."""
    n = seq.n
    if not is_graphic(seq):
        return Verdict(K6C4, "no", "NOT_GRAPHIC", n=n)
    if n < 6:
        return Verdict(K6C4, "no", "TOO_SHORT", n=n)
    d = seq.terms
    if d[1] < 5:
        return Verdict(K6C4, "no", "COND1_D2", n=n, lhs=d[1], rhs=5)
    if d[5] < 3:
        return Verdict(K6C4, "no", "COND1_D6", n=n, lhs=d[5], rhs=3)
    shape = shape_of(seq)
    if shape is not None and shape.matches:
        head_sum = sum(shape.head)
        bound = n + 2 * shape.k + shape.t + 1
        if head_sum > bound:
            return Verdict(K6C4, "no", "COND2_SUM", n=n, lhs=head_sum, rhs=bound)
    table = k6c4_exceptions()
    idx = table.match(seq)
    if idx is not None:
        return Verdict(
            K6C4,
            "no",
            "COND3_FIXED",
            n=n,
            exception_index=idx,
            matched_exception=render_notation(table.fixed[idx]),
        )
    if n >= 7 and seq.terms == _long_tail_family_terms(n, 5):
        return Verdict(K6C4, "no", "COND3_FAMILY_A", n=n, matched_exception=render_notation(seq))
    if n >= 8 and seq.terms == _long_tail_family_terms(n, 6):
        return Verdict(K6C4, "no", "COND3_FAMILY_B", n=n, matched_exception=render_notation(seq))
    if shape is not None and shape.matches:
        if not _shape_case_potential(d, shape.k, shape.t, shape.ones):
            return Verdict(K6C4, "no", "COND2_RESIDUAL", n=n)
    return Verdict(K6C4, "yes", "OK", n=n)


def _k5c4_family_terms(n: int, k: int, i: int) -> tuple[int, ...]:
    """(n-k,k+i,2^i,1^(n-i-2)); non-increasing for every admissible (k, i)."""
    return (n - k, k + i) + (2,) * i + (1,) * (n - i - 2)


def decide_k5c4(seq: DegreeSequence) -> Verdict:
    """Decide whether ``seq`` is potentially K5-C4-graphic."""
    n = seq.n
    if not is_graphic(seq):
        return Verdict(K5C4, "no", "NOT_GRAPHIC", n=n)
    if n < 5:
        return Verdict(K5C4, "no", "TOO_SHORT", n=n)
    d = seq.terms
    if d[0] < 4:
        return Verdict(K5C4, "no", "COND1_D1", n=n, lhs=d[0], rhs=4)
    if d[4] < 2:
        return Verdict(K5C4, "no", "COND1_D5", n=n, lhs=d[4], rhs=2)
    for idx, fixed in enumerate(((4, 2, 2, 2, 2, 2), (4, 2, 2, 2, 2, 2, 2))):
        if d == fixed:
            return Verdict(
                K5C4,
                "no",
                "COND2_FIXED",
                n=n,
                exception_index=idx,
                matched_exception=render_notation(seq),
            )
    if d == (n - 2, n - 2) + (2,) * (n - 2):
        return Verdict(K5C4, "no", "COND2_FAMILY_SQUARE", n=n, matched_exception=render_notation(seq))
    for k in range(1, (n - 1) // 2):
        for i in range(3, n - 2 * k + 1):
            if d == _k5c4_family_terms(n, k, i):
                return Verdict(
                    K5C4,
                    "no",
                    "COND2_FAMILY_KI",
                    n=n,
                    family_k=k,
                    family_i=i,
                    matched_exception=render_notation(seq),
                )
    return Verdict(K5C4, "yes", "OK", n=n)


def sigma_formula_k6c4(n: int) -> int:
    """Smallest even s such that every n-term positive graphic sequence with
    sum >= s is potentially K6-C4-graphic: 6n - 10."""
    if n < 6:
        raise ValueError(f"formula requires n >= 6, got {n}")
    return 6 * n - 10


def explain(verdict: Verdict) -> str:
    """One-line human-readable explanation; stable strings for snapshots."""
    v = verdict
    if v.reason == "OK":
        return f"potentially {v.target}-graphic"
    if v.reason == "NOT_GRAPHIC":
        return "not graphic"
    if v.reason == "TOO_SHORT":
        return f"too short: n = {v.n} < {_MIN_LENGTH[v.target]}"
    if v.reason == "COND1_D2":
        return f"fails condition (1): d2 = {v.lhs} < 5"
    if v.reason == "COND1_D6":
        return f"fails condition (1): d6 = {v.lhs} < 3"
    if v.reason == "COND2_SUM":
        return f"fails condition (2): d1+d2+d3 = {v.lhs} > n+2k+t+1 = {v.rhs}"
    if v.reason == "COND2_RESIDUAL":
        return "fails condition (2) in exact residual form: head demand has no tail embedding"
    if v.reason == "COND3_FIXED":
        return f"matches exception ({v.matched_exception})"
    if v.reason == "COND3_FAMILY_A":
        return f"matches exception family (n-1,5,3^5,1^(n-7)) at n = {v.n}"
    if v.reason == "COND3_FAMILY_B":
        return f"matches exception family (n-1,5,3^6,1^(n-8)) at n = {v.n}"
    if v.reason == "COND1_D1":
        return f"fails condition (1): d1 = {v.lhs} < 4"
    if v.reason == "COND1_D5":
        return f"fails condition (1): d5 = {v.lhs} < 2"
    if v.reason == "COND2_FIXED":
        return f"matches exception ({v.matched_exception})"
    if v.reason == "COND2_FAMILY_SQUARE":
        return f"matches exception family ((n-2)^2,2^(n-2)) at n = {v.n}"
    if v.reason == "COND2_FAMILY_KI":
        return (
            f"matches exception family (n-k,k+i,2^i,1^(n-i-2)) "
            f"with k = {v.family_k}, i = {v.family_i}"
        )
    raise ValueError(f"unknown reason code {v.reason!r}")
