import itertools

import pytest

from potseq.characterize import decide_k5c4, decide_k6c4
from potseq.graphs import (
    Graph,
    K5_MINUS_C4,
    K6_MINUS_C4,
    complete_graph,
    contains_k6c4,
    degree_sequence_of,
    find_k6c4,
)
from potseq.search import (
    EmbeddingFailure,
    NotPotentialError,
    OracleBoundError,
    count_graphic_sequences,
    enumerate_graphic_sequences,
    oracle_decide_k6c4,
    oracle_decide_pattern,
    oracle_realization_k6c4,
    realize_graphic,
    realize_with_k5c4,
    realize_with_k6c4,
    sigma_search,
    verify_range,
)
from potseq.sequences import DegreeSequence, parse_notation, render_notation


def seq(text):
    return parse_notation(text)


# --- plain realization ------------------------------------------------------


def test_realize_triangle():
    g = realize_graphic(seq("2,2,2"))
    assert g.degrees() == (2, 2, 2) and g.num_edges == 3


def test_realize_k6():
    assert realize_graphic(seq("5^6")) == complete_graph(6)


def test_realize_rejects_non_graphic():
    with pytest.raises(ValueError):
        realize_graphic(seq("3^3,1"))


def test_realize_matches_degrees_on_all_small_sequences():
    for n in range(1, 8):
        for s in enumerate_graphic_sequences(n):
            assert degree_sequence_of(realize_graphic(s)).terms == s.terms


# --- embedded realization ---------------------------------------------------


def test_realize_with_k6c4_zero_residual_is_the_pattern():
    cert = realize_with_k6c4(seq("5^2,3^4"))
    assert cert.graph == K6_MINUS_C4.as_graph()
    assert cert.hosts == (0, 1, 2, 3, 4, 5)
    assert cert.hubs == (0, 1)
    assert cert.pairs == ((2, 4), (3, 5))
    assert cert.checked


def test_realize_with_k6c4_nontrivial():
    cert = realize_with_k6c4(seq("5^2,4^5"))
    assert degree_sequence_of(cert.graph).terms == (5, 5, 4, 4, 4, 4, 4)
    assert contains_k6c4(cert.graph)


def test_realize_with_k6c4_enforces_decider():
    with pytest.raises(NotPotentialError) as exc:
        realize_with_k6c4(seq("5^2,4^6"))
    assert exc.value.verdict.reason == "COND3_FIXED"


def test_realize_with_k6c4_unchecked_failure():
    # excluded by the counting condition; no placement on the top six can work
    with pytest.raises(EmbeddingFailure):
        realize_with_k6c4(seq("5^3,3^3"), unchecked=True)


def test_realize_with_k5c4():
    cert = realize_with_k5c4(seq("4^5"))
    assert cert.hosts == (0, 1, 2, 3, 4)
    assert cert.hubs == (0,)
    assert degree_sequence_of(cert.graph).terms == (4, 4, 4, 4, 4)


# --- oracle -----------------------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("5^2,3^4", True),
        ("5^2,4^6", False),
        ("6^2,3^6", False),
        ("5^6", True),
        ("6,5^2,3^4", False),
    ],
)
def test_oracle_k6c4(text, expected):
    assert oracle_decide_k6c4(seq(text)) is expected


def test_oracle_witness_revalidates():
    g = oracle_realization_k6c4(seq("5^2,4^5"))
    assert g is not None
    assert degree_sequence_of(g).terms == (5, 5, 4, 4, 4, 4, 4)
    assert find_k6c4(g) is not None


@pytest.mark.parametrize(
    "text,expected",
    [("4,2^5", False), ("4^5", True), ("2^6", False), ("4,4,2^3,1^2", True)],
)
def test_oracle_k5c4(text, expected):
    assert oracle_decide_pattern(seq(text), K5_MINUS_C4) is expected


def test_oracle_refuses_above_bound():
    s = DegreeSequence((1,) * 12)
    with pytest.raises(OracleBoundError):
        oracle_decide_k6c4(s)
    assert oracle_decide_k6c4(s, bound=12) is False


def test_oracle_bound_env_override(monkeypatch):
    monkeypatch.setenv("POTSEQ_ORACLE_BOUND", "4")
    with pytest.raises(OracleBoundError):
        oracle_decide_k6c4(DegreeSequence((1, 1, 1, 1, 1, 1)))


def test_oracle_requires_graphic_input():
    with pytest.raises(ValueError):
        oracle_decide_k6c4(seq("3^3,1"))


def test_oracle_engines_agree_small():
    for n in range(1, 8):
        for s in enumerate_graphic_sequences(n):
            assert oracle_decide_k6c4(s) == oracle_decide_pattern(s, K6_MINUS_C4), s.terms


# --- enumeration ------------------------------------------------------------


def test_enumeration_examples():
    assert [s.terms for s in enumerate_graphic_sequences(3)] == [(2, 2, 2), (2, 1, 1)]
    assert [s.terms for s in enumerate_graphic_sequences(2)] == [(1, 1)]
    n6 = [s.terms for s in enumerate_graphic_sequences(6)]
    assert (5, 5, 5, 5, 5, 5) in n6
    assert (5, 5, 3, 3, 3, 3) in n6


def test_enumeration_counts():
    assert [count_graphic_sequences(n) for n in range(1, 9)] == [0, 1, 2, 7, 20, 71, 240, 871]


def test_enumeration_is_lexicographically_decreasing():
    for n in (5, 7):
        terms = [s.terms for s in enumerate_graphic_sequences(n)]
        assert terms == sorted(terms, reverse=True)


def test_enumeration_matches_brute_force_graph_sweep():
    # independent ground truth: degree sequences of every labeled graph
    for n in range(2, 7):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            deg = [0] * n
            m, i = mask, 0
            while m:
                if m & 1:
                    u, v = pairs[i]
                    deg[u] += 1
                    deg[v] += 1
                m >>= 1
                i += 1
            if min(deg) >= 1:
                seen.add(tuple(sorted(deg, reverse=True)))
        assert {s.terms for s in enumerate_graphic_sequences(n)} == seen


def test_enumeration_min_term():
    only_cubic_or_more = list(enumerate_graphic_sequences(6, min_term=3))
    assert all(s.terms[-1] >= 3 for s in only_cubic_or_more)
    assert (3, 3, 3, 3, 3, 3) in [s.terms for s in only_cubic_or_more]


# --- sigma search -----------------------------------------------------------


def test_sigma_search_n6():
    res = sigma_search(6, K6_MINUS_C4)
    assert res.value == 26
    assert render_notation(res.witness) == "5^3,3^3"
    assert res.witness_sigma == 24


def test_sigma_search_n7_witness():
    res = sigma_search(7, K6_MINUS_C4)
    assert res.value == 32
    assert render_notation(res.witness) == "6^3,3^4"


def test_sigma_search_k5c4():
    # the largest non-potential sum at n=5 is 14, first reached by the
    # family instance (4,4,2^3); frozen from the oracle-backed search
    res = sigma_search(5, K5_MINUS_C4)
    assert res.value == 16
    assert render_notation(res.witness) == "4^2,2^3"
    assert res.witness_sigma == 14


def test_sigma_search_bound():
    with pytest.raises(OracleBoundError):
        sigma_search(12, K6_MINUS_C4)


# --- verification -----------------------------------------------------------


def test_verify_range_n6_clean():
    rep = verify_range(6, K6_MINUS_C4)
    assert rep.total_sequences == 71
    assert rep.agreements == 71
    assert rep.mismatches == []
    assert rep.to_dict()["mismatches"] == []


def test_verify_range_parallel_matches_serial():
    serial = verify_range(6, K6_MINUS_C4, jobs=1)
    parallel = verify_range(6, K6_MINUS_C4, jobs=2)
    a, b = serial.to_dict(), parallel.to_dict()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_verify_range_k5c4_n5():
    rep = verify_range(5, K5_MINUS_C4)
    assert rep.total_sequences == 20
    assert rep.mismatches == []


def test_verify_range_bound():
    with pytest.raises(OracleBoundError):
        verify_range(11, K6_MINUS_C4)


def test_verify_range_progress_callback():
    calls = []
    verify_range(3, K6_MINUS_C4, progress=lambda done, total: calls.append((done, total)))
    assert calls == [(1, 2), (2, 2)]
