import hashlib
from importlib import resources

import pytest

from potseq.characterize import (
    ExceptionTable,
    Verdict,
    decide_k5c4,
    decide_k6c4,
    explain,
    k6c4_exceptions,
    sigma_formula_k6c4,
)
from potseq.sequences import DegreeSequence, parse_notation, render_notation

# Guards the shipped fixture file against transcription drift.
EXCEPTIONS_SHA256 = "7687043b56c934666ab7812229defb04c16d256bcdf23f0058cadd0d42744720"


def seq(text):
    return parse_notation(text)


# --- verdict type -----------------------------------------------------------


def test_verdict_decision_matches_reason():
    with pytest.raises(ValueError):
        Verdict("K6-C4", "yes", "COND1_D2")
    with pytest.raises(ValueError):
        Verdict("K6-C4", "no", "OK")


# --- exception table --------------------------------------------------------


def test_exception_table_has_23_distinct_entries():
    table = k6c4_exceptions()
    assert len(table.fixed) == 23
    assert len({e.terms for e in table.fixed}) == 23


def test_exception_table_checksum():
    data = resources.files("potseq.data").joinpath("k6c4_exceptions.txt").read_bytes()
    assert hashlib.sha256(data).hexdigest() == EXCEPTIONS_SHA256


def test_exception_table_order_and_ends():
    table = k6c4_exceptions()
    assert render_notation(table.fixed[0]) == "5^2,4^6"
    assert render_notation(table.fixed[22]) == "5^2,3^5,1"


def test_exception_match_index():
    table = k6c4_exceptions()
    assert table.match(seq("6^2,3^6")) == 2
    assert table.match(seq("5^6")) is None


# --- K6-C4 decider ----------------------------------------------------------


@pytest.mark.parametrize(
    "text,decision,reason",
    [
        ("5^2,4^5", "yes", "OK"),
        ("5^2,4^8", "yes", "OK"),
        ("5^2,4^6", "no", "COND3_FIXED"),
        ("5^2,4^7", "no", "COND3_FIXED"),
        ("6^3,3^4", "no", "COND2_SUM"),
        ("4^6", "no", "COND1_D2"),
        ("5^2,3^2,2^2", "no", "COND1_D6"),
        ("8,5,3^7", "yes", "OK"),
        ("6,5,3^5", "no", "COND3_FAMILY_A"),
        ("8,5,3^5,1^2", "no", "COND3_FAMILY_A"),
        ("7,5,3^6", "no", "COND3_FAMILY_B"),
        ("8,5,3^6,1", "no", "COND3_FAMILY_B"),
        ("3^3,1", "no", "NOT_GRAPHIC"),
        ("5,4,3,2,1,1", "no", "NOT_GRAPHIC"),
        ("2^3", "no", "TOO_SHORT"),
        ("2^3,0^3", "no", "TOO_SHORT"),
        # boundary sequences beyond the counting bound, caught by the exact
        # residual form of condition (2)
        ("6,5^2,3^4", "no", "COND2_RESIDUAL"),
        ("7,6^2,3^5", "no", "COND2_RESIDUAL"),
        ("7,5^2,3^4,1", "no", "COND2_RESIDUAL"),
        ("6^3,3^4,2", "no", "COND2_RESIDUAL"),
        ("7,5^2,3^5", "yes", "OK"),
    ],
)
def test_decide_k6c4(text, decision, reason):
    v = decide_k6c4(seq(text))
    assert (v.decision, v.reason) == (decision, reason)


def test_decide_k6c4_cond2_numbers():
    v = decide_k6c4(seq("6^3,3^4"))
    assert (v.lhs, v.rhs) == (18, 16)


def test_decide_k6c4_fixed_carries_index_and_notation():
    v = decide_k6c4(seq("5^2,4^6"))
    assert v.exception_index == 0
    assert v.matched_exception == "5^2,4^6"


def test_base_case_n6_accepted_set():
    expected = {
        "5^6",
        "5^4,4^2",
        "5^3,4^2,3",
        "5^2,4^4",
        "5^2,4^2,3^2",
        "5^2,3^4",
    }
    got = set()
    from potseq.search import enumerate_graphic_sequences

    for s in enumerate_graphic_sequences(6):
        if decide_k6c4(s).is_yes:
            got.add(render_notation(s))
    assert got == expected


# --- K5-C4 decider ----------------------------------------------------------


@pytest.mark.parametrize(
    "text,decision,reason",
    [
        ("4,2^5", "no", "COND2_FIXED"),
        ("4,2^6", "no", "COND2_FIXED"),
        ("4,2^7", "yes", "OK"),
        ("4^2,2^4", "no", "COND2_FAMILY_SQUARE"),
        ("5^2,2^5", "no", "COND2_FAMILY_SQUARE"),
        ("4^5", "yes", "OK"),
        ("3^4,2", "no", "COND1_D1"),
        ("4,2^2,1^2", "no", "COND1_D5"),
        ("3^4", "no", "TOO_SHORT"),
        ("5,4,2^3,1", "no", "COND2_FAMILY_KI"),
        ("5,5,2^4", "no", "COND2_FAMILY_KI"),
        # family miss at n=7: decided yes, confirmed by the exhaustive oracle
        ("4,4,2^3,1^2", "yes", "OK"),
    ],
)
def test_decide_k5c4(text, decision, reason):
    v = decide_k5c4(seq(text))
    assert (v.decision, v.reason) == (decision, reason)


def test_decide_k5c4_family_parameters():
    v = decide_k5c4(seq("5,4,2^3,1"))
    assert (v.family_k, v.family_i) == (1, 3)
    v = decide_k5c4(seq("5,5,2^4"))
    assert (v.family_k, v.family_i) == (1, 4)


# --- sigma formula ----------------------------------------------------------


@pytest.mark.parametrize("n,value", [(6, 26), (7, 32), (10, 50), (100, 590)])
def test_sigma_formula(n, value):
    assert sigma_formula_k6c4(n) == value


def test_sigma_formula_domain():
    with pytest.raises(ValueError):
        sigma_formula_k6c4(5)


# --- explain ----------------------------------------------------------------


@pytest.mark.parametrize(
    "text,target,line",
    [
        ("6^3,3^4", "k6", "fails condition (2): d1+d2+d3 = 18 > n+2k+t+1 = 16"),
        ("5^2,4^6", "k6", "matches exception (5^2,4^6)"),
        ("5^2,4^5", "k6", "potentially K6-C4-graphic"),
        ("4^6", "k6", "fails condition (1): d2 = 4 < 5"),
        ("3^3,1", "k6", "not graphic"),
        ("2^3", "k6", "too short: n = 3 < 6"),
        ("6,5,3^5", "k6", "matches exception family (n-1,5,3^5,1^(n-7)) at n = 7"),
        (
            "6,5^2,3^4",
            "k6",
            "fails condition (2) in exact residual form: head demand has no tail embedding",
        ),
        ("4^5", "k5", "potentially K5-C4-graphic"),
        ("4^2,2^4", "k5", "matches exception family ((n-2)^2,2^(n-2)) at n = 6"),
        (
            "5,4,2^3,1",
            "k5",
            "matches exception family (n-k,k+i,2^i,1^(n-i-2)) with k = 1, i = 3",
        ),
    ],
)
def test_explain_snapshots(text, target, line):
    decide = decide_k6c4 if target == "k6" else decide_k5c4
    assert explain(decide(seq(text))) == line
