import pytest

from copeland import (Outcome, election_from_orders, format_cot,
                      format_election, outcome_table, parse_cot,
                      parse_election, vs_matrix)

SAMPLE = """\
ELECTION v1
# the odd worked example
CANDIDATES c0 c1 c2 c3
ORDER 1 : c0 c1 c2 c3
ORDER 1 : c3 c2 c1 c0
ORDER 1 : c2 c0 c3 c1
"""


def test_parse_sample_orders():
    E = parse_election(SAMPLE)
    assert E.names == ("c0", "c1", "c2", "c3")
    assert E.total_voters == 3
    assert vs_matrix(E)[2] == [1, 1, 0, 1]


def test_election_round_trip():
    E = parse_election(SAMPLE)
    text = format_election(E)
    assert parse_election(text) == E
    assert format_election(parse_election(text)) == text


def test_parse_table_voter():
    text = ("ELECTION v1\nCANDIDATES a b c\n"
            "TABLE 2 : a>b c>a b>c\n")
    E = parse_election(text)
    assert E.total_voters == 2
    assert not E.voters[0].pref.is_order
    assert vs_matrix(E) == [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
    assert parse_election(format_election(E)) == E


def test_parse_multiplicity():
    text = "ELECTION v1\nCANDIDATES a b\nORDER 3 : b a\n"
    E = parse_election(text)
    assert E.total_voters == 3
    assert vs_matrix(E)[1][0] == 3


@pytest.mark.parametrize("bad", [
    "CANDIDATES a b\nORDER 1 : a b\n",                      # no header
    "ELECTION v2\nCANDIDATES a b\n",                        # wrong version
    "ELECTION v1\nORDER 1 : a b\n",                         # no candidates
    "ELECTION v1\nCANDIDATES a a\n",                        # duplicate name
    "ELECTION v1\nCANDIDATES a b-c\n",                      # bad charset
    "ELECTION v1\nCANDIDATES a b\nORDER 0 : a b\n",         # mult < 1
    "ELECTION v1\nCANDIDATES a b\nORDER x : a b\n",         # mult not int
    "ELECTION v1\nCANDIDATES a b\nORDER 1 : a\n",           # missing name
    "ELECTION v1\nCANDIDATES a b\nORDER 1 : a b b\n",       # repeated name
    "ELECTION v1\nCANDIDATES a b\nORDER 1 : a c\n",         # unknown name
    "ELECTION v1\nCANDIDATES a b c\nTABLE 1 : a>b\n",       # partial table
    "ELECTION v1\nCANDIDATES a b\nTABLE 1 : a>b b>a\n",     # pair repeated
    "ELECTION v1\nCANDIDATES a b\nTABLE 1 : ab\n",          # malformed token
    "ELECTION v1\nCANDIDATES a b\nVOTE 1 : a b\n",          # unknown line
])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_election(bad)


def test_cot_round_trip():
    E = parse_election(SAMPLE)
    cot = outcome_table(E)
    text = format_cot(cot)
    assert parse_cot(text) == cot
    assert format_cot(parse_cot(text)) == text


def test_cot_parse_without_candidates_line():
    text = "COT v1\nPAIR a b tie\nPAIR a c a\nPAIR b c c\n"
    cot = parse_cot(text)
    assert cot.names == ("a", "b", "c")
    assert cot.outcome[(0, 1)] is Outcome.TIE
    assert cot.sign(0, 2) == 1
    assert cot.sign(2, 1) == 1


@pytest.mark.parametrize("bad", [
    "PAIR a b a\n",                                   # no header
    "COT v1\nPAIR a b x\n",                           # result not a name
    "COT v1\nPAIR a b a\nPAIR b a tie\n",             # duplicate pair
    "COT v1\nCANDIDATES a b c\nPAIR a b a\n",         # missing pairs
    "COT v1\nPAIR a b\n",                             # short line
    "COT v1\n",                                       # no candidates at all
])
def test_cot_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_cot(bad)


def test_comments_and_blank_lines_ignored():
    text = ("# leading comment\nELECTION v1\n\nCANDIDATES a b  # two\n"
            "ORDER 1 : a b # best first\n")
    E = parse_election(text)
    assert E.names == ("a", "b")
    assert E.total_voters == 1


def test_format_is_deterministic():
    E = election_from_orders(["a", "b", "c"], [[2, 0, 1], ([1, 2, 0], 4)])
    assert format_election(E) == format_election(E)
    assert "ORDER 4 : b c a" in format_election(E)
