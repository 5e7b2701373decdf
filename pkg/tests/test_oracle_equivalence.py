import pytest

from cbsemigroup.crosscheck import cross_validate
from cbsemigroup.oracle import brute_member, certified_cap
from cbsemigroup.semigroup import handle_for
from corpus import CORPUS

RADIUS2 = 2500


def test_corpus_size():
    assert len(CORPUS) >= 20


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_member_matches_brute_member(name):
    body = CORPUS[name]
    h = handle_for(body)
    cap = certified_cap(body, RADIUS2)
    for x in range(51):
        for y in range(51):
            if x * x + y * y <= RADIUS2:
                assert h.member((x, y)) == brute_member(body, (x, y), cap), (x, y)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_cross_validation(name):
    rep = cross_validate(CORPUS[name], RADIUS2)
    assert rep["member_mismatches"] == []
    assert rep["generators_agree"]
    assert rep["cohen_macaulay"][0] == rep["cohen_macaulay"][1]
    assert rep["buchsbaum"][0] == rep["buchsbaum"][1]
