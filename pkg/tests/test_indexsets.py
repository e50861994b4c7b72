"""Directed index sets: posets, the natural chain, index maps."""

import pytest

from promov.indexsets import (
    NAT,
    FiniteDirectedPoset,
    IndexMap,
    is_finite_index,
    upper_bound,
    validate_poset,
)


def test_chain_construction():
    p = FiniteDirectedPoset.chain(("a", "b", "c"))
    assert p.leq("a", "c") and not p.leq("c", "a")
    assert p.greatest() == "c"
    assert validate_poset(p) == []


def test_from_pairs_closure():
    p = FiniteDirectedPoset.from_pairs(("x", "y", "z"), [("x", "y"), ("y", "z")])
    assert p.leq("x", "z")  # transitive closure
    assert p.leq("x", "x")  # reflexive closure
    assert validate_poset(p) == []


def test_vee_shape():
    p = FiniteDirectedPoset.from_pairs(("a", "b", "c"), [("a", "c"), ("b", "c")])
    assert not p.leq("a", "b") and not p.leq("b", "a")
    assert p.greatest() == "c"
    assert upper_bound(p, "a", "b") == "c"
    assert p.upper_set("a") == ["a", "c"]


def test_invalid_posets_reported():
    # antisymmetry violation
    bad = FiniteDirectedPoset(("a", "b"), ((True, True), (True, True)))
    assert any("antisymmetry" in v for v in validate_poset(bad))
    # no upper bound for the two maximal elements
    bad = FiniteDirectedPoset(("a", "b"), ((True, False), (False, True)))
    assert any("upper bound" in v for v in validate_poset(bad))


def test_nat_index():
    assert NAT.leq(3, 7) and not NAT.leq(7, 3)
    assert upper_bound(NAT, 4, 9) == 9
    assert not is_finite_index(NAT)
    assert is_finite_index(FiniteDirectedPoset.chain((0,)))


def test_index_maps():
    p = FiniteDirectedPoset.chain(("a", "b"))
    ident = IndexMap.identity(p)
    assert ident("a") == "a"
    table = IndexMap.from_table(p, p, {"a": "b", "b": "b"})
    assert table("a") == "b"
    nat_id = IndexMap.identity(NAT)
    assert nat_id(12) == 12
    with pytest.raises(ValueError):
        IndexMap(p, p)("a")  # neither table nor rule


def test_greatest_requires_directedness():
    bad = FiniteDirectedPoset(("a", "b"), ((True, False), (False, True)))
    with pytest.raises(ValueError):
        bad.greatest()
