import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wallman import gen
from wallman.errors import NoBounds, NotALattice, NotAPoset, NotDistributive
from wallman.lattice import (
    FiniteLattice,
    atoms,
    attach_bottom,
    chain_lattice,
    generated_sublattice,
    is_boolean,
    is_distributive,
    is_generating,
    is_normal,
    is_separative,
    join_irreducibles,
    lattice_report,
    load_lattice,
    opposite,
    powerset_lattice,
)

small_lattices = st.builds(
    gen.random_downset_lattice,
    st.integers(1, 6),
    st.integers(0, 10**6),
)


# -- loading ----------------------------------------------------------------


def test_load_one_element():
    L = load_lattice({"elements": ["e"], "covers": []})
    assert L.n == 1 and L.bottom == L.top == 0


def test_load_n5(n5):
    assert n5.n == 5
    assert n5.names[n5.bottom] == "0" and n5.names[n5.top] == "1"


def test_load_cycle_rejected():
    with pytest.raises(NotAPoset):
        load_lattice({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})


def test_load_missing_bounds():
    with pytest.raises(NoBounds):
        load_lattice({"elements": ["a", "b"], "covers": []})


def test_load_missing_sup():
    # two maximal elements over two minimal ones: no join of the minima
    with pytest.raises((NotALattice, NoBounds)):
        load_lattice(
            {
                "elements": ["0", "a", "b", "x", "y", "1"],
                "covers": [
                    ["0", "a"], ["0", "b"],
                    ["a", "x"], ["a", "y"], ["b", "x"], ["b", "y"],
                    ["x", "1"], ["y", "1"],
                ],
            }
        )


# -- predicates -------------------------------------------------------------


def test_distributive_examples(corpus):
    assert is_distributive(corpus["powerset2"])[0]
    flag, wit = is_distributive(corpus["n5"])
    assert not flag and wit is not None
    a, b, c = wit
    L = corpus["n5"]
    assert L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))
    assert not is_distributive(corpus["m3"])[0]


def test_normal_examples(chain3, fivepoint, powerset3):
    assert is_normal(chain3)[0]
    flag, wit = is_normal(fivepoint)
    assert not flag
    assert sorted(fivepoint.names[x] for x in wit) == ["a", "b"]
    assert is_normal(powerset3)[0]


def test_normal_requires_distributivity(n5):
    with pytest.raises(NotDistributive):
        is_normal(n5)
    # the bare predicate is still available
    flag, _ = is_normal(n5, require_distributive=False)
    assert isinstance(flag, bool)


def test_separative_examples(corpus, chain3, fivepoint):
    assert is_separative(corpus["powerset2"])[0]
    flag, wit = is_separative(chain3)
    assert not flag
    assert (chain3.names[wit[0]], chain3.names[wit[1]]) == ("1", "m")
    flag, wit = is_separative(fivepoint)
    assert not flag
    assert (fivepoint.names[wit[0]], fivepoint.names[wit[1]]) == ("1", "c")


def test_boolean_examples(corpus, chain3, fivepoint):
    assert is_boolean(corpus["powerset3"])
    assert not is_boolean(chain3)
    assert not is_boolean(fivepoint)


def test_report_witnesses_recheck(n5):
    rep = lattice_report(n5)
    assert not rep.is_distributive and "distributive" in rep.witnesses


# -- constructions ----------------------------------------------------------


def test_opposite_involution(corpus):
    for L in corpus.values():
        assert opposite(opposite(L)) == L


def test_opposite_chain(chain3):
    op = opposite(chain3)
    assert op.names[op.bottom] == "1" and op.names[op.top] == "0"


def test_opposite_preserves_distributivity(corpus):
    for L in corpus.values():
        assert is_distributive(L)[0] == is_distributive(opposite(L), force_scan=True)[0]


def test_generated_sublattice_examples(powerset3):
    L = powerset3
    singles = [L.id_of("{0}"), L.id_of("{1}")]
    got = {L.names[x] for x in generated_sublattice(L, singles)}
    assert got == {"{}", "{0}", "{1}", "{0,1}", "{0,1,2}"}
    assert generated_sublattice(L, range(L.n)) == frozenset(range(L.n))
    assert generated_sublattice(L, []) == frozenset({L.bottom, L.top})


@given(small_lattices, st.data())
@settings(max_examples=40, deadline=None)
def test_generated_sublattice_is_closure(L, data):
    ids = data.draw(st.lists(st.integers(0, L.n - 1), max_size=5))
    more = data.draw(st.lists(st.integers(0, L.n - 1), max_size=3))
    cl = generated_sublattice(L, ids)
    assert set(ids) <= cl  # extensive
    assert cl <= generated_sublattice(L, list(ids) + list(more))  # monotone
    assert generated_sublattice(L, cl) == cl  # idempotent


def test_attach_bottom(corpus, m3):
    plus = attach_bottom(corpus["powerset2"])
    assert plus.n == 5
    assert is_normal(plus)[0]
    one = load_lattice({"elements": ["e"], "covers": []})
    two = attach_bottom(one)
    assert two.n == 2 and two.names[two.bottom] == "s"
    assert not is_distributive(attach_bottom(m3))[0]


def test_one_plus_b2_matches_attach_bottom(corpus, one_plus_b2):
    assert attach_bottom(corpus["powerset2"]).n == one_plus_b2.n
    assert is_normal(one_plus_b2)[0]


def test_atoms_and_irreducibles(powerset3, chain3, fivepoint):
    assert len(atoms(powerset3)) == 3
    assert atoms(powerset3) == join_irreducibles(powerset3)
    assert [chain3.names[a] for a in atoms(chain3)] == ["m"]
    assert [chain3.names[a] for a in join_irreducibles(chain3)] == ["m", "1"]
    assert sorted(fivepoint.names[a] for a in atoms(fivepoint)) == ["a", "b"]
    assert sorted(fivepoint.names[a] for a in join_irreducibles(fivepoint)) == [
        "1", "a", "b",
    ]


def test_keyed_atoms_match_table_route():
    L = gen.random_downset_lattice(6, seed=11)
    rows = [L.up_mask(i) for i in range(L.n)]
    T = FiniteLattice.from_up_rows(L.names, rows, check=True)
    assert atoms(L) == atoms(T)
    assert join_irreducibles(L) == join_irreducibles(T)


# -- algebraic laws ---------------------------------------------------------


@given(small_lattices)
@settings(max_examples=30, deadline=None)
def test_lattice_axioms_exhaustive(L):
    assert L.n <= 64
    for a in range(L.n):
        assert L.meet(a, a) == a and L.join(a, a) == a
        for b in range(L.n):
            assert L.meet(a, b) == L.meet(b, a)
            assert L.join(a, b) == L.join(b, a)
            assert L.meet(a, L.join(a, b)) == a  # absorption
            assert L.join(a, L.meet(a, b)) == a


@given(st.builds(gen.random_downset_lattice, st.integers(1, 5), st.integers(0, 10**6)))
@settings(max_examples=25, deadline=None)
def test_lattice_associativity(L):
    for a in range(L.n):
        for b in range(L.n):
            for c in range(L.n):
                assert L.meet(a, L.meet(b, c)) == L.meet(L.meet(a, b), c)
                assert L.join(a, L.join(b, c)) == L.join(L.join(a, b), c)


@given(small_lattices)
@settings(max_examples=40, deadline=None)
def test_downset_lattices_distributive(L):
    assert is_distributive(L, force_scan=True)[0]


@given(small_lattices)
@settings(max_examples=40, deadline=None)
def test_boolean_implies_normal_and_separative(L):
    if is_boolean(L):
        assert is_normal(L)[0]
        assert is_separative(L)[0]


def test_chain_and_powerset_builders():
    assert chain_lattice(4).n == 4
    P = powerset_lattice(3)
    assert P.n == 8 and is_boolean(P)
    assert is_generating(P, atoms(P))
