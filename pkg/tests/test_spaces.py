import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wallman import gen
from wallman.errors import NotDistributive, NotGenerating
from wallman.filters import enumerate_filters
from wallman.lattice import atoms, is_distributive
from wallman.spaces import (
    alexander_check,
    build_space,
    finite_separative_is_boolean,
    separation_axioms,
    ultrafilter_generated_by,
    theorem_suite,
)

small_lattices = st.builds(
    gen.random_downset_lattice,
    st.integers(1, 6),
    st.integers(0, 10**6),
)


def test_build_space_powerset3(powerset3):
    S = build_space(powerset3, "ultra")
    assert S.size == 3
    # discrete: every subset of points closed
    assert len(S.closed_family()) == 8


def test_build_space_chain3_prime(chain3):
    S = build_space(chain3, "prime")
    assert S.size == 2
    labels = {S.point_label(i) for i in range(S.size)}
    assert labels == {"^m", "^1"}
    closed = S.closed_family()
    m_plus = S.a_plus[chain3.id_of("m")]
    assert closed == frozenset({0, S.full, m_plus})
    # the point ^1 is not closed
    i1 = next(i for i in range(S.size) if S.point_label(i) == "^1")
    assert (1 << i1) not in closed


def test_build_space_fivepoint(fivepoint):
    S = build_space(fivepoint, "ultra")
    assert S.size == 2
    assert len(S.closed_family()) == 4  # discrete on 2 points


def test_a_minus_complements(chain3):
    S = build_space(chain3, "prime")
    for a in range(chain3.n):
        assert S.a_minus(a) == S.full & ~S.a_plus[a]


def test_separation_examples(chain3, powerset3):
    pf = separation_axioms(build_space(chain3, "prime"))
    assert pf.t0 and not pf.t1
    i, j = pf.witnesses["t1"]
    assert i != j
    ult = separation_axioms(build_space(powerset3, "ultra"))
    assert ult.t1 and ult.hausdorff


def test_suite_powerset3(powerset3):
    rep = theorem_suite(powerset3)
    assert rep.all_asserted_hold()
    assert rep.ult_equals_pf and rep.boolean


def test_suite_chain3(chain3):
    rep = theorem_suite(chain3)
    assert rep.all_asserted_hold()
    assert not rep.ult_equals_pf and not rep.boolean


def test_suite_fivepoint_regression(fivepoint):
    # documented shadow: ult(FIVEPOINT) is Hausdorff but the lattice is
    # not normal, so the converse direction is observed as false
    rep = theorem_suite(fivepoint)
    assert rep.all_asserted_hold()
    assert not rep.ult_hausdorff_implies_normal


def test_suite_needs_distributive(n5):
    with pytest.raises(NotDistributive):
        theorem_suite(n5)


@given(small_lattices)
@settings(max_examples=40, deadline=None)
def test_suite_on_random_lattices(L):
    rep = theorem_suite(L)
    assert rep.all_asserted_hold()


@given(small_lattices)
@settings(max_examples=40, deadline=None)
def test_closed_sets_of_pf_are_basic(L):
    S = build_space(L, "prime")
    assert S.closed_family() == frozenset(S.a_plus) | {S.full}


def test_separative_corollary_corpus(corpus):
    for L in corpus.values():
        assert finite_separative_is_boolean(L)


@given(small_lattices)
@settings(max_examples=50, deadline=None)
def test_separative_corollary_random(L):
    assert finite_separative_is_boolean(L)


def test_ultrafilter_generated_by(powerset3, fivepoint):
    P = powerset3
    all_g = list(range(P.n))
    singles = list(atoms(P))
    coatoms = [a for a in range(P.n) if P.up_mask(a).bit_count() == 2]
    for p in enumerate_filters(P, "ultra", "brute"):
        assert ultrafilter_generated_by(P, all_g, p)
        assert ultrafilter_generated_by(P, singles + coatoms, p)
    a = fivepoint.id_of("a")
    b = fivepoint.id_of("b")
    p = enumerate_filters(fivepoint, "ultra", "brute")
    p_a = next(q for q in p if q.min_element() == a)
    assert ultrafilter_generated_by(fivepoint, [a, b], p_a)


def test_not_generating(powerset3):
    p = enumerate_filters(powerset3, "ultra", "brute")[0]
    with pytest.raises(NotGenerating):
        ultrafilter_generated_by(powerset3, [powerset3.bottom], p)


def test_alexander_check(corpus, fivepoint):
    P2 = corpus["powerset2"]
    assert alexander_check(P2, range(P2.n))
    assert alexander_check(P2, atoms(P2))
    g = [fivepoint.id_of(x) for x in ("a", "b", "c")]
    assert alexander_check(fivepoint, g)


@given(small_lattices)
@settings(max_examples=25, deadline=None)
def test_alexander_on_random_lattices(L):
    if L.n > 16:
        return
    assert is_distributive(L)[0]
    assert alexander_check(L, range(L.n))
