"""Finite Wallman spaces: prime-filter and ultrafilter spaces of a lattice.

Points are filters; the topology is generated by the open sets a⁻ (filters
not containing a).  Topologies are stored as families of closed point
bitsets, materialized by closing the basic family {a⁺} under intersection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .bits import bit, iter_bits, subset
from .errors import NotDistributive, NotGenerating, TooLarge
from .filters import (
    FilterSet,
    _prime_scan,
    enumerate_filters,
    generated_filter,
    is_ultra,
)
from .lattice import (
    FiniteLattice,
    is_boolean,
    is_distributive,
    is_generating,
    is_normal,
    is_separative,
)


@dataclass(frozen=True)
class WallmanSpace:
    """Point set of filters with the closed base {a⁺ : a in L}."""

    lattice: FiniteLattice
    kind: str  # "prime" or "ultra"
    points: tuple  # FilterSet, ordered by filter-minimum id
    a_plus: tuple  # per lattice element: bitset of point indices

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return bit(len(self.points)) - 1

    def a_minus(self, a: int) -> int:
        return self.full & ~self.a_plus[a]

    def closed_family(self) -> frozenset:
        """All closed sets of the generated topology.

        The closed subbase is {a⁺}; closure under intersection and union
        yields every closed set of the finite space.  For prime points both
        operations collapse into the base itself via the hom law.
        """
        fam = set(self.a_plus) | {self.full}
        while True:
            new = set()
            items = list(fam)
            for i, x in enumerate(items):
                for y in items[i + 1 :]:
                    for z in (x & y, x | y):
                        if z not in fam:
                            new.add(z)
            if not new:
                return frozenset(fam)
            fam |= new

    def point_label(self, i: int) -> str:
        gen = self.points[i].min_element()
        return f"^{self.lattice.names[gen]}"


@dataclass(frozen=True)
class SeparationReport:
    t0: bool
    t1: bool
    hausdorff: bool
    witnesses: dict = field(default_factory=dict)


def build_space(L: FiniteLattice, kind: str = "ultra") -> WallmanSpace:
    if kind not in ("prime", "ultra"):
        raise ValueError(f"unknown space kind {kind!r}")
    pts = enumerate_filters(L, kind, "brute")
    pts.sort(key=lambda f: f.min_element())
    a_plus = []
    for a in range(L.n):
        m = 0
        for i, p in enumerate(pts):
            if p.members >> a & 1:
                m |= bit(i)
        a_plus.append(m)
    space = WallmanSpace(L, kind, tuple(pts), tuple(a_plus))
    _check_hom_law(space)
    return space


def _check_hom_law(S: WallmanSpace) -> None:
    """a ↦ a⁺ must be a lattice homomorphism into the powerset of points.

    The meet half holds for any filter points; the join half is exactly
    primality of the points, so it is skipped when some point is not prime
    (ultrafilters of a non-distributive lattice need not be prime).
    """
    L = S.lattice
    assert S.a_plus[L.bottom] == 0, "0+ must be empty"
    assert S.a_plus[L.top] == S.full, "1+ must be everything"
    all_prime = all(_prime_scan(L, p.members)[0] for p in S.points)
    for a in range(L.n):
        for b in range(a, L.n):
            assert S.a_plus[L.meet(a, b)] == S.a_plus[a] & S.a_plus[b]
            if all_prime:
                assert S.a_plus[L.join(a, b)] == S.a_plus[a] | S.a_plus[b]


def separation_axioms(S: WallmanSpace) -> SeparationReport:
    """T0/T1/T2 by definition on the finite topology."""
    n = S.size
    witnesses = {}
    t0 = True
    for i in range(n):
        for j in range(i + 1, n):
            if not any(
                (m >> i & 1) != (m >> j & 1) for m in S.a_plus
            ):
                t0 = False
                witnesses["t0"] = (i, j)
                break
        if not t0:
            break
    t1 = True
    for i in range(n):
        common = S.full
        for m in S.a_plus:
            if m >> i & 1:
                common &= m
        if common != bit(i):
            t1 = False
            j = next(k for k in iter_bits(common) if k != i)
            witnesses["t1"] = (i, j)
            break
    hausdorff = True
    opens = [S.full & ~c for c in S.closed_family()]
    for i in range(n):
        for j in range(i + 1, n):
            if not any(
                u >> i & 1 and v >> j & 1 and u & v == 0
                for u in opens
                for v in opens
            ):
                hausdorff = False
                witnesses["hausdorff"] = (i, j)
                break
        if not hausdorff:
            break
    return SeparationReport(t0, t1, hausdorff, witnesses)


# ---------------------------------------------------------------------------
# theorem suite


@dataclass(frozen=True)
class SuiteReport:
    """Finite-scale clauses of the prime/ultrafilter space theorem.

    Each biconditional is split into separately reported implications;
    ult_hausdorff_implies_normal is observed, not asserted (FIVEPOINT is
    the documented counterexample at finite scale without separativity).
    """

    pf_t0: bool
    pf_t1_implies_boolean: bool
    boolean_implies_pf_hausdorff: bool
    closed_sets_are_basic: bool
    ult_t1: bool
    normal_implies_ult_hausdorff: bool
    ult_hausdorff_implies_normal: bool
    ult_equals_pf: bool
    boolean: bool
    ult_equals_pf_iff_boolean: bool

    def all_asserted_hold(self) -> bool:
        return (
            self.pf_t0
            and self.pf_t1_implies_boolean
            and self.boolean_implies_pf_hausdorff
            and self.closed_sets_are_basic
            and self.ult_t1
            and self.normal_implies_ult_hausdorff
            and self.ult_equals_pf_iff_boolean
        )


def theorem_suite(L: FiniteLattice) -> SuiteReport:
    dist, wit = is_distributive(L)
    if not dist:
        raise NotDistributive("suite needs a distributive lattice", witness=wit)
    pf = build_space(L, "prime")
    ult = build_space(L, "ultra")
    pf_sep = separation_axioms(pf)
    ult_sep = separation_axioms(ult)
    boolean = is_boolean(L)
    normal, _ = is_normal(L, require_distributive=False)
    closed_basic = pf.closed_family() == frozenset(pf.a_plus) | {pf.full}
    ult_eq_pf = {p.members for p in ult.points} == {
        p.members for p in pf.points
    }
    return SuiteReport(
        pf_t0=pf_sep.t0,
        pf_t1_implies_boolean=(not pf_sep.t1) or boolean,
        boolean_implies_pf_hausdorff=(not boolean) or pf_sep.hausdorff,
        closed_sets_are_basic=closed_basic,
        ult_t1=ult_sep.t1,
        normal_implies_ult_hausdorff=(not normal) or ult_sep.hausdorff,
        ult_hausdorff_implies_normal=(not ult_sep.hausdorff) or normal,
        ult_equals_pf=ult_eq_pf,
        boolean=boolean,
        ult_equals_pf_iff_boolean=ult_eq_pf == boolean,
    )


def finite_separative_is_boolean(L: FiniteLattice) -> bool:
    """separative and distributive implies Boolean (finite lattices)."""
    sep, _ = is_separative(L)
    dist, _ = is_distributive(L)
    if sep and dist:
        return is_boolean(L)
    return True


# ---------------------------------------------------------------------------
# generating sets


def ultrafilter_generated_by(L: FiniteLattice, G: Iterable[int], p) -> bool:
    """Does p ∩ G generate the ultrafilter p?  G must generate L."""
    G = list(G)
    if not is_generating(L, G):
        raise NotGenerating("the given set does not generate the lattice")
    members = p.members if isinstance(p, FilterSet) else p
    assert is_ultra(L, members), "p must be an ultrafilter"
    trace = [g for g in G if members >> g & 1]
    return generated_filter(L, trace).members == members


def alexander_check(L: FiniteLattice, G: Iterable[int], cap: int = 16) -> bool:
    """Subbase compactness at finite scale: every centered subset of G
    extends to an ultrafilter iff every centered subset of L does."""
    G = sorted(set(G))
    if not is_generating(L, G):
        raise NotGenerating("the given set does not generate the lattice")
    if len(G) > cap or L.n > cap:
        raise TooLarge("centered-subset scan beyond the cap")
    ultras = [u.members for u in enumerate_filters(L, "ultra", "brute")]

    def every_centered_extends(universe) -> bool:
        # DFS over centered subsets, pruning on the running meet
        def rec(i: int, meet_so_far: int, chosen: int) -> bool:
            if chosen and not any(subset(chosen, u) for u in ultras):
                return False
            for j in range(i, len(universe)):
                g = universe[j]
                m = L.meet(meet_so_far, g)
                if m == L.bottom:
                    continue
                if not rec(j + 1, m, chosen | bit(g)):
                    return False
            return True

        return rec(0, L.top, 0)

    side_g = every_centered_extends(G)
    side_l = every_centered_extends(
        [a for a in range(L.n) if a != L.bottom]
    )
    return side_g == side_l
