"""Lattice homomorphisms, induced continuous maps, functor laws and the
0-dimensionalization construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bits import bit
from .errors import (
    NotAHom,
    NotComposable,
    NotNormal,
    PreconditionFailed,
    WallmanError,
)
from .filters import (
    FilterSet,
    is_prime,
    is_ultra,
    unique_ultrafilter_extension,
    ultrafilter_extensions,
)
from .lattice import (
    FiniteLattice,
    is_boolean,
    is_normal,
    is_separative,
)
from .spaces import WallmanSpace, build_space


@dataclass(frozen=True)
class LatticeHom:
    """Element map between two lattices; h(0)=0, h(1)=1, preserves ∧,∨."""

    source: FiniteLattice
    target: FiniteLattice
    map: tuple  # element id of source -> element id of target

    def __call__(self, a: int) -> int:
        return self.map[a]

    def preimage_filter(self, p) -> int:
        """Bitset h⁻¹(p) in the source, for p a filter bitset / FilterSet."""
        members = p.members if isinstance(p, FilterSet) else p
        out = 0
        for a, ha in enumerate(self.map):
            if members >> ha & 1:
                out |= bit(a)
        return out

    def image_ids(self) -> tuple:
        return tuple(sorted(set(self.map)))

    def kernel(self) -> tuple:
        """Elements mapped to 0."""
        z = self.target.bottom
        return tuple(a for a, ha in enumerate(self.map) if ha == z)


def identity_hom(L: FiniteLattice) -> LatticeHom:
    return LatticeHom(L, L, tuple(range(L.n)))


def compose(g: LatticeHom, h: LatticeHom) -> LatticeHom:
    """g after h; needs h.target == g.source."""
    if h.target is not g.source and h.target != g.source:
        raise NotComposable("target of h is not the source of g")
    return LatticeHom(h.source, g.target, tuple(g.map[x] for x in h.map))


def verify_hom(h: LatticeHom) -> tuple:
    """Definitional check; returns (flag, witness_pair)."""
    K, L, f = h.source, h.target, h.map
    if len(f) != K.n:
        return (False, ("size", len(f)))
    if f[K.bottom] != L.bottom:
        return (False, ("bottom", K.bottom))
    if f[K.top] != L.top:
        return (False, ("top", K.top))
    for a in range(K.n):
        for b in range(a + 1, K.n):
            if f[K.meet(a, b)] != L.meet(f[a], f[b]):
                return (False, ("meet", a, b))
            if f[K.join(a, b)] != L.join(f[a], f[b]):
                return (False, ("join", a, b))
    return (True, None)


@dataclass(frozen=True)
class SpaceMap:
    """Point map between Wallman spaces, with a continuity certificate."""

    source: WallmanSpace
    target: WallmanSpace
    point_map: tuple

    def is_continuous(self) -> bool:
        """Preimage of every basic closed set of the target is closed."""
        closed = self.source.closed_family()
        for m in self.target.a_plus:
            pre = 0
            for i, fi in enumerate(self.point_map):
                if m >> fi & 1:
                    pre |= bit(i)
            if pre not in closed:
                return False
        return True

    def is_surjective(self) -> bool:
        return set(self.point_map) == set(range(self.target.size))

    def is_injective(self) -> bool:
        return len(set(self.point_map)) == len(self.point_map)


def _require_hom(h: LatticeHom) -> None:
    ok, wit = verify_hom(h)
    if not ok:
        raise NotAHom(f"not a homomorphism, witness {wit}", witness=wit)


def induced_map(
    h: LatticeHom,
    source_space: Optional[WallmanSpace] = None,
    target_space: Optional[WallmanSpace] = None,
    require_normal: bool = True,
) -> SpaceMap:
    """ult(h): ult(L) -> ult(K) for h: K -> L, sending p to the unique
    ultrafilter extension of h⁻¹(p).  Both lattices are required normal so
    the extension cannot be ambiguous; continuity is verified."""
    _require_hom(h)
    if require_normal:
        for side, lab in ((h.source, "source"), (h.target, "target")):
            norm, wit = is_normal(side, require_distributive=False)
            if not norm:
                raise NotNormal(f"{lab} lattice not normal, witness {wit}")
    K, L = h.source, h.target
    ult_l = source_space or build_space(L, "ultra")
    ult_k = target_space or build_space(K, "ultra")
    index = {u.members: i for i, u in enumerate(ult_k.points)}
    pm = []
    for p in ult_l.points:
        pre = h.preimage_filter(p)
        prime, wit = is_prime(K, pre)
        assert prime, f"preimage of an ultrafilter not prime: {wit}"
        if pre in index:
            ext = pre
        else:
            ext = unique_ultrafilter_extension(K, FilterSet(K, pre)).members
        pm.append(index[ext])
    sm = SpaceMap(ult_l, ult_k, tuple(pm))
    assert sm.is_continuous(), "induced map failed the continuity check"
    return sm


def is_separative_hom(h: LatticeHom) -> tuple:
    """h(a)∧b = 0 forces some c with a∧c = 0 and b <= h(c)."""
    _require_hom(h)
    K, L = h.source, h.target
    for a in range(K.n):
        ha = h(a)
        for b in range(L.n):
            if L.meet(ha, b) != L.bottom:
                continue
            if not any(
                K.meet(a, c) == K.bottom and L.leq(b, h(c))
                for c in range(K.n)
            ):
                return (False, (a, b))
    return (True, None)


@dataclass(frozen=True)
class SeparativityReport:
    separative: bool
    preimages_ultra: bool
    preimage_law: bool

    def all_equivalent(self) -> bool:
        return self.separative == self.preimages_ultra == self.preimage_law


def separativity_equivalence(h: LatticeHom, unchecked: bool = False) -> SeparativityReport:
    """Three-way characterization of separative homomorphisms.

    Hypotheses: both lattices normal and separative (finite scale forces
    Boolean).  With unchecked=True the three conditions are evaluated
    without asserting their equivalence.
    """
    _require_hom(h)
    failed = []
    for side, lab in ((h.source, "source"), (h.target, "target")):
        if not is_normal(side, require_distributive=False)[0]:
            failed.append(f"{lab}-normal")
        if not is_separative(side)[0]:
            failed.append(f"{lab}-separative")
    if failed and not unchecked:
        raise PreconditionFailed(
            f"hypotheses fail: {', '.join(failed)}", failed=failed
        )
    K, L = h.source, h.target
    sep = is_separative_hom(h)[0]
    ult_l = build_space(L, "ultra")
    preimages_ultra = all(
        is_ultra(K, h.preimage_filter(p)) for p in ult_l.points
    )
    try:
        sm = induced_map(h, require_normal=False)
    except WallmanError:
        law = False
    else:
        law = True
        ult_k = sm.target
        for a in range(K.n):
            target_mask = ult_k.a_plus[a]
            pre = 0
            for i, fi in enumerate(sm.point_map):
                if target_mask >> fi & 1:
                    pre |= bit(i)
            if pre != sm.source.a_plus[h(a)]:
                law = False
                break
    report = SeparativityReport(sep, preimages_ultra, law)
    if not failed:
        assert report.all_equivalent(), "equivalence fails under hypotheses"
    return report


def functor_laws(g: LatticeHom, h: LatticeHom) -> bool:
    """ult(g∘h) = ult(h)∘ult(g) pointwise, and ult(id) = id."""
    gh = compose(g, h)
    m_gh = induced_map(gh)
    m_g = induced_map(g)
    m_h = induced_map(h, source_space=m_g.target, target_space=m_gh.target)
    composed = tuple(m_h.point_map[i] for i in m_g.point_map)
    idm = induced_map(identity_hom(h.source))
    id_ok = idm.point_map == tuple(range(idm.source.size))
    return m_gh.point_map == composed and id_ok


@dataclass(frozen=True)
class KernelReport:
    kernel_trivial: bool
    surjective: Optional[bool]  # None when the antecedent fails
    converse_observation: bool  # surjective and yet kernel nontrivial?


def surjectivity_from_kernel(h: LatticeHom) -> KernelReport:
    """h⁻¹(0) = {0} implies ult(h) surjective; converse only observed."""
    _require_hom(h)
    kernel = h.kernel()
    trivial = kernel == (h.source.bottom,)
    sm = induced_map(h, require_normal=False)
    surj = sm.is_surjective()
    if trivial:
        assert surj, "trivial kernel must give a surjection"
        return KernelReport(True, True, False)
    return KernelReport(False, surj, surj)


def image_separates(h: LatticeHom) -> bool:
    """Does the image of h separate disjoint pairs of the target lattice?"""
    L = h.target
    img = h.image_ids()
    for a in range(L.n):
        for b in range(L.n):
            if L.meet(a, b) != L.bottom:
                continue
            if not any(
                L.leq(a, c) and L.meet(c, b) == L.bottom for c in img
            ):
                return False
    return True


@dataclass(frozen=True)
class EmbeddingReport:
    separating_image: bool
    injective: Optional[bool]


def embedding_from_separation(h: LatticeHom) -> EmbeddingReport:
    """Image separating the target implies ult(h) injective."""
    _require_hom(h)
    sep = image_separates(h)
    sm = induced_map(h, require_normal=False)
    inj = sm.is_injective()
    if sep:
        assert inj, "separating image must give an injection"
        return EmbeddingReport(True, True)
    return EmbeddingReport(False, inj)


# ---------------------------------------------------------------------------
# 0-dimensionalization


@dataclass(frozen=True)
class AlexandrovResult:
    algebra: FiniteLattice  # Boolean algebra over the ultrafilter points
    hom: LatticeHom  # j: L -> algebra, a -> a⁺
    onto: SpaceMap  # ult(algebra) -> ult(L), surjective
    kernel: tuple  # elements a with a⁺ empty (only 0 at finite scale)


def alexandrov(L: FiniteLattice) -> AlexandrovResult:
    """Boolean algebra generated by {a⁺} inside the powerset of ult(L),
    with the induced surjection of its ultrafilter space onto ult(L)."""
    space = build_space(L, "ultra")
    full = space.full
    masks = set(space.a_plus) | {0, full}
    while True:
        items = list(masks)
        new = set()
        for i, x in enumerate(items):
            c = full & ~x
            if c not in masks:
                new.add(c)
            for y in items[i + 1 :]:
                if x & y not in masks:
                    new.add(x & y)
                if x | y not in masks:
                    new.add(x | y)
        if not new:
            break
        masks |= new
    keys = sorted(masks)
    B = FiniteLattice.from_keys(
        keys, name=f"bool({L.name})" if L.name else "bool", verify=False
    )
    assert is_boolean(B), "generated algebra must be Boolean"
    key_index = {k: i for i, k in enumerate(keys)}
    j = LatticeHom(L, B, tuple(key_index[space.a_plus[a]] for a in range(L.n)))
    ok, wit = verify_hom(j)
    assert ok, f"a -> a⁺ failed the homomorphism check: {wit}"
    kernel = j.kernel()
    ult_b = build_space(B, "ultra")
    index = {u.members: i for i, u in enumerate(space.points)}
    pm = []
    for p in ult_b.points:
        pre = j.preimage_filter(p)
        if pre in index:
            pm.append(index[pre])
        else:
            exts = ultrafilter_extensions(L, pre)
            assert len(exts) == 1, "ambiguous extension in the point chase"
            pm.append(index[exts[0].members])
    sm = SpaceMap(ult_b, space, tuple(pm))
    assert sm.is_continuous(), "onto map failed the continuity check"
    if kernel == (L.bottom,):
        assert sm.is_surjective(), "trivial kernel must give a surjection"
    return AlexandrovResult(B, j, sm, kernel)
