"""Seeded random corpora: down-set lattices, Boolean algebras with homs,
staged T0-separating families.

All randomness flows through ``random.Random(seed)`` — the Mersenne
Twister (MT19937) as shipped with CPython — so corpora reproduce exactly
from the seed.
"""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .bits import bit, iter_bits, popcount, subset
from .covers import CoverFamily, Member, is_T0_separating
from .errors import SizeCap
from .homs import LatticeHom
from .lattice import FiniteLattice, atoms

MAX_POSET_POINTS = 16
MAX_BOOLEAN_ATOMS = 10
MAX_FAMILY_MEMBERS = 14


def random_poset(n_points: int, seed: int, edge_prob: float = 0.3):
    """Strict order on 0..n-1 as up-rows (transitively closed DAG)."""
    if not 0 <= n_points <= MAX_POSET_POINTS:
        raise SizeCap(f"poset points capped at {MAX_POSET_POINTS}")
    rng = random.Random(seed)
    rows = [bit(i) for i in range(n_points)]
    for i in range(n_points):
        for j in range(i + 1, n_points):
            if rng.random() < edge_prob:
                rows[i] |= bit(j)
    for k in range(n_points):
        rk = rows[k]
        kb = bit(k)
        for i in range(n_points):
            if rows[i] & kb:
                rows[i] |= rk
    return rows


def downset_lattice(
    poset_up_rows, name: Optional[str] = None
) -> FiniteLattice:
    """Lattice of down-sets of a poset, in keyed mode (so distributive)."""
    n = len(poset_up_rows)
    down = [0] * n
    for i in range(n):
        for j in iter_bits(poset_up_rows[i]):
            down[j] |= bit(i)
    seen = {0}
    frontier = [0]
    while frontier:
        cur = frontier.pop()
        for x in range(n):
            if cur >> x & 1:
                continue
            if subset(down[x] & ~bit(x), cur):
                nxt = cur | bit(x)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    keys = sorted(seen, key=lambda k: (popcount(k), k))
    return FiniteLattice.from_keys(keys, name=name, verify=False)


def random_downset_lattice(
    n_points: int, seed: int, edge_prob: float = 0.3
) -> FiniteLattice:
    n_points = max(1, n_points)  # size 0 degrades to the 1-point poset
    rows = random_poset(n_points, seed, edge_prob)
    return downset_lattice(rows, name=f"downset{n_points}s{seed}")


def boolean_algebra(k_atoms: int, name: Optional[str] = None) -> FiniteLattice:
    if not 0 <= k_atoms <= MAX_BOOLEAN_ATOMS:
        raise SizeCap(f"atom count capped at {MAX_BOOLEAN_ATOMS}")
    return FiniteLattice.from_keys(
        range(1 << k_atoms), name=name or f"B{k_atoms}", verify=False
    )


def random_boolean_hom(
    src: FiniteLattice, tgt: FiniteLattice, seed: int
) -> LatticeHom:
    """Random homomorphism between Boolean set algebras.

    Built from a random function from target atoms to source atoms, which
    always yields a bounded lattice homomorphism.
    """
    rng = random.Random(seed)
    src_atoms = atoms(src)
    tgt_atoms = atoms(tgt)
    assign = {b: rng.choice(src_atoms) for b in tgt_atoms}
    key_index = {k: i for i, k in enumerate(tgt.keys)}
    images = []
    for a in range(src.n):
        ka = src.keys[a]
        img = 0
        for b in tgt_atoms:
            if subset(src.keys[assign[b]], ka):
                img |= tgt.keys[b]
        images.append(key_index[img])
    return LatticeHom(src, tgt, tuple(images))


def random_staged_family(
    n_members: int, seed: int, n_groups: int = 3
) -> CoverFamily:
    """Staged family over a small ground set, forced T0-separating."""
    if not 1 <= n_members <= MAX_FAMILY_MEMBERS:
        raise SizeCap(f"member count capped at {MAX_FAMILY_MEMBERS}")
    rng = random.Random(seed)
    g = max(3, n_members // 2 + 2)
    full = bit(g) - 1
    members: List[Member] = []
    for i in range(n_members):
        pts = 0
        while not pts:
            pts = rng.getrandbits(g) & full
        stages = _random_stages(rng, pts)
        members.append(Member(f"u{i}", pts, rng.randrange(n_groups), stages))
    fam = CoverFamily(tuple(str(x) for x in range(g)), tuple(members))
    ok, wit = is_T0_separating(fam)
    extra = list(members)
    while not ok:
        x, _ = wit
        extra.append(
            Member(f"sep{x}", bit(x), n_groups, (bit(x),))
        )
        fam = CoverFamily(fam.ground, tuple(extra))
        ok, wit = is_T0_separating(fam)
    return fam


def _random_stages(rng: random.Random, pts: int) -> Tuple[int, ...]:
    n_stages = rng.randint(1, 3)
    stages = [pts]
    cur = pts
    for _ in range(n_stages - 1):
        drop = cur & rng.getrandbits(cur.bit_length() + 1)
        cur &= ~drop
        stages.append(cur)
    stages.reverse()
    while len(stages) > 1 and stages[0] == 0:
        stages.pop(0)
    return tuple(stages)
