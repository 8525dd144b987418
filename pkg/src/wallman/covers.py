"""Combinatorial covering certificates on finite ground sets.

Indexed set families with stage sequences, the group/phi round trip, the
certificate poset of (centered set, counter) nodes with its strict order,
rank search with memoization, and the two clopen-style refinements.

Node validity (centeredness) is read over the ground set: the intersection
of the chosen members must be nonempty, the empty choice being vacuously
centered.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from .bits import bit, iter_bits
from .errors import (
    CapTooSmallWarning,
    EmptyPhiValue,
    InvalidNode,
    MissingStages,
    TooLarge,
)

_CENTERED_ENUM_CAP = 18


@dataclass(frozen=True)
class Member:
    """One indexed subset of the ground set, optionally with stages."""

    id: str
    points: int  # bitset over ground indices
    group: int
    stages: Optional[tuple] = None  # increasing bitsets, last == points

    def __post_init__(self):
        if self.group < 0:
            raise ValueError("group indices are naturals")
        if self.stages is not None:
            prev = 0
            for w in self.stages:
                if prev & ~w:
                    raise ValueError(f"stages of {self.id!r} not increasing")
                prev = w
            if not self.stages or self.stages[-1] != self.points:
                raise ValueError(f"stages of {self.id!r} do not exhaust it")


@dataclass(frozen=True)
class CoverFamily:
    ground: tuple  # point labels
    members: tuple  # Member entries; an id may recur across groups

    def __post_init__(self):
        seen = {}
        for m in self.members:
            if m.points >> len(self.ground):
                raise ValueError(f"{m.id!r} leaves the ground set")
            key = (m.id, m.group)
            if key in seen:
                raise ValueError(f"duplicate entry {key}")
            seen[key] = m
            first = next(
                e for e in self.members if e.id == m.id
            )
            if first.points != m.points:
                raise ValueError(
                    f"entries named {m.id!r} disagree on their point set"
                )

    @property
    def ground_mask(self) -> int:
        return bit(len(self.ground)) - 1

    def groups(self) -> dict:
        out: dict = {}
        for m in self.members:
            out.setdefault(m.group, []).append(m)
        return out

    def by_id(self) -> dict:
        out: dict = {}
        for m in self.members:
            out.setdefault(m.id, m)
        return out

    def point_id(self, label) -> int:
        return self.ground.index(label)


def ord_count(x: int, members: Iterable[Member]) -> int:
    """Number of members containing the point with index x."""
    return sum(1 for m in members if m.points >> x & 1)


def is_T0_separating(F: CoverFamily):
    """Some member contains exactly one of every pair of distinct points."""
    n = len(F.ground)
    for x in range(n):
        for y in range(x + 1, n):
            if not any(
                (m.points >> x & 1) != (m.points >> y & 1)
                for m in F.members
            ):
                return (False, (x, y))
    return (True, None)


# ---------------------------------------------------------------------------
# centered subcollections


@dataclass(frozen=True)
class CenteredRankReport:
    max_centered_size: int
    chain: tuple  # descending chain of index tuples, largest first
    max_ord: int  # max over points of ord(x, members)


def centered_poset_rank(
    members: Sequence[Member], ground_mask: int
) -> CenteredRankReport:
    """Longest strictly descending chain of centered subcollections.

    For a finite family a subcollection is centered iff its full
    intersection is nonempty, so the chain length equals the maximum size
    of a centered subcollection; max ord over points is reported alongside
    as the finite-scale point-finiteness figure.
    """
    members = list(members)
    if len(members) > _CENTERED_ENUM_CAP:
        raise TooLarge("centered subcollection scan beyond the cap")
    best: tuple = ()
    stack = [((), ground_mask, 0)]
    while stack:
        chosen, inter, start = stack.pop()
        if len(chosen) > len(best):
            best = chosen
        for i in range(start, len(members)):
            nxt = inter & members[i].points
            if nxt:
                stack.append((chosen + (i,), nxt, i + 1))
    chain = tuple(best[:k] for k in range(len(best), 0, -1))
    max_ord = max(
        (ord_count(x, members) for x in iter_bits(ground_mask)),
        default=0,
    )
    assert len(best) == max_ord or not members, (
        "centered maximum must match the ord maximum on a finite ground"
    )
    return CenteredRankReport(len(best), chain, max_ord)


# ---------------------------------------------------------------------------
# group structure and phi


def phi_from_witness(F: CoverFamily) -> dict:
    """phi(u) = the set of groups whose listing contains u."""
    phi: dict = {}
    for m in F.members:
        phi.setdefault(m.id, set()).add(m.group)
    return {u: frozenset(g) for u, g in phi.items()}


def witness_from_phi(members: Sequence[Member], phi: dict) -> CoverFamily:
    """Regroup members so group m holds exactly those u with m in phi(u)."""
    by_id: dict = {}
    ground_size = 0
    for m in members:
        by_id.setdefault(m.id, m)
        ground_size = max(ground_size, m.points.bit_length())
    entries = []
    for u, m in by_id.items():
        if u not in phi or not phi[u]:
            raise EmptyPhiValue(f"phi value for {u!r} is missing or empty")
        for g in sorted(phi[u]):
            entries.append(Member(u, m.points, g, m.stages))
    ground = tuple(str(i) for i in range(ground_size))
    return CoverFamily(ground, tuple(entries))


def regroup(F: CoverFamily, phi: dict) -> CoverFamily:
    fam = witness_from_phi(F.members, phi)
    return CoverFamily(F.ground, fam.members)


def weakly_sigma_point_finite(
    F: CoverFamily, tau: Optional[int] = None
) -> bool:
    """Every member lies, for each point, in a group of ord below tau.

    tau marks the finitude threshold; the default |members|+1 makes the
    predicate literally true on finite families (no fake infinities).
    """
    if tau is None:
        tau = len(F.members) + 1
    phi = phi_from_witness(F)
    groups = F.groups()
    for x in range(len(F.ground)):
        ords = {g: ord_count(x, ms) for g, ms in groups.items()}
        for m in F.members:
            if not any(ords[g] < tau for g in phi[m.id]):
                return False
    return True


# ---------------------------------------------------------------------------
# the certificate poset


Node = Tuple[FrozenSet[str], int]


def _intersection(F: CoverFamily, ids: Iterable[str]) -> int:
    by_id = F.by_id()
    inter = F.ground_mask
    for u in ids:
        inter &= by_id[u].points
    return inter


def node_is_valid(F: CoverFamily, node: Node) -> bool:
    s, k = node
    return k >= 0 and _intersection(F, s) != 0


def gulko_lt(
    F: CoverFamily,
    a: Node,
    b: Node,
    phi: dict,
    u: str,
    mode: str = "membership",
) -> bool:
    """Strict order on (centered set, counter) nodes.

    (s,k) < (t,l) iff s ⊆ t, k < l, and every group index m in phi(u)
    below k is hit by some v in t∖s.  "Hit" defaults to m ∈ phi(v); the
    displayed singleton reading phi(v) = {m} is kept behind mode
    "equality" for comparison.
    """
    if mode not in ("membership", "equality"):
        raise ValueError(f"unknown mode {mode!r}")
    for node in (a, b):
        if not node_is_valid(F, node):
            raise InvalidNode(f"node {node} is not centered")
    s, k = a
    t, l = b
    if not (s <= t and k < l):
        return False
    fresh = t - s
    for m in phi[u]:
        if m >= k:
            continue
        if mode == "membership":
            if not any(m in phi[v] for v in fresh):
                return False
        else:
            if not any(phi[v] == frozenset((m,)) for v in fresh):
                return False
    return True


def gulko_lt_brute(
    F: CoverFamily,
    a: Node,
    b: Node,
    phi: dict,
    u: str,
    mode: str = "membership",
) -> bool:
    """Independent literal transcription of the order, for cross-checks."""
    for node in (a, b):
        if not node_is_valid(F, node):
            raise InvalidNode(f"node {node} is not centered")
    s, k = a
    t, l = b
    if not all(v in t for v in s):
        return False
    if not k < l:
        return False
    for m in range(k):
        if m not in phi[u]:
            continue
        found = False
        for v in t:
            if v in s:
                continue
            if (mode == "membership" and m in phi[v]) or (
                mode == "equality" and set(phi[v]) == {m}
            ):
                found = True
                break
        if not found:
            return False
    return True


def centered_subsets(F: CoverFamily) -> list:
    """All centered id sets, as (frozenset, intersection mask) pairs."""
    ids = sorted(F.by_id())
    if len(ids) > _CENTERED_ENUM_CAP:
        raise TooLarge("too many members for centered enumeration")
    by_id = F.by_id()
    out = []
    stack = [((), F.ground_mask, 0)]
    while stack:
        chosen, inter, start = stack.pop()
        out.append((frozenset(chosen), inter))
        for i in range(start, len(ids)):
            nxt = inter & by_id[ids[i]].points
            if nxt:
                stack.append((chosen + (ids[i],), nxt, i + 1))
    return out


def max_increasing_chain(
    F: CoverFamily,
    phi: dict,
    u: str,
    k_cap: int,
    mode: str = "membership",
):
    """Longest <-increasing node chain with all counters <= k_cap.

    Depth-first search over centered sets with memoization on (set, k).
    Successor counters are taken as k+1 only: lowering a successor's
    counter weakens every later covering requirement while preserving
    order, so minimal increments are dominant.  Warns when the value is
    still growing at the cap.
    """
    if u not in phi:
        raise KeyError(f"no phi value for {u!r}")
    set_ids = [s for s, _ in centered_subsets(F)]

    def step_ok(s: frozenset, k: int, t: frozenset) -> bool:
        if not s <= t:
            return False
        fresh = t - s
        for m in phi[u]:
            if m >= k:
                continue
            if mode == "membership":
                if not any(m in phi[v] for v in fresh):
                    return False
            else:
                if not any(phi[v] == frozenset((m,)) for v in fresh):
                    return False
        return True

    def rank_at(cap: int):
        memo: dict = {}

        def chain_from(s: frozenset, k: int):
            key = (s, k)
            if key in memo:
                return memo[key]
            best_len, best_tail = 1, ((s, k),)
            if k < cap:
                for t in set_ids:
                    if step_ok(s, k, t):
                        ln, tail = chain_from(t, k + 1)
                        if ln + 1 > best_len:
                            best_len, best_tail = ln + 1, ((s, k),) + tail
            memo[key] = (best_len, best_tail)
            return memo[key]

        best = (0, ())
        for s in set_ids:
            for k0 in range(cap + 1):
                cand = chain_from(s, k0)
                if cand[0] > best[0]:
                    best = cand
        return best

    length, chain = rank_at(k_cap)
    if k_cap > 0:
        prev_len, _ = rank_at(k_cap - 1)
        if prev_len != length:
            warnings.warn(
                f"chain length still growing at k_cap={k_cap}",
                CapTooSmallWarning,
            )
    return length, chain


def max_increasing_chain_brute(
    F: CoverFamily,
    phi: dict,
    u: str,
    k_cap: int,
    mode: str = "membership",
) -> int:
    """Plain DFS over all successor counters, no memo, no dominance."""
    sets = [s for s, _ in centered_subsets(F)]

    def extend(node: Node) -> int:
        best = 1
        s, k = node
        for t in sets:
            for l in range(k + 1, k_cap + 1):
                if gulko_lt_brute(F, node, (t, l), phi, u, mode):
                    best = max(best, 1 + extend((t, l)))
        return best

    best = 0
    for s in sets:
        for k0 in range(k_cap + 1):
            best = max(best, extend((s, k0)))
    return best


def stabilized_rank(
    F: CoverFamily, phi: dict, u: str, mode: str = "membership"
):
    """Rank once the counter cap no longer matters.

    The value stops changing for caps >= max(phi(u)) + |members| + 1; this
    is verified by re-running two caps further out.
    """
    n_members = len(F.by_id())
    cap = max(phi[u]) + n_members + 1
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CapTooSmallWarning)
        length, chain = max_increasing_chain(F, phi, u, cap, mode)
        again, _ = max_increasing_chain(F, phi, u, cap + 2, mode)
    assert again == length, "rank failed to stabilize at the derived cap"
    return length, chain


def rank_upper_bound(F: CoverFamily, phi: dict, u: str) -> int:
    """|members| + min(phi(u)) + 2: counters may idle below min(phi(u)),
    after which every step must enlarge the centered set."""
    return len(F.by_id()) + min(phi[u]) + 2


# ---------------------------------------------------------------------------
# refinements


def cantor_pair(a: int, b: int) -> int:
    """The standard pairing bijection omega x omega -> omega."""
    return (a + b) * (a + b + 1) // 2 + b


@dataclass(frozen=True)
class Refinement:
    family: CoverFamily
    t0_preserved: bool
    ord_transfer_ok: bool
    group_rank_bounds_ok: bool


def _refine(F: CoverFamily, group_key) -> Refinement:
    if any(m.stages is None for m in F.members):
        raise MissingStages("every member needs a stage sequence")
    entries = []
    for m in F.members:
        for k, w in enumerate(m.stages):
            entries.append(
                Member(
                    id=f"{m.id}.g{m.group}.k{k}",
                    points=w,
                    group=group_key(k, m.group),
                    stages=(w,),
                )
            )
    out = CoverFamily(F.ground, tuple(entries))
    was_t0 = is_T0_separating(F)[0]
    t0_preserved = (not was_t0) or is_T0_separating(out)[0]
    # ord transfer: stage-k slices of a group never beat the group itself
    ord_ok = True
    groups_in = F.groups()
    for x in range(len(F.ground)):
        for g, ms in groups_in.items():
            base = ord_count(x, ms)
            ks = {len(m.stages) for m in ms}
            for k in range(max(ks)):
                slice_members = [
                    Member("w", m.stages[k], 0)
                    for m in ms
                    if k < len(m.stages)
                ]
                if ord_count(x, slice_members) > base:
                    ord_ok = False
    # centered-size bound per output group against its source group
    rank_ok = True
    src_rank = {
        g: centered_poset_rank(ms, F.ground_mask).max_centered_size
        for g, ms in groups_in.items()
    }
    for g_out, ms in out.groups().items():
        srcs = {mm.group for mm in F.members for k in range(len(mm.stages))
                if group_key(k, mm.group) == g_out}
        bound = max(src_rank[g] for g in srcs)
        got = centered_poset_rank(ms, F.ground_mask).max_centered_size
        if got > bound:
            rank_ok = False
    return Refinement(out, t0_preserved, ord_ok, rank_ok)


def wiec_refinement(F: CoverFamily) -> Refinement:
    """Stage members out, grouping by (stage, group) through the pairing."""
    return _refine(F, lambda k, n: cantor_pair(k, n))


def rosenthal_refinement(F: CoverFamily) -> Refinement:
    """Same staging with the (group, stage) orientation of the index."""
    return _refine(F, lambda k, n: cantor_pair(n, k))
