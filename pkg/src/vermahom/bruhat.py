"""The descent order on a block-permutation orbit.

Two weights in the same orbit are comparable when a chain of elementary
descent swaps (exchange two equal-size blocks whose entries strictly
descend) connects the larger to the smaller.  Comparability factors over
size classes and each class is decided by a tableau criterion: for every
threshold level, the positions carrying values at or above the level must
sit weakly further right in the smaller weight, slot by slot.

``leq_theta`` implements the tableau criterion; ``leq_bruteforce`` is the
independent reachability oracle over the explicit descent graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import CompositionMismatch, NotComparable, NotSameOrbit
from .weights import BlockWeight, same_orbit
from .weyl import DEFAULT_ORBIT_CAP, enumerate_orbit, orbit_size

REASON_COMPARABLE = "comparable"
REASON_NOT_SAME_ORBIT = "not_same_orbit"
REASON_NOT_COMPARABLE = "not_comparable"


@dataclass(frozen=True)
class ClassTableau:
    """Threshold tableau of one size class.

    ``levels`` are the distinct class values ascending; ``rows[i]`` lists,
    ascending, the block positions whose entry is >= ``levels[i]``.  Row
    lengths depend only on the orbit, not on the tabulated element.
    """

    class_size: int
    positions: tuple[int, ...]
    levels: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ElementaryStep:
    """One descent swap: exchange blocks ``p < q`` with a strict entry drop."""

    p: int
    q: int
    before: BlockWeight
    after: BlockWeight

    def __post_init__(self) -> None:
        comp = self.before.composition
        if not 1 <= self.p < self.q <= comp.k:
            raise ValueError(f"bad block pair ({self.p}, {self.q})")
        if comp.parts[self.p - 1] != comp.parts[self.q - 1]:
            raise ValueError(f"blocks {self.p}, {self.q} differ in size")
        drop = self.before.entries[self.p - 1] - self.before.entries[self.q - 1]
        if drop <= 0:
            raise ValueError(f"swap ({self.p}, {self.q}) does not strictly descend")
        swapped = list(self.before.entries)
        swapped[self.p - 1], swapped[self.q - 1] = swapped[self.q - 1], swapped[self.p - 1]
        if self.after.composition != comp or self.after.entries != tuple(swapped):
            raise ValueError("after weight is not the recorded swap of before")


@dataclass(frozen=True)
class HomDecision:
    """Outcome of the inclusion decision for a (source, target) pair."""

    exists: bool
    reason: str
    chain: tuple[ElementaryStep, ...] | None = None
    witness: "object | None" = None  # Witness; kept loose to avoid an import cycle


@lru_cache(maxsize=1 << 15)
def _class_rows(x: BlockWeight) -> tuple[tuple[int, tuple[int, ...], tuple[int, ...], tuple[tuple[int, ...], ...]], ...]:
    """Per size class: (size, positions, levels, rows of threshold positions).

    Levels are the distinct values of the class, which are constant on the
    orbit, so tableaux of same-orbit weights are directly comparable.
    """
    comp = x.composition
    out = []
    for r in comp.classes:
        positions = comp.class_positions[r]
        vals = tuple(x.entries[j - 1] for j in positions)
        levels = tuple(sorted(set(vals)))
        rows = tuple(
            tuple(j for j, v in zip(positions, vals) if v >= level) for level in levels
        )
        out.append((r, positions, levels, rows))
    return tuple(out)


@lru_cache(maxsize=1 << 15)
def _class_vecs(x: BlockWeight) -> tuple[tuple[int, ...], ...]:
    """Per size class, the tableau positions flattened level by level."""
    return tuple(
        tuple(pos for row in rows for pos in row) for _, _, _, rows in _class_rows(x)
    )


def _tab_vector(x: BlockWeight) -> tuple[int, ...]:
    """All tableau positions flattened: classes ascending, levels ascending."""
    flat: list[int] = []
    for cls in _class_vecs(x):
        flat.extend(cls)
    return tuple(flat)


def class_tableaux(x: BlockWeight) -> list[ClassTableau]:
    """Threshold tableaux of ``x``, one per size class, sizes ascending."""
    return [
        ClassTableau(class_size=r, positions=positions, levels=levels, rows=rows)
        for r, positions, levels, rows in _class_rows(x)
    ]


def leq_theta(src: BlockWeight, tgt: BlockWeight) -> bool:
    """Tableau criterion: does ``src`` sit below ``tgt`` in the descent order?

    Requires the two weights to lie in the same orbit.  True iff every
    tableau position of ``src`` is >= the matching position of ``tgt``.
    """
    if not same_orbit(src, tgt):
        raise NotSameOrbit(f"{src} and {tgt} lie in different orbits")
    for s_cls, t_cls in zip(_class_vecs(src), _class_vecs(tgt)):
        assert len(s_cls) == len(t_cls)
        for a, b in zip(s_cls, t_cls):
            if a < b:
                return False
    return True


def up_moves(x: BlockWeight) -> list[ElementaryStep]:
    """All legal descent swaps out of ``x``, in lexicographic (p, q) order.

    Each returned step moves strictly downward: the swapped pair satisfies
    ``x_p - x_q > 0``.
    """
    comp = x.composition
    steps = []
    entries = x.entries
    for p, q in comp.same_size_pairs:
        if entries[p - 1] > entries[q - 1]:
            after = list(entries)
            after[p - 1], after[q - 1] = after[q - 1], after[p - 1]
            steps.append(
                ElementaryStep(p=p, q=q, before=x, after=BlockWeight(comp, tuple(after)))
            )
    return steps


def _descent_neighbors(comp, entries: tuple[int, ...]):
    """Entry tuples one strict descent swap below ``entries``."""
    for p, q in comp.same_size_pairs:
        if entries[p - 1] > entries[q - 1]:
            swapped = list(entries)
            swapped[p - 1], swapped[q - 1] = swapped[q - 1], swapped[p - 1]
            yield tuple(swapped)


def leq_bruteforce(src: BlockWeight, tgt: BlockWeight, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Reachability oracle: breadth-first search down the descent graph.

    Independent of the tableau criterion; used to validate it.
    """
    if not same_orbit(src, tgt):
        raise NotSameOrbit(f"{src} and {tgt} lie in different orbits")
    size = orbit_size(src)
    if size > cap:
        from .errors import OrbitTooLarge

        raise OrbitTooLarge(f"orbit has {size} elements, cap is {cap}")
    if src == tgt:
        return True
    comp = src.composition
    goal = src.entries
    seen = {tgt.entries}
    queue = deque([tgt.entries])
    while queue:
        cur = queue.popleft()
        for nxt in _descent_neighbors(comp, cur):
            if nxt == goal:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def _bfs_chain(src: BlockWeight, tgt: BlockWeight) -> list[ElementaryStep]:
    """Shortest descent chain from ``tgt`` down to ``src`` via BFS."""
    comp = src.composition
    if src == tgt:
        return []
    parent: dict[tuple[int, ...], tuple[int, ...]] = {tgt.entries: tgt.entries}
    queue = deque([tgt.entries])
    goal = src.entries
    found = False
    while queue and not found:
        cur = queue.popleft()
        for nxt in _descent_neighbors(comp, cur):
            if nxt not in parent:
                parent[nxt] = cur
                if nxt == goal:
                    found = True
                    break
                queue.append(nxt)
    if not found:
        raise NotComparable(f"no descent chain from {tgt} down to {src}")
    # walk back from src to tgt, then emit steps in target-to-source order
    path = [goal]
    while path[-1] != tgt.entries:
        path.append(parent[path[-1]])
    path.reverse()
    steps = []
    for before, after in zip(path, path[1:]):
        diff = [j for j in range(1, comp.k + 1) if before[j - 1] != after[j - 1]]
        p, q = min(diff), max(diff)
        steps.append(
            ElementaryStep(
                p=p, q=q, before=BlockWeight(comp, before), after=BlockWeight(comp, after)
            )
        )
    return steps


def factorize(src: BlockWeight, tgt: BlockWeight) -> list[ElementaryStep]:
    """A descent chain carrying ``tgt`` to ``src``, as elementary steps.

    Greedy: at each point take the lexicographically smallest legal descent
    that stays above ``src``; the lifting property of the order makes this
    succeed, and a BFS over the orbit interval backs it up.  Raises
    NotComparable when ``src`` is not below ``tgt``.
    """
    if not leq_theta(src, tgt):
        raise NotComparable(f"{src} is not below {tgt}")
    comp = src.composition
    class_of = comp.class_index
    src_cls = _class_vecs(src)
    meta = [
        (positions, levels, {j: t for t, j in enumerate(positions)})
        for _, positions, levels, _ in _class_rows(src)
    ]
    chain: list[ElementaryStep] = []
    cur = tgt
    while cur != src:
        entries = cur.entries
        chosen = None
        for p, q in comp.same_size_pairs:
            if entries[p - 1] > entries[q - 1]:
                ci = class_of[p - 1]
                positions, levels, slot = meta[ci]
                # candidate differs from cur only inside this class, and
                # src <= cur is a loop invariant, so one class decides
                vals = [entries[j - 1] for j in positions]
                sp, sq = slot[p], slot[q]
                vals[sp], vals[sq] = vals[sq], vals[sp]
                sv = src_cls[ci]
                t = 0
                ok = True
                for level in levels:
                    for j, v in zip(positions, vals):
                        if v >= level:
                            if sv[t] < j:
                                ok = False
                                break
                            t += 1
                    if not ok:
                        break
                if ok:
                    swapped = list(entries)
                    swapped[p - 1], swapped[q - 1] = swapped[q - 1], swapped[p - 1]
                    chosen = ElementaryStep(
                        p=p, q=q, before=cur, after=BlockWeight(comp, tuple(swapped))
                    )
                    break
        if chosen is None:
            return _bfs_chain(src, tgt)
        chain.append(chosen)
        cur = chosen.after
    return chain


def decide_hom(src: BlockWeight, tgt: BlockWeight) -> HomDecision:
    """Decide whether the source module embeds into the target module.

    Same-orbit membership is necessary; within an orbit the descent order
    is decisive.  Comparable pairs come with an explicit chain, refuted
    pairs with a threshold witness.
    """
    if src.composition != tgt.composition:
        raise CompositionMismatch(
            f"compositions differ: {src.composition} vs {tgt.composition}"
        )
    if not same_orbit(src, tgt):
        return HomDecision(exists=False, reason=REASON_NOT_SAME_ORBIT)
    if leq_theta(src, tgt):
        return HomDecision(
            exists=True, reason=REASON_COMPARABLE, chain=tuple(factorize(src, tgt))
        )
    from .obstruction import find_witness

    return HomDecision(
        exists=False, reason=REASON_NOT_COMPARABLE, witness=find_witness(src, tgt)
    )


def hasse(x: BlockWeight, cap: int = DEFAULT_ORBIT_CAP) -> list[tuple[BlockWeight, BlockWeight]]:
    """Cover relations of the descent order on the orbit of ``x``.

    Returns ``(lower, upper)`` pairs, deterministically ordered by entries.
    """
    elements = enumerate_orbit(x, cap)
    m = len(elements)
    vecs = [_tab_vector(e) for e in elements]
    below: list[int] = []  # bitmask per element: strictly smaller elements
    for i in range(m):
        mask = 0
        vi = vecs[i]
        for j in range(m):
            if i != j and all(a >= b for a, b in zip(vecs[j], vi)):
                mask |= 1 << j
        below.append(mask)
    edges = []
    for i in range(m):
        strict = below[i]
        shadow = 0
        j = 0
        rest = strict
        while rest:
            if rest & 1:
                shadow |= below[j]
            rest >>= 1
            j += 1
        covers = strict & ~shadow
        j = 0
        while covers:
            if covers & 1:
                edges.append((elements[j], elements[i]))
            covers >>= 1
            j += 1
    edges.sort(key=lambda e: (e[0].entries, e[1].entries))
    return edges
