"""Constructive evidence that a pair of weights is not comparable.

When the tableau criterion fails there is a threshold ``c`` and a block
position ``s`` with ``src_s >= c > tgt_s`` while, among the equal-size
blocks left of ``s``, both weights carry the same number of entries at or
above ``c``.  Collapsing every entry to ``c`` or ``c - 1`` around that
witness produces a degenerate pair that already violates the simple-root
cone condition, with the first negative prefix sum landing at the first
coordinate of block ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bruhat import _class_rows, leq_theta
from .errors import Comparable, WitnessMismatch
from .weights import BlockWeight, antidominant_representative, expand


@dataclass(frozen=True)
class Witness:
    """Non-comparability certificate.

    ``threshold`` (= c) and ``position`` (= s) satisfy the two defining
    conditions; ``class_size``, ``level_index`` and ``slot_index`` record
    the failing tableau coordinates that produced them (all 1-based).
    """

    class_size: int
    level_index: int
    slot_index: int
    position: int
    threshold: int


@dataclass(frozen=True)
class DegeneratePair:
    """Weights with all entries in {c-1, c}, related by the same group element."""

    mu_bar: BlockWeight
    nu_bar: BlockWeight


def _count_high_before(w: BlockWeight, s: int, c: int) -> int:
    parts = w.composition.parts
    entries = w.entries
    size = parts[s - 1]
    count = 0
    for i in range(s - 1):
        if parts[i] == size and entries[i] >= c:
            count += 1
    return count


def _check_witness(src: BlockWeight, tgt: BlockWeight, wit: Witness) -> None:
    s, c = wit.position, wit.threshold
    if not src.entries[s - 1] >= c > tgt.entries[s - 1]:
        raise WitnessMismatch(
            f"witness (c={c}, s={s}) fails src_s >= c > tgt_s for {src}, {tgt}"
        )
    if _count_high_before(src, s, c) != _count_high_before(tgt, s, c):
        raise WitnessMismatch(
            f"witness (c={c}, s={s}) fails the equal-count condition"
        )


def find_witness(src: BlockWeight, tgt: BlockWeight) -> Witness:
    """Locate a (threshold, position) witness for a non-comparable pair.

    Scans size classes ascending; inside the first failing class takes the
    maximal failing level and there the minimal failing slot.  That slot's
    position in ``src`` is the witness position, the level value is the
    threshold.  Raises Comparable when ``src`` is below ``tgt``.
    """
    if leq_theta(src, tgt):
        raise Comparable(f"{src} is below {tgt}; no witness exists")
    src_classes = _class_rows(src)
    tgt_classes = _class_rows(tgt)
    for (r, _, levels, src_rows), (_, _, _, tgt_rows) in zip(src_classes, tgt_classes):
        best: tuple[int, int] | None = None
        for i in range(len(levels) - 1, -1, -1):
            srow, trow = src_rows[i], tgt_rows[i]
            assert len(srow) == len(trow)
            for j, (a, b) in enumerate(zip(srow, trow)):
                if a < b:
                    best = (i, j)
                    break
            if best is not None:
                break
        if best is None:
            continue
        a_idx, b_idx = best
        wit = Witness(
            class_size=r,
            level_index=a_idx + 1,
            slot_index=b_idx + 1,
            position=src_rows[a_idx][b_idx],
            threshold=levels[a_idx],
        )
        _check_witness(src, tgt, wit)
        return wit
    raise WitnessMismatch("tableau comparison failed but no failing class found")


def _degenerate_entries(w: BlockWeight, c: int, size_s: int) -> tuple[int, ...]:
    out = []
    for size, v in zip(w.composition.parts, w.entries):
        if size > size_s:
            out.append(c)
        elif size < size_s:
            out.append(c - 1)
        else:
            out.append(c if v >= c else c - 1)
    return tuple(out)


def degenerate(tgt: BlockWeight, src: BlockWeight, w: Witness) -> DegeneratePair:
    """Collapse the pair around its witness to entries in {c-1, c}.

    Entries of blocks larger than block ``s`` become ``c``, smaller ones
    ``c - 1``; equal-size blocks keep only whether they were >= ``c``.
    The result is checked to be related by the same group element as the
    original pair and to violate the simple-root cone condition.
    """
    _check_witness(src, tgt, w)
    comp = tgt.composition
    c, size_s = w.threshold, comp.parts[w.position - 1]
    mu_bar = BlockWeight(comp, _degenerate_entries(tgt, c, size_s))
    nu_bar = BlockWeight(comp, _degenerate_entries(src, c, size_s))
    lam_src, x = antidominant_representative(src)
    lam_tgt, y = antidominant_representative(tgt)
    if lam_src != lam_tgt:
        raise WitnessMismatch("witness used with weights from different orbits")
    # nu_bar must equal apply(x y^{-1}, mu_bar); spelled out on indices:
    # (x y^{-1})^{-1}(i) = y(x^{-1}(i))
    xpre, yimg = x.preimages, y.images
    for i in range(comp.k):
        if nu_bar.entries[i] != mu_bar.entries[yimg[xpre[i] - 1] - 1]:
            raise WitnessMismatch(
                "degenerate pair not related by the pair's group element"
            )
    if not _cone_violated(mu_bar, nu_bar):
        raise WitnessMismatch("degenerate pair unexpectedly satisfies the cone condition")
    return DegeneratePair(mu_bar=mu_bar, nu_bar=nu_bar)


def _cone_violated(target: BlockWeight, source: BlockWeight) -> bool:
    """Short-circuit version of ``not simple_root_cone(...).in_cone``."""
    acc = 0
    for t, s in zip(expand(target).coords, expand(source).coords):
        acc += t - s
        if acc < 0:
            return True
    return acc != 0
