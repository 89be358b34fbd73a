"""Weight-level shadow of the translation functors.

A block weight is shifted one unit at a time on a set ``S`` of blocks.
Whether such a shift carries one induced module to another is controlled
by level sets at an integer level ``g``:

* ``phi``      blocks whose coordinate range contains ``g``
* ``psi_top``  blocks whose top entry equals ``g``
* ``psi_bot``  blocks whose bottom coordinate equals ``g``

A downward shift is legal on ``S`` contained in ``psi_top`` when the
bottoms over ``S`` all clear the bottoms over the rest of ``phi``; an
upward shift on ``S`` contained in ``psi_bot`` when the tops over ``S``
stay under the tops over the rest of ``phi``.  ``degeneration_trace``
drives a non-comparable pair through five rounds of such shifts, both
sides in lockstep through the fixed group element relating them, until
every entry lies in {c-1, c}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    CompositionMismatch,
    LegalityViolation,
    NotInPsiBot,
    NotInPsiTop,
    WitnessMismatch,
)
from .obstruction import Witness, _check_witness, degenerate
from .weights import BlockWeight, antidominant_representative
from .weyl import ThetaWeylElement, apply, compose, inverse


@dataclass(frozen=True)
class LevelCounts:
    """Level sets of a block weight at one integer level."""

    level: int
    phi: tuple[int, ...]
    psi_top: tuple[int, ...]
    psi_bot: tuple[int, ...]
    norm: int


@dataclass(frozen=True)
class TraceStage:
    """One shift applied to both sides of a degeneration trace.

    ``d`` is the inner index of the pre-shift weight; ``target`` and
    ``source`` are the post-shift pair.  The legality condition (named
    ``a`` for downward, ``b`` for upward shifts) was checked at ``level``
    on the pre-shift weights of both sides.
    """

    step: int
    d: int
    target: BlockWeight
    source: BlockWeight
    direction: int
    shift_target: tuple[int, ...]
    shift_source: tuple[int, ...]
    level: int
    condition: str
    legal_target: bool
    legal_source: bool


@dataclass(frozen=True)
class TranslationTrace:
    """Full record of degenerating a pair to entries in {c-1, c}."""

    target: BlockWeight
    source: BlockWeight
    witness: Witness
    stages: tuple[TraceStage, ...]

    @property
    def final_target(self) -> BlockWeight:
        return self.stages[-1].target if self.stages else self.target

    @property
    def final_source(self) -> BlockWeight:
        return self.stages[-1].source if self.stages else self.source


def level_counts(x: BlockWeight, g: int) -> LevelCounts:
    """Level sets of ``x`` at level ``g``.

    ``norm`` counts the expanded coordinates equal to ``g``, which is the
    size of ``phi`` since each block covers a run of consecutive values.
    """
    phi, psi_top, psi_bot = [], [], []
    for j, (size, v) in enumerate(zip(x.composition.parts, x.entries), start=1):
        if v >= g >= v - size + 1:
            phi.append(j)
        if v == g:
            psi_top.append(j)
        if v - size + 1 == g:
            psi_bot.append(j)
    return LevelCounts(
        level=g,
        phi=tuple(phi),
        psi_top=tuple(psi_top),
        psi_bot=tuple(psi_bot),
        norm=len(phi),
    )


def _normalize_set(S: Iterable[int], k: int) -> tuple[int, ...]:
    out = sorted(set(S))
    for j in out:
        if not 1 <= j <= k:
            raise IndexError(f"block index {j} out of range 1..{k}")
    return tuple(out)


def check_down(x: BlockWeight, g: int, S: Iterable[int]) -> bool:
    """Legality of shifting ``S`` down by one at level ``g``.

    ``S`` must consist of blocks whose top entry equals ``g``.  The
    condition compares block bottoms: min over ``S`` must exceed max over
    the rest of ``phi``; vacuously true when the rest is empty.
    """
    counts = level_counts(x, g)
    S = _normalize_set(S, x.composition.k)
    if not set(S) <= set(counts.psi_top):
        raise NotInPsiTop(f"{S} is not contained in psi_top {counts.psi_top} at level {g}")
    rest = [j for j in counts.phi if j not in set(S)]
    if not rest:
        return True
    if not S:
        return True
    parts = x.composition.parts
    bottom = lambda j: x.entries[j - 1] - parts[j - 1] + 1
    return min(bottom(j) for j in S) > max(bottom(j) for j in rest)


def check_up(x: BlockWeight, g: int, S: Iterable[int]) -> bool:
    """Legality of shifting ``S`` up by one at level ``g``.

    ``S`` must consist of blocks whose bottom coordinate equals ``g``.
    The condition compares block tops: max over ``S`` must stay below min
    over the rest of ``phi``; vacuously true when either side is empty.
    """
    counts = level_counts(x, g)
    S = _normalize_set(S, x.composition.k)
    if not set(S) <= set(counts.psi_bot):
        raise NotInPsiBot(f"{S} is not contained in psi_bot {counts.psi_bot} at level {g}")
    rest = [j for j in counts.phi if j not in set(S)]
    if not rest or not S:
        return True
    return max(x.entries[j - 1] for j in S) < min(x.entries[j - 1] for j in rest)


def shift(x: BlockWeight, S: Iterable[int], sign: int) -> BlockWeight:
    """Move the entries of the blocks in ``S`` by ``sign`` (+1 or -1)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    S = _normalize_set(S, x.composition.k)
    entries = list(x.entries)
    for j in S:
        entries[j - 1] += sign
    return BlockWeight(x.composition, tuple(entries))


# Closed forms of the five degeneration rounds.  Each takes the *original*
# entries and the inner index d and returns the stage entries; the trace
# derives the shifted sets from consecutive stages and cross-checks them
# against the level-set characterizations.


def _stage1(comp, entries, c, d):
    return tuple(min(v, c + d) for v in entries)


def _stage2(comp, entries, c, size_s):
    return tuple(
        (c if size >= size_s else c - 1) if v >= c else v
        for size, v in zip(comp.parts, entries)
    )


def _stage3(comp, entries, c, size_s, b, d):
    out = []
    for size, v in zip(comp.parts, entries):
        if v >= c:
            out.append(c if size >= size_s else c - 1)
        else:
            out.append(max(v, b - d + size - 1))
    return tuple(out)


def _stage4(comp, entries, c, size_s, d):
    out = []
    for size, v in zip(comp.parts, entries):
        if v >= c:
            out.append(c if size >= size_s else c - 1)
        else:
            floor = c - size_s + size - 1 - d
            if v >= floor:
                out.append(v)
            elif size >= size_s + d + 1:
                out.append(c)
            else:
                out.append(floor)
    return tuple(out)


def _stage5(comp, entries, c, size_s, d):
    out = []
    for size, v in zip(comp.parts, entries):
        if size > size_s:
            out.append(c)
        elif size == size_s:
            out.append(c if v >= c else c - 1)
        elif size > d:
            out.append(c - 1)
        elif v >= c:
            out.append(c - 1)
        else:
            floor = c + size - 2 - d
            out.append(v if v >= floor else floor)
    return tuple(out)


def degeneration_trace(tgt: BlockWeight, src: BlockWeight, wit: Witness) -> TranslationTrace:
    """Drive the pair down to its degenerate form, one legal shift at a time.

    Round 1 caps entries above the threshold ``c``; round 2 pushes
    threshold entries of blocks smaller than block ``s`` to ``c - 1``;
    rounds 3 to 5 raise everything below from the bottom up.  Both sides
    move through the same functor: the source-side shift set is the image
    of the target-side set under the group element relating the pair, and
    every stage's legality condition is checked on both sides.  The final
    pair equals :func:`vermahom.obstruction.degenerate` exactly.
    """
    if tgt.composition != src.composition:
        raise CompositionMismatch("target and source have different compositions")
    _check_witness(src, tgt, wit)
    comp = tgt.composition
    lam_src, x = antidominant_representative(src)
    lam_tgt, y = antidominant_representative(tgt)
    if lam_src != lam_tgt:
        raise WitnessMismatch("witness used with weights from different orbits")
    w_elt: ThetaWeylElement = compose(x, inverse(y))
    assert apply(w_elt, tgt) == src

    c = wit.threshold
    s = wit.position
    size_s = comp.parts[s - 1]
    size_max = max(comp.parts)
    has_bigger = size_max > size_s
    b = c - size_max + 1 if has_bigger else c - size_s

    def forms(entries):
        return {
            1: lambda d: _stage1(comp, entries, c, d),
            2: lambda d: _stage2(comp, entries, c, size_s),
            3: lambda d: _stage3(comp, entries, c, size_s, b, d),
            4: lambda d: _stage4(comp, entries, c, size_s, d),
            5: lambda d: _stage5(comp, entries, c, size_s, d),
        }

    tgt_forms = forms(tgt.entries)
    src_forms = forms(src.entries)

    d1 = max(0, max(tgt.entries) - c)
    d3 = max(
        [0]
        + [
            b + size - 1 - v
            for size, v in zip(comp.parts, tgt.entries)
            if v < c
        ]
    )
    d4 = (c - size_s - b) if has_bigger else 0
    d5 = size_s - 1

    # (step, pre-d, level g, direction, condition) for every transition
    plan: list[tuple[int, int, int, int, str]] = []
    plan += [(1, d, c + d, -1, "a") for d in range(d1, 0, -1)]
    plan += [(2, 0, c, -1, "a")]
    plan += [(3, d, b - d, +1, "b") for d in range(d3, 0, -1)]
    plan += [(4, d, c - size_s - d, +1, "b") for d in range(d4, 0, -1)]
    plan += [(5, d, c - 1 - d, +1, "b") for d in range(d5, 0, -1)]

    # boundary identities between consecutive rounds
    assert tgt_forms[1](d1) == tgt.entries
    assert tgt_forms[3](d3) == tgt_forms[2](0)
    if has_bigger:
        assert tgt_forms[4](d4) == tgt_forms[3](0)
        assert tgt_forms[5](d5) == tgt_forms[4](0)
    else:
        assert tgt_forms[5](d5) == tgt_forms[3](0)

    stages: list[TraceStage] = []
    cur_t, cur_s = tgt, src
    for step, d, g, direction, cond in plan:
        post_d = 0 if step == 2 else d - 1
        nxt_t = BlockWeight(comp, tgt_forms[step](post_d))
        nxt_s = BlockWeight(comp, src_forms[step](post_d))
        set_t = _diff_set(cur_t, nxt_t, direction)
        set_s = _diff_set(cur_s, nxt_s, direction)
        if {w_elt.image(j) for j in set_t} != set(set_s):
            raise WitnessMismatch(
                f"round {step} d={d}: source shift set is not the image of the target set"
            )
        if apply(w_elt, nxt_t) != nxt_s:
            raise WitnessMismatch(
                f"round {step} d={d}: sides are no longer related by the group element"
            )
        _check_stage_set(step, cur_t, g, d, c, size_s, set_t)
        _check_stage_set(step, cur_s, g, d, c, size_s, set_s)
        if cond == "a":
            legal_t = check_down(cur_t, g, set_t)
            legal_s = check_down(cur_s, g, set_s)
        else:
            legal_t = check_up(cur_t, g, set_t)
            legal_s = check_up(cur_s, g, set_s)
        if not (legal_t and legal_s):
            raise LegalityViolation(
                f"round {step} d={d} at level {g}: condition ({cond}) failed"
            )
        stages.append(
            TraceStage(
                step=step,
                d=d,
                target=nxt_t,
                source=nxt_s,
                direction=direction,
                shift_target=set_t,
                shift_source=set_s,
                level=g,
                condition=cond,
                legal_target=legal_t,
                legal_source=legal_s,
            )
        )
        cur_t, cur_s = nxt_t, nxt_s

    final = degenerate(tgt, src, wit)
    if cur_t != final.mu_bar or cur_s != final.nu_bar:
        raise WitnessMismatch("trace endpoint differs from the degenerate pair")
    return TranslationTrace(target=tgt, source=src, witness=wit, stages=tuple(stages))


def _diff_set(cur: BlockWeight, nxt: BlockWeight, direction: int) -> tuple[int, ...]:
    moved = []
    for j, (a, b) in enumerate(zip(cur.entries, nxt.entries), start=1):
        if b == a:
            continue
        if b - a != direction:
            raise LegalityViolation(
                f"stage moves block {j} by {b - a}, expected {direction}"
            )
        moved.append(j)
    return tuple(moved)


def _check_stage_set(step, x, g, d, c, size_s, moved) -> None:
    """Cross-check a stage's shift set against its level-set description.

    Rounds 1 and 3 move the whole aligned level set; round 2 keeps only
    blocks smaller than block s, round 4 only entries still under the
    threshold, round 5 only blocks of size at most d.
    """
    counts = level_counts(x, g)
    parts = x.composition.parts
    if step == 1:
        expected = set(counts.psi_top)
    elif step == 2:
        expected = {j for j in counts.psi_top if parts[j - 1] < size_s}
    elif step == 3:
        expected = set(counts.psi_bot)
    elif step == 4:
        expected = {j for j in counts.psi_bot if x.entries[j - 1] < c}
    else:
        expected = {j for j in counts.psi_bot if parts[j - 1] <= d}
    if set(moved) != expected:
        raise LegalityViolation(
            f"round {step} d={d}: moved blocks {moved} differ from "
            f"level-set description {sorted(expected)}"
        )
