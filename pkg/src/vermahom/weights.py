"""Block weights over a fixed block decomposition of {1..n}.

A composition ``(n_1, ..., n_k)`` of ``n`` splits the coordinates ``1..n``
into consecutive blocks.  A block weight ``[l_1, ..., l_k]`` assigns one
integer to each block and expands to the full n-vector whose j-th block is
the descending run ``l_j, l_j - 1, ..., l_j - n_j + 1``.  All decision
procedures in this package work at block level; the expansion is only
needed for the simple-root cone test.

Entries are Python integers, so coordinates are exact at any magnitude.
Blocks, positions and levels are 1-based throughout the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, TYPE_CHECKING

from .errors import (
    CompositionMismatch,
    InvalidComposition,
    NonIntegralWeight,
    NotScalar,
)

if TYPE_CHECKING:  # pragma: no cover
    from .weyl import ThetaWeylElement


def _as_int_tuple(values: Iterable[int], error: type[Exception], what: str) -> tuple[int, ...]:
    out = values if type(values) is tuple else tuple(values)
    for v in out:
        if type(v) is not int:  # also rejects bool
            raise error(f"{what} must be plain integers, got {v!r}")
    return out


@dataclass(frozen=True)
class Composition:
    """Ordered block sizes ``(n_1, ..., n_k)`` with k >= 2 and every part >= 1."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = _as_int_tuple(self.parts, InvalidComposition, "composition parts")
        if len(parts) < 2:
            raise InvalidComposition(f"need at least 2 blocks, got {len(parts)}")
        if any(p < 1 for p in parts):
            raise InvalidComposition(f"every block size must be >= 1, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_hash", hash(("vermahom.Composition", parts)))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def k(self) -> int:
        return len(self.parts)

    @cached_property
    def n(self) -> int:
        return sum(self.parts)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        """Prefix sums ``(n*_0, n*_1, ..., n*_k)`` with ``n*_0 = 0``."""
        acc = [0]
        for p in self.parts:
            acc.append(acc[-1] + p)
        return tuple(acc)

    @cached_property
    def classes(self) -> tuple[int, ...]:
        """Distinct block sizes, ascending."""
        return tuple(sorted(set(self.parts)))

    @cached_property
    def class_positions(self) -> dict[int, tuple[int, ...]]:
        """Map size r -> ascending 1-based indices of the blocks of size r."""
        pos: dict[int, list[int]] = {}
        for j, p in enumerate(self.parts, start=1):
            pos.setdefault(p, []).append(j)
        return {r: tuple(js) for r, js in pos.items()}

    @cached_property
    def same_size_pairs(self) -> tuple[tuple[int, int], ...]:
        """All pairs ``(p, q)`` with ``p < q`` and ``n_p = n_q``, lexicographic."""
        pairs = []
        for p in range(1, self.k + 1):
            for q in range(p + 1, self.k + 1):
                if self.parts[p - 1] == self.parts[q - 1]:
                    pairs.append((p, q))
        return tuple(pairs)

    @cached_property
    def class_index(self) -> tuple[int, ...]:
        """For each block (0-based), the index of its size in ``classes``."""
        lookup = {r: i for i, r in enumerate(self.classes)}
        return tuple(lookup[p] for p in self.parts)

    def size(self, j: int) -> int:
        """Size of block ``j`` (1-based)."""
        return self.parts[j - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class BlockWeight:
    """One integer per block; the bracket parameter ``[l_1, ..., l_k]``."""

    composition: Composition
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = _as_int_tuple(self.entries, NonIntegralWeight, "weight entries")
        if len(entries) != self.composition.k:
            raise NonIntegralWeight(
                f"expected {self.composition.k} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", hash((self.composition._hash, entries)))

    def __hash__(self) -> int:
        return self._hash

    def entry(self, j: int) -> int:
        """Entry of block ``j`` (1-based)."""
        return self.entries[j - 1]

    def class_values(self, r: int) -> tuple[int, ...]:
        """Entries of the size-r blocks, in position order."""
        return tuple(self.entries[j - 1] for j in self.composition.class_positions[r])

    def replace(self, entries: Iterable[int]) -> "BlockWeight":
        return BlockWeight(self.composition, tuple(entries))

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"


@dataclass(frozen=True)
class FullWeight:
    """Coordinates in the standard basis ``e_1, ..., e_n``."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coords", _as_int_tuple(self.coords, NonIntegralWeight, "coordinates")
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class RootConeReport:
    """Prefix sums of a coordinate difference against the simple-root cone.

    A difference vector lies in the non-negative span of the simple roots
    ``e_i - e_{i+1}`` exactly when all prefix sums are non-negative and the
    total sum is zero.
    """

    partial_sums: tuple[int, ...]
    closes: bool
    nonnegative: bool

    @property
    def in_cone(self) -> bool:
        return self.closes and self.nonnegative

    @property
    def first_negative(self) -> int | None:
        """1-based index of the first negative prefix sum, or None."""
        for m, v in enumerate(self.partial_sums, start=1):
            if v < 0:
                return m
        return None


@lru_cache(maxsize=1 << 15)
def expand(w: BlockWeight) -> FullWeight:
    """Expand a block weight to its full n-vector of coordinates.

    Block j contributes the run ``l_j, l_j - 1, ..., l_j - n_j + 1``.

    >>> str(expand(BlockWeight(Composition((2, 1)), (1, 0))))
    '(1,0,0)'
    """
    coords: list[int] = []
    for size, top in zip(w.composition.parts, w.entries):
        coords.extend(range(top, top - size, -1))
    return FullWeight(tuple(coords))


def contract(f: FullWeight, c: Composition) -> BlockWeight:
    """Inverse of :func:`expand`.

    Raises NotScalar if some block's coordinates do not descend by exactly 1,
    i.e. the full weight is not of block-scalar shape.
    """
    if len(f.coords) != c.n:
        raise CompositionMismatch(
            f"full weight has {len(f.coords)} coordinates, composition needs {c.n}"
        )
    entries = []
    for j in range(1, c.k + 1):
        start, stop = c.offsets[j - 1], c.offsets[j]
        seg = f.coords[start:stop]
        for s, v in enumerate(seg):
            if v != seg[0] - s:
                raise NotScalar(
                    f"block {j} coordinates {seg} do not descend by exactly 1"
                )
        entries.append(seg[0])
    return BlockWeight(c, tuple(entries))


def is_theta_antidominant(w: BlockWeight) -> bool:
    """True iff within every size class the entries are non-decreasing."""
    for r in w.composition.classes:
        vals = w.class_values(r)
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
    return True


@lru_cache(maxsize=1 << 15)
def antidominant_representative(w: BlockWeight) -> tuple[BlockWeight, "ThetaWeylElement"]:
    """Canonical orbit representative and a group element mapping it back.

    Returns ``(lam, x)`` where ``lam`` sorts each size class ascending and
    ``apply(x, lam) == w`` exactly.  Ties are matched stably, so the result
    is deterministic.
    """
    from .weyl import ThetaWeylElement, apply

    comp = w.composition
    lam_entries = list(w.entries)
    # x * lam = w reads entrywise as w_i = lam_{xinv(i)}.
    xinv = [0] * comp.k
    for r in comp.classes:
        positions = comp.class_positions[r]
        sorted_vals = sorted(w.entries[j - 1] for j in positions)
        for j, v in zip(positions, sorted_vals):
            lam_entries[j - 1] = v
        used = [False] * len(positions)
        for i in positions:
            v = w.entries[i - 1]
            for t, cand in enumerate(sorted_vals):
                if not used[t] and cand == v:
                    used[t] = True
                    xinv[i - 1] = positions[t]
                    break
    images = [0] * comp.k
    for i, j in enumerate(xinv, start=1):
        images[j - 1] = i
    lam = BlockWeight(comp, tuple(lam_entries))
    x = ThetaWeylElement(comp, tuple(images))
    assert apply(x, lam) == w
    return lam, x


@lru_cache(maxsize=1 << 15)
def _orbit_key(w: BlockWeight) -> tuple[tuple[int, ...], ...]:
    """Sorted entry multiset of each size class; constant on the orbit."""
    return tuple(
        tuple(sorted(w.class_values(r))) for r in w.composition.classes
    )


def same_orbit(a: BlockWeight, b: BlockWeight) -> bool:
    """True iff every size class carries the same multiset of entries."""
    if a.composition != b.composition:
        raise CompositionMismatch(
            f"compositions differ: {a.composition} vs {b.composition}"
        )
    return _orbit_key(a) == _orbit_key(b)


def simple_root_cone(target: BlockWeight, source: BlockWeight) -> RootConeReport:
    """Test whether ``expand(target) - expand(source)`` lies in the root cone.

    Membership is a necessary condition for an inclusion of the source
    module into the target module.
    """
    if target.composition != source.composition:
        raise CompositionMismatch(
            f"compositions differ: {target.composition} vs {source.composition}"
        )
    tc = expand(target).coords
    sc = expand(source).coords
    sums = []
    acc = 0
    for t, s in zip(tc, sc):
        acc += t - s
        sums.append(acc)
    # acc now holds the total sum; the stored prefix list stops at n-1.
    return RootConeReport(
        partial_sums=tuple(sums[:-1]),
        closes=(acc == 0),
        nonnegative=all(v >= 0 for v in sums[:-1]),
    )
