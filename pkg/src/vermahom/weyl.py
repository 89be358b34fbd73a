"""Block-size-preserving permutations and their action on block weights.

The group acting on block weights is the product, over block sizes r, of
the symmetric groups on the blocks of size r.  Elements are stored as
permutations of the block indices {1..k}; the induced permutation of the
n coordinates is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import factorial

from .errors import BlockSizeMismatch, CompositionMismatch, OrbitTooLarge
from .weights import BlockWeight, Composition

DEFAULT_ORBIT_CAP = 10**6


@dataclass(frozen=True)
class ThetaWeylElement:
    """A permutation of {1..k} that maps each block to one of equal size.

    ``images[j-1]`` is the image of block ``j``.
    """

    composition: Composition
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        k = self.composition.k
        if sorted(images) != list(range(1, k + 1)):
            raise BlockSizeMismatch(f"not a permutation of 1..{k}: {images}")
        parts = self.composition.parts
        for j, img in enumerate(images, start=1):
            if parts[img - 1] != parts[j - 1]:
                raise BlockSizeMismatch(
                    f"block {j} (size {parts[j - 1]}) mapped to block {img} "
                    f"(size {parts[img - 1]})"
                )

    @cached_property
    def preimages(self) -> tuple[int, ...]:
        pre = [0] * len(self.images)
        for j, img in enumerate(self.images, start=1):
            pre[img - 1] = j
        return tuple(pre)

    def image(self, j: int) -> int:
        return self.images[j - 1]

    def preimage(self, j: int) -> int:
        return self.preimages[j - 1]

    def is_identity(self) -> bool:
        return all(img == j for j, img in enumerate(self.images, start=1))


def identity(c: Composition) -> ThetaWeylElement:
    return ThetaWeylElement(c, tuple(range(1, c.k + 1)))


def sigma_pq(c: Composition, p: int, q: int) -> ThetaWeylElement:
    """The exchange of blocks ``p`` and ``q`` (requires equal sizes and p < q)."""
    if not 1 <= p < q <= c.k:
        raise IndexError(f"need 1 <= p < q <= {c.k}, got p={p}, q={q}")
    if c.parts[p - 1] != c.parts[q - 1]:
        raise BlockSizeMismatch(
            f"blocks {p} and {q} have sizes {c.parts[p - 1]} != {c.parts[q - 1]}"
        )
    images = list(range(1, c.k + 1))
    images[p - 1], images[q - 1] = q, p
    return ThetaWeylElement(c, tuple(images))


def apply(w: ThetaWeylElement, v: BlockWeight) -> BlockWeight:
    """Act on a block weight: entry ``i`` of the result is entry ``w^{-1}(i)`` of ``v``.

    >>> c = Composition((1, 1))
    >>> str(apply(sigma_pq(c, 1, 2), BlockWeight(c, (3, 7))))
    '[7,3]'
    """
    if w.composition != v.composition:
        raise CompositionMismatch("group element and weight have different compositions")
    pre = w.preimages
    return BlockWeight(v.composition, tuple(v.entries[pre[i] - 1] for i in range(len(pre))))


def compose(a: ThetaWeylElement, b: ThetaWeylElement) -> ThetaWeylElement:
    """Composition acting as ``apply(compose(a, b), v) == apply(a, apply(b, v))``."""
    if a.composition != b.composition:
        raise CompositionMismatch("cannot compose elements over different compositions")
    return ThetaWeylElement(
        a.composition, tuple(a.images[b.images[j] - 1] for j in range(a.composition.k))
    )


def inverse(a: ThetaWeylElement) -> ThetaWeylElement:
    return ThetaWeylElement(a.composition, a.preimages)


def orbit_size(w: BlockWeight) -> int:
    """Number of distinct weights in the orbit of ``w``.

    Product over size classes of the multinomial coefficient of that
    class's entry multiset.
    """
    total = 1
    for r in w.composition.classes:
        vals = w.class_values(r)
        count = factorial(len(vals))
        for v in set(vals):
            count //= factorial(vals.count(v))
        total *= count
    return total


def _multiset_permutations(values: tuple[int, ...]):
    """Distinct permutations of a multiset, in lexicographic order."""
    distinct = sorted(set(values))
    counts = {v: values.count(v) for v in distinct}
    n = len(values)
    prefix: list[int] = []

    def rec():
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in distinct:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec()
                prefix.pop()
                counts[v] += 1

    yield from rec()


def enumerate_orbit(w: BlockWeight, cap: int = DEFAULT_ORBIT_CAP) -> tuple[BlockWeight, ...]:
    """All distinct weights in the orbit of ``w``, ordered by entries.

    Each size class's entry multiset is permuted independently; the results
    are combined across classes.  Raises OrbitTooLarge before generating
    anything if the orbit would exceed ``cap`` elements.
    """
    size = orbit_size(w)
    if size > cap:
        raise OrbitTooLarge(f"orbit has {size} elements, cap is {cap}")
    comp = w.composition
    class_perms = []
    class_pos = []
    for r in comp.classes:
        class_pos.append(comp.class_positions[r])
        class_perms.append(list(_multiset_permutations(w.class_values(r))))
    out = []
    for choice in product(*class_perms):
        entries = [0] * comp.k
        for positions, perm in zip(class_pos, choice):
            for j, v in zip(positions, perm):
                entries[j - 1] = v
        out.append(tuple(entries))
    out.sort()
    assert len(out) == size
    return tuple(BlockWeight(comp, e) for e in out)
