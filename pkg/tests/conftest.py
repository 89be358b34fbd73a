"""Shared fixtures and hypothesis strategies."""

import hypothesis.strategies as st
import pytest

from vermahom import BlockWeight, Composition, ThetaWeylElement


@pytest.fixture
def gl14():
    """The gl(14) running example: blocks (4,1,2,1,2,4), a refuted pair."""
    comp = Composition((4, 1, 2, 1, 2, 4))
    mu = BlockWeight(comp, (4, 3, -1, -4, 2, -2))
    nu = BlockWeight(comp, (-2, -4, 2, 3, -1, 4))
    return comp, mu, nu


def compositions(max_k: int = 5, max_part: int = 3):
    return st.lists(
        st.integers(1, max_part), min_size=2, max_size=max_k
    ).map(lambda parts: Composition(tuple(parts)))


@st.composite
def weights(draw, max_k: int = 5, max_part: int = 3, lo: int = -4, hi: int = 4):
    comp = draw(compositions(max_k, max_part))
    entries = tuple(draw(st.integers(lo, hi)) for _ in range(comp.k))
    return BlockWeight(comp, entries)


@st.composite
def orbit_pairs(draw, max_k: int = 5, max_part: int = 3, lo: int = -3, hi: int = 3):
    """Two weights in the same orbit (the second shuffles each class)."""
    a = draw(weights(max_k, max_part, lo, hi))
    entries = list(a.entries)
    for r in a.composition.classes:
        pos = a.composition.class_positions[r]
        vals = draw(st.permutations([a.entries[j - 1] for j in pos]))
        for j, v in zip(pos, vals):
            entries[j - 1] = v
    return a, BlockWeight(a.composition, tuple(entries))


@st.composite
def weight_with_element(draw, max_k: int = 5, max_part: int = 3):
    """A weight together with a random block-size-preserving permutation."""
    w = draw(weights(max_k, max_part))
    comp = w.composition
    images = [0] * comp.k
    for r in comp.classes:
        pos = comp.class_positions[r]
        perm = draw(st.permutations(list(pos)))
        for j, img in zip(pos, perm):
            images[j - 1] = img
    return w, ThetaWeylElement(comp, tuple(images))
