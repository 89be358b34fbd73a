import pytest
from hypothesis import given

from vermahom import (
    BlockSizeMismatch,
    BlockWeight,
    Composition,
    OrbitTooLarge,
    ThetaWeylElement,
    apply,
    compose,
    enumerate_orbit,
    identity,
    inverse,
    level_counts,
    orbit_size,
    same_orbit,
    sigma_pq,
)

from conftest import weight_with_element, weights


def bw(parts, entries):
    return BlockWeight(Composition(tuple(parts)), tuple(entries))


class TestSigma:
    def test_two_singleton_blocks(self):
        c = Composition((1, 1))
        assert sigma_pq(c, 1, 2).images == (2, 1)

    def test_gl14_blocks_three_and_five(self):
        c = Composition((4, 1, 2, 1, 2, 4))
        assert sigma_pq(c, 3, 5).images == (1, 2, 5, 4, 3, 6)

    def test_size_mismatch(self):
        with pytest.raises(BlockSizeMismatch):
            sigma_pq(Composition((2, 1)), 1, 2)

    def test_index_errors(self):
        c = Composition((1, 1))
        with pytest.raises(IndexError):
            sigma_pq(c, 0, 1)
        with pytest.raises(IndexError):
            sigma_pq(c, 2, 1)
        with pytest.raises(IndexError):
            sigma_pq(c, 1, 3)

    def test_membership_enforced(self):
        with pytest.raises(BlockSizeMismatch):
            ThetaWeylElement(Composition((2, 1)), (2, 1))


class TestAction:
    def test_swap_of_equal_size_blocks(self, gl14):
        comp, mu, _ = gl14
        swapped = apply(sigma_pq(comp, 3, 5), mu)
        assert swapped.entries == (4, 3, 2, -4, -1, -2)

    def test_identity_action(self, gl14):
        comp, mu, _ = gl14
        assert apply(identity(comp), mu) == mu

    @given(weight_with_element())
    def test_transpositions_are_involutions(self, data):
        w, _ = data
        comp = w.composition
        for p, q in comp.same_size_pairs:
            s = sigma_pq(comp, p, q)
            assert apply(s, apply(s, w)) == w
            assert inverse(s) == s

    @given(weight_with_element())
    def test_compose_matches_iterated_action(self, data):
        w, g = data
        for p, q in w.composition.same_size_pairs:
            h = sigma_pq(w.composition, p, q)
            assert apply(compose(g, h), w) == apply(g, apply(h, w))

    @given(weight_with_element())
    def test_inverse_undoes_action(self, data):
        w, g = data
        assert apply(inverse(g), apply(g, w)) == w
        assert compose(g, inverse(g)) == identity(w.composition)

    @given(weight_with_element())
    def test_action_preserves_level_norms(self, data):
        w, g = data
        moved = apply(g, w)
        for level in range(-5, 6):
            assert level_counts(moved, level).norm == level_counts(w, level).norm


class TestOrbits:
    def test_two_element_orbit(self):
        orbit = enumerate_orbit(bw((1, 1), (0, 1)))
        assert [w.entries for w in orbit] == [(0, 1), (1, 0)]

    def test_gl14_orbit_has_eight_elements(self, gl14):
        _, mu, _ = gl14
        orbit = enumerate_orbit(mu)
        assert len(orbit) == 8 == orbit_size(mu)

    def test_repeated_values_collapse(self):
        assert [w.entries for w in enumerate_orbit(bw((2, 2), (5, 5)))] == [(5, 5)]

    def test_cap_is_enforced(self):
        with pytest.raises(OrbitTooLarge):
            enumerate_orbit(bw((1, 1, 1, 1), (0, 1, 2, 3)), cap=23)

    def test_canonical_order(self):
        orbit = enumerate_orbit(bw((1, 1, 1), (2, 0, 1)))
        assert [w.entries for w in orbit] == sorted(w.entries for w in orbit)

    @given(weights(max_k=4, max_part=2))
    def test_orbit_members_and_size_formula(self, w):
        orbit = enumerate_orbit(w)
        assert len(orbit) == orbit_size(w)
        assert len(set(orbit)) == len(orbit)
        assert all(same_orbit(w, other) for other in orbit)


def _closure_under_composition(generators, comp):
    seen = {identity(comp).images}
    frontier = [identity(comp)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = compose(s, g)
                if h.images not in seen:
                    seen.add(h.images)
                    nxt.append(h)
        frontier = nxt
    return seen


@pytest.mark.parametrize(
    "parts, expected",
    [
        ((1, 1), 2),
        ((1, 1, 1), 6),
        ((2, 2, 1), 2),
        ((1, 2, 1, 2), 4),
        ((1, 1, 1, 2, 2), 12),
    ],
)
def test_swaps_generate_the_whole_group(parts, expected):
    comp = Composition(parts)
    gens = [sigma_pq(comp, p, q) for p, q in comp.same_size_pairs]
    closure = _closure_under_composition(gens, comp)
    assert len(closure) == expected
