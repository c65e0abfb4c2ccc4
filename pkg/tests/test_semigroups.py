"""Products: partial injections, the three-tier composition, the dual
monoids, and the two deformed products.

Associativity is the backbone here: exhaustive at the sizes where the
full triple product table fits in seconds, seeded random triples one
size up.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rookdual import (
    HatElement,
    PartialInjection,
    SetPartition,
    bullet_multiply,
    canonicalize,
    enumerate_is,
    enumerate_istar,
    enumerate_pistar,
    epsilon,
    is_dual_element,
    is_generators,
    is_partial_dual_element,
    mulclose,
    multiply_composition,
    multiply_istar,
    multiply_pistar,
    parse_element,
    primed,
    star_multiply,
    unprimed,
)


def test_worked_product():
    a = PartialInjection([2, None, 3, 5, None])
    b = PartialInjection([5, 4, 1, None, None])
    assert str(a * b) == "[-,5,2,-,-]"
    assert str(b * a) == "[4,-,1,-,-]"


def test_epsilon():
    e = epsilon(3, {1, 2})
    assert e.targets == (1, 2, None)
    assert epsilon(3, set(range(1, 4))) == PartialInjection.identity(3)
    assert epsilon(3, set()).rank() == 0
    for fixed in ({1}, {2, 3}, set(), {1, 2, 3}):
        idem = epsilon(3, fixed)
        assert idem * idem == idem


def test_generators():
    gens = is_generators(3)
    assert PartialInjection([2, 1, 3]) in gens
    assert PartialInjection([2, 3, 1]) in gens
    assert epsilon(3, {1, 2}) in gens
    assert is_generators(1) == [PartialInjection([1]), PartialInjection([None])]
    assert len(is_generators(2)) == 2  # the swap doubles as the 2-cycle


def test_generated_closure_is_whole_monoid():
    gens = is_generators(3) + [PartialInjection.identity(3)]
    assert mulclose(gens) == set(enumerate_is(3))
    assert len(mulclose(gens)) == 34
    gens1 = is_generators(1)
    assert mulclose(gens1) == set(enumerate_is(1))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_is_product_against_pointwise_oracle(data):
    elements = enumerate_is(3)
    a = data.draw(st.sampled_from(elements))
    b = data.draw(st.sampled_from(elements))
    c = a * b
    for d in range(1, 4):
        t = b(d)
        assert c(d) == (None if t is None else a(t))


def test_is_associativity_exhaustive():
    elements = enumerate_is(2)
    for a in elements:
        for b in elements:
            ab = a * b
            for c in elements:
                assert ab * c == a * (b * c)


# three-tier composition


def test_composition_identity_and_garbage():
    ident = SetPartition.identity(2)
    r = multiply_composition(ident, ident)
    assert r.diagram == ident and r.garbage_count == 0

    free = canonicalize([[unprimed(1)], [primed(1)]], 1)
    r = multiply_composition(free, free)
    assert r.diagram == free
    assert r.garbage_count == 1  # the two middle singletons merge and vanish

    with pytest.raises(ValueError):
        multiply_composition(ident, SetPartition.identity(3))


def _all_partitions_k2():
    from test_diagrams import brute_partitions, raw_points

    return [
        canonicalize(
            [[(primed if pr else unprimed)(i) for pr, i in block] for block in part], 2
        )
        for part in brute_partitions(raw_points(2))
        if part
    ]


def test_composition_all_pairs_cover_everything():
    everything = _all_partitions_k2()
    assert len(everything) == 15
    for a in everything:
        for b in everything:
            r = multiply_composition(a, b)
            assert r.garbage_count >= 0
            assert len(r.diagram.support()) == 4


def test_composition_associativity_exhaustive_k2():
    everything = _all_partitions_k2()
    for a in everything:
        for b in everything:
            ab = multiply_composition(a, b).diagram
            for c in everything:
                bc = multiply_composition(b, c).diagram
                assert (
                    multiply_composition(ab, c).diagram
                    == multiply_composition(a, bc).diagram
                )


# the dual monoid


def test_istar_product_examples():
    top = parse_element("{1,2,1',2'}", "istar", 2)
    swap = parse_element("{1,2'}|{2,1'}", "istar", 2)
    ident = SetPartition.identity(2)
    assert multiply_istar(top, swap) == top
    assert multiply_istar(swap, swap) == ident
    for alpha in enumerate_istar(3):
        assert multiply_istar(SetPartition.identity(3), alpha) == alpha
        assert multiply_istar(alpha, SetPartition.identity(3)) == alpha


def test_istar_closed_and_garbage_free():
    for k in (1, 2, 3):
        elements = enumerate_istar(k)
        for a in elements:
            for b in elements:
                r = multiply_composition(a, b)
                assert r.garbage_count == 0
                assert is_dual_element(r.diagram)
                assert multiply_istar(a, b) == r.diagram


def test_istar_rejects_partial_input():
    partial = canonicalize([[unprimed(1), primed(1)]], 2)
    with pytest.raises(ValueError):
        multiply_istar(partial, SetPartition.identity(2))


def test_istar_associativity():
    elements = enumerate_istar(2)
    for a in elements:
        for b in elements:
            ab = multiply_istar(a, b)
            for c in elements:
                assert multiply_istar(ab, c) == multiply_istar(a, multiply_istar(b, c))
    rng = random.Random(11)
    big = enumerate_istar(3)
    for _ in range(300):
        a, b, c = (rng.choice(big) for _ in range(3))
        assert multiply_istar(multiply_istar(a, b), c) == multiply_istar(
            a, multiply_istar(b, c)
        )


# the partial dual monoid and its break-down product


def test_pistar_breakdown_examples():
    one = parse_element("{1,1'}", "pistar", 2)
    top = parse_element("{1,2,1',2'}", "pistar", 2)
    assert multiply_pistar(one, top) == SetPartition.empty(2)
    assert multiply_pistar(top, one) == SetPartition.empty(2)

    a = parse_element("{1,2,1'}", "pistar", 2)
    b = parse_element("{1,1',2'}", "pistar", 2)
    assert str(multiply_pistar(a, b)) == "{1,2,1',2'}"

    ident = SetPartition.identity(2)
    for alpha in enumerate_pistar(2):
        assert multiply_pistar(ident, alpha) == alpha
        assert multiply_pistar(alpha, ident) == alpha


def test_pistar_empty_is_a_zero():
    z = SetPartition.empty(2)
    for alpha in enumerate_pistar(2):
        assert multiply_pistar(alpha, z) == z
        assert multiply_pistar(z, alpha) == z


def test_pistar_closed_and_associative():
    elements = enumerate_pistar(2)
    for a in elements:
        for b in elements:
            ab = multiply_pistar(a, b)
            assert is_partial_dual_element(ab)
            for c in elements:
                assert multiply_pistar(ab, c) == multiply_pistar(
                    a, multiply_pistar(b, c)
                )
    rng = random.Random(17)
    big = enumerate_pistar(3)
    for _ in range(300):
        a, b, c = (rng.choice(big) for _ in range(3))
        assert multiply_pistar(multiply_pistar(a, b), c) == multiply_pistar(
            a, multiply_pistar(b, c)
        )


def test_pistar_restricts_to_istar():
    for a in enumerate_istar(2):
        for b in enumerate_istar(2):
            assert multiply_pistar(a, b) == multiply_istar(a, b)


# the zero-adjoined deformation


def test_star_zero_absorbs():
    z = HatElement.zero(2)
    for alpha in enumerate_pistar(2):
        w = HatElement.wrap(alpha)
        assert star_multiply(z, w).is_zero
        assert star_multiply(w, z).is_zero
    assert star_multiply(z, z).is_zero


def test_star_identity_is_not_a_unit():
    """The interface partitions must match exactly, so even the identity
    annihilates anything whose input side is glued differently."""
    ident = HatElement.wrap(SetPartition.identity(2))
    top = HatElement.wrap(parse_element("{1,2,1',2'}", "pistar", 2))
    assert star_multiply(ident, top).is_zero
    assert star_multiply(top, ident).is_zero
    assert star_multiply(ident, ident) == ident

    one = HatElement.wrap(parse_element("{1,1'}", "pistar", 1))
    z1 = HatElement.wrap(SetPartition.empty(1))
    assert star_multiply(one, z1).is_zero
    assert star_multiply(z1, z1) == z1


def test_star_nonzero_agrees_with_pistar():
    for k in (1, 2):
        for a in enumerate_pistar(k):
            for b in enumerate_pistar(k):
                s = star_multiply(HatElement.wrap(a), HatElement.wrap(b))
                if not s.is_zero:
                    assert s.diagram == multiply_pistar(a, b)


def test_star_associativity():
    hats = [HatElement.zero(2)] + [HatElement.wrap(a) for a in enumerate_pistar(2)]
    for a in hats:
        for b in hats:
            ab = star_multiply(a, b)
            for c in hats:
                assert star_multiply(ab, c) == star_multiply(a, star_multiply(b, c))
    rng = random.Random(23)
    big = [HatElement.zero(3)] + [HatElement.wrap(a) for a in enumerate_pistar(3)]
    for _ in range(500):
        a, b, c = (rng.choice(big) for _ in range(3))
        assert star_multiply(star_multiply(a, b), c) == star_multiply(
            a, star_multiply(b, c)
        )


# the exact-mirror product


def test_bullet_examples():
    ident = SetPartition.identity(2)
    top = parse_element("{1,2,1',2'}", "tilde", 2)
    assert bullet_multiply(ident, top) == SetPartition.empty(2)
    assert bullet_multiply(top, top) == top
    assert bullet_multiply(ident, ident) == ident

    a = parse_element("{1,2,1'}|{3,2',3'}", "tilde", 3)
    b = parse_element("{1,1',2'}|{2,3,3'}", "tilde", 3)
    assert str(bullet_multiply(a, b)) == "{1,2,1',2'}|{3,3'}"


def test_bullet_empty_is_a_zero():
    z = SetPartition.empty(2)
    for alpha in enumerate_pistar(2):
        assert bullet_multiply(alpha, z) == z
        assert bullet_multiply(z, alpha) == z


def test_bullet_associativity():
    elements = enumerate_pistar(2)
    for a in elements:
        for b in elements:
            ab = bullet_multiply(a, b)
            assert is_partial_dual_element(ab)
            for c in elements:
                assert bullet_multiply(ab, c) == bullet_multiply(
                    a, bullet_multiply(b, c)
                )
    rng = random.Random(29)
    big = enumerate_pistar(3)
    for _ in range(300):
        a, b, c = (rng.choice(big) for _ in range(3))
        assert bullet_multiply(bullet_multiply(a, b), c) == bullet_multiply(
            a, bullet_multiply(b, c)
        )


def test_bullet_when_traces_mirror_exactly():
    """Whenever every interface block mirrors exactly, the bullet and
    break-down products agree (both just splice the matching blocks)."""
    for a in enumerate_pistar(2):
        for b in enumerate_pistar(2):
            a_out = {tuple(p.index for p in blk if p.primed) for blk in a.blocks}
            a_out = {t for t in a_out if t}
            b_in = {tuple(p.index for p in blk if not p.primed) for blk in b.blocks}
            b_in = {t for t in b_in if t}
            if a_out == b_in:
                assert bullet_multiply(a, b) == multiply_pistar(a, b)
