import random

import pytest

from modcyclic.instances import gen_prod, gen_randquot, gen_trunc, gen_zmod, parse_instance
from modcyclic.rings import (
    FiniteRing,
    NoIdentityError,
    PreIdeal,
    QuotientRing,
    find_identity,
    ideal_annihilator,
    ideal_meet_is_zero,
    ideal_span,
    ring_validate,
)

from helpers import subgroup_coords


def ring_of(doc):
    return parse_instance(doc).ring


def z12():
    return ring_of(gen_zmod(12, [12]))


def idem_ring():
    # Z/2 x Z/2 with the two idempotent generators
    return ring_of(gen_prod(gen_zmod(2, [2]), gen_zmod(2, [2])))


def small_rings():
    docs = [
        gen_zmod(12, [12]),
        gen_zmod(8, [8]),
        gen_trunc(2, 3),
        gen_trunc(3, 2),
        gen_prod(gen_zmod(2, [2]), gen_zmod(4, [4])),
        gen_randquot(4, 7),
        gen_randquot(3, 1),
    ]
    return [parse_instance(d).ring for d in docs]


def test_find_identity_examples():
    r = z12()
    assert r.one == r.group.element((1,))

    r = idem_ring()
    assert find_identity(r.group, r.mul_table) == r.group.element((1, 1))
    assert r.mul(r.one, r.group.element((1, 0))) == r.group.element((1, 0))

    zero_ring = ring_of(gen_zmod(1, [1]))
    assert zero_ring.order == 1
    assert zero_ring.one == zero_ring.group.zero()


def test_find_identity_missing():
    r = z12()
    # g*g = 2g admits no identity in Z/12
    bad_table = ((r.group.element((2,)),),)
    with pytest.raises(NoIdentityError):
        find_identity(r.group, bad_table)


def test_ring_validate_ok():
    for ring in small_rings():
        assert ring_validate(ring) == []


def test_ring_validate_commutativity_violation():
    r = idem_ring()
    g = r.group
    table = [[g.element((1, 0)), g.element((1, 0))],
             [g.element((0, 0)), g.element((0, 1))]]
    broken = FiniteRing(g, table, r.one)
    axioms = {d.axiom for d in ring_validate(broken)}
    assert "commutativity" in axioms


def test_ring_validate_identity_violation():
    r = z12()
    broken = FiniteRing(r.group, r.mul_table, r.group.element((2,)))
    axioms = {d.axiom for d in ring_validate(broken)}
    assert axioms == {"identity"}


def test_mul_examples():
    r = z12()
    four, five = r.group.element((4,)), r.group.element((5,))
    assert r.mul(four, five) == r.group.element((8,))
    rng = random.Random(2)
    for ring in small_rings():
        for _ in range(10):
            a = ring.group.element(tuple(rng.randrange(d)
                                         for d in ring.group.invariant_factors))
            assert ring.mul(a, ring.one) == a
            assert ring.mul(a, ring.zero()).is_zero()


def test_mul_commutative_associative_randomized():
    rng = random.Random(6)
    for ring in small_rings():
        els = [ring.group.element(tuple(rng.randrange(d)
                                        for d in ring.group.invariant_factors))
               for _ in range(4)]
        for a in els:
            for b in els:
                assert ring.mul(a, b) == ring.mul(b, a)
                for c in els:
                    assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))


def whole(ring):
    return QuotientRing(ring, PreIdeal.zero(ring))


def test_ideal_span_examples():
    r = z12()
    a = whole(r)
    p = ideal_span(a, [r.group.element((4,))])
    assert subgroup_coords(p.carrier) == {(0,), (4,), (8,)}

    assert ideal_span(a, []).carrier.order() == 1
    assert ideal_span(a, [r.one]).carrier.order() == 12


def test_ideal_annihilator_examples():
    r = z12()
    a = whole(r)
    p = ideal_span(a, [r.group.element((4,))])
    ann = ideal_annihilator(a, p)
    assert subgroup_coords(ann.carrier) == {(0,), (3,), (6,), (9,)}

    assert ideal_annihilator(a, PreIdeal.zero(r)).carrier.order() == 12
    assert ideal_annihilator(a, PreIdeal.unit(r)).carrier.order() == 1


def test_ideal_annihilator_in_proper_quotient():
    # A = Z/12 / (6) = Z/6; Ann_A((2)) = (3) pulled back to Z/12
    r = z12()
    six = ideal_span(whole(r), [r.group.element((6,))])
    a = QuotientRing(r, six)
    two = ideal_span(a, [r.group.element((2,))])
    ann = ideal_annihilator(a, two)
    assert subgroup_coords(ann.carrier) == {(0,), (3,), (6,), (9,)}
    assert ann.carrier.contains(r.group.element((6,)))


def test_ideal_annihilator_vs_enumeration():
    rng = random.Random(19)
    for ring in small_rings():
        if ring.order > 1000:
            continue
        elements = list(ring.group.elements())
        for _ in range(6):
            seeds = [elements[rng.randrange(len(elements))]
                     for _ in range(rng.randint(0, 2))]
            i_a = ideal_span(whole(ring), seeds)
            a = QuotientRing(ring, i_a)
            x = ideal_span(a, [elements[rng.randrange(len(elements))]])
            ann = ideal_annihilator(a, x)
            x_set = subgroup_coords(x.carrier)
            ia_set = subgroup_coords(i_a.carrier)
            expect = {r.coords for r in elements
                      if all(ring.mul(r, ring.group.element(u)).coords in ia_set
                             for u in x_set)}
            assert subgroup_coords(ann.carrier) == expect


def test_ideal_meet_is_zero_examples():
    r = z12()
    a = whole(r)
    p = ideal_span(a, [r.group.element((4,))])
    q = ideal_span(a, [r.group.element((3,))])
    meet, zero = ideal_meet_is_zero(a, p, q)
    assert zero and meet.carrier.order() == 1

    r4 = ring_of(gen_zmod(4, [4]))
    a4 = whole(r4)
    two = ideal_span(a4, [r4.group.element((2,))])
    meet, zero = ideal_meet_is_zero(a4, two, two)
    assert not zero and meet == two

    meet, zero = ideal_meet_is_zero(a, PreIdeal.zero(r), q)
    assert zero


def test_preideals_are_multiplicatively_closed():
    rng = random.Random(29)
    for ring in small_rings():
        elements = list(ring.group.elements()) if ring.order <= 1000 else [ring.one]
        for _ in range(4):
            seeds = [elements[rng.randrange(len(elements))]
                     for _ in range(rng.randint(0, 2))]
            i_a = ideal_span(whole(ring), seeds)
            assert i_a.is_mult_closed(ring)
            a = QuotientRing(ring, i_a)
            x = ideal_span(a, seeds[:1])
            ann = ideal_annihilator(a, x)
            assert ann.is_mult_closed(ring)
            assert all(ann.carrier.contains(u) for u in i_a.carrier.gens)
            meet, _ = ideal_meet_is_zero(a, x, ann)
            assert meet.is_mult_closed(ring)


def test_annihilator_splitting_orders():
    # when a and b = Ann(a) meet trivially, A splits as a x b, so the
    # ideal orders multiply to |A|; and b = 0 forces a = A
    rng = random.Random(43)
    for ring in small_rings():
        if ring.order > 1000:
            continue
        elements = list(ring.group.elements())
        for _ in range(8):
            i_a = ideal_span(whole(ring),
                             [elements[rng.randrange(len(elements))]
                              for _ in range(rng.randint(0, 1))])
            quot = QuotientRing(ring, i_a)
            a = ideal_span(quot, [elements[rng.randrange(len(elements))]])
            b = ideal_annihilator(quot, a)
            meet, zero = ideal_meet_is_zero(quot, a, b)
            if not zero:
                continue
            na = a.carrier.order() // i_a.carrier.order()
            nb = b.carrier.order() // i_a.carrier.order()
            assert na * nb == quot.order
            if nb == 1:
                assert na == quot.order
