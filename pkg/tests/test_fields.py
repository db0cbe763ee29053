"""Tower arithmetic, embeddings, Frobenius, and root finding."""

import random

import pytest

from dihedral.errors import (
    BadLevel,
    BadSpec,
    CharacteristicTwo,
    DivisionByZero,
    LevelOverflow,
)
from dihedral.fields import FieldSpec, Poly, PrimeClosureField, RootMultiset, make_field


def test_field_spec_guards():
    with pytest.raises(CharacteristicTwo):
        make_field(FieldSpec.prime_closure(2))
    with pytest.raises(BadSpec):
        make_field(FieldSpec.prime_closure(9))
    with pytest.raises(BadSpec):
        make_field(FieldSpec.prime_closure(-5))
    with pytest.raises(BadSpec):
        # 2^20 + 7 is prime but beyond the kernel's packing bound
        make_field(FieldSpec.prime_closure((1 << 20) + 7))
    with pytest.raises(BadSpec):
        make_field(FieldSpec.prime_closure(7, 0))
    with pytest.raises(BadSpec):
        make_field(FieldSpec("galois"))


def test_from_int_wraps(F7):
    assert F7.from_int(9) == F7.from_int(2)
    assert F7.from_int(-1) == F7.from_int(6)
    assert F7.from_int(7).is_zero()
    assert F7.zero + F7.one == F7.one


def test_zero_has_no_inverse(F7, Q):
    for field in (F7, Q):
        with pytest.raises(DivisionByZero):
            field.zero.inv()


def test_ring_axioms_across_levels(F5):
    rng = random.Random(101)
    for _ in range(60):
        la, lb = rng.choice((1, 2, 3, 4)), rng.choice((1, 2, 3))
        x = F5.random_element(rng, la)
        y = F5.random_element(rng, lb)
        z = F5.random_element(rng, rng.choice((1, 2)))
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x - x == F5.zero
        assert x * F5.one == x
        if not x.is_zero():
            assert x * x.inv() == F5.one
            assert (x ** -2) * (x ** 2) == F5.one
        assert x ** 3 == x * x * x


def test_frobenius_is_a_field_automorphism(F7):
    rng = random.Random(5)
    for _ in range(40):
        lvl = rng.choice((1, 2, 3, 4, 6))
        x = F7.random_element(rng, lvl)
        y = F7.random_element(rng, lvl)
        assert F7.frobenius(x + y) == F7.frobenius(x) + F7.frobenius(y)
        assert F7.frobenius(x * y) == F7.frobenius(x) * F7.frobenius(y)
        cur = x
        for _ in range(lvl):
            cur = F7.frobenius(cur)
        assert cur == x
    # the prime field is fixed pointwise
    for n in range(7):
        assert F7.frobenius(F7.from_int(n)) == F7.from_int(n)


def test_embeddings_commute(F3):
    rng = random.Random(77)
    chains = [(1, 2, 4), (1, 2, 6), (1, 3, 6), (2, 4, 8), (2, 6, 12), (3, 6, 12)]
    for e, f, d in chains:
        for _ in range(10):
            x = F3.random_element(rng, e)
            via = F3.embed(F3.embed(x, f), d)
            direct = F3.embed(x, d)
            assert via == direct, (e, f, d)
            assert via == x  # equality is level-independent


def test_canonical_minimizes_level(F7):
    rng = random.Random(13)
    for _ in range(25):
        x = F7.random_element(rng, 2)
        up = F7.embed(x, 6)
        canon = F7.canonical(up)
        assert canon.level <= 2
        assert canon == x
    # a scalar pushed to level 4 comes back down to level 1
    c = F7.embed(F7.from_int(5), 4)
    assert F7.canonical(c).level == 1


def test_equality_across_incompatible_levels():
    # lcm(2, 3) = 6 exceeds the bound, but equality never needs level 6
    field = make_field(FieldSpec.prime_closure(5, 3))
    rng = random.Random(3)
    x = field.random_element(rng, 2)
    y = field.random_element(rng, 3)
    if field.canonical(x).level > 1 and field.canonical(y).level > 1:
        assert x != y
    with pytest.raises(LevelOverflow):
        _ = x * y


def test_level_bound_enforced():
    field = make_field(FieldSpec.prime_closure(7, 2))
    with pytest.raises(LevelOverflow):
        field.ensure_level(3)
    with pytest.raises(BadLevel):
        field.ensure_level(0)
    with pytest.raises(BadLevel):
        field.element(2, (1,))


def test_sort_key_orders_elements(F7):
    rng = random.Random(8)
    xs = [F7.random_element(rng, rng.choice((1, 2, 3))) for _ in range(30)]
    keys = [F7.sort_key(x) for x in xs]
    order = sorted(range(len(xs)), key=lambda i: keys[i])
    for i, j in zip(order, order[1:]):
        if keys[i] == keys[j]:
            assert xs[i] == xs[j]
    # keys are stable under re-embedding
    x = F7.random_element(rng, 2)
    assert F7.sort_key(x) == F7.sort_key(F7.embed(x, 4))


def test_roots_of_split_polynomials(F7):
    x = Poly.x(F7)
    one = Poly.one(F7)
    sq_minus_1 = x * x - one
    ms = F7.roots(sq_minus_1)
    assert ms.degree() == 2
    assert ms.multiplicity(F7.from_int(1)) == 1
    assert ms.multiplicity(F7.from_int(-1)) == 1
    # (x - 2)^3
    lin = x - Poly.from_int_coeffs(F7, [2])
    cube = lin * lin * lin
    ms3 = F7.roots(cube)
    assert ms3.degree() == 3
    assert ms3.multiplicity(F7.from_int(2)) == 3


def test_roots_above_the_prime_field(F7):
    # -1 is not a square mod 7, so x^2 + 1 splits at level 2
    x = Poly.x(F7)
    ms = F7.roots(x * x + Poly.one(F7))
    assert ms.degree() == 2
    for r, m in ms:
        assert m == 1
        assert F7.canonical(r).level == 2
        assert r * r == F7.from_int(-1)
    roots = [r for r, _ in ms]
    assert roots[0] == F7.frobenius(roots[1])


def test_roots_reassemble_and_match_construction(F5):
    rng = random.Random(55)
    for trial in range(25):
        lvl = rng.choice((1, 1, 2, 3))
        chosen = [F5.random_element(rng, lvl) for _ in range(rng.randint(1, 4))]
        poly = Poly.one(F5)
        for r in chosen:
            poly = poly * (Poly.x(F5) - Poly(F5, (r,)))
        ms = F5.roots(poly)
        assert ms == RootMultiset([(r, 1) for r in chosen]), trial
        rebuilt = Poly.one(F5)
        for r, m in ms:
            for _ in range(m):
                rebuilt = rebuilt * (Poly.x(F5) - Poly(F5, (r,)))
        assert rebuilt == poly


def test_roots_need_more_level_than_allowed():
    field = make_field(FieldSpec.prime_closure(7, 1))
    x = Poly.x(field)
    with pytest.raises(LevelOverflow):
        field.roots(x * x + Poly.one(field))


def test_roots_deterministic_across_instances():
    specs = FieldSpec.prime_closure(11)
    a, b = make_field(specs), make_field(specs)
    pa = Poly.from_int_coeffs(a, [3, 0, 1, 5, 1])
    pb = Poly.from_int_coeffs(b, [3, 0, 1, 5, 1])
    ra = [(r.level, r.coords, m) for r, m in a.roots(pa)]
    rb = [(r.level, r.coords, m) for r, m in b.roots(pb)]
    assert ra == rb
    assert ra == [(r.level, r.coords, m) for r, m in a.roots(pa)]


def test_rational_field_basics(Q):
    assert Q.describe() == "q"
    x = Q.from_int(3) / Q.from_int(4)
    assert x + x == Q.from_int(3) / Q.from_int(2)
    assert (x ** -1) * x == Q.one
    assert Q.characteristic == 0
    with pytest.raises(DivisionByZero):
        Q.from_int(1) / Q.zero


def test_rational_roots(Q):
    x = Poly.x(Q)
    half = Poly(Q, (Q.from_int(1) / Q.from_int(2),))
    poly = (x - half) * (x - half) * (x + Poly.one(Q))
    ms = Q.roots(poly)
    assert ms.multiplicity(Q.from_int(1) / Q.from_int(2)) == 2
    assert ms.multiplicity(Q.from_int(-1)) == 1


def test_root_multiset_merges_and_sorts(F7):
    two, five = F7.from_int(2), F7.from_int(5)
    ms = RootMultiset([(five, 1), (two, 2), (five, 1)])
    assert ms.multiplicity(five) == 2
    assert ms.multiplicity(two) == 2
    assert ms.degree() == 4
    assert ms == RootMultiset([(two, 1), (two, 1), (five, 2)])
    assert list(ms) == sorted(list(ms), key=lambda e: F7.sort_key(e[0]))
    assert not RootMultiset.empty()
    with pytest.raises(ValueError):
        RootMultiset([(two, -1)])


def test_level_conformance_small_scale():
    # every level up to 8 for p = 3: random split products come back exactly
    field = make_field(FieldSpec.prime_closure(3, 16))
    rng = random.Random(31)
    for lvl in range(1, 9):
        for _ in range(4):
            chosen = [field.random_element(rng, lvl) for _ in range(3)]
            poly = Poly.one(field)
            for r in chosen:
                poly = poly * (Poly.x(field) - Poly(field, (r,)))
            ms = field.roots(poly)
            assert ms.degree() == 3
            assert ms == RootMultiset([(r, 1) for r in chosen]), lvl
