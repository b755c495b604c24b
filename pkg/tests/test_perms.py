import random
from collections import Counter
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperoct.errors import CapExceeded
from hyperoct.partitions import bipartitions
from hyperoct.perms import (
    CycleType,
    GeneratorSet,
    SignedPermutation,
    all_cycle_types,
    centralizer_order,
    class_size,
    compose,
    cycle_type,
    element_order,
    enumerate_group,
    group_closure,
    group_closure_order,
    is_conjugate,
    least_primitive_root,
    make_f,
    make_rho,
    make_sigma,
    make_tau,
    make_z,
    random_signed_permutation,
)

P = SignedPermutation.parse


@st.composite
def signed_perms(draw, n_min=1, n_max=6, n=None):
    if n is None:
        n = draw(st.integers(n_min, n_max))
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(s * x for s, x in zip(signs, perm)))


# -- construction and parsing --------------------------------------------------


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
    with pytest.raises(ValueError):
        SignedPermutation((1, -1))


def test_from_cycles_rejects_bar_breaking_cycle():
    with pytest.raises(ValueError):
        SignedPermutation.from_cycles(2, [(1, 2)])


@pytest.mark.parametrize(
    "text",
    ["(1 2)(1- 2-)", "(1 1-)", "(1 2-)(1- 2)", "(1 2 3 1- 2- 3-)", "(1 3 2)(1- 3- 2-)"],
)
def test_parse_print_round_trip(text):
    g = P(text)
    assert P(str(g), n=g.n) == g
    assert str(P(str(g))) == str(g)


def test_parse_is_whitespace_insensitive():
    assert P(" ( 1  2 ) (1-   2-) ") == P("(1 2)(1- 2-)")


def test_identity_prints_and_parses():
    e = SignedPermutation.identity(3)
    assert str(e) == "()"
    assert P("()", n=3) == e


@given(signed_perms())
def test_round_trip_random(g):
    assert P(str(g), n=g.n) == g


@given(signed_perms())
def test_bar_equivariance(g):
    for x in range(1, g.n + 1):
        assert g(-x) == -g(x)


# -- compose -------------------------------------------------------------------


@given(signed_perms())
def test_inverse_composes_to_identity(g):
    assert compose(g, g.inverse()).is_identity()
    assert compose(g.inverse(), g).is_identity()


def test_bar_swap_is_involution():
    h = P("(1 1-)")
    assert compose(h, h).is_identity()


def test_sigma_squared_at_p3():
    s = make_sigma(1, 3, 3)
    # image by image: 1->2->3, 2->3->1, 3->1->2
    assert compose(s, s) == P("(1 3 2)(1- 3- 2-)")


def test_compose_applies_left_first():
    g, h = P("(1 2)(1- 2-)", n=3), P("(2 3)(2- 3-)")
    gh = compose(g, h)
    assert gh(1) == h(g(1)) == 3


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(SignedPermutation.identity(2), SignedPermutation.identity(3))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(signed_perms(n=n), signed_perms(n=n), signed_perms(n=n))))
def test_associativity(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


# -- cycle type ----------------------------------------------------------------


def test_identity_is_positive_one_cycle():
    assert cycle_type(SignedPermutation.identity(1)) == CycleType(1, (1,), ())


def test_bar_transposition_is_negative_one_cycle():
    assert cycle_type(P("(1 1-)")) == CycleType(1, (), (1,))


def test_f2_cycle_type():
    ct = cycle_type(make_f(2, 4))
    assert ct.pos == {2: 2} and ct.neg == {}


def test_negative_two_cycle():
    assert cycle_type(P("(1 2 1- 2-)")).neg == {2: 1}


def test_cycle_type_string():
    assert str(cycle_type(P("(1 2)(1- 2-)(3 3-)"))) == "2|1"


@given(signed_perms())
def test_cycle_type_sums_to_n(g):
    ct = cycle_type(g)
    assert sum(ct.positive) + sum(ct.negative) == g.n


def _brute_cycle_type(g):
    """Orbits on the 2n symbols, then split by bar-stability."""
    seen, pos, neg = set(), [], []
    for x in list(range(1, g.n + 1)) + [-i for i in range(1, g.n + 1)]:
        if x in seen:
            continue
        orbit = [x]
        y = g(x)
        while y != x:
            orbit.append(y)
            y = g(y)
        seen.update(orbit)
        if -x in orbit:
            neg.append(len(orbit) // 2)
        else:
            pos.append(len(orbit))
    # each positive cycle was seen twice (once per bar copy)
    pos_counts = Counter(pos)
    pos_list = sorted((r for r, k in pos_counts.items() for _ in range(k // 2)), reverse=True)
    return tuple(pos_list), tuple(sorted(neg, reverse=True))


@given(signed_perms())
def test_cycle_type_against_orbit_oracle(g):
    ct = cycle_type(g)
    assert (ct.positive, ct.negative) == _brute_cycle_type(g)


# -- conjugacy -----------------------------------------------------------------


def test_conjugate_examples():
    assert is_conjugate(P("(1 1-)", n=2), P("(2 2-)"))
    # (1 2-)(1- 2) is a positive 2-cycle, conjugate to f_1 by a bar swap on 2
    assert is_conjugate(P("(1 2)(1- 2-)"), P("(1 2-)(1- 2)"))
    assert not is_conjugate(P("(1 2)(1- 2-)"), P("(1 2 1- 2-)"))


def test_is_conjugate_degree_mismatch():
    with pytest.raises(ValueError):
        is_conjugate(SignedPermutation.identity(1), SignedPermutation.identity(2))


@settings(max_examples=200)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(signed_perms(n=n), signed_perms(n=n))))
def test_conjugation_preserves_cycle_type(pair):
    g, h = pair
    assert cycle_type(g ** h) == cycle_type(g)
    assert g ** h == h.inverse() * g * h


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_conjugacy_classes_match_cycle_types_brute(n):
    """Orbits of the group acting on itself by conjugation are exactly the cycle-type classes."""
    group = list(enumerate_group(n))
    remaining = set(group)
    classes = []
    while remaining:
        g = next(iter(remaining))
        orbit = {g ** h for h in group}
        remaining -= orbit
        classes.append(orbit)
    assert len(classes) == len(all_cycle_types(n))
    for orbit in classes:
        types = {cycle_type(x) for x in orbit}
        assert len(types) == 1
        assert len(orbit) == class_size(types.pop())


# -- centralisers and class sizes ----------------------------------------------


def test_centralizer_identity_n2():
    assert centralizer_order(cycle_type(SignedPermutation.identity(2))) == 8


@pytest.mark.parametrize("a", [1, 2, 3])
def test_centralizer_of_f(a):
    ct = cycle_type(make_f(a, 2 * a))
    assert centralizer_order(ct) == 4**a * factorial(a)
    # orbit-stabiliser against a brute count of conjugates
    if a <= 2:
        conj = {make_f(a, 2 * a) ** h for h in enumerate_group(2 * a)}
        assert len(conj) * centralizer_order(ct) == 2 ** (2 * a) * factorial(2 * a)


def test_centralizer_negative_one_cycle():
    ct = CycleType(1, (), (1,))
    brute = sum(1 for h in enumerate_group(1) if P("(1 1-)") ** h == P("(1 1-)"))
    assert centralizer_order(ct) == brute == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_centralizer_brute_force(n):
    group = list(enumerate_group(n))
    by_type = {}
    for g in group:
        by_type.setdefault(cycle_type(g), g)
    for ct, g in by_type.items():
        assert centralizer_order(ct) == sum(1 for h in group if g * h == h * g)


def test_class_size_examples():
    assert class_size(cycle_type(make_f(1, 2))) == 2
    assert {str(make_f(1, 2) ** h) for h in enumerate_group(2)} == {"(1 2)(1- 2-)", "(1 2-)(1- 2)"}
    assert class_size(cycle_type(SignedPermutation.identity(4))) == 1
    assert sum(class_size(ct) for ct in all_cycle_types(3)) == 48


def test_class_size_degree_mismatch():
    with pytest.raises(ValueError):
        class_size(cycle_type(SignedPermutation.identity(2)), 3)


@pytest.mark.parametrize("n", range(0, 8))
def test_class_sizes_sum_to_group_order(n):
    assert sum(class_size(ct, n) for ct in all_cycle_types(n)) == 2**n * factorial(n)


@pytest.mark.parametrize("n", range(0, 11))
def test_number_of_classes_equals_bipartitions(n):
    assert len(all_cycle_types(n)) == len(bipartitions(n))


def test_enumerate_group_size():
    assert len(set(enumerate_group(3))) == 48


def test_big_integer_centraliser():
    ct = CycleType(60, (1,) * 60, ())
    assert centralizer_order(ct) == 2**60 * factorial(60)


# -- named elements ------------------------------------------------------------


def test_make_f_and_tau():
    assert make_f(1, 2) == P("(1 2)(1- 2-)")
    assert make_tau(1, 3, 3) == P("(1 1-)(2 2-)(3 3-)")


def test_named_elements_out_of_range():
    with pytest.raises(ValueError):
        make_sigma(2, 3, 5)
    with pytest.raises(ValueError):
        make_rho(2, 3, 6)
    with pytest.raises(ValueError):
        make_f(2, 3)
    with pytest.raises(ValueError):
        make_z(2, 4, 8)


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("r", [2, 3, 4])
def test_rho_relation_table(p, r):
    n = r * p
    for i in range(1, r):
        rho = make_rho(i, p, n)
        for j in range(1, r + 1):
            expected = j + 1 if j == i else j - 1 if j == i + 1 else j
            assert make_sigma(j, p, n) ** rho == make_sigma(expected, p, n)


def test_z_at_p3():
    assert make_z(1, 3, 3) == P("(2 3)(2- 3-)")
    assert make_z(3, 3, 9) == P("(2 3)(2- 3-)(5 6)(5- 6-)(8 9)(8- 9-)")


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_z_properties(p, r):
    n = r * p
    z = make_z(r, p, n)
    x = least_primitive_root(p)
    for k in range(1, n + 1):
        assert z(-k) == -z(k)
    diag = SignedPermutation.identity(n)
    for i in range(1, r + 1):
        sigma = make_sigma(i, p, n)
        assert sigma ** z == sigma**x
        assert z * make_tau(i, p, n) == make_tau(i, p, n) * z
        diag = diag * sigma
    assert diag ** z == diag**x


def test_least_primitive_roots():
    assert [least_primitive_root(p) for p in (3, 5, 7, 11)] == [2, 2, 3, 2]
    with pytest.raises(ValueError):
        least_primitive_root(9)


# -- closure -------------------------------------------------------------------


def test_closure_examples():
    assert group_closure_order(GeneratorSet(3, (make_sigma(1, 3, 3),))) == 3
    gens = GeneratorSet(3, (make_tau(1, 3, 3), make_sigma(1, 3, 3), make_z(1, 3, 3)))
    assert group_closure_order(gens) == 12


def test_closure_cap():
    gens = GeneratorSet(4, (P("(1 2 3 4)(1- 2- 3- 4-)"), P("(1 1-)", n=4), P("(1 2)(1- 2-)", n=4)))
    with pytest.raises(CapExceeded) as info:
        group_closure_order(gens, cap=50)
    assert info.value.progress == 50
    assert group_closure_order(gens) == 384


def test_centraliser_generators_match_formula():
    """Without z the generators give the full centraliser of R_r, whose order the cycle-type formula predicts."""
    p = 3
    for r in (1, 2):
        n = r * p
        gens = [make_tau(i, p, n) for i in range(1, r + 1)] + [make_sigma(i, p, n) for i in range(1, r + 1)]
        gens += [make_rho(i, p, n) for i in range(1, r)]
        diag = SignedPermutation.identity(n)
        for i in range(1, r + 1):
            diag = diag * make_sigma(i, p, n)
        centraliser = group_closure(GeneratorSet(n, tuple(gens)))
        assert len(centraliser) == centralizer_order(cycle_type(diag))
        assert all(g * diag == diag * g for g in centraliser)


def test_generator_set_degree_check():
    with pytest.raises(ValueError):
        GeneratorSet(3, (SignedPermutation.identity(2),))


def test_element_order_and_random():
    rng = random.Random(5)
    for _ in range(30):
        g = random_signed_permutation(5, rng)
        k = element_order(g)
        assert (g**k).is_identity()
        assert all(not (g**d).is_identity() for d in range(1, k))
