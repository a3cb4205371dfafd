from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from schur_repdim.weights import (
    Weight,
    breadth,
    brute_force_orbit,
    degree,
    delta,
    dominance_leq,
    in_Xm,
    is_column_regular,
    omega,
    orbit_size,
    p_adic_breadth,
    p_adic_decompose,
    partitions,
    special_weight,
    w0_apply,
    weyl_orbit,
)


@st.composite
def partitions_st(draw, max_n=5, max_part=12):
    n = draw(st.integers(1, max_n))
    parts = draw(st.lists(st.integers(0, max_part), min_size=n, max_size=n))
    return Weight(sorted(parts, reverse=True))


def test_special_weights():
    assert special_weight("delta", 3) == (2, 1, 0)
    assert special_weight("omega", 2) == (1, 1)
    assert special_weight("epsilon", 3, 2) == (0, 1, 0)
    with pytest.raises(IndexError):
        special_weight("epsilon", 3, 4)
    with pytest.raises(IndexError):
        special_weight("epsilon", 3, 0)


def test_weight_arithmetic_is_entrywise():
    a = Weight((2, 1, 0))
    assert a + (1, 1, 1) == (3, 2, 1)
    assert 3 * a == (6, 3, 0)
    assert a - a == (0, 0, 0)
    with pytest.raises(ValueError):
        a + (1, 1)


def test_parse_literal():
    assert Weight.parse("(8,4)") == (8, 4)
    assert Weight.parse(" ( -1, 2 ) ") == (-1, 2)
    with pytest.raises(ValueError):
        Weight.parse("(a,b)")


@pytest.mark.parametrize("a, b, expected", [
    ((1, 1), (2, 0), True),
    ((2, 0), (1, 1), False),
    ((1, 0), (1, 0), True),
    ((1, 0), (2, 0), False),  # totals differ
])
def test_dominance(a, b, expected):
    assert dominance_leq(a, b) is expected


def test_dominance_rank_mismatch():
    with pytest.raises(ValueError):
        dominance_leq((1, 0), (1, 0, 0))


def test_w0():
    assert w0_apply((2, 1, 0)) == (0, 1, 2)
    assert w0_apply((1, 1)) == (1, 1)
    assert w0_apply(w0_apply((3, 1, 2))) == (3, 1, 2)


def test_degree_and_breadth():
    assert degree((2, 1, 0)) == 3
    assert breadth((4, 2, 1)) == 4
    assert degree((-1, 1)) == 0
    with pytest.raises(ValueError):
        breadth((1, 2))


def test_orbits():
    assert weyl_orbit((1, 0)) == {(1, 0), (0, 1)}
    assert weyl_orbit((1, 1)) == {(1, 1)}
    assert len(weyl_orbit((2, 1, 0))) == len(set(permutations((2, 1, 0)))) == 6


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orbit_size_law_exhaustive(n):
    for entries in product(range(3), repeat=n):
        a = Weight(entries)
        orb = weyl_orbit(a)
        assert orb == brute_force_orbit(a)
        reps = 1
        for v in set(entries):
            reps *= factorial(entries.count(v))
        assert len(orb) * reps == factorial(n) == orbit_size(a) * reps


def test_column_regular():
    assert is_column_regular((2, 1), 3)
    assert not is_column_regular((3, 0), 3)
    assert is_column_regular(4 * delta(3) + (0, 0, 2), 5)
    assert 4 * delta(3) + (0, 0, 2) == (8, 4, 2)
    with pytest.raises(ValueError):
        is_column_regular((1, 0), 1)


def test_in_Xm():
    assert not in_Xm((9, 0, 0), 3, 2)
    assert in_Xm((0, 0), 5, 1)
    assert in_Xm((8, 0), 3, 2)


def _brute_decompositions(a, p):
    """All expansions ``a = sum_j p^j d_j`` over column p-regular digits
    (last digit nonzero), by exhaustive search."""
    n = len(a)
    # column p-regular partitions are exactly those with all gaps in [0, p)
    digits = []
    for gaps in product(range(p), repeat=n):
        digits.append(Weight(sum(gaps[i:]) for i in range(n)))
    length = 1
    while p**length <= max(a):
        length += 1
    found = []
    for k in range(1, length + 1):
        for seq in product(digits, repeat=k):
            if k > 1 and not any(seq[-1]):
                continue
            total = Weight([0] * n)
            for j, d in enumerate(seq):
                total = total + p**j * d
            if total == a:
                found.append(seq)
    return found


@pytest.mark.parametrize("a, p, digits", [
    ((8, 4), 3, [(2, 1), (2, 1)]),
    ((1, 0), 2, [(1, 0)]),
    ((3, 0), 3, [(0, 0), (1, 0)]),
    ((5, 0), 5, [(0, 0), (1, 0)]),
])
def test_padic_examples(a, p, digits):
    dec = p_adic_decompose(a, p)
    assert list(dec.digits) == digits
    assert dec.reconstruct() == a


def test_padic_matches_brute_force_uniqueness():
    for n in (2, 3):
        for r in range(9):
            for a in partitions(r, n):
                for p in (2, 3):
                    if not any(a):
                        continue
                    brute = _brute_decompositions(a, p)
                    assert len(brute) == 1, (a, p, brute)
                    assert p_adic_decompose(a, p).digits == brute[0]


def test_padic_breadth():
    assert p_adic_breadth((8, 4), 3) == 2
    assert p_adic_breadth((1, 0), 5) == 1
    for p in (2, 3, 5, 7):
        assert p_adic_breadth((p - 1, 0), p) == p - 1


def test_padic_rejects_non_polynomial():
    with pytest.raises(ValueError):
        p_adic_decompose((1, -1), 3)
    with pytest.raises(ValueError):
        p_adic_decompose((0, 1), 3)


@given(partitions_st(), st.integers(2, 9))
def test_padic_reconstruction_property(a, p):
    dec = p_adic_decompose(a, p)
    assert dec.reconstruct() == a
    assert all(is_column_regular(d, p) for d in dec.digits)


@settings(max_examples=200)
@given(st.integers(1, 5), st.integers(0, 12), st.data())
def test_dominance_is_partial_order(n, r, data):
    parts = list(partitions(r, n))
    a, b, c = (data.draw(st.sampled_from(parts)) for _ in range(3))
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)


@given(partitions_st())
def test_w0_preserves_degree_and_orbit(a):
    assert degree(w0_apply(a)) == degree(a)
    assert w0_apply(a) in weyl_orbit(a)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("p, m", [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 1), (7, 1)])
def test_steinberg_shift_stays_in_Xm(n, p, m):
    big = p**m
    for lam in product(range(big), repeat=n):
        lam = Weight(sorted(lam, reverse=True))
        if in_Xm(lam, p, m) and lam[0] < big:
            assert in_Xm((big - 1) * delta(n) + w0_apply(lam), p, m)


def test_omega_is_dominant():
    assert omega(4).is_partition()
