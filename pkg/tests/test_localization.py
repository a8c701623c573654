import pytest
from sympy import primerange

from pikernel.catalog import E6, E7, E8, EXCEPTIONAL, F4, G2, SO, LieGroup, Sp, Spin, SU, U, rational_type
from pikernel.errors import DomainError, NotCovered, UnsupportedGroup
from pikernel.localization import (
    Bundle,
    CircleTimes,
    Decomposition,
    Sphere,
    covering_reduction,
    decompose,
    is_p_regular,
    is_quasi_p_regular,
    regularity_bound,
)

ODD_PRIMES = list(primerange(3, 38))


def classical(max_rank=12):
    yield from (SU(n) for n in range(2, max_rank + 2))
    yield from (Sp(n) for n in range(1, max_rank + 1))
    yield from (Spin(n) for n in range(3, 2 * max_rank + 2))


def exceptional():
    return [LieGroup(name) for name in EXCEPTIONAL]


def quasi_pairs():
    for g in list(classical()) + exceptional():
        for p in ODD_PRIMES:
            if is_quasi_p_regular(g, p):
                yield g, p


def test_quasi_examples():
    assert is_quasi_p_regular(Sp(3), 5)
    assert not is_quasi_p_regular(E8, 7)
    assert not is_quasi_p_regular(G2, 3)
    assert not is_quasi_p_regular(SU(2), 2)
    assert is_quasi_p_regular(E7, 11)


def test_quasi_thresholds_by_family():
    for n in range(1, 20):
        for p in ODD_PRIMES:
            assert is_quasi_p_regular(Sp(n), p) == (p > n)
            assert is_quasi_p_regular(SU(n + 1), p) == (p > (n + 1) / 2)
            assert is_quasi_p_regular(Spin(n + 2), p) == (p > (n + 1) / 2)
    for p in ODD_PRIMES:
        for g in (G2, F4, E6):
            assert is_quasi_p_regular(g, p) == (p >= 5)
        for g in (E7, E8):
            assert is_quasi_p_regular(g, p) == (p >= 11)


def test_regular_examples():
    assert is_p_regular(SU(4), 5)
    assert not is_p_regular(Sp(2), 3)
    assert is_p_regular(E8, 31)
    assert not is_p_regular(E8, 29)
    assert not is_p_regular(SU(2), 2)


def test_regular_thresholds_by_family():
    for n in range(2, 20):
        assert regularity_bound(SU(n)) == n - 1
        assert regularity_bound(Sp(n)) == 2 * n - 1
        assert regularity_bound(Spin(2 * n - 1)) == 2 * n - 3
        assert regularity_bound(Spin(2 * n)) == 2 * n - 3
    assert [regularity_bound(g) for g in (G2, F4, E6, E7, E8)] == [5, 11, 11, 17, 29]


def test_regularity_bound_from_top_degree():
    for g in list(classical(20)) + exceptional():
        assert regularity_bound(g) == (rational_type(g)[-1] - 1) // 2


def test_spin_9_at_5_is_not_regular():
    # a bound of n-2 for Spin(2n-1) would call Spin(9) 5-regular
    assert not is_p_regular(Spin(9), 5)
    assert decompose(Spin(9), 5).factors == (Bundle(1, 5), Bundle(3, 5))


@pytest.mark.parametrize(
    "g, p, factors",
    [
        (E8, 11, (Bundle(1, 11), Bundle(7, 11), Bundle(13, 11), Bundle(19, 11))),
        (E8, 13, (Bundle(1, 13), Bundle(7, 13), Bundle(11, 13), Bundle(17, 13))),
        (F4, 5, (Bundle(1, 5), Bundle(7, 5))),
        (E6, 5, (Bundle(1, 5), Bundle(4, 5), Bundle(7, 5))),
        (SU(4), 5, (Sphere(3), Sphere(5), Sphere(7))),
    ],
    ids=str,
)
def test_golden_decompositions(g, p, factors):
    assert decompose(g, p).factors == factors


def test_other_exceptional_decompositions():
    assert str(decompose(G2, 5)) == "B1(5)"
    assert str(decompose(F4, 7)) == "B1(7) x B5(7)"
    assert str(decompose(E6, 7)) == "B1(7) x S9 x B5(7) x S17"
    assert str(decompose(E7, 11)) == "B1(11) x S11 x B7(11) x S19 x S27"


def test_su_closed_form():
    for p in primerange(3, 14):
        for n in range(0, p):
            expected = {Bundle(k, p) for k in range(1, n + 1)} | {Sphere(2 * k + 1) for k in range(n + 1, p)}
            dec = decompose(SU(n + p), p)
            assert set(dec.factors) == expected
            assert len(dec.factors) == len(expected)


def test_sp_closed_form():
    for p in primerange(3, 14):
        half = (p - 1) // 2
        for n in range(0, half):
            if n + half < 1:
                continue
            expected = {Bundle(2 * k - 1, p) for k in range(1, n + 1)} | {
                Sphere(4 * k - 1) for k in range(n + 1, half + 1)
            }
            dec = decompose(Sp(n + half), p)
            assert set(dec.factors) == expected
            assert len(dec.factors) == len(expected)


def test_spin_reductions():
    for p in ODD_PRIMES:
        for n in range(1, 13):
            if is_quasi_p_regular(Sp(n), p):
                assert decompose(Spin(2 * n + 1), p).factors == decompose(Sp(n), p).factors
        for n in range(2, 13):
            if is_quasi_p_regular(Spin(2 * n), p):
                even = decompose(Spin(2 * n), p).factors
                odd = decompose(Spin(2 * n - 1), p).factors
                assert sorted(even, key=str) == sorted(odd + (Sphere(2 * n - 1),), key=str)


def test_degree_multiset_invariant():
    count = 0
    for g, p in quasi_pairs():
        dec = decompose(g, p)
        assert dec.degrees() == rational_type(g)
        count += 1
    assert count > 300


def test_regular_means_no_bundles():
    for g in list(classical()) + exceptional():
        for p in ODD_PRIMES:
            if is_p_regular(g, p):
                assert is_quasi_p_regular(g, p)
                assert not decompose(g, p).bundles
            elif is_quasi_p_regular(g, p):
                assert decompose(g, p).bundles


def test_decompose_refuses():
    with pytest.raises(NotCovered):
        decompose(G2, 3)
    with pytest.raises(NotCovered):
        decompose(SU(3), 2)
    with pytest.raises(UnsupportedGroup):
        decompose(SO(7), 5)
    with pytest.raises(DomainError):
        decompose(SU(3), 4)


def test_covering_reduction():
    assert covering_reduction(SO(7), 5) == Spin(7)
    assert covering_reduction(U(3), 7) == CircleTimes(SU(3))
    assert str(covering_reduction(U(3), 2)) == "S1 x SU(3)"
    with pytest.raises(UnsupportedGroup):
        covering_reduction(SO(7), 2)
    assert covering_reduction(G2, 5) == G2


def test_decomposition_json_round_trip():
    dec = decompose(E6, 5)
    assert Decomposition.from_json(dec.to_json()) == dec
    assert str(dec) == "B1(5) x B4(5) x B7(5)"
