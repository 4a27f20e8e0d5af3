import math

import pytest
from hypothesis import given, strategies as st

from mcgdim.dimensions import (
    ExternalResultError,
    MappingClassGroup,
    gd_mcg,
    le_pow2,
    length_upper_bound,
    omega,
    satisfies_length_bound,
    vcd_mcg,
    vcd_spherical_braid,
)


@pytest.mark.parametrize("g,n,want", [(0, 5, 2), (1, 0, 1), (2, 3, 7), (0, 2, 0), (2, 0, 3), (3, 0, 7)])
def test_vcd_examples(g, n, want):
    assert vcd_mcg(g, n) == want
    assert vcd_mcg(MappingClassGroup(g, n)) == want


@given(st.integers(1, 30), st.integers(2, 200))
def test_vcd_linear_in_punctures(g, n):
    assert vcd_mcg(g, n) == vcd_mcg(g, n - 1) + 1


def test_negative_labels_rejected():
    with pytest.raises(ValueError):
        MappingClassGroup(-1, 2)
    with pytest.raises(ValueError):
        MappingClassGroup(0, -1)


@pytest.mark.parametrize("g,n,want", [(0, 6, 3), (1, 2, 2), (2, 1, 5), (0, 1, 0), (4, 3, 15)])
def test_gd_examples(g, n, want):
    assert gd_mcg(g, n) == want


def test_gd_closed_surface_is_gated():
    with pytest.raises(ExternalResultError):
        gd_mcg(2, 0)
    assert gd_mcg(2, 0, allow_external=True) == 3
    assert gd_mcg(0, 0) == 0


@pytest.mark.parametrize("n,want", [(2, 0), (3, 0), (10, 7), (1, 0)])
def test_braid(n, want):
    assert vcd_spherical_braid(n) == want


def test_braid_matches_gd_genus0():
    assert all(vcd_spherical_braid(n) == gd_mcg(0, n) for n in range(1, 300))


def _omega_oracle(k):
    # factor by brute-force division over all d
    count = 0
    d = 2
    while k > 1:
        if k % d == 0:
            k //= d
            count += 1
        else:
            d += 1
    return count


@pytest.mark.parametrize("k,want", [(12, 3), (48, 5), (1, 0), (60, 4), (97, 1), (1024, 10)])
def test_omega_examples(k, want):
    assert omega(k) == want


@given(st.integers(1, 10**5))
def test_omega_matches_oracle(k):
    assert omega(k) == _omega_oracle(k)


@given(st.integers(1, 10**9))
def test_length_upper_bound(k):
    lam = length_upper_bound(k)
    assert 2 ** lam <= k < 2 ** (lam + 1)


def test_length_bound_examples():
    assert satisfies_length_bound(4, 60)
    assert satisfies_length_bound(0, 1)
    assert satisfies_length_bound(3, 8)
    assert not satisfies_length_bound(4, 8)


@given(st.integers(-5, 10**12), st.integers(-3, 60))
def test_le_pow2(x, p):
    want = x <= 0 if p < 0 else x <= 2 ** p
    assert le_pow2(x, p) == want


def test_no_float_log_disagreement_at_powers():
    for p in range(200):
        assert le_pow2(2 ** p, p) and not le_pow2(2 ** p + 1, p)
    assert math.log2(2 ** 60) == 60
