from __future__ import annotations

import itertools

import pytest

from massadmit.dickson import (
    _recursion,
    binary_split,
    critical_exponent,
    critical_slice,
    critical_slice_expected,
    dickson_coeffs,
    dickson_top,
    euler_class,
    euler_product_form,
    render_family,
    x_space,
)
from massadmit.f2poly import Poly, symmetric_swap, weighted_degree
from oracles import dickson_family, from_sympy


def X(k, text):
    return Poly.parse(x_space(k), text)


def test_top_examples():
    assert dickson_top(1) == X(1, "x1")
    assert dickson_top(2) == X(2, "x1^2x2 + x1x2^2")
    assert weighted_degree(dickson_top(3)) == 7
    assert len(dickson_top(3)) == 6


def test_coeff_examples():
    f1 = dickson_coeffs(1)
    assert f1.coeffs == (X(1, "x1"), X(1, "1"))
    f2 = dickson_coeffs(2)
    assert f2.coeffs[0] == X(2, "x1^2x2 + x1x2^2")
    assert f2.coeffs[1] == X(2, "x1^2 + x1x2 + x2^2")
    assert f2.coeffs[2] == 1
    for k in range(1, 5):
        assert dickson_coeffs(k).coeffs[k] == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_family_matches_sympy(k):
    top, coeffs = dickson_family(k)
    space = x_space(k)
    fam = dickson_coeffs(k)
    assert fam.top == from_sympy(space, top)
    for e, c in coeffs.items():
        mine = Poly.zero(space)
        if e & (e - 1) == 0:
            mine = fam.coeffs[e.bit_length() - 1]
        assert mine == from_sympy(space, c)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_recursion_rebuilds_top(k):
    assert _recursion(k) == dickson_top(k)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dickson_polys_are_symmetric_and_graded(k):
    fam = dickson_coeffs(k)
    names = [f"x{i}" for i in range(1, k + 1)]
    for i, c in enumerate(fam.coeffs):
        if c != 1:
            assert weighted_degree(c) == 2**k - 2**i
        for a, b in itertools.combinations(names, 2):
            assert symmetric_swap(c, a, b) == c


def test_euler_examples():
    assert euler_class(1, 1).poly == 1
    for d in range(2, 12):
        assert euler_class(1, d).poly == X(1, f"x1^{d - 1}")
    assert euler_class(2, 1).poly == X(2, "x1 + x2")
    assert euler_class(2, 2).poly == X(2, "x1^3x2 + x1x2^3")
    assert str(euler_class(2, 3).poly) == "x1^2x2^5 + x1^3x2^4 + x1^4x2^3 + x1^5x2^2"


@pytest.mark.parametrize("k,j", [(k, j) for k in (1, 2, 3) for j in (1, 2, 3)])
def test_two_forms_agree(k, j):
    assert euler_class(k, j, verify=False).poly == euler_product_form(k, j)


@pytest.mark.parametrize("k,j", [(k, j) for k in (1, 2, 3) for j in range(1, 9)])
def test_euler_degree_and_symmetry(k, j):
    e = euler_class(k, j)
    assert e.degree == (2**k - 1) * j - k
    if e.poly != 1:
        assert weighted_degree(e.poly) == e.degree
    names = [f"x{i}" for i in range(1, k + 1)]
    for a, b in itertools.combinations(names, 2):
        assert symmetric_swap(e.poly, a, b) == e.poly


def test_euler_term_counts_against_sympy():
    # frozen from an independent sympy expansion mod 2
    assert len(euler_class(2, 3).poly) == 4
    assert len(euler_class(3, 1).poly) == 6
    assert len(euler_class(3, 2).poly) == 6
    assert len(euler_class(3, 20).poly) == 36


def test_binary_split():
    assert binary_split(1) == (0, 0)
    assert binary_split(15) == (3, 7)
    assert binary_split(16) == (4, 0)
    with pytest.raises(ValueError):
        binary_split(0)


@pytest.mark.parametrize("k,j", [(k, j) for k in (1, 2, 3) for j in range(1, 21)])
def test_critical_slice(k, j):
    t, r = binary_split(j)
    assert critical_exponent(k, j) == 2 ** (t + k - 1) + r
    assert critical_slice(k, j) == critical_slice_expected(k, j)


def test_render_family():
    assert render_family(2) == [
        ("Delta_2", "x1x2^2 + x1^2x2"),
        ("D_2,0", "x1x2^2 + x1^2x2"),
        ("D_2,1", "x2^2 + x1x2 + x1^2"),
        ("D_2,2", "1"),
    ]


def test_invalid_arguments():
    with pytest.raises(ValueError):
        euler_class(0, 1)
    with pytest.raises(ValueError):
        dickson_top(0)
