"""Dickson polynomials over F2 and the Euler classes built from them.

``dickson_top(k)`` is the product of all nonzero linear forms in
``x1..xk``.  The companion polynomials ``D_{k,i}`` are read off from the
expansion of ``prod_{a in F2^k} (a.x + y)`` as coefficients of ``y**(2**i)``;
a linear polynomial in ``y`` over F2 only carries powers of two, which is
checked as the expansion is read.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import VerificationError
from .f2poly import (
    Monomial,
    Poly,
    VarSpace,
    coefficient_of,
    divide_exact_by_monomial,
    embed,
    mul,
    pow,
)


def x_space(k: int) -> VarSpace:
    return VarSpace(k, 0, 0)


def linear_form(space: VarSpace, alpha: tuple[int, ...]) -> Poly:
    rows = []
    for i, a in enumerate(alpha):
        if a:
            row = [0] * space.nvars
            row[i] = 1
            rows.append(row)
    return Poly(space, rows)


def _product(polys) -> Poly:
    polys = list(polys)
    if not polys:
        raise ValueError("empty product")
    out = polys[0]
    for p in polys[1:]:
        out = mul(out, p)
    return out


def _nonzero_vectors(k: int):
    return (a for a in itertools.product((0, 1), repeat=k) if any(a))


@lru_cache(maxsize=None)
def dickson_top(k: int) -> Poly:
    if k < 1:
        raise ValueError("k must be at least 1")
    space = x_space(k)
    return _product(linear_form(space, a) for a in _nonzero_vectors(k))


@dataclass(frozen=True)
class DicksonFamily:
    k: int
    top: Poly
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.k + 1:
            raise ValueError("need k+1 coefficients")


def _recursion(k: int) -> Poly:
    """Rebuild Delta_k from the family of k-1 as a polynomial in x_k."""
    space = x_space(k)
    xk = space.x(k)
    if k == 1:
        return xk
    prev = dickson_coeffs(k - 1)
    inner = Poly.zero(space)
    for i, c in enumerate(prev.coeffs):
        inner = inner + mul(embed(c, space), pow(xk, 2**i - 1))
    return mul(mul(embed(prev.top, space), xk), inner)


@lru_cache(maxsize=None)
def dickson_coeffs(k: int) -> DicksonFamily:
    if k < 1:
        raise ValueError("k must be at least 1")
    space = x_space(k)
    aux = x_space(k + 1)
    y = f"x{k + 1}"
    yp = aux.x(k + 1)
    full = _product(linear_form(aux, a + (0,)) + yp for a in itertools.product((0, 1), repeat=k))
    coeffs = []
    seen = 0
    for i in range(k + 1):
        c = coefficient_of(full, y, 2**i)
        seen += len(c)
        coeffs.append(embed(c, space))
    if seen != len(full):
        raise VerificationError("expansion has y-powers that are not powers of two")
    top = dickson_top(k)
    if coeffs[0] != top or coeffs[k] != Poly.one(space):
        raise VerificationError(f"D_{{{k},0}} or D_{{{k},{k}}} is wrong")
    if _recursion(k) != top:
        raise VerificationError(f"recursion in x_{k} does not rebuild Delta_{k}")
    return DicksonFamily(k, top, tuple(coeffs))


@dataclass(frozen=True)
class EulerClass:
    k: int
    j: int
    poly: Poly

    @property
    def degree(self) -> int:
        return (2**self.k - 1) * self.j - self.k


def euler_product_form(k: int, j: int) -> Poly:
    """``prod_i x_i**(j-1)`` times the j-th powers of forms of weight at least two."""
    space = x_space(k)
    front = Poly.monomial(Monomial(space, (j - 1,) * k))
    heavy = [linear_form(space, a) for a in _nonzero_vectors(k) if sum(a) >= 2]
    if not heavy:
        return front
    return mul(front, pow(_product(heavy), j))


def euler_class(k: int, j: int, verify: bool | None = None) -> EulerClass:
    """``Delta_k**j / (x1 ... xk)``.

    ``verify`` cross-checks against :func:`euler_product_form`; by default
    only when ``k <= 3`` and ``j <= 3``.
    """
    if k < 1 or j < 1:
        raise ValueError("k and j must be at least 1")
    return _euler_cached(k, j, (k <= 3 and j <= 3) if verify is None else bool(verify))


@lru_cache(maxsize=256)
def _euler_cached(k: int, j: int, verify: bool) -> EulerClass:
    space = x_space(k)
    poly = divide_exact_by_monomial(pow(dickson_top(k), j), Monomial(space, (1,) * k))
    if verify and poly != euler_product_form(k, j):
        raise VerificationError(f"the two forms of e_{{{k},{j}}} disagree")
    return EulerClass(k, j, poly)


def binary_split(j: int) -> tuple[int, int]:
    """``j = 2**t + r`` with ``0 <= r < 2**t``."""
    if j < 1:
        raise ValueError("j must be at least 1")
    t = j.bit_length() - 1
    return t, j - (1 << t)


def critical_exponent(k: int, j: int) -> int:
    """``2**(t+k-1) + r``, the x_k-exponent singled out in Delta_k**j."""
    t, r = binary_split(j)
    return 2 ** (t + k - 1) + r


def critical_slice(k: int, j: int) -> Poly:
    """Coefficient of ``x_k**E`` in ``Delta_k**j`` for the critical exponent E.

    It is a polynomial in ``x1..x_{k-1}`` and should equal
    ``Delta_{k-1}**(j+r)`` (with ``Delta_0 = 1``).
    """
    e = critical_exponent(k, j)
    full = pow(dickson_top(k), j)
    return coefficient_of(full, f"x{k}", e)


def critical_slice_expected(k: int, j: int) -> Poly:
    space = x_space(k)
    if k == 1:
        return Poly.one(space)
    _, r = binary_split(j)
    return embed(pow(dickson_top(k - 1), j + r), space)


def render_family(k: int) -> list[tuple[str, str]]:
    fam = dickson_coeffs(k)
    rows = [(f"Delta_{k}", str(fam.top))]
    rows += [(f"D_{k},{i}", str(c)) for i, c in enumerate(fam.coeffs)]
    return rows


__all__ = [
    "dickson_top", "dickson_coeffs", "DicksonFamily", "EulerClass", "euler_class",
    "euler_product_form", "binary_split", "critical_exponent", "critical_slice",
    "critical_slice_expected", "linear_form", "x_space", "render_family",
]
