"""Index ideals in R_{d,l,k} = H*(G_l(R^d); F2)[x1..xk] and membership tests.

Two engines decide whether an Euler class lies in the configuration-space
ideal ``<beta_1, ..., beta_k>``, ``beta_r = sum_s x_r**s * w_{l-s}``:

* :func:`membership_fast` checks membership in the monomial ideal
  ``<x1**d, ..., xk**d>``, which is equivalent whenever ``k <= l <= d-1``;
* :func:`membership_oracle` builds the whole homogeneous slice of the ideal
  in the degree of the class and row-reduces over F2.

x-exponents are never truncated; only the w-coefficients are reduced in the
Grassmannian ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from ._gf2 import Echelon
from .dickson import EulerClass, critical_exponent, euler_class
from .errors import BudgetExceeded, InvalidSpec, VerificationError
from .f2poly import Monomial, Poly, VarSpace, embed, weighted_degree
from .grassmann import (
    GrassmannSpec,
    dual_classes,
    eliminate_duals,
    graded_basis,
    q_binomial,
    reduce_poly,
)

DEFAULT_BUDGET = 2_000_000


def ring_space(k: int, ell: int) -> VarSpace:
    return VarSpace(k, ell, 0)


@dataclass(frozen=True)
class IndexIdeal:
    kind: str
    generators: tuple[Poly, ...]

    def __post_init__(self):
        if self.kind not in ("configuration", "test"):
            raise ValueError(f"unknown ideal kind {self.kind!r}")


def beta(space: VarSpace, r: int) -> Poly:
    ell = space.ell
    xr = space.x(r)
    total = Poly.zero(space)
    for s in range(ell + 1):
        total = total + (xr ** s) * space.w(ell - s)
    return total


def config_index_generators(d: int, ell: int, k: int) -> IndexIdeal:
    GrassmannSpec(d, ell)
    if k < 1:
        raise InvalidSpec("k must be at least 1")
    space = ring_space(k, ell)
    return IndexIdeal("configuration", tuple(beta(space, r) for r in range(1, k + 1)))


def test_index_generator(k: int, j: int) -> IndexIdeal:
    """Principal generator of the test-space index; the Grassmannian factor is implicit."""
    return IndexIdeal("test", (euler_class(k, j).poly,))


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    method: str
    witness: Monomial | None
    degree_checked: int

    def __post_init__(self):
        if self.member and self.witness is not None:
            raise ValueError("a member cannot carry a witness")


def _as_poly(e) -> Poly:
    return e.poly if isinstance(e, EulerClass) else e


def membership_fast(e: EulerClass | Poly, d: int) -> MembershipVerdict:
    """Is every term of ``e`` divisible by some ``x_i**d``?

    When not, the witness is the least term with all exponents below ``d``.
    """
    p = _as_poly(e)
    degree = weighted_degree(p) if p else 0
    if not p:
        return MembershipVerdict(True, "fast", None, 0)
    exps = p.exponents
    free = (exps < d).all(axis=1).nonzero()[0]
    if free.size == 0:
        return MembershipVerdict(True, "fast", None, degree)
    witness = Monomial(p.space, tuple(exps[free[0]].tolist()))
    return MembershipVerdict(False, "fast", witness, degree)


def escape_threshold(e: EulerClass | Poly) -> int:
    """Least ``d`` for which :func:`membership_fast` reports non-membership."""
    p = _as_poly(e)
    return int(p.exponents.max(axis=1).min()) + 1


@lru_cache(maxsize=None)
def x_monomials(k: int, degree: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),) if degree == 0 else ()
    if k == 1:
        return ((degree,),)
    out = []
    for last in range(degree + 1):
        for head in x_monomials(k - 1, degree - last):
            out.append(head + (last,))
    return tuple(out)


def _rank(spec: GrassmannSpec, g: int) -> int:
    return graded_basis(spec, g).rank if 0 <= g <= spec.top_degree else 0


class RingSlice:
    """The degree-``degree`` slice of ``<beta_1..beta_k>`` inside R_{d,l,k}.

    Coordinates are indexed by (x-exponent, w-degree, quotient-basis position).
    """

    def __init__(self, d: int, ell: int, k: int, degree: int, budget: int | None = DEFAULT_BUDGET):
        self.spec = GrassmannSpec(d, ell)
        self.k = k
        self.degree = degree
        self.space = ring_space(k, ell)
        n_rows = k * sum(len(x_monomials(k, a)) * _rank(self.spec, degree - ell - a)
                         for a in range(0, degree - ell + 1))
        n_cols = sum(len(x_monomials(k, a)) * _rank(self.spec, degree - a) for a in range(degree + 1))
        self.shape = (n_rows, n_cols)
        if budget is not None and n_rows * n_cols > budget:
            raise BudgetExceeded(n_rows * n_cols, budget)
        self._cols: dict[tuple, int] = {}
        self._nf: dict[tuple, int] = {}
        self.echelon = Echelon()
        self._build()

    def _col(self, key) -> int:
        c = self._cols.get(key)
        if c is None:
            c = self._cols[key] = len(self._cols)
        return c

    def _times_w(self, g: int, pos: int, i: int) -> int:
        """Quotient coordinates of (basis element ``pos`` of degree g) * w_i."""
        key = (g, pos, i)
        c = self._nf.get(key)
        if c is None:
            spec = self.spec
            src = graded_basis(spec, g)
            target = g + i
            if target > spec.top_degree:
                c = 0
            else:
                exps = list(src.monomial_list[src.basis[pos]])
                if i:
                    exps[i - 1] += 1
                gb = graded_basis(spec, target)
                c = gb.coordinates(1 << gb.column[tuple(exps)])
            self._nf[key] = c
        return c

    def _build(self):
        ell, D = self.spec.ell, self.degree
        for r in range(self.k):
            for a in range(0, D - ell + 1):
                g = D - ell - a
                rank = _rank(self.spec, g)
                if not rank:
                    continue
                for xm in x_monomials(self.k, a):
                    for pos in range(rank):
                        row = 0
                        for s in range(ell + 1):
                            coords = self._times_w(g, pos, ell - s)
                            if not coords:
                                continue
                            xe = list(xm)
                            xe[r] += s
                            xe = tuple(xe)
                            gdeg = g + ell - s
                            while coords:
                                b = coords.bit_length() - 1
                                row ^= 1 << self._col((xe, gdeg, b))
                                coords ^= 1 << b
                        self.echelon.add(row)

    def vector(self, p: Poly) -> int:
        """Coordinates of a homogeneous element of R_{d,l,k} of this slice's degree."""
        p = eliminate_duals(self.spec, p)
        p = embed(p, self.space)
        if p and weighted_degree(p) != self.degree:
            raise ValueError("element is not homogeneous of the slice degree")
        k = self.k
        by_x: dict[tuple, list] = {}
        for row in p.exponents.tolist():
            by_x.setdefault(tuple(row[:k]), []).append(row[k:])
        v = 0
        for xe, wrows in by_x.items():
            wpoly = Poly(self.spec.w_space, wrows)
            g = self.degree - sum(xe)
            if g > self.spec.top_degree:
                continue
            gb = graded_basis(self.spec, g)
            coords = gb.coordinates(gb.vector(wpoly))
            while coords:
                b = coords.bit_length() - 1
                v ^= 1 << self._col((xe, g, b))
                coords ^= 1 << b
        return v

    def contains(self, p: Poly) -> bool:
        return self.echelon.contains(self.vector(p))

    @property
    def rank(self) -> int:
        return self.echelon.rank


def membership_oracle(e: EulerClass | Poly, d: int, ell: int, k: int | None = None,
                      budget: int | None = DEFAULT_BUDGET) -> MembershipVerdict:
    p = _as_poly(e)
    if k is None:
        k = p.space.k
    if p.space.k != k:
        raise ValueError(f"class has {p.space.k} x-variables, expected {k}")
    if not p:
        return MembershipVerdict(True, "oracle", None, 0)
    degree = weighted_degree(p)
    if degree is None:
        raise ValueError("membership oracle needs a homogeneous class")
    sl = RingSlice(d, ell, k, degree, budget)
    return MembershipVerdict(sl.contains(embed(p, sl.space)), "oracle", None, degree)


def reduce_in_ring(spec: GrassmannSpec, p: Poly) -> Poly:
    """Normal form in R: every x-coefficient reduced in the Grassmannian ring."""
    p = eliminate_duals(spec, p)
    space = p.space
    k = space.k
    by_x: dict[tuple, list] = {}
    for row in p.exponents.tolist():
        by_x.setdefault(tuple(row[:k]), []).append(row[k:])
    rows = []
    for xe, wrows in by_x.items():
        red = reduce_poly(spec, Poly(spec.w_space, wrows))
        rows.extend(list(xe) + r for r in red.exponents.tolist())
    return Poly(space, rows)


def cofactor_identity_check(d: int, ell: int, i: int = 1) -> bool:
    """``(sum_r x_i**r * wb_{d-l-r}) * beta_i`` reduces to ``x_i**d``."""
    spec = GrassmannSpec(d, ell)
    space = VarSpace(i, ell, d - ell)
    xi = space.x(i)
    cof = Poly.zero(space)
    for r in range(d - ell + 1):
        cof = cof + (xi ** r) * space.wbar(d - ell - r)
    lhs = reduce_in_ring(spec, cof * beta(space, i))
    return lhs == embed(xi ** d, ring_space(i, ell))


@dataclass(frozen=True)
class DivisionResult:
    d: int
    ell: int
    quotient: Poly
    remainder_coeffs: tuple[Poly, ...]

    def remainder(self) -> Poly:
        space = self.quotient.space
        x = space.x(1)
        total = Poly.zero(space)
        for r, a in enumerate(self.remainder_coeffs):
            total = total + embed(a, space) * x ** r
        return total


def crabb_division(d: int, ell: int, verify: bool = True) -> DivisionResult:
    """Divide ``x**(d-1)`` by ``beta = sum_s x**s w_{l-s}`` over H*(G_l(R^d)).

    With ``verify`` the reconstruction ``beta*q + rem = x**(d-1)`` and the
    closed form ``a_r = w_{l-r-1} * wb_{d-l}`` are both asserted.
    """
    spec = GrassmannSpec(d, ell)
    wsp = spec.w_space
    n = d - 1
    rem = [Poly.zero(wsp) for _ in range(n + 1)]
    rem[n] = Poly.one(wsp)
    quot = [Poly.zero(wsp) for _ in range(max(n - ell + 1, 0))]
    for top in range(n, ell - 1, -1):
        c = rem[top]
        if not c:
            continue
        quot[top - ell] = c
        rem[top] = Poly.zero(wsp)
        for s in range(ell):
            rem[top - ell + s] = reduce_poly(spec, rem[top - ell + s] + c * wsp.w(ell - s))
    space = ring_space(1, ell)
    x = space.x(1)
    q = Poly.zero(space)
    for i, c in enumerate(quot):
        q = q + embed(c, space) * x ** i
    result = DivisionResult(d, ell, q, tuple(rem[:ell]))
    if verify:
        _verify_division(spec, result)
    return result


def crabb_coefficient(spec: GrassmannSpec, r: int) -> Poly:
    """``a_r = sum_{i=0}^{l-r-1} w_i wb_{d-r-1-i}``, reduced."""
    wsp = spec.w_space
    duals = dual_classes(spec)
    total = Poly.zero(wsp)
    for i in range(spec.ell - r):
        total = total + wsp.w(i) * duals[spec.d - r - 1 - i]
    return reduce_poly(spec, total)


def _verify_division(spec: GrassmannSpec, res: DivisionResult) -> None:
    d, ell = spec.d, spec.ell
    space = res.quotient.space
    x = space.x(1)
    lhs = reduce_in_ring(spec, beta(space, 1) * res.quotient + res.remainder())
    if lhs != x ** (d - 1):
        raise VerificationError(f"division does not reconstruct x^{d - 1} for d={d}, ell={ell}")
    duals = dual_classes(spec)
    wsp = spec.w_space
    for r, a in enumerate(res.remainder_coeffs):
        closed = reduce_poly(spec, wsp.w(ell - r - 1) * duals[d - ell])
        if a != closed or a != crabb_coefficient(spec, r):
            raise VerificationError(f"remainder coefficient a_{r} disagrees with the closed form")
    if not res.remainder_coeffs[ell - 1]:
        raise VerificationError("leading remainder coefficient vanishes")


def structured_witness(k: int, j: int) -> Monomial | None:
    """Term of ``e_{k,j}`` with x_k-exponent ``E-1`` and all others at most ``E-1``.

    ``E = 2**(t+k-1) + r`` for ``j = 2**t + r``; its existence certifies
    non-membership at ``d = E``.
    """
    e = euler_class(k, j).poly
    bound = critical_exponent(k, j) - 1
    exps = e.exponents
    ok = (exps[:, k - 1] == bound) & (exps <= bound).all(axis=1)
    hits = ok.nonzero()[0]
    if hits.size == 0:
        return None
    return Monomial(e.space, tuple(exps[hits[0]].tolist()))


def slice_dimension(d: int, ell: int, k: int, degree: int) -> int:
    """Dimension of R_{d,l,k} in one degree, from the q-binomial counts."""
    return sum(comb(a + k - 1, k - 1) * q_binomial(d, ell, degree - a) for a in range(degree + 1))


__all__ = [
    "IndexIdeal", "MembershipVerdict", "DivisionResult", "RingSlice", "DEFAULT_BUDGET",
    "config_index_generators", "test_index_generator", "membership_fast", "membership_oracle",
    "escape_threshold", "cofactor_identity_check", "crabb_division", "crabb_coefficient",
    "reduce_in_ring", "structured_witness", "slice_dimension", "beta", "ring_space", "x_monomials",
]
