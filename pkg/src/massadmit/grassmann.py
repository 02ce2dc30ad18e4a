"""Mod-2 cohomology of the real Grassmannian G_l(R^d).

The ring is presented as ``F2[w1..wl] / J`` where ``J`` is generated by the
dual Stiefel-Whitney classes ``wb_r`` of degrees ``d-l+1 .. d``, each
written as a polynomial in the ``w``'s through ``(1 + w1 + ... + wl)(1 +
wb1 + wb2 + ...) = 1``.  Every homogeneous slice is handled by plain
linear algebra: the relations are multiplied by all monomials of the
complementary degree and row-reduced, and the monomials that are not
pivots form the quotient basis (the smallest monomials in each degree).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from ._gf2 import Echelon
from .errors import InvalidSpec
from .f2poly import Monomial, Poly, VarSpace, embed, homogeneous_components, mul, pow


@dataclass(frozen=True)
class GrassmannSpec:
    d: int
    ell: int

    def __post_init__(self):
        if not 1 <= self.ell <= self.d - 1:
            raise InvalidSpec(f"need 1 <= ell <= d-1, got d={self.d}, ell={self.ell}")

    @property
    def codim(self) -> int:
        return self.d - self.ell

    @property
    def top_degree(self) -> int:
        return self.ell * (self.d - self.ell)

    @cached_property
    def w_space(self) -> VarSpace:
        return VarSpace(0, self.ell, 0)

    @cached_property
    def full_space(self) -> VarSpace:
        return VarSpace(0, self.ell, self.d - self.ell)


@dataclass(frozen=True)
class DualClassTable:
    spec: GrassmannSpec
    entries: tuple[Poly, ...]

    def __getitem__(self, r: int) -> Poly:
        if r < 0:
            raise IndexError(r)
        return self.entries[r]

    def relations(self) -> tuple[Poly, ...]:
        """Generators of J: the dual classes of degree d-l+1 .. d."""
        return self.entries[self.spec.codim + 1:]

    def convolution(self, r: int) -> Poly:
        """``sum_s w_s * wb_{r-s}`` over ``0 <= s <= min(r, l)``; zero for r >= 1."""
        space = self.spec.w_space
        total = Poly.zero(space)
        for s in range(min(r, self.spec.ell) + 1):
            total = total + space.w(s) * self.entries[r - s]
        return total


@lru_cache(maxsize=None)
def dual_classes(spec: GrassmannSpec) -> DualClassTable:
    space = spec.w_space
    entries = [Poly.one(space)]
    for r in range(1, spec.d + 1):
        acc = Poly.zero(space)
        for s in range(1, min(r, spec.ell) + 1):
            acc = acc + space.w(s) * entries[r - s]
        entries.append(acc)
    return DualClassTable(spec, tuple(entries))


def literal_relations(spec: GrassmannSpec) -> list[Poly]:
    """The d relations of ``(1 + w)(1 + wb) = 1`` in the variables w and wb."""
    space = spec.full_space
    rels = []
    for r in range(1, spec.d + 1):
        acc = Poly.zero(space)
        for s in range(max(0, r + spec.ell - spec.d), min(r, spec.ell) + 1):
            acc = acc + space.w(s) * space.wbar(r - s)
        rels.append(acc)
    return rels


@lru_cache(maxsize=None)
def w_monomials(ell: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors over w1..wl of the given weighted degree, ascending."""
    out = []

    def rec(s, remaining, tail):
        # fill exponents from w_l downwards so tuples come out in order
        if s == 0:
            if remaining == 0:
                out.append(tuple(reversed(tail)))
            return
        for e in range(remaining // s + 1):
            rec(s - 1, remaining - e * s, tail + [e])

    if degree >= 0:
        rec(ell, degree, [])
    space = VarSpace(0, ell, 0)
    out.sort(key=lambda e: Monomial(space, e).sort_key())
    return tuple(out)


@dataclass(frozen=True)
class GradedBasis:
    spec: GrassmannSpec
    degree: int
    monomial_list: tuple[tuple[int, ...], ...]
    reduction: Echelon = field(repr=False, compare=False)
    basis: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def column(self) -> dict[tuple[int, ...], int]:
        return {e: i for i, e in enumerate(self.monomial_list)}

    @cached_property
    def _basis_pos(self) -> dict[int, int]:
        return {b: i for i, b in enumerate(self.basis)}

    def basis_monomials(self) -> list[Monomial]:
        space = self.spec.w_space
        return [Monomial(space, self.monomial_list[b]) for b in self.basis]

    def vector(self, p: Poly) -> int:
        """Bitset of a homogeneous w-polynomial of this degree."""
        v = 0
        col = self.column
        for row in p.exponents.tolist():
            v ^= 1 << col[tuple(row)]
        return v

    def reduce(self, v: int) -> int:
        return self.reduction.reduce(v)

    def coordinates(self, v: int) -> int:
        """Reduce ``v`` and pack its coordinates on the quotient basis into an int."""
        v = self.reduction.reduce(v)
        out = 0
        pos = self._basis_pos
        while v:
            top = v.bit_length() - 1
            out |= 1 << pos[top]
            v ^= 1 << top
        return out

    def coordinate_tuple(self, v: int) -> tuple[int, ...]:
        c = self.coordinates(v)
        return tuple((c >> i) & 1 for i in range(self.rank))

    def to_poly(self, v: int) -> Poly:
        rows = [self.monomial_list[i] for i in range(v.bit_length()) if (v >> i) & 1]
        return Poly(self.spec.w_space, rows)


@lru_cache(maxsize=None)
def graded_basis(spec: GrassmannSpec, degree: int) -> GradedBasis:
    if not 0 <= degree <= spec.top_degree:
        raise InvalidSpec(f"degree {degree} outside 0..{spec.top_degree}")
    mons = w_monomials(spec.ell, degree)
    col = {e: i for i, e in enumerate(mons)}
    space = spec.w_space
    ech = Echelon()
    for r, gen in enumerate(dual_classes(spec).relations(), start=spec.codim + 1):
        if r > degree:
            break
        for e in w_monomials(spec.ell, degree - r):
            v = 0
            for row in gen.shift(Monomial(space, e)).exponents.tolist():
                v ^= 1 << col[tuple(row)]
            ech.add(v)
    basis = tuple(i for i in range(len(mons)) if i not in ech.rows)
    return GradedBasis(spec, degree, mons, ech, basis)


def _dual_power(spec: GrassmannSpec, r: int, e: int, space: VarSpace) -> Poly:
    return embed(pow(dual_classes(spec)[r], e), space)


def eliminate_duals(spec: GrassmannSpec, p: Poly) -> Poly:
    """Rewrite every wb_r in ``p`` as its polynomial in the w's.

    The result lives in the same space with the dual variables removed.
    """
    src = p.space
    if src.dual_count == 0:
        return p
    if src.ell != spec.ell or src.dual_count > spec.codim:
        raise InvalidSpec(f"{src} does not match {spec}")
    dst = VarSpace(src.k, src.ell, 0, src.exponent_cap)
    base = src.k + src.ell
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for row in p.exponents.tolist():
        groups.setdefault(tuple(row[base:]), []).append(tuple(row[:base]))
    total = Poly.zero(dst)
    for duals, rows in groups.items():
        factor = Poly(dst, rows)
        for r, e in enumerate(duals, start=1):
            if e:
                factor = mul(factor, _dual_power(spec, r, e, dst))
        total = total + factor
    return total


def to_w_space(spec: GrassmannSpec, p: Poly) -> Poly:
    return embed(eliminate_duals(spec, p), spec.w_space)


def reduce_poly(spec: GrassmannSpec, p: Poly) -> Poly:
    """Normal form of a w-polynomial as a sum of quotient-basis monomials."""
    p = to_w_space(spec, p)
    out = Poly.zero(spec.w_space)
    for deg, comp in homogeneous_components(p).items():
        if deg > spec.top_degree:
            continue
        gb = graded_basis(spec, deg)
        out = out + gb.to_poly(gb.reduce(gb.vector(comp)))
    return out


def normal_form(spec: GrassmannSpec, p: Poly) -> dict[int, tuple[int, ...]]:
    """Coordinates on the quotient basis for each degree 0 .. top degree."""
    p = to_w_space(spec, p)
    comps = homogeneous_components(p)
    out = {}
    for deg in range(spec.top_degree + 1):
        gb = graded_basis(spec, deg)
        v = gb.vector(comps[deg]) if deg in comps else 0
        out[deg] = gb.coordinate_tuple(v)
    return out


def is_zero_in_ring(spec: GrassmannSpec, p: Poly) -> bool:
    return not reduce_poly(spec, p)


@lru_cache(maxsize=None)
def _gauss(n: int, k: int) -> tuple[int, ...]:
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    a = list(_gauss(n - 1, k - 1))
    b = _gauss(n - 1, k)
    size = max(len(a), len(b) + k)
    out = a + [0] * (size - len(a))
    for i, c in enumerate(b):
        out[i + k] += c
    return tuple(out)


def q_binomial(d: int, ell: int, degree: int) -> int:
    """Coefficient of q**degree in the Gaussian binomial [d choose ell]_q."""
    coeffs = _gauss(d, ell)
    return coeffs[degree] if 0 <= degree < len(coeffs) else 0


def total_dimension(spec: GrassmannSpec) -> int:
    return sum(graded_basis(spec, i).rank for i in range(spec.top_degree + 1))


def nonvanishing_certificates(spec: GrassmannSpec) -> tuple[bool, bool]:
    """Whether ``w_l ** (d-l)`` and ``wb_{d-l} ** l`` are both nonzero."""
    space = spec.w_space
    top_w = pow(space.w(spec.ell), spec.codim)
    top_dual = pow(dual_classes(spec)[spec.codim], spec.ell)
    return (not is_zero_in_ring(spec, top_w), not is_zero_in_ring(spec, top_dual))


def ranks(spec: GrassmannSpec) -> list[int]:
    return [graded_basis(spec, i).rank for i in range(spec.top_degree + 1)]


__all__ = [
    "GrassmannSpec", "DualClassTable", "GradedBasis", "dual_classes", "literal_relations",
    "graded_basis", "normal_form", "reduce_poly", "is_zero_in_ring", "eliminate_duals",
    "to_w_space", "q_binomial", "nonvanishing_certificates", "total_dimension", "ranks",
    "w_monomials",
]
