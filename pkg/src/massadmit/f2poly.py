"""Multivariate polynomials over the two-element field.

Every polynomial lives in a :class:`VarSpace` with three families of
variables, always laid out in this column order::

    x1 .. xk   (degree 1 each)
    w1 .. wl   (deg w_s = s)
    wb1 .. wbm (deg wb_r = r, the dual classes)

Terms are stored as a dense ``(n_terms, n_vars)`` array of exponents kept
sorted in ascending monomial order with no repeated rows; since every
coefficient is 1, addition is a symmetric difference of rows and a product
only has to count row multiplicities mod 2.

Monomial order is graded lexicographic on the weighted degree with variable
precedence ``x1 < ... < xk < w1 < ... < wl < wb1 < ...``: after the degree,
the exponent of the highest-precedence variable decides.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ExponentOverflow, NonDivisible, VarSpaceMismatch, ZeroPolynomialError

DEFAULT_EXPONENT_CAP = 2**16 - 1

# row-pair count above which products are formed in chunks
_MUL_CHUNK = 1 << 21

_DTYPE = np.uint32


@dataclass(frozen=True)
class VarSpace:
    k: int = 0
    ell: int = 0
    dual_count: int = 0
    exponent_cap: int = field(default=DEFAULT_EXPONENT_CAP, compare=True)

    def __post_init__(self):
        if min(self.k, self.ell, self.dual_count) < 0:
            raise ValueError("variable counts must be nonnegative")
        if not 1 <= self.exponent_cap <= np.iinfo(_DTYPE).max:
            raise ValueError("exponent cap out of range")

    @property
    def nvars(self) -> int:
        return self.k + self.ell + self.dual_count

    @cached_property
    def names(self) -> tuple[str, ...]:
        return (
            tuple(f"x{i}" for i in range(1, self.k + 1))
            + tuple(f"w{s}" for s in range(1, self.ell + 1))
            + tuple(f"wb{r}" for r in range(1, self.dual_count + 1))
        )

    @cached_property
    def weights(self) -> np.ndarray:
        w = [1] * self.k + list(range(1, self.ell + 1)) + list(range(1, self.dual_count + 1))
        return np.asarray(w, dtype=np.int64)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in {self}") from None

    def x(self, i: int) -> Poly:
        return Poly.variable(self, f"x{i}")

    def w(self, s: int) -> Poly:
        """Stiefel-Whitney generator; ``w(0)`` is the constant 1."""
        return Poly.one(self) if s == 0 else Poly.variable(self, f"w{s}")

    def wbar(self, r: int) -> Poly:
        """Dual class generator; ``wbar(0)`` is the constant 1."""
        return Poly.one(self) if r == 0 else Poly.variable(self, f"wb{r}")


@total_ordering
@dataclass(frozen=True)
class Monomial:
    space: VarSpace
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.space.nvars:
            raise ValueError("exponent vector length does not match the variable space")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def from_dict(cls, space: VarSpace, exps: dict[str, int]) -> Monomial:
        vec = [0] * space.nvars
        for name, e in exps.items():
            vec[space.index(name)] = e
        return cls(space, tuple(vec))

    @classmethod
    def one(cls, space: VarSpace) -> Monomial:
        return cls(space, (0,) * space.nvars)

    def as_dict(self) -> dict[str, int]:
        return {n: e for n, e in zip(self.space.names, self.exponents) if e}

    def __getitem__(self, name: str) -> int:
        return self.exponents[self.space.index(name)]

    @property
    def degree(self) -> int:
        return int(np.dot(self.exponents, self.space.weights)) if self.exponents else 0

    def sort_key(self) -> tuple:
        return (self.degree, self.exponents[::-1])

    def __lt__(self, other: Monomial) -> bool:
        _check_space(self.space, other.space)
        return self.sort_key() < other.sort_key()

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        parts = []
        for name, e in zip(self.space.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "".join(parts) or "1"


def _check_space(a: VarSpace, b: VarSpace) -> None:
    if a != b:
        raise VarSpaceMismatch(f"{a} vs {b}")


def _canonical(space: VarSpace, rows: np.ndarray) -> np.ndarray:
    """Sort rows ascending and drop rows that occur an even number of times."""
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, space.nvars)
    if rows.shape[0] == 0:
        return np.zeros((0, space.nvars), dtype=_DTYPE)
    if rows.size and rows.max() > space.exponent_cap:
        raise ExponentOverflow(f"exponent {int(rows.max())} exceeds cap {space.exponent_cap}")
    deg = rows @ space.weights
    keys = tuple(rows[:, i] for i in range(space.nvars)) + (deg,)
    rows = rows[np.lexsort(keys)]
    if rows.shape[0] > 1:
        change = np.any(rows[1:] != rows[:-1], axis=1)
        starts = np.flatnonzero(np.concatenate(([True], change)))
    else:
        starts = np.zeros(1, dtype=np.int64)
    counts = np.diff(np.append(starts, rows.shape[0]))
    out = rows[starts[counts % 2 == 1]].astype(_DTYPE)
    out.setflags(write=False)
    return out


class Poly:
    """An immutable polynomial over F2.

    Construct from an iterable of exponent tuples (repeated tuples cancel in
    pairs) or through the helpers :meth:`zero`, :meth:`one`,
    :meth:`variable`, :meth:`parse`.
    """

    __slots__ = ("space", "_exps", "_hash")

    def __init__(self, space: VarSpace, terms: Iterable[Sequence[int]] = ()):
        rows = np.array(list(terms), dtype=np.int64).reshape(-1, space.nvars)
        self._set(space, _canonical(space, rows))

    def _set(self, space, exps):
        self.space = space
        self._exps = exps
        self._hash = None

    @classmethod
    def _raw(cls, space: VarSpace, exps: np.ndarray) -> Poly:
        p = cls.__new__(cls)
        p._set(space, exps)
        return p

    @classmethod
    def from_array(cls, space: VarSpace, rows: np.ndarray) -> Poly:
        return cls._raw(space, _canonical(space, rows))

    @classmethod
    def zero(cls, space: VarSpace) -> Poly:
        return cls._raw(space, _canonical(space, np.zeros((0, space.nvars))))

    @classmethod
    def one(cls, space: VarSpace) -> Poly:
        return cls(space, [(0,) * space.nvars])

    @classmethod
    def monomial(cls, m: Monomial) -> Poly:
        return cls(m.space, [m.exponents])

    @classmethod
    def variable(cls, space: VarSpace, name: str) -> Poly:
        row = [0] * space.nvars
        row[space.index(name)] = 1
        return cls(space, [row])

    @classmethod
    def parse(cls, space: VarSpace, text: str) -> Poly:
        """Inverse of ``str``: parse the canonical rendering."""
        text = text.strip()
        if text == "0":
            return cls.zero(space)
        rows = []
        for term in text.split("+"):
            term = term.strip()
            row = [0] * space.nvars
            if term != "1":
                pos = 0
                for m in _FACTOR.finditer(term):
                    if m.start() != pos:
                        raise ValueError(f"cannot parse term {term!r}")
                    row[space.index(m.group(1))] += int(m.group(2) or 1)
                    pos = m.end()
                if pos != len(term) or not term:
                    raise ValueError(f"cannot parse term {term!r}")
            rows.append(row)
        return cls(space, rows)

    # -- inspection -------------------------------------------------------

    @property
    def exponents(self) -> np.ndarray:
        """Read-only term array in ascending monomial order."""
        return self._exps

    def __len__(self) -> int:
        return self._exps.shape[0]

    def __bool__(self) -> bool:
        return self._exps.shape[0] > 0

    def __iter__(self) -> Iterator[Monomial]:
        """Terms in descending monomial order."""
        for row in self._exps[::-1].tolist():
            yield Monomial(self.space, tuple(row))

    def monomials(self) -> list[Monomial]:
        """Terms in ascending monomial order."""
        return [Monomial(self.space, tuple(r)) for r in self._exps.tolist()]

    def term_degrees(self) -> np.ndarray:
        return self._exps.astype(np.int64) @ self.space.weights

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other in (0, 1):
            other = Poly.one(self.space) if other else Poly.zero(self.space)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.space == other.space and np.array_equal(self._exps, other._exps)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.space, self._exps.shape, self._exps.tobytes()))
        return self._hash

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(str(m) for m in self)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            _check_space(self.space, other.space)
            return other
        if isinstance(other, Monomial):
            _check_space(self.space, other.space)
            return Poly.monomial(other)
        if isinstance(other, int):
            return Poly.one(self.space) if other % 2 else Poly.zero(self.space)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__
    __sub__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        return pow(self, n)

    def shift(self, m: Monomial) -> Poly:
        """Multiply by a single monomial (no cancellation can occur)."""
        _check_space(self.space, m.space)
        if not self:
            return self
        rows = self._exps.astype(np.int64) + np.asarray(m.exponents, dtype=np.int64)
        if rows.size and rows.max() > self.space.exponent_cap:
            raise ExponentOverflow(f"exponent {int(rows.max())} exceeds cap {self.space.exponent_cap}")
        # adding a fixed vector preserves the (weighted) graded lex order
        out = rows.astype(_DTYPE)
        out.setflags(write=False)
        return Poly._raw(self.space, out)


_FACTOR = re.compile(r"(wb\d+|w\d+|x\d+)(?:\^(\d+))?")


def add(p: Poly, q: Poly) -> Poly:
    """Sum over F2: the symmetric difference of the two term sets."""
    _check_space(p.space, q.space)
    if not q:
        return p
    if not p:
        return q
    return Poly.from_array(p.space, np.concatenate([p._exps, q._exps]).astype(np.int64))


def mul(p: Poly, q: Poly) -> Poly:
    _check_space(p.space, q.space)
    if not p or not q:
        return Poly.zero(p.space)
    if len(p) < len(q):
        p, q = q, p
    a = p._exps.astype(np.int64)
    b = q._exps.astype(np.int64)
    step = max(1, _MUL_CHUNK // len(b))
    parts = []
    for start in range(0, len(a), step):
        block = (a[start:start + step, None, :] + b[None, :, :]).reshape(-1, p.space.nvars)
        parts.append(_canonical(p.space, block).astype(np.int64))
    if len(parts) == 1:
        return Poly._raw(p.space, parts[0].astype(_DTYPE))
    return Poly.from_array(p.space, np.concatenate(parts))


def frobenius(p: Poly, a: int) -> Poly:
    """``p ** (2**a)``: in characteristic 2 this just scales every exponent."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    rows = p._exps.astype(np.int64) << a
    return Poly.from_array(p.space, rows)


def pow(p: Poly, n: int) -> Poly:  # noqa: A001 - mirrors the builtin on purpose
    if n < 0:
        raise ValueError("negative exponent")
    result = Poly.one(p.space)
    a = 0
    while n:
        if n & 1:
            result = mul(result, frobenius(p, a))
        n >>= 1
        a += 1
    return result


def divide_exact_by_monomial(p: Poly, m: Monomial) -> Poly:
    _check_space(p.space, m.space)
    if not p:
        return p
    div = np.asarray(m.exponents, dtype=np.int64)
    rows = p._exps.astype(np.int64) - div
    bad = np.flatnonzero(np.any(rows < 0, axis=1))
    if bad.size:
        term = Monomial(p.space, tuple(p._exps[bad[0]].tolist()))
        raise NonDivisible(term, m)
    out = rows.astype(_DTYPE)
    out.setflags(write=False)
    return Poly._raw(p.space, out)


def weighted_degree(p: Poly) -> int | None:
    """Common weighted degree of all terms, or ``None`` if ``p`` is inhomogeneous."""
    if not p:
        raise ZeroPolynomialError("the zero polynomial has no degree")
    degs = p.term_degrees()
    return int(degs[0]) if np.all(degs == degs[0]) else None


def homogeneous_components(p: Poly) -> dict[int, Poly]:
    degs = p.term_degrees()
    out = {}
    for d in np.unique(degs).tolist():
        rows = p._exps[degs == d]
        rows.setflags(write=False)
        out[d] = Poly._raw(p.space, rows)
    return out


def embed(p: Poly, space: VarSpace) -> Poly:
    """Re-express ``p`` in another variable space, matching variables by name.

    Variables of ``p`` missing from ``space`` must not occur in any term.
    """
    if p.space == space:
        return p
    rows = np.zeros((len(p), space.nvars), dtype=np.int64)
    for col, name in enumerate(p.space.names):
        column = p._exps[:, col]
        if name in space._index:
            rows[:, space.index(name)] = column
        elif column.any():
            raise VarSpaceMismatch(f"variable {name} occurs but is absent from {space}")
    return Poly.from_array(space, rows)


def coefficient_of(p: Poly, name: str, exponent: int) -> Poly:
    """Coefficient of ``name**exponent`` when ``p`` is read as a polynomial in ``name``.

    The result stays in ``p.space`` with that variable's exponent zeroed.
    """
    col = p.space.index(name)
    rows = p._exps[p._exps[:, col] == exponent].astype(np.int64)
    rows[:, col] = 0
    return Poly.from_array(p.space, rows)


def symmetric_swap(p: Poly, a: str, b: str) -> Poly:
    """Apply the transposition of variables ``a`` and ``b``."""
    i, j = p.space.index(a), p.space.index(b)
    rows = p._exps.astype(np.int64).copy()
    rows[:, [i, j]] = rows[:, [j, i]]
    return Poly.from_array(p.space, rows)
