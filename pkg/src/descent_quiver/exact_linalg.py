"""Exact scalars and exact sparse linear algebra over the rationals.

Every computation in this package is exact.  Rational numbers are
``fractions.Fraction`` (always in lowest terms, positive denominator).
``GoldenInt`` implements the quadratic ring Z[phi], phi^2 = phi + 1,
which carries the root coordinates of the H3/H4 reflection groups; its
sign test is pure integer case analysis, never floating point.

``SparseMatrix`` provides reduced row echelon form, rank and kernel
bases with deterministic first-nonzero pivoting, and ``RowSpace`` is an
incremental row-space accumulator used for all the rank and coordinate
computations downstream.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

Rational = Fraction

NEGATIVE = -1
ZERO = 0
POSITIVE = 1


def golden_sign(x: "GoldenInt") -> int:
    """Exact sign of a + b*(1+sqrt5)/2, by integer case analysis.

    Writing 2x = u + v*sqrt5 with u = 2a+b, v = b, the sign follows from
    the signs of u, v, with |u| and |v|*sqrt5 compared by squaring.
    """
    u = 2 * x.a + x.b
    v = x.b
    if u == 0 and v == 0:
        return ZERO
    if u >= 0 and v >= 0:
        return POSITIVE
    if u <= 0 and v <= 0:
        return NEGATIVE
    if v > 0:
        # u < 0 < v: sign of v*sqrt5 - |u|
        return POSITIVE if 5 * v * v > u * u else NEGATIVE
    # v < 0 < u: sign of u - |v|*sqrt5; 5*v*v == u*u impossible (5 not a square)
    return POSITIVE if u * u > 5 * v * v else NEGATIVE


class GoldenInt:
    """An element a + b*phi of Z[phi], phi = (1 + sqrt(5))/2."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenInt(other.a - self.a, other.b - self.b)

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + b phi)(c + d phi) with phi^2 = phi + 1
        return GoldenInt(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def sign(self) -> int:
        return golden_sign(self)

    def __lt__(self, other):
        return golden_sign(self - _coerce(other)) < 0

    def __le__(self, other):
        return golden_sign(self - _coerce(other)) <= 0

    def __gt__(self, other):
        return golden_sign(self - _coerce(other)) > 0

    def __ge__(self, other):
        return golden_sign(self - _coerce(other)) >= 0

    def __repr__(self):
        if self.b == 0:
            return f"GoldenInt({self.a})"
        return f"GoldenInt({self.a}, {self.b})"


def _coerce(x):
    if isinstance(x, GoldenInt):
        return x
    if isinstance(x, int):
        return GoldenInt(x, 0)
    return NotImplemented


def scalar_is_negative(c) -> bool:
    """Sign test shared by int and GoldenInt root coordinates."""
    if isinstance(c, GoldenInt):
        return golden_sign(c) < 0
    return c < 0


class SparseMatrix:
    """Sparse rational matrix; only nonzero entries are stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple, Fraction] | None = None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            for (r, c), v in entries.items():
                v = Fraction(v)
                if v:
                    if not (0 <= r < rows and 0 <= c < cols):
                        raise ValueError(f"entry ({r},{c}) outside {rows}x{cols}")
                    self.entries[(r, c)] = v

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "SparseMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = Fraction(v)
        return cls(rows, cols, entries)

    def to_rows(self) -> list[list[Fraction]]:
        data = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            data[r][c] = v
        return data

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def matvec(self, v: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * self.rows
        for (r, c), a in self.entries.items():
            out[r] += a * Fraction(v[c])
        return out

    def _row_dicts(self) -> list[dict[int, Fraction]]:
        rows: list[dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def rref(self) -> tuple["SparseMatrix", tuple[int, ...]]:
        """Reduced row echelon form with first-nonzero pivoting.

        Returns the RREF matrix and the strictly increasing pivot columns.
        """
        rows = self._row_dicts()
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            src = None
            for i in range(r, len(rows)):
                if rows[i].get(c):
                    src = i
                    break
            if src is None:
                continue
            rows[r], rows[src] = rows[src], rows[r]
            piv = rows[r]
            inv = 1 / piv[c]
            for k in list(piv):
                piv[k] *= inv
            for i in range(len(rows)):
                if i == r:
                    continue
                f = rows[i].get(c)
                if f:
                    row = rows[i]
                    for k, v in piv.items():
                        nv = row.get(k, Fraction(0)) - f * v
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        entries = {}
        for i, row in enumerate(rows):
            for c, v in row.items():
                entries[(i, c)] = v
        return SparseMatrix(self.rows, self.cols, entries), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        """Basis of the right null space, one vector per free column."""
        red, pivots = self.rref()
        pivset = set(pivots)
        rows = red._row_dicts()
        basis = []
        for free in range(self.cols):
            if free in pivset:
                continue
            vec = [Fraction(0)] * self.cols
            vec[free] = Fraction(1)
            for i, p in enumerate(pivots):
                vec[p] = -rows[i].get(free, Fraction(0))
            basis.append(tuple(vec))
        return basis


class RowSpace:
    """Incremental row space of sparse vectors with hashable keys.

    Rows are kept in echelon form: each stored row has its pivot as the
    minimum of its support, normalized to 1.  ``reduce`` expresses any
    vector as residual plus a combination of accepted generators, which
    is what the quiver pipeline uses both for rank growth and for
    coordinates w.r.t. a chosen spanning set.
    """

    __slots__ = ("_rows", "tags")

    def __init__(self):
        self._rows: dict[Hashable, tuple[dict, dict]] = {}
        self.tags: list[Hashable] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping[Hashable, Fraction]) -> tuple[dict, dict]:
        """Return (residual, combo) with vec = residual + sum combo[tag]*gen[tag]."""
        v = {k: Fraction(c) for k, c in vec.items() if c}
        combo: dict[Hashable, Fraction] = {}
        while v:
            k = min(v)
            row = self._rows.get(k)
            if row is None:
                break
            rvec, rcombo = row
            f = v[k]
            for kk, c in rvec.items():
                nv = v.get(kk, Fraction(0)) - f * c
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)
            for t, c in rcombo.items():
                nc = combo.get(t, Fraction(0)) + f * c
                if nc:
                    combo[t] = nc
                else:
                    combo.pop(t, None)
        return v, combo

    def insert(self, vec: Mapping[Hashable, Fraction], tag: Hashable) -> bool:
        """Add vec as a generator; True if it enlarged the span."""
        residual, combo = self.reduce(vec)
        if not residual:
            return False
        pivot = min(residual)
        inv = 1 / residual[pivot]
        rvec = {k: c * inv for k, c in residual.items()}
        # combo so far expresses the reduced part; the stored row must
        # express rvec in terms of generators: rvec = inv*(vec - sum combo*gen)
        rcombo = {t: -c * inv for t, c in combo.items()}
        rcombo[tag] = rcombo.get(tag, Fraction(0)) + inv
        if not rcombo[tag]:
            del rcombo[tag]
        self._rows[pivot] = (rvec, rcombo)
        self.tags.append(tag)
        return True

    def contains(self, vec: Mapping[Hashable, Fraction]) -> bool:
        residual, _ = self.reduce(vec)
        return not residual

    def coords(self, vec: Mapping[Hashable, Fraction]) -> dict | None:
        """Coordinates of vec over accepted generator tags, or None."""
        residual, combo = self.reduce(vec)
        if residual:
            return None
        return combo
