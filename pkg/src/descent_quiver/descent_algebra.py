"""The descent algebra of a finite Coxeter group, enumeration route.

This module realizes the three bases of the 2^n-dimensional algebra
spanned by the coset sums x_J: the x-basis itself with its integral
structure constants, the descent-class basis y_K related to it by
Moebius inversion over the boolean lattice, and the idempotent basis
e_L obtained from the triangular change-of-basis matrix m with entries
m_KL = |X_K meet X_L-sharp| for K containing L.

Everything here enumerates actual group elements and is therefore
gated; it serves as the ground truth the street-based multiplication is
checked against on every group small enough to enumerate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from .coxeter import (
    DEFAULT_GATE,
    CoxeterDatum,
    GateExceededError,
    GroupElement,
    enumerate_X,
    enumerate_X_sharp,
    parabolic_order,
)


def subsets_below(mask: int) -> Iterator[int]:
    """All subsets of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def subset_order_key(datum: CoxeterDatum, mask: int) -> tuple:
    """Cardinality descending, then digit string; makes m triangular."""
    return (-bin(mask).count("1"), datum.subset_digits(mask))


@dataclass
class DescentVector:
    """Sparse element of the descent algebra, tagged with its basis."""

    datum: CoxeterDatum
    basis: str  # 'x', 'y' or 'e'
    coeffs: dict[int, Fraction]

    def __post_init__(self):
        if self.basis not in ("x", "y", "e"):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        self.coeffs = {m: Fraction(c) for m, c in self.coeffs.items() if c}

    def __add__(self, other: "DescentVector") -> "DescentVector":
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            nc = out.get(m, Fraction(0)) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return DescentVector(self.datum, self.basis, out)

    def __sub__(self, other: "DescentVector") -> "DescentVector":
        return self + other.scale(-1)

    def scale(self, c) -> "DescentVector":
        c = Fraction(c)
        return DescentVector(self.datum, self.basis, {m: c * v for m, v in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, DescentVector)
            and self.datum is other.datum
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def _check(self, other: "DescentVector") -> None:
        if self.datum is not other.datum:
            raise ValueError("vectors over different groups")
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs, key=lambda m: subset_order_key(self.datum, m)):
            c = self.coeffs[m]
            digits = self.datum.subset_digits(m) or "∅"
            term = f"{self.basis}_{{{digits}}}"
            if c == 1:
                parts.append(term)
            elif c == -1:
                parts.append(f"-{term}")
            else:
                parts.append(f"{c}*{term}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def unit_vector(datum: CoxeterDatum, basis: str, mask: int) -> DescentVector:
    return DescentVector(datum, basis, {mask: Fraction(1)})


# -- x <-> y: Moebius inversion over the boolean lattice -----------------


def x_to_y(v: DescentVector) -> DescentVector:
    if v.basis != "x":
        raise ValueError("expected x-basis")
    full = v.datum.full_mask
    out: dict[int, Fraction] = {}
    for j, c in v.coeffs.items():
        rest = full & ~j
        for extra in subsets_below(rest):
            k = j | extra
            nc = out.get(k, Fraction(0)) + c
            if nc:
                out[k] = nc
            else:
                out.pop(k, None)
    return DescentVector(v.datum, "y", out)


def y_to_x(v: DescentVector) -> DescentVector:
    if v.basis != "y":
        raise ValueError("expected y-basis")
    full = v.datum.full_mask
    out: dict[int, Fraction] = {}
    for k, c in v.coeffs.items():
        rest = full & ~k
        for extra in subsets_below(rest):
            j = k | extra
            sign = -1 if bin(extra).count("1") & 1 else 1
            nc = out.get(j, Fraction(0)) + sign * c
            if nc:
                out[j] = nc
            else:
                out.pop(j, None)
    return DescentVector(v.datum, "x", out)


# -- full-group sweep (gated) ---------------------------------------------


class GroupSweep:
    """One pass over all of W, keeping per-element descent data.

    For each element x the sweep records its left and right descent
    bitmasks, the partial map t -> s whenever x^{-1}(alpha_t) is the
    positive simple root alpha_s, and the permutation itself.  All the
    enumerative structure below (structure constants, m matrix, descent
    classes, the prefix lemma checks) reads off this one pass.
    """

    def __init__(self, datum: CoxeterDatum, gate: int | None = None):
        bound = DEFAULT_GATE if gate is None else gate
        if datum.group_order > bound:
            raise GateExceededError("full group sweep (|W|)", datum.group_order, bound)
        self.datum = datum
        n = datum.n
        N = datum.num_positive
        sidx = datum.simple_indices
        sperms = datum.simple_perms
        # chain product: every element exactly once, no dedup needed
        levels: list[list[tuple[tuple[int, ...], tuple[int, ...]]]] = []
        lower = 0
        ident = datum.identity.perm
        for k in range(n):
            upper = lower | (1 << k)
            reps = _chain_level(datum, lower, upper)
            levels.append(reps)
            lower = upper
        # every w factors uniquely as w = w' * x with w' in the lower
        # parabolic and x a minimal coset representative, so multiplying
        # level representatives on the right enumerates W bijectively
        elems: list[tuple[tuple[int, ...], tuple[int, ...]]] = [(ident, ident)]
        for reps in levels:
            nxt = []
            for wp, wi in elems:
                for rp, ri in reps:
                    if rp is ident:
                        nxt.append((wp, wi))
                        continue
                    nperm = tuple(wp[rp[i]] for i in range(len(wp)))
                    ninv = tuple(ri[wi[i]] for i in range(len(wi)))
                    nxt.append((nperm, ninv))
            elems = nxt
        if len(elems) != datum.group_order:
            raise AssertionError("chain enumeration does not fill the group")
        if datum.group_order <= 200_000 and len({p for p, _ in elems}) != len(elems):
            raise AssertionError("chain enumeration produced duplicates")
        self.perms: list[tuple[int, ...]] = []
        self.left_masks: list[int] = []
        self.right_masks: list[int] = []
        self.jmaps: list[tuple[int, ...]] = []
        simple_pos = {idx: g + 1 for g, idx in enumerate(sidx)}
        for perm, inv in elems:
            self.perms.append(perm)
            lm = 0
            rm = 0
            jm = [0] * (n + 1)
            for g, idx in enumerate(sidx):
                if inv[idx] >= N:
                    lm |= 1 << g
                if perm[idx] >= N:
                    rm |= 1 << g
                beta = inv[idx]
                s = simple_pos.get(beta)
                if s is not None:
                    jm[g + 1] = s
            self.left_masks.append(lm)
            self.right_masks.append(rm)
            self.jmaps.append(tuple(jm))

    def element(self, i: int) -> GroupElement:
        return GroupElement(self.datum, self.perms[i])

    def sharp_mask(self, i: int) -> int:
        """Bitmask of t with x^{-1}(alpha_t) a positive simple root."""
        jm = self.jmaps[i]
        mask = 0
        for t in range(1, self.datum.n + 1):
            if jm[t]:
                mask |= 1 << (t - 1)
        return mask


def _chain_level(datum: CoxeterDatum, low: int, high: int):
    from .coxeter import _coset_reps_in_parabolic

    reps = _coset_reps_in_parabolic(datum, low, high)
    ident = datum.identity.perm
    out = []
    for perm in sorted(reps):
        p, i = reps[perm]
        out.append((ident if p == ident else p, ident if i == ident else i))
    return out


_SWEEPS: dict[tuple[int, int], GroupSweep] = {}


def group_sweep(datum: CoxeterDatum, gate: int | None = None) -> GroupSweep:
    bound = DEFAULT_GATE if gate is None else gate
    key = (id(datum), bound)
    sweep = _SWEEPS.get(key)
    if sweep is None:
        sweep = GroupSweep(datum, bound)
        _SWEEPS[key] = sweep
    return sweep


# -- Solomon structure constants ------------------------------------------


class StructureConstants:
    """a_JKL tables, one full-group sweep per datum (gated)."""

    def __init__(self, datum: CoxeterDatum, gate: int | None = None):
        self.datum = datum
        self.gate = gate
        self._rows: dict[int, dict[int, dict[int, int]]] = {}

    def row(self, kmask: int) -> dict[int, dict[int, int]]:
        """All J -> {L: a_JKL} for the given K."""
        cached = self._rows.get(kmask)
        if cached is not None:
            return cached
        datum = self.datum
        sweep = group_sweep(datum, self.gate)
        full = datum.full_mask
        kgens = datum.gens_of(kmask)
        row: dict[int, dict[int, int]] = {}
        for i in range(len(sweep.perms)):
            if sweep.left_masks[i] & kmask:
                continue  # x not in X_K
            # d = x^{-1} runs over X_K^{-1}; J must avoid the left
            # descents of d, which are the right descents of x
            dl = sweep.right_masks[i]
            jm = sweep.jmaps[i]
            free = full & ~dl
            for j in subsets_below(free):
                lmask = 0
                for t in kgens:
                    s = jm[t]
                    if s and (j >> (s - 1)) & 1:
                        lmask |= 1 << (t - 1)
                jrow = row.get(j)
                if jrow is None:
                    jrow = row[j] = {}
                jrow[lmask] = jrow.get(lmask, 0) + 1
        self._rows[kmask] = row
        return row

    def constant(self, jmask: int, kmask: int, lmask: int) -> int:
        return self.row(kmask).get(jmask, {}).get(lmask, 0)


def structure_constant(
    datum: CoxeterDatum, jmask: int, kmask: int, lmask: int, gate: int | None = None
) -> int:
    return StructureConstants(datum, gate).constant(jmask, kmask, lmask)


def oracle_multiply(
    u: DescentVector, v: DescentVector, table: StructureConstants | None = None
) -> DescentVector:
    """Product in the x-basis from the structure constants."""
    if u.basis != "x" or v.basis != "x":
        raise ValueError("oracle multiplication works in the x-basis")
    u._check(v)
    if table is None:
        table = StructureConstants(u.datum)
    out: dict[int, Fraction] = {}
    for k, ck in v.coeffs.items():
        row = table.row(k)
        for j, cj in u.coeffs.items():
            jrow = row.get(j)
            if not jrow:
                continue
            f = cj * ck
            for l, a in jrow.items():
                nc = out.get(l, Fraction(0)) + f * a
                if nc:
                    out[l] = nc
                else:
                    out.pop(l, None)
    return DescentVector(u.datum, "x", out)


# -- the idempotent basis --------------------------------------------------


class MMatrix:
    """Triangular change of basis x_K = sum_L m_KL e_L (gated)."""

    def __init__(self, datum: CoxeterDatum, gate: int | None = None):
        self.datum = datum
        self.gate = gate
        self._cols: dict[int, dict[int, int]] = {}  # L -> {K: m_KL}
        self._order = sorted(range(1 << datum.n), key=lambda m: subset_order_key(datum, m))

    def column(self, lmask: int) -> dict[int, int]:
        cached = self._cols.get(lmask)
        if cached is not None:
            return cached
        datum = self.datum
        col: dict[int, int] = {}
        if lmask == 0:
            # X_empty-sharp is all of W, so m_K0 = |X_K|
            for k in range(1 << datum.n):
                col[k] = datum.group_order // parabolic_order(datum, k)
        else:
            free_all = datum.full_mask & ~lmask
            for x, _img in enumerate_X_sharp(datum, lmask, self.gate):
                dl = x.left_descents()
                free = free_all & ~dl
                for extra in subsets_below(free):
                    k = lmask | extra
                    col[k] = col.get(k, 0) + 1
        self._cols[lmask] = col
        return col

    def entry(self, kmask: int, lmask: int) -> int:
        if kmask | lmask != kmask:
            return 0
        return self.column(lmask).get(kmask, 0)

    def diagonal_positive(self) -> bool:
        return all(self.entry(m, m) > 0 for m in self._order)


def m_entry(datum: CoxeterDatum, kmask: int, lmask: int, gate: int | None = None) -> int:
    return MMatrix(datum, gate).entry(kmask, lmask)


def x_to_e(v: DescentVector, mm: MMatrix | None = None) -> DescentVector:
    if v.basis != "x":
        raise ValueError("expected x-basis")
    mm = mm or MMatrix(v.datum)
    out: dict[int, Fraction] = {}
    for k, c in v.coeffs.items():
        for l in subsets_below(k):
            a = mm.entry(k, l)
            if a:
                nc = out.get(l, Fraction(0)) + c * a
                if nc:
                    out[l] = nc
                else:
                    out.pop(l, None)
    return DescentVector(v.datum, "e", out)


def e_to_x(v: DescentVector, mm: MMatrix | None = None) -> DescentVector:
    """Triangular solve of sum_K c_K m_KL = v_L for the c_K."""
    if v.basis != "e":
        raise ValueError("expected e-basis")
    mm = mm or MMatrix(v.datum)
    datum = v.datum
    order = sorted(range(1 << datum.n), key=lambda m: subset_order_key(datum, m))
    remaining = dict(v.coeffs)
    coeffs: dict[int, Fraction] = {}
    for k in order:
        val = remaining.get(k)
        if not val:
            continue
        diag = mm.entry(k, k)
        if diag <= 0:
            raise AssertionError("m matrix must have positive diagonal")
        c = val / diag
        coeffs[k] = c
        for l in subsets_below(k):
            a = mm.entry(k, l)
            if a:
                nv = remaining.get(l, Fraction(0)) - c * a
                if nv:
                    remaining[l] = nv
                else:
                    remaining.pop(l, None)
    if remaining:
        raise AssertionError("triangular solve left a residue")
    return DescentVector(datum, "x", coeffs)


def class_idempotent(datum: CoxeterDatum, class_index: int) -> DescentVector:
    cls = datum.subset_classes()[class_index]
    return DescentVector(datum, "e", {m: Fraction(1) for m in cls.members})


def w0_vector(datum: CoxeterDatum) -> DescentVector:
    """The longest element as an idempotent-basis combination."""
    coeffs = {
        m: Fraction(-1 if bin(m).count("1") & 1 else 1) for m in range(1 << datum.n)
    }
    return DescentVector(datum, "e", coeffs)


# -- descent class sizes ---------------------------------------------------


def mobius_descent_class_sizes(datum: CoxeterDatum) -> dict[int, int]:
    """|Y_K| for all K, from parabolic orders alone."""
    full = datum.full_mask
    index = {
        j: datum.group_order // parabolic_order(datum, j) for j in range(1 << datum.n)
    }
    out = {}
    for k in range(1 << datum.n):
        rest = full & ~k
        total = 0
        for extra in subsets_below(rest):
            j = k | extra
            sign = -1 if bin(extra).count("1") & 1 else 1
            total += sign * index[j]
        out[k] = total
    return out


def descent_class_sizes(datum: CoxeterDatum, gate: int | None = None) -> dict[int, int]:
    """|Y_K| by streaming the whole group (numpy, gated).

    Elements are produced as products along the parabolic chain, one
    batch at a time, and counted by right-descent mask of the inverse
    enumeration, which is the left-descent statistic of the group.
    """
    bound = DEFAULT_GATE if gate is None else gate
    if datum.group_order > bound:
        raise GateExceededError("descent class counting (|W|)", datum.group_order, bound)
    n = datum.n
    N = datum.num_positive
    chunk = 200_000
    levels = []
    lower = 0
    for k in range(n):
        upper = lower | (1 << k)
        reps = _chain_level(datum, lower, upper)
        levels.append([p for p, _ in reps])
        lower = upper
    # materialize the product of the first levels up to the chunk size,
    # then sweep suffix products one at a time
    split = 0
    size = 1
    while split < n and size * len(levels[split]) <= chunk:
        size *= len(levels[split])
        split += 1
    base = np.array([datum.identity.perm], dtype=np.int32)
    for k in range(split):
        arr = np.array(levels[k], dtype=np.int32)
        # (w * r).perm[i] = w.perm[r.perm[i]] for each base row w, level row r
        base = base[:, arr].reshape(-1, base.shape[1])
    counts = np.zeros(1 << n, dtype=np.int64)
    sidx = np.array(datum.simple_indices, dtype=np.int64)

    def count_batch(batch: np.ndarray) -> None:
        cols = batch[:, sidx] >= N
        masks = np.zeros(len(batch), dtype=np.int64)
        for g in range(n):
            masks |= cols[:, g].astype(np.int64) << g
        np.add.at(counts, masks, 1)

    def suffixes(k: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield acc
            return
        for rep in levels[k]:
            yield from suffixes(k + 1, tuple(acc[rep[i]] for i in range(len(acc))))

    for suffix in suffixes(split, datum.identity.perm):
        arr = np.array(suffix, dtype=np.int32)
        count_batch(base[:, arr])
    if int(counts.sum()) != datum.group_order:
        raise AssertionError("descent statistics do not sum to |W|")
    # right-descent histogram over all of W equals the left-descent one
    full = datum.full_mask
    return {full ^ mask: int(counts[mask]) for mask in range(1 << n)}


# -- prefix lemma checks ---------------------------------------------------


@dataclass
class LemmaReport:
    kmask: int
    lmask: int
    passed: bool
    failures: list[str] = field(default_factory=list)


class YSharpChecker:
    """Counting and prefix facts about Y_K meet X_L-sharp (gated)."""

    def __init__(self, datum: CoxeterDatum, gate: int | None = None):
        self.datum = datum
        self.sweep = group_sweep(datum, gate)
        n = datum.n
        size = 1 << n
        # N[d][t] = number of elements with left-descent mask d, sharp mask t
        table = [[0] * size for _ in range(size)]
        by_descent: dict[int, list[int]] = {}
        for i in range(len(self.sweep.perms)):
            d = self.sweep.left_masks[i]
            t = self.sweep.sharp_mask(i)
            table[d][t] += 1
            by_descent.setdefault(d, []).append(i)
        self.by_descent = by_descent
        # Z[d][l] = #{elements: descent mask d, sharp mask contains l}
        self.zeta = [_superset_sums(row, n) for row in table]

    def count_y_sharp(self, kmask: int, lmask: int) -> int:
        d = self.datum.full_mask & ~kmask
        return self.zeta[d][lmask]

    def count_x_sharp(self, jmask: int, lmask: int) -> int:
        total = 0
        free = self.datum.full_mask & ~jmask
        for d in subsets_below(free):
            total += self.zeta[d][lmask]
        return total

    def check_pair(self, kmask: int, lmask: int) -> LemmaReport:
        if lmask & ~kmask:
            raise ValueError("need L inside K")
        datum = self.datum
        failures = []
        # (i) the signed counting identity
        lhs = (-1 if bin(kmask).count("1") & 1 else 1) * self.count_y_sharp(kmask, lmask)
        rhs = 0
        free = datum.full_mask & ~kmask
        for extra in subsets_below(free):
            j = kmask | extra
            sign = -1 if bin(j).count("1") & 1 else 1
            rhs += sign * self.count_x_sharp(j, lmask)
        if lhs != rhs:
            failures.append(f"counting identity: {lhs} != {rhs}")
        # (ii) the common prefix
        d = datum.full_mask & ~kmask
        u = datum.longest_element(lmask) * datum.longest_element(lmask | d)
        ulen = u.length()
        uinv = u.inverse()
        for i in self.by_descent.get(d, []):
            if self.sweep.sharp_mask(i) & lmask == lmask:
                x = self.sweep.element(i)
                if (uinv * x).length() != x.length() - ulen:
                    failures.append(
                        f"prefix fails for an element of Y_K meet X_L-sharp (K={kmask}, L={lmask})"
                    )
                    break
        # (iii) the singleton case
        if kmask == lmask:
            found = {
                self.sweep.perms[i]
                for i in self.by_descent.get(d, [])
                if self.sweep.sharp_mask(i) & lmask == lmask
            }
            expect = datum.longest_element(lmask) * datum.longest_element(datum.full_mask)
            if found != {expect.perm}:
                failures.append("Y_L meet X_L-sharp is not {w_L w_0}")
        return LemmaReport(kmask, lmask, not failures, failures)


def _superset_sums(row: list[int], n: int) -> list[int]:
    out = list(row)
    for g in range(n):
        bit = 1 << g
        for m in range(len(out)):
            if not m & bit:
                out[m] += out[m | bit]
    return out


def verify_lemma_ysharp(
    datum: CoxeterDatum, kmask: int, lmask: int, gate: int | None = None
) -> LemmaReport:
    return YSharpChecker(datum, gate).check_pair(kmask, lmask)
