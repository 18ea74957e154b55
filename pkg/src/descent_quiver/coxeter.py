"""Finite Coxeter groups as permutation groups on their root systems.

A group element is the permutation it induces on the full root set
(positive roots at indices 0..N-1, the negative of root i at N+i), so
multiplication is O(N), length is a sign count and descent sets are a
few lookups.  Crystallographic types use integer root coordinates in
the simple-root basis, H3/H4 use GoldenInt coordinates, and I2(m) is
realized combinatorially as 2m points on a circle, which keeps every
type exact with a single code path downstream.

Generator numbering follows the conventions used throughout the tables
this package reproduces: chains are numbered left to right, the E-series
branch node is 2 and attaches to node 4, B has its double bond at the
far end (n-1, n), F4 is 1 - 2 = 3 - 4 and H has its 5-bond at 1 - 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .exact_linalg import GoldenInt, golden_sign, scalar_is_negative

DEFAULT_GATE = 5_000_000


class GateExceededError(RuntimeError):
    """An enumeration would exceed its configured bound."""

    def __init__(self, what: str, size, bound: int):
        super().__init__(f"{what} needs {size} elements, above the enumeration gate {bound}")
        self.what = what
        self.size = size
        self.bound = bound


class UnsupportedTypeError(ValueError):
    pass


_LABEL_RE = re.compile(r"^([ABDEFH])(\d)$|^I2\((\d+)\)$")

_SUPPORTED_RANKS = {
    "A": range(1, 8),
    "B": range(2, 8),
    "D": range(4, 8),
    "E": range(6, 9),
    "F": range(4, 5),
    "H": range(3, 5),
}


@dataclass(frozen=True)
class CoxeterType:
    family: str
    rank: int
    m: int | None = None  # only for I2

    @classmethod
    def parse(cls, label: str) -> "CoxeterType":
        match = _LABEL_RE.match(label.strip())
        if not match:
            raise UnsupportedTypeError(
                f"cannot parse type label {label!r}; expected e.g. A3, B4, D5, E7, F4, H3, I2(7)"
            )
        if match.group(3) is not None:
            m = int(match.group(3))
            if m < 3:
                raise UnsupportedTypeError(f"I2({m}) needs m >= 3")
            return cls("I2", 2, m)
        family, rank = match.group(1), int(match.group(2))
        if rank not in _SUPPORTED_RANKS[family]:
            raise UnsupportedTypeError(f"{family}{rank} is outside the supported table")
        return cls(family, rank)

    @property
    def label(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"


def coxeter_matrix(t: CoxeterType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1

    def bond(i: int, j: int, v: int) -> None:
        m[i - 1][j - 1] = v
        m[j - 1][i - 1] = v

    if t.family == "I2":
        bond(1, 2, t.m)
    elif t.family == "A":
        for i in range(1, n):
            bond(i, i + 1, 3)
    elif t.family == "B":
        for i in range(1, n - 1):
            bond(i, i + 1, 3)
        bond(n - 1, n, 4)
    elif t.family == "D":
        for i in range(1, n - 2):
            bond(i, i + 1, 3)
        bond(n - 2, n - 1, 3)
        bond(n - 2, n, 3)
    elif t.family == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b, 3)
        bond(2, 4, 3)
    elif t.family == "F":
        bond(1, 2, 3)
        bond(2, 3, 4)
        bond(3, 4, 3)
    elif t.family == "H":
        bond(1, 2, 5)
        for i in range(2, n):
            bond(i, i + 1, 3)
    return tuple(tuple(row) for row in m)


# Orders of the irreducible types, used for parabolic subgroup orders
# and to cross-check the chain computation of |W|.
def _irreducible_order(family: str, rank: int, m: int | None = None) -> int:
    if family == "I2":
        return 2 * m
    if family == "A":
        out = 1
        for k in range(2, rank + 2):
            out *= k
        return out
    if family == "B":
        return (2**rank) * _irreducible_order("A", rank - 1)
    if family == "D":
        return (2 ** (rank - 1)) * _irreducible_order("A", rank - 1)
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if family == "F":
        return 1152
    if family == "H":
        return {2: 10, 3: 120, 4: 14400}[rank]
    raise UnsupportedTypeError(family)


def _cartan_rows(t: CoxeterType):
    """Matrix C with C[i][j] = 2(a_i, a_j)/(a_j, a_j) in exact scalars."""
    n = t.rank
    cm = coxeter_matrix(t)
    if t.family == "H":
        C = [[GoldenInt(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    C[i][j] = GoldenInt(2)
                elif cm[i][j] == 3:
                    C[i][j] = GoldenInt(-1)
                elif cm[i][j] == 5:
                    C[i][j] = GoldenInt(0, -1)  # -phi = 2cos(4pi/5)
        return C
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
        for j in range(n):
            if i != j and cm[i][j] == 3:
                C[i][j] = -1
    if t.family == "B":
        # short root a_n: 2(a_{n-1}, a_n)/(a_n, a_n) = -2
        C[n - 2][n - 1] = -2
        C[n - 1][n - 2] = -1
    elif t.family == "F":
        # 1 - 2 = 3 - 4 with 3, 4 short
        C[1][2] = -2
        C[2][1] = -1
    return C


class GroupElement:
    """An element of W as a permutation of the 2N root indices."""

    __slots__ = ("datum", "perm", "_inv", "_len")

    def __init__(self, datum: "CoxeterDatum", perm: tuple[int, ...]):
        self.datum = datum
        self.perm = perm
        self._inv = None
        self._len = None

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.datum is not other.datum:
            raise ValueError("elements of different groups")
        p, q = self.perm, other.perm
        return GroupElement(self.datum, tuple(p[q[i]] for i in range(len(p))))

    def inverse(self) -> "GroupElement":
        if self._inv is None:
            perm = self.perm
            inv = [0] * len(perm)
            for i, j in enumerate(perm):
                inv[j] = i
            self._inv = tuple(inv)
        return GroupElement(self.datum, self._inv)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.datum is other.datum and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"<{self.datum.ctype.label} element of length {self.length()}>"

    def length(self) -> int:
        if self._len is None:
            N = self.datum.num_positive
            perm = self.perm
            self._len = sum(1 for i in range(N) if perm[i] >= N)
        return self._len

    def is_identity(self) -> bool:
        return self.perm == self.datum.identity.perm

    def right_descents(self) -> int:
        """Bitmask of generators t with l(w t) < l(w)."""
        datum = self.datum
        perm = self.perm
        N = datum.num_positive
        mask = 0
        for k, idx in enumerate(datum.simple_indices):
            if perm[idx] >= N:
                mask |= 1 << k
        return mask

    def left_descents(self) -> int:
        """Bitmask of generators s with l(s w) < l(w)."""
        return self.inverse().right_descents()


class CoxeterDatum:
    """Immutable context for one finite Coxeter group."""

    def __init__(self, ctype: CoxeterType):
        self.ctype = ctype
        self.n = ctype.rank
        self.coxeter_matrix = coxeter_matrix(ctype)
        self.full_mask = (1 << self.n) - 1
        roots, simple_indices, simple_perms = _build_root_system(ctype)
        self.roots = roots
        self.num_positive = len(roots) // 2
        self.simple_indices = simple_indices
        self.simple_perms = simple_perms
        ident = tuple(range(len(roots)))
        self.identity = GroupElement(self, ident)
        self.simple = tuple(GroupElement(self, p) for p in simple_perms)
        self._longest: dict[int, GroupElement] = {}
        self._trans: dict[tuple[int, int], tuple[int, tuple[int, ...], GroupElement]] = {}
        self._classes: tuple[SubsetClass, ...] | None = None
        self._class_of_mask: dict[int, int] | None = None
        self.group_order = self._order_by_chain()
        known = parabolic_order(self, self.full_mask)
        if self.group_order != known:
            raise AssertionError(
                f"chain order {self.group_order} != published order {known} for {ctype.label}"
            )

    # -- basics ---------------------------------------------------------

    def gens(self) -> range:
        return range(1, self.n + 1)

    def gen(self, i: int) -> GroupElement:
        return self.simple[i - 1]

    def mask_of(self, gens: Iterable[int]) -> int:
        mask = 0
        for g in gens:
            mask |= 1 << (g - 1)
        return mask

    def gens_of(self, mask: int) -> list[int]:
        return [i + 1 for i in range(self.n) if mask >> i & 1]

    def subset_digits(self, mask: int) -> str:
        return "".join(str(i + 1) for i in range(self.n) if mask >> i & 1)

    def _order_by_chain(self) -> int:
        """|W| as a product of parabolic chain coset counts."""
        order = 1
        lower = 0
        for k in range(self.n):
            upper = lower | (1 << k)
            order *= len(_coset_reps_in_parabolic(self, lower, upper))
            lower = upper
        return order

    # -- cached structures ----------------------------------------------

    def longest_element(self, mask: int) -> GroupElement:
        w = self._longest.get(mask)
        if w is None:
            w = _longest_greedy(self, mask)
            self._longest[mask] = w
        return w

    def transporter_data(self, mask: int, r: int) -> tuple[int, tuple[int, ...], GroupElement]:
        """(image mask, generator map, d) for d = w_L w_{L+r}."""
        key = (mask, r)
        cached = self._trans.get(key)
        if cached is None:
            cached = _transporter(self, mask, r)
            self._trans[key] = cached
        return cached

    def subset_classes(self) -> tuple["SubsetClass", ...]:
        if self._classes is None:
            self._classes = _subset_classes(self)
            self._class_of_mask = {}
            for cls in self._classes:
                for m in cls.members:
                    self._class_of_mask[m] = cls.index
        return self._classes

    def class_of(self, mask: int) -> int:
        self.subset_classes()
        return self._class_of_mask[mask]


@lru_cache(maxsize=None)
def build_datum(label: str | CoxeterType) -> CoxeterDatum:
    ctype = label if isinstance(label, CoxeterType) else CoxeterType.parse(label)
    return CoxeterDatum(ctype)


# -- root system construction -------------------------------------------


def _build_root_system(t: CoxeterType):
    if t.family == "I2":
        return _dihedral_roots(t.m)
    C = _cartan_rows(t)
    n = t.rank
    zero = GoldenInt(0) if t.family == "H" else 0

    def reflect(coeffs, j):
        c = sum(coeffs[i] * C[i][j] for i in range(n))
        out = list(coeffs)
        out[j] = out[j] - c
        return tuple(out)

    simples = []
    for i in range(n):
        v = [zero] * n
        v[i] = GoldenInt(1) if t.family == "H" else 1
        simples.append(tuple(v))
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for v in frontier:
            for j in range(n):
                w = reflect(v, j)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt

    def is_positive(v) -> bool:
        return not any(scalar_is_negative(c) for c in v)

    positives = [v for v in seen if is_positive(v)]
    rest = sorted(
        (v for v in positives if v not in simples),
        key=lambda v: (_height_key(v), _coeff_key(v)),
    )
    positives = simples + rest
    N = len(positives)
    if 2 * N != len(seen):
        raise AssertionError("root system closure is not symmetric")
    roots = positives + [tuple(-c for c in v) for v in positives]
    index = {v: i for i, v in enumerate(roots)}
    simple_indices = tuple(range(n))
    simple_perms = []
    for j in range(n):
        perm = tuple(index[reflect(v, j)] for v in roots)
        simple_perms.append(perm)
        flips = sum(1 for i in range(N) if perm[i] >= N)
        if flips != 1 or perm[j] != N + j:
            raise AssertionError(f"simple reflection {j + 1} misbehaves on positive roots")
    return tuple(roots), simple_indices, tuple(simple_perms)


def _height_key(v):
    total = v[0]
    for c in v[1:]:
        total = total + c
    if isinstance(total, GoldenInt):
        return (2 * total.a + total.b, total.b)
    return (2 * total, 0)


def _coeff_key(v):
    return tuple((c.a, c.b) if isinstance(c, GoldenInt) else (c, 0) for c in v)


def _dihedral_roots(m: int):
    """2m roots on a circle; s1, s2 act as index reflections."""
    roots = tuple(range(2 * m))
    simple_indices = (0, m - 1)
    s1 = tuple((m - k) % (2 * m) for k in range(2 * m))
    s2 = tuple((m - 2 - k) % (2 * m) for k in range(2 * m))
    return roots, simple_indices, (s1, s2)


# -- elementary operations ----------------------------------------------


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    return u * v


def invert(u: GroupElement) -> GroupElement:
    return u.inverse()


def length(w: GroupElement) -> int:
    return w.length()


def left_descents(w: GroupElement) -> int:
    return w.left_descents()


def longest_element(datum: CoxeterDatum, mask: int) -> GroupElement:
    return datum.longest_element(mask)


def is_min_coset_rep(w: GroupElement, mask: int) -> bool:
    return w.left_descents() & mask == 0


def is_prefix(u: GroupElement, w: GroupElement) -> bool:
    return (u.inverse() * w).length() == w.length() - u.length()


def _longest_greedy(datum: CoxeterDatum, mask: int) -> GroupElement:
    """w_J by greedy left multiplication with ascents from J."""
    N = datum.num_positive
    perm = list(datum.identity.perm)
    inv = list(perm)
    gens = datum.gens_of(mask)
    sperms = datum.simple_perms
    sidx = datum.simple_indices
    changed = True
    while changed:
        changed = False
        for g in gens:
            # l(s_g w) > l(w)  iff  w^{-1}(alpha_g) > 0
            if inv[sidx[g - 1]] < N:
                sp = sperms[g - 1]
                perm = [sp[p] for p in perm]
                inv = [inv[sp[i]] for i in range(len(inv))]
                # recompute inv directly: (s w)^{-1} = w^{-1} s
                changed = True
    return GroupElement(datum, tuple(perm))


def _transporter(datum: CoxeterDatum, mask: int, r: int):
    rbit = 1 << (r - 1)
    if mask & rbit:
        gm = tuple(range(datum.n + 1))
        return mask, gm, datum.identity
    big = mask | rbit
    d = datum.longest_element(mask) * datum.longest_element(big)
    dinv = d.inverse()
    N = datum.num_positive
    genmap = [0] * (datum.n + 1)
    image = 0
    for g in datum.gens_of(mask):
        beta = dinv.perm[datum.simple_indices[g - 1]]
        if beta >= N or beta not in datum.simple_indices:
            raise AssertionError("transporter does not map the subset into S")
        g2 = datum.simple_indices.index(beta) + 1
        genmap[g] = g2
        image |= 1 << (g2 - 1)
    return image, tuple(genmap), d


def transporter(datum: CoxeterDatum, mask: int, r: int) -> tuple[GroupElement, int]:
    image, _genmap, d = datum.transporter_data(mask, r)
    return d, image


# -- enumerations (gated) ------------------------------------------------


def parabolic_order(datum: CoxeterDatum, mask: int) -> int:
    order = 1
    for nodes in parabolic_components(datum, mask):
        fam, rank, m = classify_component(datum, nodes)
        order *= _irreducible_order(fam, rank, m)
    return order


def _coset_reps_in_parabolic(datum: CoxeterDatum, low_mask: int, high_mask: int):
    """Minimal coset reps of W_low in W_high, by prefix BFS."""
    N = datum.num_positive
    sidx = datum.simple_indices
    sperms = datum.simple_perms
    gens = datum.gens_of(high_mask)
    start = (datum.identity.perm, datum.identity.perm)
    reps = {start[0]: start}
    frontier = [start]
    while frontier:
        nxt = []
        for perm, inv in frontier:
            for g in gens:
                if perm[sidx[g - 1]] >= N:
                    continue  # right descent, not an extension
                sp = sperms[g - 1]
                nperm = tuple(perm[sp[i]] for i in range(len(perm)))
                if nperm in reps:
                    continue
                ninv = tuple(sp[inv[i]] for i in range(len(inv)))
                # left descent in low_mask disqualifies
                bad = False
                for h in datum.gens_of(low_mask):
                    if ninv[sidx[h - 1]] >= N:
                        bad = True
                        break
                if bad:
                    continue
                pair = (nperm, ninv)
                reps[nperm] = pair
                nxt.append(pair)
        frontier = nxt
    return reps


def enumerate_X(datum: CoxeterDatum, mask: int, gate: int | None = None) -> list[GroupElement]:
    """All minimal-length right coset representatives of W_J."""
    bound = DEFAULT_GATE if gate is None else gate
    size = datum.group_order // parabolic_order(datum, mask)
    if size > bound:
        raise GateExceededError(f"X_J for J={datum.subset_digits(mask) or 'empty'}", size, bound)
    reps = _coset_reps_in_parabolic(datum, mask, datum.full_mask)
    if len(reps) != size:
        raise AssertionError("coset enumeration does not match the index")
    out = [GroupElement(datum, p) for p in sorted(reps)]
    return out


def enumerate_Y(datum: CoxeterDatum, mask: int, gate: int | None = None) -> list[GroupElement]:
    """The descent class of elements with left descent set S minus K."""
    bound = DEFAULT_GATE if gate is None else gate
    if datum.group_order > bound:
        raise GateExceededError("descent class enumeration (|W|)", datum.group_order, bound)
    want = datum.full_mask & ~mask
    out = []
    for x in enumerate_X(datum, mask, gate):
        if x.left_descents() == want:
            out.append(x)
    return out


def enumerate_X_sharp(
    datum: CoxeterDatum, mask: int, gate: int | None = None
) -> list[tuple[GroupElement, int]]:
    """All (x, L^x) with x in X_L and L^x inside S.

    Computed by closing the elementary transporters under composition,
    deduplicating on the permutation.  The equivalence of this closure
    with the direct filter definition is checked against small groups in
    the test suite.
    """
    bound = DEFAULT_GATE if gate is None else gate
    start = (datum.identity.perm, mask)
    seen = {datum.identity.perm: mask}
    frontier = [start]
    while frontier:
        nxt = []
        for perm, cur in frontier:
            for r in datum.gens():
                image, _gm, d = datum.transporter_data(cur, r)
                dperm = d.perm
                nperm = tuple(perm[dperm[i]] for i in range(len(perm)))
                if nperm in seen:
                    continue
                if len(seen) >= bound:
                    raise GateExceededError(
                        f"X_L-sharp closure for L={datum.subset_digits(mask) or 'empty'}",
                        f">{bound}",
                        bound,
                    )
                seen[nperm] = image
                nxt.append((nperm, image))
        frontier = nxt
    return [(GroupElement(datum, p), seen[p]) for p in sorted(seen)]


# -- conjugacy classes of subsets ----------------------------------------


@dataclass(frozen=True)
class SubsetClass:
    index: int
    rep: int
    members: frozenset[int]
    size: int
    order: int
    name: str

    def digits(self, n: int) -> str:
        return "".join(str(i + 1) for i in range(n) if self.rep >> i & 1)


def _subset_orbit(datum: CoxeterDatum, mask: int) -> frozenset[int]:
    seen = {mask}
    frontier = [mask]
    while frontier:
        nxt = []
        for cur in frontier:
            for r in datum.gens():
                image, _gm, _d = datum.transporter_data(cur, r)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return frozenset(seen)


def _subset_classes(datum: CoxeterDatum) -> tuple[SubsetClass, ...]:
    unassigned = set(range(1 << datum.n))
    raw = []
    while unassigned:
        mask = min(unassigned)
        orbit = _subset_orbit(datum, mask)
        unassigned -= orbit
        rep = min(orbit, key=lambda m: datum.subset_digits(m))
        raw.append((rep, orbit))
    keyed = []
    for rep, orbit in raw:
        name = _base_name(datum, rep)
        keyed.append(
            (
                bin(rep).count("1"),
                parabolic_order(datum, rep),
                name,
                datum.subset_digits(rep),
                rep,
                orbit,
            )
        )
    keyed.sort()
    # primes distinguish classes that share a base name
    counts: dict[str, int] = {}
    for size, order, name, _dig, rep, orbit in keyed:
        counts[name] = counts.get(name, 0) + 1
    seen: dict[str, int] = {}
    out = []
    for idx, (size, order, name, _dig, rep, orbit) in enumerate(keyed):
        if counts[name] > 1:
            k = seen.get(name, 0)
            seen[name] = k + 1
            name = name + "'" * (k + 1)
        out.append(SubsetClass(idx, rep, orbit, size, order, name))
    return tuple(out)


def subset_classes(datum: CoxeterDatum) -> tuple[SubsetClass, ...]:
    return datum.subset_classes()


# -- parabolic type recognition ------------------------------------------


def parabolic_components(datum: CoxeterDatum, mask: int) -> list[tuple[int, ...]]:
    nodes = datum.gens_of(mask)
    cm = datum.coxeter_matrix
    comps = []
    remaining = set(nodes)
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for a in frontier:
                for b in remaining:
                    if b not in comp and cm[a - 1][b - 1] >= 3:
                        comp.add(b)
                        nxt.append(b)
            frontier = nxt
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    return comps


def classify_component(datum: CoxeterDatum, nodes: Sequence[int]) -> tuple[str, int, int | None]:
    """Isomorphism type (family, rank, dihedral order) of a connected diagram."""
    cm = datum.coxeter_matrix
    k = len(nodes)
    if k == 1:
        return "A", 1, None
    bonds = [
        (a, b, cm[a - 1][b - 1])
        for i, a in enumerate(nodes)
        for b in nodes[i + 1 :]
        if cm[a - 1][b - 1] >= 3
    ]
    if k == 2:
        m = bonds[0][2]
        if datum.ctype.family == "I2":
            return "I2", 2, m
        return {3: ("A", 2, None), 4: ("B", 2, None), 5: ("H", 2, None)}.get(
            m, ("I2", 2, m)
        )
    degree = {a: 0 for a in nodes}
    labels = []
    for a, b, m in bonds:
        degree[a] += 1
        degree[b] += 1
        labels.append(m)
    branch = [a for a in nodes if degree[a] == 3]
    if branch:
        if len(branch) != 1 or any(m != 3 for m in labels):
            raise AssertionError(f"unrecognized diagram on {nodes}")
        centre = branch[0]
        arms = []
        adj = {a: [b for b in nodes if b != a and cm[a - 1][b - 1] >= 3] for a in nodes}
        for start in adj[centre]:
            ln = 1
            prev, cur = centre, start
            while True:
                ext = [b for b in adj[cur] if b != prev]
                if not ext:
                    break
                prev, cur = cur, ext[0]
                ln += 1
            arms.append(ln)
        arms.sort()
        if arms[:2] == [1, 1]:
            return "D", k, None
        if arms[0] == 1 and arms[1] == 2:
            return "E", k, None
        raise AssertionError(f"unrecognized branched diagram on {nodes}")
    # a chain: look at the bond labels along it
    big = sorted(m for m in labels if m > 3)
    if not big:
        return "A", k, None
    if big == [4]:
        # internal double bond only happens for the full F4 diagram
        ends = [a for a in nodes if degree[a] == 1]
        four = [(a, b) for a, b, m in bonds if m == 4][0]
        if four[0] in ends or four[1] in ends:
            return "B", k, None
        return "F", 4, None
    if big == [5]:
        return "H", k, None
    raise AssertionError(f"unrecognized chain diagram on {nodes}")


def _base_name(datum: CoxeterDatum, mask: int) -> str:
    """Isomorphism-type name, non-A factor first, A-ranks descending."""
    if mask == 0:
        return "∅"
    factors = [classify_component(datum, comp) for comp in parabolic_components(datum, mask)]
    non_a = [f for f in factors if f[0] != "A"]
    a_ranks = sorted((f[1] for f in factors if f[0] == "A"), reverse=True)
    if len(non_a) > 1:
        raise AssertionError("parabolic subgroup with two non-A factors")
    if non_a:
        fam, rank, m = non_a[0]
        if fam == "I2":
            head, sub = f"I2({m})", ""
        else:
            head, sub = fam, str(rank)
    else:
        head, sub = "A", str(a_ranks.pop(0))
    sub += "".join(str(r) for r in a_ranks)
    return head + sub
