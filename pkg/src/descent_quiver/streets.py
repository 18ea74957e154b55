"""Subset-deletion paths, their orbits, and the induced multiplication.

A path is a pair (L; s, t, ...) recording a subset of the generator set
and a sequence of successive deletions.  Each generator r acts on paths
through the conjugation by d = w_L w_{L+r}, and an orbit of this action
is called a street.  Collapsing a path by the signed two-term rule

    delta(L; s, t, ...) = (L_s; t, ...) - (L_s; t, ...).s

down to length zero, and reading a length-zero path (M;) as the
idempotent-basis unit at M, turns streets into elements of the descent
algebra; products of group-algebra elements correspond to reversed
concatenation products of streets.  This correspondence is validated
against the enumerative oracle on every group small enough to
enumerate, and is what makes the rank-7 and rank-8 computations cheap:
no group elements beyond the w_J are ever enumerated here.

Internally a path is packed into one integer: the source mask in the
low bits and the deletion word in nibbles above, so orbit enumeration
runs on dict-of-int operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .coxeter import CoxeterDatum, GateExceededError, build_datum
from .exact_linalg import RowSpace

_MASK_BITS = 8
_MASK = (1 << _MASK_BITS) - 1


@dataclass(frozen=True)
class SubsetPath:
    """A pair (L; s, t, ...) of a subset mask and distinct deletions."""

    source: int
    deletions: tuple[int, ...]

    def __post_init__(self):
        cur = self.source
        for s in self.deletions:
            bit = 1 << (s - 1)
            if not cur & bit:
                raise ValueError(f"deletion {s} not available in the current subset")
            cur &= ~bit

    @property
    def length(self) -> int:
        return len(self.deletions)

    @property
    def terminal(self) -> int:
        cur = self.source
        for s in self.deletions:
            cur &= ~(1 << (s - 1))
        return cur


def _encode(source: int, deletions: Iterable[int]) -> int:
    key = source
    shift = _MASK_BITS
    for s in deletions:
        key |= s << shift
        shift += 4
    return key


def _decode(key: int) -> tuple[int, tuple[int, ...]]:
    source = key & _MASK
    dels = []
    key >>= _MASK_BITS
    while key:
        dels.append(key & 15)
        key >>= 4
    return source, tuple(dels)


def act_path(datum: CoxeterDatum, path: SubsetPath, r: int) -> SubsetPath:
    """The action of generator r through the transporter at the source."""
    image, genmap, _d = datum.transporter_data(path.source, r)
    return SubsetPath(image, tuple(genmap[s] for s in path.deletions))


def delta(datum: CoxeterDatum, path: SubsetPath) -> list[tuple[SubsetPath, int]]:
    """The signed two-term shortening of a positive-length path."""
    if not path.deletions:
        raise ValueError("delta needs a path of positive length")
    s = path.deletions[0]
    tail = SubsetPath(path.source & ~(1 << (s - 1)), path.deletions[1:])
    return [(tail, 1), (act_path(datum, tail, s), -1)]


def collapse(datum: CoxeterDatum, path: SubsetPath) -> dict[int, int]:
    """Iterate delta to length zero; keys are subset masks."""
    out: dict[int, int] = {}
    stack = [(path.source, path.deletions, 1)]
    while stack:
        mask, dels, sign = stack.pop()
        if not dels:
            nv = out.get(mask, 0) + sign
            if nv:
                out[mask] = nv
            else:
                out.pop(mask, None)
            continue
        s = dels[0]
        rest = dels[1:]
        smaller = mask & ~(1 << (s - 1))
        stack.append((smaller, rest, sign))
        image, genmap, _d = datum.transporter_data(smaller, s)
        stack.append((image, tuple(genmap[g] for g in rest), -sign))
    return out


class Street:
    """An orbit of paths under the generator action."""

    __slots__ = (
        "sid",
        "length",
        "label",
        "src_class",
        "tgt_class",
        "members",
        "by_terminal",
        "by_source",
        "delta",
    )

    def __init__(self, sid, length, label, src_class, tgt_class, members, by_terminal, delta):
        self.sid = sid
        self.length = length
        self.label = label
        self.src_class = src_class
        self.tgt_class = tgt_class
        self.members = members  # tuple of packed path keys
        self.by_terminal = by_terminal  # terminal mask -> tuple of keys
        self.delta = delta  # e-coordinates, mask -> int
        by_source: dict[int, list[int]] = {}
        for k in members:
            by_source.setdefault(k & _MASK, []).append(k)
        self.by_source = {s: tuple(v) for s, v in by_source.items()}

    @property
    def size(self) -> int:
        return len(self.members)

    def paths(self) -> list[SubsetPath]:
        return [SubsetPath(*_decode(k)) for k in self.members]

    def __repr__(self):
        return f"<street {self.label} ({self.size} paths)>"


def _street_label(datum: CoxeterDatum, source: int, dels: tuple[int, ...]) -> str:
    n = datum.n
    size = bin(source).count("1")
    if size == n and n >= 4:
        src = "S"
    elif size == n - 1 and n >= 6:
        missing = datum.full_mask & ~source
        src = f"S_{missing.bit_length()}"
    else:
        src = datum.subset_digits(source) or "∅"
    word = "".join(str(s) for s in dels)
    return f"[{src};{word}]" if word else f"[{src}]"


class StreetComplex:
    """All paths of a group, partitioned into streets."""

    def __init__(self, datum: CoxeterDatum, gate: int | None = None):
        self.datum = datum
        n = datum.n
        total = _path_count(n)
        if gate is not None and total > gate:
            raise GateExceededError("path enumeration", total, gate)
        # warm the transporter cache for the packed action
        trans: list[list[tuple[int, int, tuple[int, ...]]]] = [None] * (1 << n)
        for mask in range(1 << n):
            row = []
            for r in range(1, n + 1):
                image, genmap, _d = datum.transporter_data(mask, r)
                row.append((r, image, genmap))
            trans[mask] = row
        # enumerate every path, packed
        all_keys: list[int] = []

        def emit(source: int, remaining: int, key: int, shift: int) -> None:
            all_keys.append(key)
            sub = remaining
            while sub:
                bit = sub & -sub
                sub -= bit
                s = bit.bit_length()
                emit(source, remaining - bit, key | (s << shift), shift + 4)

        for source in range(1 << n):
            emit(source, source, source, _MASK_BITS)
        if len(all_keys) != total:
            raise AssertionError("path generation does not match the closed count")

        street_of: dict[int, int] = {}
        raw_orbits: list[list[int]] = []
        for key in all_keys:
            if key in street_of:
                continue
            sid = len(raw_orbits)
            orbit = [key]
            street_of[key] = sid
            frontier = [key]
            while frontier:
                nxt = []
                for cur in frontier:
                    mask = cur & _MASK
                    packed = cur >> _MASK_BITS
                    for _r, image, genmap in trans[mask]:
                        nk = image
                        shift = _MASK_BITS
                        p = packed
                        while p:
                            nk |= genmap[p & 15] << shift
                            shift += 4
                            p >>= 4
                        if nk not in street_of:
                            street_of[nk] = sid
                            orbit.append(nk)
                            nxt.append(nk)
                frontier = nxt
            raw_orbits.append(orbit)

        # deterministic street order: by length, then canonical label data
        def canonical(orbit: list[int]) -> tuple[str, str]:
            best = None
            for k in orbit:
                src, dels = _decode(k)
                cand = (datum.subset_digits(src), "".join(map(str, dels)))
                if best is None or cand < best:
                    best = cand
            return best

        datum.subset_classes()
        keyed = []
        for orbit in raw_orbits:
            src0, dels0 = _decode(orbit[0])
            keyed.append((len(dels0), canonical(orbit), orbit))
        keyed.sort(key=lambda t: (t[0], t[1]))

        streets: list[Street] = []
        self.path_street: dict[int, int] = {}
        for sid, (length, canon, orbit) in enumerate(keyed):
            members = tuple(sorted(orbit))
            by_terminal: dict[int, list[int]] = {}
            dvec: dict[int, int] = {}
            src_class = tgt_class = None
            for k in members:
                self.path_street[k] = sid
                src, dels = _decode(k)
                term = src
                for s in dels:
                    term &= ~(1 << (s - 1))
                by_terminal.setdefault(term, []).append(k)
                for mask, c in collapse(datum, SubsetPath(src, dels)).items():
                    nv = dvec.get(mask, 0) + c
                    if nv:
                        dvec[mask] = nv
                    else:
                        dvec.pop(mask, None)
                sc = datum.class_of(src)
                tc = datum.class_of(term)
                if src_class is None:
                    src_class, tgt_class = sc, tc
                elif (sc, tc) != (src_class, tgt_class):
                    raise AssertionError("orbit mixes source or terminal classes")
            label = _street_label(datum, *_best_member(datum, members))
            streets.append(
                Street(
                    sid,
                    length,
                    label,
                    src_class,
                    tgt_class,
                    members,
                    {t: tuple(v) for t, v in by_terminal.items()},
                    dvec,
                )
            )
        self.streets = streets
        self.vertex_street: dict[int, int] = {}
        for st in streets:
            if st.length == 0:
                if st.src_class in self.vertex_street:
                    raise AssertionError("two vertex streets for one class")
                self.vertex_street[st.src_class] = st.sid
        if len(self.vertex_street) != len(datum.subset_classes()):
            raise AssertionError("length-zero streets do not match the subset classes")

    def street_of_path(self, path: SubsetPath) -> Street:
        return self.streets[self.path_street[_encode(path.source, path.deletions)]]

    def concat_product(self, first: int, second: int) -> dict[int, int]:
        """The street coefficients of streets[first] o streets[second].

        Concatenates members of the first street with members of the
        second wherever the terminal subset matches the source subset.
        Each concatenation arises from exactly one pair, and the result
        must be a union of whole streets; anything else is an internal
        inconsistency.
        """
        a = self.streets[first]
        b = self.streets[second]
        shift = _MASK_BITS + 4 * a.length
        hits: dict[int, int] = {}
        for term, keys in a.by_terminal.items():
            targets = b.by_source.get(term)
            if not targets:
                continue
            for p in keys:
                packed_p = p >> _MASK_BITS
                for q in targets:
                    nk = (p & _MASK) | (packed_p << _MASK_BITS) | ((q >> _MASK_BITS) << shift)
                    sid = self.path_street[nk]
                    hits[sid] = hits.get(sid, 0) + 1
        out: dict[int, int] = {}
        for sid, count in hits.items():
            size = self.streets[sid].size
            if count != size:
                raise AssertionError("street product is not constant on a street")
            out[sid] = 1
        return out

    def path_count(self) -> int:
        return len(self.path_street)


def _best_member(datum: CoxeterDatum, members: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    best = None
    best_key = None
    for k in members:
        src, dels = _decode(k)
        cand = (datum.subset_digits(src), "".join(map(str, dels)))
        if best_key is None or cand < best_key:
            best_key = cand
            best = (src, dels)
    return best


def _path_count(n: int) -> int:
    from math import comb, factorial

    total = 0
    for size in range(n + 1):
        per = sum(factorial(size) // factorial(size - k) for k in range(size + 1))
        total += comb(n, size) * per
    return total


_COMPLEXES: dict[int, StreetComplex] = {}


def enumerate_streets(datum: CoxeterDatum, gate: int | None = None) -> StreetComplex:
    cplx = _COMPLEXES.get(id(datum))
    if cplx is None:
        cplx = StreetComplex(datum, gate)
        _COMPLEXES[id(datum)] = cplx
    return cplx


class SigmaAlgebra:
    """The descent algebra with multiplication through street products.

    A spanning set of streets is chosen greedily by (length, label);
    its collapse images are a basis, block by block for the pairs of
    terminal/source classes, and products are computed lazily as
    reversed concatenation products of the chosen streets.
    """

    def __init__(self, datum: CoxeterDatum, gate: int | None = None):
        self.datum = datum
        self.complex = enumerate_streets(datum, gate)
        self.classes = datum.subset_classes()
        self.block_space: dict[tuple[int, int], RowSpace] = {}
        self.block_basis: dict[tuple[int, int], list[int]] = {}
        self.global_space = RowSpace()
        self.kernel_streets: list[int] = []
        for st in self.complex.streets:
            block = (st.tgt_class, st.src_class)
            vec = {m: Fraction(c) for m, c in st.delta.items()}
            space = self.block_space.get(block)
            if space is None:
                space = self.block_space[block] = RowSpace()
                self.block_basis[block] = []
            added_block = space.insert(vec, tag=st.sid)
            added_global = self.global_space.insert(vec, tag=st.sid)
            if added_block != added_global:
                raise AssertionError("block structure disagrees with the global span")
            if added_block:
                self.block_basis[block].append(st.sid)
            else:
                self.kernel_streets.append(st.sid)
        if self.global_space.dim != 1 << datum.n:
            raise AssertionError(
                f"street images span dimension {self.global_space.dim}, expected {1 << datum.n}"
            )
        self.block_of_sid = {
            sid: block for block, sids in self.block_basis.items() for sid in sids
        }
        self._table: dict[tuple[int, int], dict[int, Fraction]] = {}

    # -- coordinates ------------------------------------------------------

    def decompose(self, evec: Mapping[int, Fraction]) -> dict[tuple[int, int], dict[int, Fraction]]:
        """Split an idempotent-basis vector into its two-sided blocks."""
        coords = self.global_space.coords({m: Fraction(c) for m, c in evec.items()})
        if coords is None:
            raise ValueError("vector outside the algebra span")
        out: dict[tuple[int, int], dict[int, Fraction]] = {}
        for sid, c in coords.items():
            block = self.block_of_sid[sid]
            out.setdefault(block, {})[sid] = c
        return out

    def block_to_evec(self, coords: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for sid, c in coords.items():
            for m, v in self.complex.streets[sid].delta.items():
                nv = out.get(m, Fraction(0)) + c * v
                if nv:
                    out[m] = nv
                else:
                    out.pop(m, None)
        return out

    def table_entry(self, si: int, sj: int) -> dict[int, Fraction]:
        """Coordinates of (image of si) * (image of sj) over spanning streets.

        The product corresponds to the concatenation of the second
        street followed by the first, reflecting that the collapse map
        reverses products.
        """
        key = (si, sj)
        entry = self._table.get(key)
        if entry is None:
            a = self.complex.streets[si]
            b = self.complex.streets[sj]
            if a.src_class != b.tgt_class:
                entry = {}
            else:
                prod = self.complex.concat_product(sj, si)
                evec: dict[int, Fraction] = {}
                for sid in prod:
                    for m, v in self.complex.streets[sid].delta.items():
                        nv = evec.get(m, Fraction(0)) + v
                        if nv:
                            evec[m] = nv
                        else:
                            evec.pop(m, None)
                coords = self.global_space.coords(evec)
                if coords is None:
                    raise AssertionError("street product escapes the street span")
                entry = coords
            self._table[key] = entry
        return entry

    def product_blocks(
        self,
        u: Mapping[tuple[int, int], Mapping[int, Fraction]],
        v: Mapping[tuple[int, int], Mapping[int, Fraction]],
    ) -> dict[tuple[int, int], dict[int, Fraction]]:
        out: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (a, b), uc in u.items():
            for (b2, c), vc in v.items():
                if b != b2:
                    continue
                for si, x in uc.items():
                    for sj, y in vc.items():
                        f = x * y
                        if not f:
                            continue
                        for sid, t in self.table_entry(si, sj).items():
                            block = self.block_of_sid[sid]
                            dest = out.setdefault(block, {})
                            nv = dest.get(sid, Fraction(0)) + f * t
                            if nv:
                                dest[sid] = nv
                            else:
                                dest.pop(sid, None)
        return {blk: coords for blk, coords in out.items() if coords}

    def multiply(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Product of two idempotent-basis vectors."""
        res = self.product_blocks(self.decompose(u), self.decompose(v))
        out: dict[int, Fraction] = {}
        for coords in res.values():
            for m, c in self.block_to_evec(coords).items():
                nv = out.get(m, Fraction(0)) + c
                if nv:
                    out[m] = nv
                else:
                    out.pop(m, None)
        return out

    def class_idempotent_evec(self, class_index: int) -> dict[int, Fraction]:
        return {m: Fraction(1) for m in self.classes[class_index].members}

    def identity_evec(self) -> dict[int, Fraction]:
        return {m: Fraction(1) for m in range(1 << self.datum.n)}


_SIGMAS: dict[int, SigmaAlgebra] = {}


def sigma_algebra(datum: CoxeterDatum, gate: int | None = None) -> SigmaAlgebra:
    sig = _SIGMAS.get(id(datum))
    if sig is None:
        sig = SigmaAlgebra(datum, gate)
        _SIGMAS[id(datum)] = sig
    return sig


def sigma_product(sig: SigmaAlgebra, u, v):
    """Product of two e-basis DescentVectors through the street route."""
    from .descent_algebra import DescentVector

    if isinstance(u, DescentVector):
        if u.basis != "e" or v.basis != "e":
            raise ValueError("street multiplication works in the idempotent basis")
        out = sig.multiply(u.coeffs, v.coeffs)
        return DescentVector(u.datum, "e", {m: c for m, c in out.items()})
    return sig.multiply(u, v)


def verify_delta_kernel_ideal(sig: SigmaAlgebra, max_pairs: int | None = None) -> int:
    """Check that street vectors collapsing to zero stay zero under products.

    For each street whose collapse image was linearly dependent on the
    chosen spanning set, form the corresponding kernel combination and
    multiply it by every spanning street on both sides; all products
    must collapse to zero.  Returns the number of pairs checked.
    """
    cplx = sig.complex
    checked = 0
    for sid in sig.kernel_streets:
        st = cplx.streets[sid]
        vec = {m: Fraction(c) for m, c in st.delta.items()}
        combo = sig.global_space.coords(vec)
        if combo is None:
            raise AssertionError("kernel street is not in the span")
        # kernel element: street sid minus its expression in the basis
        for other in sig.block_of_sid:
            for first, second in ((sid, other), (other, sid)):
                prod_evec: dict[int, Fraction] = {}

                def acc(street_a: int, street_b: int, scale: Fraction) -> None:
                    a = cplx.streets[street_a]
                    b = cplx.streets[street_b]
                    if a.tgt_class != b.src_class:
                        return
                    for rsid in cplx.concat_product(street_a, street_b):
                        for m, v in cplx.streets[rsid].delta.items():
                            nv = prod_evec.get(m, Fraction(0)) + scale * v
                            if nv:
                                prod_evec[m] = nv
                            else:
                                prod_evec.pop(m, None)

                acc(first, second, Fraction(1))
                for basis_sid, c in combo.items():
                    if first == sid:
                        acc(basis_sid, second, -c)
                    else:
                        acc(first, basis_sid, -c)
                if prod_evec:
                    raise AssertionError("collapse kernel is not an ideal of the street algebra")
                checked += 1
                if max_pairs is not None and checked >= max_pairs:
                    return checked
    return checked
