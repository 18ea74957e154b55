"""Quiver presentation of the descent algebra: radical, arrows, relations.

The radical candidate is the span of the collapse images of all
positive-length streets.  It is verified to be a nilpotent ideal of
codimension the number of subset classes, which characterizes the
Jacobson radical of a basic algebra, so no character theory is needed.
Arrows are chosen street images that stay independent modulo the
radical square, block by block; relations are extracted degree by
degree as the kernel of the path-algebra surjection modulo the ideal
generated below, and the whole presentation is certified by the
dimension count of the quotient.

Orientation conventions are fixed once by the rank-3 tables (the
doubled arrow into the full-set vertex, and the radical layers of its
projective) and applied uniformly: a street gives an arrow from the
class of its terminal subset to the class of its source subset, and row
lambda of the Cartan matrix lists the composition factors of the
projective at lambda.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .coxeter import CoxeterDatum, SubsetClass, build_datum
from .exact_linalg import RowSpace
from .streets import SigmaAlgebra, sigma_algebra


@dataclass(frozen=True)
class Vertex:
    index: int  # 1-based, in class order
    name: str
    rep: str  # digit string of the representative subset
    size: int
    cls: SubsetClass


@dataclass(frozen=True)
class Edge:
    src: int  # 1-based vertex index (terminal class of the street)
    dst: int  # 1-based vertex index (source class of the street)
    street: str
    index: int  # position among parallel edges, rendered as dots
    sid: int


@dataclass(frozen=True)
class Relation:
    src: int
    dst: int
    degree: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]  # (edge ids, coefficient)


@dataclass
class RadicalFiltration:
    block_dims: list[dict[tuple[int, int], int]]  # power k >= 1 -> block -> dim
    radical_dim: int
    loewy_length: int  # number of semisimple layers of the algebra


@dataclass
class ParitySplit:
    central: bool
    even_vertices: tuple[int, ...] = ()
    odd_vertices: tuple[int, ...] = ()
    witness: tuple[int, int] | None = None  # a mixed-parity block with radical


@dataclass
class QuiverPresentation:
    label: str
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    relations: tuple[Relation, ...]
    cartan: tuple[tuple[int, ...], ...]
    loewy: dict[int, tuple[tuple[tuple[int, int], ...], ...]]  # vertex -> layers of (vertex, mult)
    parity: ParitySplit
    filtration: RadicalFiltration
    quotient_dimension: int
    is_path_algebra: bool
    is_commutative: bool

    def vertex_by_rep(self, rep_mask: int) -> Vertex:
        datum = build_datum(self.label)
        cls_index = datum.class_of(rep_mask)
        return self.vertices[cls_index]

    def edge_counts(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for e in self.edges:
            out[(e.src, e.dst)] = out.get((e.src, e.dst), 0) + 1
        return out


class Presenter:
    """Builds the presentation for one group; all steps cached."""

    def __init__(self, datum: CoxeterDatum, gate: int | None = None):
        self.datum = datum
        self.sigma = sigma_algebra(datum, gate)
        self.classes = datum.subset_classes()
        self._filtration: RadicalFiltration | None = None
        self._rad_bases: list[dict[tuple[int, int], list[dict[int, Fraction]]]] | None = None
        self._edges: tuple[Edge, ...] | None = None
        self._edge_coords: dict[int, dict[int, Fraction]] | None = None
        self._relations: tuple[Relation, ...] | None = None
        self._quotient_dim: int | None = None

    # -- radical ----------------------------------------------------------

    def radical_filtration(self) -> RadicalFiltration:
        if self._filtration is not None:
            return self._filtration
        sig = self.sigma
        datum = self.datum
        # rad^1: blockwise spans of positive-length street images
        first: dict[tuple[int, int], list[dict[int, Fraction]]] = {}
        dims1: dict[tuple[int, int], int] = {}
        for block, sids in sig.block_basis.items():
            vecs = []
            for sid in sids:
                if sig.complex.streets[sid].length >= 1:
                    vecs.append({sid: Fraction(1)})
            if vecs:
                first[block] = vecs
                dims1[block] = len(vecs)
        rad_dim = sum(dims1.values())
        n_classes = len(self.classes)
        if rad_dim != (1 << datum.n) - n_classes:
            raise AssertionError(
                "radical candidate has wrong codimension: "
                f"{rad_dim} != {(1 << datum.n) - n_classes}"
            )
        for block in first:
            a, b = block
            if a == b:
                raise AssertionError("radical candidate meets a diagonal block")
        bases = [first]
        dims = [dims1]
        # higher powers by left multiplication with rad^1
        while bases[-1]:
            prev = bases[-1]
            nxt: dict[tuple[int, int], RowSpace] = {}
            produced: dict[tuple[int, int], list[dict[int, Fraction]]] = {}
            for (a, b), left_vecs in first.items():
                for (b2, c), right_vecs in prev.items():
                    if b != b2:
                        continue
                    for u in left_vecs:
                        for v in right_vecs:
                            prod = _block_product(sig, u, v)
                            if not prod:
                                continue
                            space = nxt.get((a, c))
                            if space is None:
                                space = nxt[(a, c)] = RowSpace()
                            if space.insert(prod, tag=len(produced.get((a, c), ()))):
                                produced.setdefault((a, c), []).append(prod)
            if not produced:
                break
            bases.append(produced)
            dims.append({blk: len(v) for blk, v in produced.items()})
            if len(bases) > (1 << datum.n):
                raise AssertionError("radical powers fail to vanish")
        # verify the descending chain blockwise
        for k in range(1, len(bases)):
            for blk, vecs in bases[k].items():
                prev_space = RowSpace()
                for i, v in enumerate(bases[k - 1].get(blk, [])):
                    prev_space.insert(v, tag=i)
                for v in vecs:
                    if not prev_space.contains(v):
                        raise AssertionError("radical powers are not nested")
        self._rad_bases = bases
        self._filtration = RadicalFiltration(
            block_dims=dims,
            radical_dim=rad_dim,
            loewy_length=len(bases) + 1 if rad_dim else 1,
        )
        return self._filtration

    def _block_dim(self, power: int, block: tuple[int, int]) -> int:
        filt = self.radical_filtration()
        if power - 1 >= len(filt.block_dims):
            return 0
        return filt.block_dims[power - 1].get(block, 0)

    # -- arrows ------------------------------------------------------------

    def quiver_edges(self) -> tuple[Edge, ...]:
        if self._edges is not None:
            return self._edges
        self.radical_filtration()
        sig = self.sigma
        bases = self._rad_bases
        edges: list[Edge] = []
        edge_coords: dict[int, dict[int, Fraction]] = {}
        by_block: dict[tuple[int, int], list] = {}
        for st in sig.complex.streets:
            if st.length == 0:
                continue
            by_block.setdefault((st.tgt_class, st.src_class), []).append(st)
        for block in sorted(by_block, key=lambda blk: (blk[0], blk[1])):
            want = self._block_dim(1, block) - self._block_dim(2, block)
            if want <= 0:
                continue
            space = RowSpace()
            for i, v in enumerate(bases[1].get(block, []) if len(bases) > 1 else []):
                space.insert(_coords_to_evec(sig, v), tag=("r2", i))
            chosen = 0
            for st in by_block[block]:
                if chosen == want:
                    break
                vec = {m: Fraction(c) for m, c in st.delta.items()}
                if space.insert(vec, tag=("e", st.sid)):
                    a, b = block
                    edges.append(Edge(a + 1, b + 1, st.label, chosen, st.sid))
                    coords = sig.global_space.coords(vec)
                    edge_coords[len(edges) - 1] = coords
                    chosen += 1
            if chosen != want:
                raise AssertionError("could not realize all arrows by streets")
        edges_sorted = []
        remap: dict[int, int] = {}
        order = sorted(range(len(edges)), key=lambda i: (edges[i].src, edges[i].dst, edges[i].index))
        for new, old in enumerate(order):
            remap[old] = new
            edges_sorted.append(edges[old])
        self._edges = tuple(edges_sorted)
        self._edge_coords = {remap[i]: c for i, c in edge_coords.items()}
        return self._edges

    # -- relations ----------------------------------------------------------

    def relations(self) -> tuple[Relation, ...]:
        if self._relations is not None:
            return self._relations
        edges = self.quiver_edges()
        sig = self.sigma
        n_vertices = len(self.classes)
        out_edges: dict[int, list[int]] = {}
        for i, e in enumerate(edges):
            out_edges.setdefault(e.src, []).append(i)
        # enumerate paths by degree; a path is a tuple of edge ids
        paths_by_degree: list[dict[tuple[int, int], list[tuple[int, ...]]]] = []
        current: dict[tuple[int, int], list[tuple[int, ...]]] = {}
        for i, e in enumerate(edges):
            current.setdefault((e.src, e.dst), []).append((i,))
        images: dict[tuple[int, ...], dict[int, Fraction]] = {
            (i,): dict(self._edge_coords[i]) for i in range(len(edges))
        }
        paths_by_degree.append(current)
        while current:
            nxt: dict[tuple[int, int], list[tuple[int, ...]]] = {}
            for (u, v), paths in current.items():
                for ext in out_edges.get(v, []):
                    e = edges[ext]
                    for p in paths:
                        q = p + (ext,)
                        nxt.setdefault((u, e.dst), []).append(q)
                        images[q] = _mul_coords(sig, images[p], images[(ext,)])
            if not nxt:
                break
            paths_by_degree.append(nxt)
            current = nxt
        # degree-by-degree kernel extraction
        relations: list[Relation] = []
        total_rank = n_vertices + len(edges)
        tag_counter = 0
        for deg_index, by_pair in enumerate(paths_by_degree[1:], start=2):
            for (u, v), paths in sorted(by_pair.items()):
                paths = sorted(paths)
                pos = {p: i for i, p in enumerate(paths)}
                # span of lower-degree relations stretched to this degree
                ispace = RowSpace()
                for rel in relations:
                    room = deg_index - rel.degree
                    for g in range(room + 1):
                        lefts = _paths_between(paths_by_degree, g, u, rel.src)
                        rights = _paths_between(paths_by_degree, room - g, rel.dst, v)
                        for lp in lefts:
                            for rp in rights:
                                vec: dict[int, Fraction] = {}
                                for term, coeff in rel.terms:
                                    key = pos.get(lp + term + rp)
                                    if key is None:
                                        raise AssertionError("stretched relation leaves the path set")
                                    vec[key] = vec.get(key, Fraction(0)) + coeff
                                tag_counter += 1
                                ispace.insert(vec, tag=("i", tag_counter))
                # kernel of the evaluation on this block
                kernel = _evaluation_kernel(sig, paths, images)
                total_rank += len(paths) - len(kernel)
                for vec in kernel:
                    residual, _ = ispace.reduce(vec)
                    if not residual:
                        continue
                    pivot = min(residual)
                    inv = 1 / residual[pivot]
                    norm = {k: c * inv for k, c in residual.items()}
                    terms = tuple((paths[k], norm[k]) for k in sorted(norm))
                    relations.append(Relation(u, v, deg_index, terms))
                    tag_counter += 1
                    ispace.insert(residual, tag=("i", tag_counter))
        self._relations = tuple(relations)
        self._quotient_dim = total_rank
        return self._relations

    def quotient_dimension(self) -> int:
        self.relations()
        return self._quotient_dim

    # -- reporting ----------------------------------------------------------

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        self.radical_filtration()
        k = len(self.classes)
        rows = []
        for lam in range(k):
            row = []
            for mu in range(k):
                entry = (1 if lam == mu else 0) + self._block_dim(1, (mu, lam))
                row.append(entry)
            rows.append(tuple(row))
        return tuple(rows)

    def loewy_series(self, lam: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Layers of the projective at class lam, as (vertex, mult) pairs."""
        self.radical_filtration()
        k = len(self.classes)
        layers: list[tuple[tuple[int, int], ...]] = [((lam + 1, 1),)]
        power = 1
        while True:
            layer = []
            for mu in range(k):
                d = self._block_dim(power, (mu, lam)) - self._block_dim(power + 1, (mu, lam))
                if d:
                    layer.append((mu + 1, d))
            if not layer:
                break
            layers.append(tuple(layer))
            power += 1
        return tuple(layers)

    def parity_split(self) -> ParitySplit:
        datum = self.datum
        w0 = datum.longest_element(datum.full_mask)
        central = all(w0 * s == s * w0 for s in datum.simple)
        self.radical_filtration()
        mixed = [
            blk
            for blk, d in self._filtration.block_dims[0].items()
            if d and (self.classes[blk[0]].size - self.classes[blk[1]].size) % 2
        ]
        if central:
            if mixed:
                raise AssertionError("central longest element but a mixed-parity block survives")
            even = tuple(c.index + 1 for c in self.classes if c.size % 2 == 0)
            odd = tuple(c.index + 1 for c in self.classes if c.size % 2 == 1)
            return ParitySplit(True, even, odd)
        witness = (mixed[0][0] + 1, mixed[0][1] + 1) if mixed else None
        return ParitySplit(False, witness=witness)

    def classify(self) -> tuple[bool, bool]:
        relations = self.relations()
        is_path_algebra = not relations
        is_commutative = True
        sig = self.sigma
        sids = sorted(sig.block_of_sid)
        for i in sids:
            for j in sids:
                if sig.table_entry(i, j) != sig.table_entry(j, i):
                    is_commutative = False
                    break
            if not is_commutative:
                break
        return is_path_algebra, is_commutative


def _block_product(sig: SigmaAlgebra, u: Mapping[int, Fraction], v: Mapping[int, Fraction]):
    out: dict[int, Fraction] = {}
    for si, x in u.items():
        for sj, y in v.items():
            f = x * y
            if not f:
                continue
            for sid, t in sig.table_entry(si, sj).items():
                nv = out.get(sid, Fraction(0)) + f * t
                if nv:
                    out[sid] = nv
                else:
                    out.pop(sid, None)
    return out


def _mul_coords(sig: SigmaAlgebra, u: Mapping[int, Fraction], v: Mapping[int, Fraction]):
    return _block_product(sig, u, v)


def _coords_to_evec(sig: SigmaAlgebra, coords: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return sig.block_to_evec(coords)


def _paths_between(paths_by_degree, degree: int, u: int, v: int) -> list[tuple[int, ...]]:
    if degree == 0:
        return [()] if u == v else []
    if degree - 1 >= len(paths_by_degree):
        return []
    return paths_by_degree[degree - 1].get((u, v), [])


def _evaluation_kernel(sig: SigmaAlgebra, paths, images) -> list[dict[int, Fraction]]:
    """Null combinations of the evaluated paths, in path-index coordinates."""
    from .exact_linalg import SparseMatrix

    entries = {}
    keymap: dict[int, int] = {}
    for col, p in enumerate(paths):
        for sid, c in images[p].items():
            row = keymap.setdefault(sid, len(keymap))
            entries[(row, col)] = c
    mat = SparseMatrix(len(keymap), len(paths), entries)
    return [
        {i: c for i, c in enumerate(vec) if c}
        for vec in mat.kernel_basis()
    ]


_PRESENTERS: dict[tuple[int, int | None], Presenter] = {}


def presenter(datum: CoxeterDatum, gate: int | None = None) -> Presenter:
    key = (id(datum), gate)
    p = _PRESENTERS.get(key)
    if p is None:
        p = Presenter(datum, gate)
        _PRESENTERS[key] = p
    return p


def quiver_presentation(label: str, gate: int | None = None) -> QuiverPresentation:
    datum = build_datum(label)
    pres = presenter(datum, gate)
    classes = datum.subset_classes()
    vertices = tuple(
        Vertex(c.index + 1, c.name, c.digits(datum.n), c.size, c) for c in classes
    )
    edges = pres.quiver_edges()
    relations = pres.relations()
    cartan = pres.cartan_matrix()
    loewy = {v.index: pres.loewy_series(v.index - 1) for v in vertices}
    parity = pres.parity_split()
    is_path_algebra, is_commutative = pres.classify()
    qp = QuiverPresentation(
        label=datum.ctype.label,
        vertices=vertices,
        edges=edges,
        relations=relations,
        cartan=cartan,
        loewy=loewy,
        parity=parity,
        filtration=pres.radical_filtration(),
        quotient_dimension=pres.quotient_dimension(),
        is_path_algebra=is_path_algebra,
        is_commutative=is_commutative,
    )
    if qp.quotient_dimension != 1 << datum.n:
        raise AssertionError(
            f"presentation dimension certificate failed: {qp.quotient_dimension} != {1 << datum.n}"
        )
    cartan_sum = sum(sum(row) for row in cartan)
    if cartan_sum != 1 << datum.n:
        raise AssertionError(f"Cartan entries sum to {cartan_sum}, expected {1 << datum.n}")
    return qp
