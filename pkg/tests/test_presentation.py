from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from descent_quiver.coxeter import build_datum
from descent_quiver.presentation import presenter, quiver_presentation


def edge_pairs(q):
    return Counter((e.src, e.dst) for e in q.edges)


def test_i2_even_semisimple(pres):
    q = pres("I2(4)")
    assert len(q.vertices) == 4 and not q.edges and not q.relations
    assert q.filtration.radical_dim == 0
    assert q.filtration.loewy_length == 1
    assert q.cartan == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert all(len(q.loewy[v.index]) == 1 for v in q.vertices)


def test_h3_radical(pres):
    q = pres("H3")
    assert q.filtration.radical_dim == 2
    assert len(q.filtration.block_dims) == 1  # the square already vanishes
    assert q.filtration.loewy_length == 2
    # both arrows join the reflection class to the full class
    reflection = next(v.index for v in q.vertices if v.rep == "1")
    top = next(v.index for v in q.vertices if v.rep == "123")
    assert edge_pairs(q) == Counter({(reflection, top): 2})
    assert not q.relations
    # the projective at the top has radical layer two copies of the reflection simple
    assert q.loewy[top] == (((top, 1),), ((reflection, 2),))


def test_f4_edges(pres):
    q = pres("F4")
    datum = build_datum("F4")
    by_rep = {v.rep: v.index for v in q.vertices}
    want = Counter(
        {
            (by_rep["13"], by_rep["1234"]): 2,
            (by_rep["1"], by_rep["123"]): 1,
            (by_rep["3"], by_rep["234"]): 1,
        }
    )
    assert edge_pairs(q) == want
    assert q.parity.central
    assert len(q.parity.even_vertices) == 6 and len(q.parity.odd_vertices) == 6


def test_e6_relations(pres):
    q = pres("E6")
    assert len(q.vertices) == 17 and len(q.edges) == 19
    assert Counter(r.degree for r in q.relations) == Counter({2: 1, 3: 1})
    assert q.quotient_dimension == 64
    assert not q.parity.central
    # a mixed-parity pair of classes supports part of the radical
    a, b = q.parity.witness
    assert (q.vertices[a - 1].size - q.vertices[b - 1].size) % 2 == 1


def test_e6_loewy_repetition(pres):
    # the projective at the top vertex repeats one simple in layers two and three
    q = pres("E6")
    datum = build_datum("E6")
    top = datum.class_of(datum.full_mask) + 1
    a211 = datum.class_of(datum.mask_of([1, 2, 4, 6])) + 1
    layers = q.loewy[top]
    assert len(layers) == 5
    assert any(v == a211 for v, _ in layers[1])
    assert any(v == a211 for v, _ in layers[2])


def test_cartan_row_sums_match_loewy(pres):
    for label in ("I2(5)", "A3", "B3", "H3", "H4", "F4", "E6"):
        q = pres(label)
        for v in q.vertices:
            total = Counter()
            for layer in q.loewy[v.index]:
                for num, mult in layer:
                    total[num] += mult
            row = q.cartan[v.index - 1]
            assert total == Counter({j + 1: c for j, c in enumerate(row) if c}), (label, v)


def test_cartan_entry_sum(pres):
    for label in ("I2(6)", "A3", "H3", "H4", "F4", "E6"):
        q = pres(label)
        assert sum(sum(row) for row in q.cartan) == 1 << build_datum(label).n


def test_parity_blocks_vanish_when_central(pres):
    for label in ("I2(8)", "B3", "H3", "H4", "F4"):
        q = pres(label)
        assert q.parity.central
        for i, vi in enumerate(q.vertices):
            for j, vj in enumerate(q.vertices):
                if (vi.size - vj.size) % 2:
                    assert q.cartan[i][j] == 0


def test_i2_odd_witness(pres):
    q = pres("I2(5)")
    assert not q.parity.central
    assert q.parity.witness is not None
    a, b = q.parity.witness
    assert {q.vertices[a - 1].size, q.vertices[b - 1].size} == {1, 2}


@pytest.mark.parametrize(
    "label,path_alg,comm",
    [
        ("A1", True, True),
        ("A2", True, False),
        ("A3", True, False),
        ("A4", True, False),
        ("A5", False, False),
        ("B2", True, True),
        ("B3", True, False),
        ("B4", True, False),
        ("B5", True, False),
        ("B6", False, False),
        ("D4", True, False),
        ("D5", True, False),
        ("D6", False, False),
        ("F4", True, False),
        ("H3", True, False),
        ("H4", True, False),
        ("I2(3)", True, False),
        ("I2(4)", True, True),
        ("I2(6)", True, True),
        ("I2(7)", True, False),
        ("I2(8)", True, True),
        ("E6", False, False),
    ],
)
def test_classification(pres, label, path_alg, comm):
    q = pres(label)
    assert q.is_path_algebra == path_alg
    assert q.is_commutative == comm


def test_quotient_dimension_is_certified(pres):
    for label in ("A5", "B6", "D6", "E6"):
        q = pres(label)
        assert q.quotient_dimension == 1 << build_datum(label).n
        assert q.relations  # these need relations, and the certificate still holds


def test_radical_powers_nest(pres):
    q = pres("E6")
    dims = q.filtration.block_dims
    for k in range(1, len(dims)):
        for blk, d in dims[k].items():
            assert d <= dims[k - 1].get(blk, 0) or dims[k - 1].get(blk, 0) == 0
    total = sum(dims[0].values())
    assert total == q.filtration.radical_dim == 64 - 17


def test_loewy_lengths(pres):
    assert max(len(pres("E6").loewy[v.index]) for v in pres("E6").vertices) == 5
    assert max(len(pres("H4").loewy[v.index]) for v in pres("H4").vertices) == 2
    assert pres("I2(9)").filtration.loewy_length == 2
