"""Reference tables for the supported exceptional and dihedral types.

Each record lists the quiver vertices (with their representative
subsets), the arrow pairs, the relation counts by part and degree, the
Cartan matrices in the published block layout, and the radical layers
of every projective.  Vertex numbers are the published ones; comparison
against a computed presentation resolves them through the representative
subsets, so primed names and arrow labels (both artifacts of selector
choices) never enter the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import build_datum
from .presentation import QuiverPresentation


@dataclass(frozen=True)
class GoldenRecord:
    label: str
    central: bool
    vertices: tuple[tuple[int, str, str], ...]  # (number, name, rep digit string)
    edges: tuple[tuple[int, int], ...]  # (source number, target number)
    relations: dict  # (part, degree) -> count; part in {"even", "odd", "all"}
    cartans: tuple[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]], ...]
    # each cartan part: (row/col vertex numbers, matrix rows)
    loewy: dict  # vertex number -> tuple of layers, each a tuple of vertex numbers


def _rec(label, central, vertices, edges, relations, cartans, loewy):
    return GoldenRecord(label, central, tuple(vertices), tuple(edges), relations, tuple(cartans), loewy)


def _single_layers(nums):
    return {v: ((v,),) for v in nums}


def i2_record(m: int) -> GoldenRecord:
    if m % 2 == 0:
        vertices = [(1, "∅", ""), (2, "A1'", "1"), (3, "A1''", "2"), (4, f"I2({m})", "12")]
        cartans = (
            ((1, 4), ((1, 0), (0, 1))),
            ((2, 3), ((1, 0), (0, 1))),
        )
        return _rec(f"I2({m})", True, vertices, (), {}, cartans, _single_layers([1, 2, 3, 4]))
    vertices = [(1, "∅", ""), (2, "A1", "1"), (3, f"I2({m})", "12")]
    cartans = (((1, 2, 3), ((1, 0, 0), (0, 1, 0), (0, 1, 1))),)
    loewy = {1: ((1,),), 2: ((2,),), 3: ((3,), (2,))}
    return _rec(f"I2({m})", False, vertices, ((2, 3),), {}, cartans, loewy)


H3 = _rec(
    "H3",
    True,
    [
        (1, "∅", ""),
        (2, "A1", "1"),
        (3, "A11", "13"),
        (4, "A2", "23"),
        (5, "H2", "12"),
        (6, "H3", "123"),
    ],
    [(2, 6), (2, 6)],
    {},
    (
        ((1, 3, 4, 5), ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))),
        ((2, 6), ((1, 0), (2, 1))),
    ),
    {**_single_layers([1, 2, 3, 4, 5]), 6: ((6,), (2, 2))},
)

H4 = _rec(
    "H4",
    True,
    [
        (1, "∅", ""),
        (2, "A1", "1"),
        (3, "A11", "13"),
        (4, "A2", "23"),
        (5, "H2", "12"),
        (6, "A21", "134"),
        (7, "H21", "124"),
        (8, "A3", "234"),
        (9, "H3", "123"),
        (10, "H4", "1234"),
    ],
    [(3, 10), (3, 10), (4, 10), (2, 8), (2, 9), (2, 9)],
    {},
    (
        (
            (1, 3, 4, 5, 10),
            (
                (1, 0, 0, 0, 0),
                (0, 1, 0, 0, 0),
                (0, 0, 1, 0, 0),
                (0, 0, 0, 1, 0),
                (0, 2, 1, 0, 1),
            ),
        ),
        (
            (2, 6, 7, 8, 9),
            (
                (1, 0, 0, 0, 0),
                (0, 1, 0, 0, 0),
                (0, 0, 1, 0, 0),
                (1, 0, 0, 1, 0),
                (2, 0, 0, 0, 1),
            ),
        ),
    ),
    {
        **_single_layers([1, 2, 3, 4, 5, 6, 7]),
        8: ((8,), (2,)),
        9: ((9,), (2, 2)),
        10: ((10,), (3, 3, 4)),
    },
)

F4 = _rec(
    "F4",
    True,
    [
        (1, "∅", ""),
        (2, "A1'", "1"),
        (3, "A1''", "3"),
        (4, "A11", "13"),
        (5, "A2'", "12"),
        (6, "A2''", "34"),
        (7, "B2", "23"),
        (8, "A21'", "124"),
        (9, "A21''", "134"),
        (10, "B3'", "123"),
        (11, "B3''", "234"),
        (12, "F4", "1234"),
    ],
    [(4, 12), (4, 12), (2, 10), (3, 11)],
    {},
    (
        (
            (1, 4, 5, 6, 7, 12),
            (
                (1, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0),
                (0, 0, 0, 1, 0, 0),
                (0, 0, 0, 0, 1, 0),
                (0, 2, 0, 0, 0, 1),
            ),
        ),
        (
            (2, 3, 8, 9, 10, 11),
            (
                (1, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0),
                (0, 0, 0, 1, 0, 0),
                (1, 0, 0, 0, 1, 0),
                (0, 1, 0, 0, 0, 1),
            ),
        ),
    ),
    {
        **_single_layers([1, 2, 3, 4, 5, 6, 7, 8, 9]),
        10: ((10,), (2,)),
        11: ((11,), (3,)),
        12: ((12,), (4, 4)),
    },
)

E6 = _rec(
    "E6",
    False,
    [
        (1, "∅", ""),
        (2, "A1", "1"),
        (3, "A11", "12"),
        (4, "A2", "13"),
        (5, "A111", "146"),
        (6, "A21", "124"),
        (7, "A3", "134"),
        (8, "A211", "1246"),
        (9, "A22", "1356"),
        (10, "A31", "1245"),
        (11, "A4", "1345"),
        (12, "D4", "2345"),
        (13, "A221", "12356"),
        (14, "A41", "12346"),
        (15, "A5", "13456"),
        (16, "D5", "12345"),
        (17, "E6", "123456"),
    ],
    [
        (2, 7), (3, 6), (4, 11), (5, 13), (5, 14), (5, 16), (6, 9), (6, 10), (6, 11),
        (7, 11), (8, 13), (8, 14), (8, 17), (10, 14), (10, 15), (11, 15), (11, 16),
        (14, 17), (16, 17),
    ],
    {("all", 2): 1, ("all", 3): 1},
    (
        (
            tuple(range(1, 18)),
            (
                (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0),
                (0, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0),
                (0, 1, 1, 1, 0, 2, 1, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0),
                (0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0),
                (0, 1, 2, 1, 1, 2, 1, 2, 0, 1, 1, 0, 0, 1, 0, 1, 1),
            ),
        ),
    ),
    {
        **_single_layers([1, 2, 3, 4, 5, 8, 12]),
        6: ((6,), (3,)),
        7: ((7,), (2,)),
        9: ((9,), (6,), (3,)),
        10: ((10,), (6,), (3,)),
        11: ((11,), (4, 6, 7), (2, 3)),
        13: ((13,), (5, 8)),
        14: ((14,), (5, 8, 10), (6,), (3,)),
        15: ((15,), (10, 11), (4, 6, 6, 7), (2, 3)),
        16: ((16,), (5, 11), (4, 6, 7), (2, 3)),
        17: ((17,), (8, 14, 16), (5, 8, 10, 11), (4, 6, 6, 7), (2, 3, 3)),
    },
)

E7 = _rec(
    "E7",
    True,
    [
        (1, "∅", ""),
        (2, "A1", "1"),
        (3, "A11", "12"),
        (4, "A2", "24"),
        (5, "A111'", "257"),
        (6, "A111''", "127"),
        (7, "A21", "123"),
        (8, "A3", "234"),
        (9, "A1111", "1257"),
        (10, "A211", "1235"),
        (11, "A22", "2467"),
        (12, "A31'", "2457"),
        (13, "A31''", "1245"),
        (14, "A4", "1345"),
        (15, "D4", "2345"),
        (16, "A2111", "12357"),
        (17, "A221", "12367"),
        (18, "A311", "23567"),
        (19, "A32", "13467"),
        (20, "A41", "12347"),
        (21, "D41", "23457"),
        (22, "A5'", "24567"),
        (23, "A5''", "34567"),
        (24, "D5", "23456"),
        (25, "A321", "123567"),
        (26, "A42", "123467"),
        (27, "A51", "124567"),
        (28, "D51", "123457"),
        (29, "A6", "134567"),
        (30, "D6", "234567"),
        (31, "E6", "123456"),
        (32, "E7", "1234567"),
    ],
    [
        # even part, 33 arrows
        (3, 11), (3, 12), (3, 13), (3, 14), (4, 14), (9, 28),
        (10, 25), (10, 25), (10, 26), (10, 26), (10, 27), (10, 27), (10, 28),
        (10, 29), (10, 30), (10, 31), (10, 31),
        (11, 26), (11, 29), (11, 30), (12, 30),
        (13, 26), (13, 27), (13, 28), (13, 29), (13, 29), (13, 30), (13, 30), (13, 31),
        (14, 29), (14, 30), (14, 30), (14, 31),
        # odd part, 29 arrows
        (2, 8), (6, 17), (6, 18), (6, 20), (6, 24),
        (7, 19), (7, 19), (7, 20), (7, 21), (7, 22), (7, 22), (7, 23), (7, 23), (7, 24),
        (8, 22), (8, 23), (8, 24),
        (17, 32), (17, 32), (18, 32), (18, 32), (19, 32), (19, 32),
        (20, 32), (20, 32), (20, 32), (20, 32), (23, 32), (24, 32),
    ],
    {("even", 2): 6, ("odd", 2): 7},
    (
        (
            (1, 3, 4, 9, 10, 11, 12, 13, 14, 15, 25, 26, 27, 28, 29, 30, 31),
            (
                (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 2, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0),
                (0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0),
                (0, 2, 1, 0, 1, 1, 0, 2, 1, 0, 0, 0, 0, 0, 1, 0, 0),
                (0, 3, 2, 0, 1, 1, 1, 2, 2, 0, 0, 0, 0, 0, 0, 1, 0),
                (0, 2, 1, 0, 2, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
            ),
        ),
        (
            (2, 5, 6, 7, 8, 16, 17, 18, 19, 20, 21, 22, 23, 24, 32),
            (
                (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
                (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
                (1, 0, 0, 2, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
                (1, 0, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
                (1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
                (2, 0, 5, 8, 2, 0, 2, 2, 2, 4, 0, 0, 1, 1, 1),
            ),
        ),
    ),
    {
        **_single_layers([1, 2, 3, 4, 5, 6, 7, 9, 10, 15, 16]),
        8: ((8,), (2,)),
        11: ((11,), (3,)),
        12: ((12,), (3,)),
        13: ((13,), (3,)),
        14: ((14,), (3, 4)),
        17: ((17,), (6,)),
        18: ((18,), (6,)),
        19: ((19,), (7, 7)),
        20: ((20,), (6, 7)),
        21: ((21,), (7,)),
        22: ((22,), (7, 7, 8), (2,)),
        23: ((23,), (7, 7, 8), (2,)),
        24: ((24,), (6, 7, 8), (2,)),
        25: ((25,), (10, 10)),
        26: ((26,), (10, 10, 11, 13), (3,)),
        27: ((27,), (10, 10, 13), (3,)),
        28: ((28,), (9, 10, 13), (3,)),
        29: ((29,), (10, 11, 13, 13, 14), (3, 3, 4)),
        30: ((30,), (10, 11, 12, 13, 13, 14, 14), (3, 3, 3, 4, 4)),
        31: ((31,), (10, 10, 13, 14), (3, 3, 4)),
        32: (
            (32,),
            (17, 17, 18, 18, 19, 19, 20, 20, 20, 20, 23, 24),
            (6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8),
            (2, 2),
        ),
    },
)

E8 = _rec(
    "E8",
    True,
    [
        (1, "∅", ""),
        (2, "A1", "1"),
        (3, "A11", "12"),
        (4, "A2", "13"),
        (5, "A111", "147"),
        (6, "A21", "124"),
        (7, "A3", "245"),
        (8, "A1111", "1268"),
        (9, "A211", "2378"),
        (10, "A22", "1367"),
        (11, "A31", "1348"),
        (12, "A4", "4567"),
        (13, "D4", "2345"),
        (14, "A2111", "12568"),
        (15, "A221", "12367"),
        (16, "A311", "12458"),
        (17, "A32", "24578"),
        (18, "A41", "24568"),
        (19, "D41", "23458"),
        (20, "A5", "13456"),
        (21, "D5", "23456"),
        (22, "A2211", "123578"),
        (23, "A321", "123678"),
        (24, "A411", "125678"),
        (25, "A33", "134678"),
        (26, "A42", "123467"),
        (27, "D42", "234578"),
        (28, "A51", "124567"),
        (29, "D51", "123458"),
        (30, "A6", "134567"),
        (31, "D6", "234567"),
        (32, "E6", "123456"),
        (33, "A421", "1235678"),
        (34, "A43", "1234678"),
        (35, "A61", "1245678"),
        (36, "D52", "1234578"),
        (37, "A7", "1345678"),
        (38, "E61", "1234568"),
        (39, "D7", "2345678"),
        (40, "E7", "1234567"),
        (41, "E8", "12345678"),
    ],
    [
        # even part, 49 arrows
        (3, 11), (3, 12), (4, 12), (8, 24), (8, 29),
        (9, 23), (9, 23), (9, 24), (9, 26), (9, 26), (9, 28), (9, 28), (9, 29),
        (9, 30), (9, 31), (9, 32), (9, 32),
        (10, 26), (10, 30), (10, 41),
        (11, 25), (11, 26), (11, 28), (11, 29), (11, 30), (11, 30), (11, 31), (11, 31), (11, 32),
        (12, 30), (12, 31), (12, 32),
        (22, 41), (23, 41), (23, 41), (23, 41), (24, 41), (24, 41), (24, 41), (25, 41),
        (26, 41), (26, 41), (26, 41), (28, 41), (28, 41), (29, 41), (29, 41), (30, 41), (30, 41),
        # odd part, 60 arrows
        (2, 7), (5, 15), (5, 16), (5, 18), (5, 21),
        (6, 17), (6, 18), (6, 20), (6, 20), (6, 21), (7, 20), (7, 21),
        (14, 33), (14, 33), (14, 35), (14, 36), (14, 38), (14, 38), (14, 39),
        (15, 33), (15, 34), (15, 35), (15, 36), (15, 37), (15, 40), (15, 40),
        (16, 33), (16, 34), (16, 35), (16, 35), (16, 37), (16, 38), (16, 39), (16, 40), (16, 40),
        (17, 34), (17, 34), (17, 36), (17, 37), (17, 37), (17, 39), (17, 39), (17, 40), (17, 40),
        (18, 34), (18, 35), (18, 36), (18, 37), (18, 37), (18, 38), (18, 39),
        (18, 40), (18, 40), (18, 40), (18, 40),
        (19, 39), (20, 37), (20, 39), (20, 40), (21, 40),
    ],
    {("even", 2): 14, ("even", 3): 2, ("odd", 2): 17},
    (
        (
            (1, 3, 4, 8, 9, 10, 11, 12, 13, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 41),
            (
                (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 2, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
                (0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
                (0, 2, 1, 0, 1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
                (0, 2, 1, 0, 1, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
                (0, 2, 1, 0, 2, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
                (0, 8, 2, 4, 15, 5, 10, 2, 0, 1, 3, 3, 1, 3, 0, 2, 2, 2, 0, 0, 1),
            ),
        ),
        (
            (2, 5, 6, 7, 14, 15, 16, 17, 18, 19, 20, 21, 33, 34, 35, 36, 37, 38, 39, 40),
            (
                (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (1, 0, 2, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
                (1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 2, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
                (0, 1, 2, 0, 0, 1, 1, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
                (0, 2, 1, 0, 1, 1, 2, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
                (0, 1, 2, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0),
                (1, 2, 4, 1, 0, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0),
                (0, 2, 1, 0, 2, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0),
                (1, 2, 4, 1, 1, 0, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0),
                (2, 5, 8, 2, 0, 2, 2, 2, 4, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
            ),
        ),
    ),
    {
        **_single_layers([1, 2, 3, 4, 5, 6, 8, 9, 10, 13, 14, 19, 22, 27]),
        7: ((7,), (2,)),
        11: ((11,), (3,)),
        12: ((12,), (3, 4)),
        15: ((15,), (5,)),
        16: ((16,), (5,)),
        17: ((17,), (6,)),
        18: ((18,), (5, 6)),
        20: ((20,), (6, 6, 7), (2,)),
        21: ((21,), (5, 6, 7), (2,)),
        23: ((23,), (9, 9)),
        24: ((24,), (8, 9)),
        25: ((25,), (11,), (3,)),
        26: ((26,), (9, 9, 10, 11), (3,)),
        28: ((28,), (9, 9, 11), (3,)),
        29: ((29,), (8, 9, 11), (3,)),
        30: ((30,), (9, 10, 11, 11, 12), (3, 3, 4)),
        31: ((31,), (9, 11, 11, 12), (3, 3, 4)),
        32: ((32,), (9, 9, 11, 12), (3, 3, 4)),
        33: ((33,), (14, 14, 15, 16), (5,)),
        34: ((34,), (15, 16, 17, 17, 18), (5, 6, 6)),
        35: ((35,), (14, 15, 16, 16, 18), (5, 5, 6)),
        36: ((36,), (14, 15, 17, 18), (5, 6, 6)),
        37: ((37,), (15, 16, 17, 17, 18, 18, 20), (5, 5, 6, 6, 6, 6, 7), (2,)),
        38: ((38,), (14, 14, 16, 18), (5, 5, 6)),
        39: ((39,), (14, 16, 17, 17, 18, 19, 20), (5, 5, 6, 6, 6, 6, 7), (2,)),
        40: (
            (40,),
            (15, 15, 16, 16, 17, 17, 18, 18, 18, 18, 20, 21),
            (5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 7, 7),
            (2, 2),
        ),
        41: (
            (41,),
            (10, 22, 23, 23, 23, 24, 24, 24, 25, 26, 26, 26, 28, 28, 29, 29, 30, 30),
            (8, 8, 8, 8) + (9,) * 15 + (10, 10, 10, 10) + (11,) * 10 + (12, 12),
            (3,) * 8 + (4, 4),
        ),
    },
)

_FIXED = {"H3": H3, "H4": H4, "F4": F4, "E6": E6, "E7": E7, "E8": E8}

# the types the self-check command covers by default, and with --long
CHECK_LABELS = [f"I2({m})" for m in range(3, 13)] + ["H3", "H4", "F4", "E6", "E7"]
CHECK_LABELS_LONG = CHECK_LABELS + ["E8"]

# classification facts at small rank: path algebra and commutativity
PATH_ALGEBRA_TRUE = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "B5", "D4", "D5", "F4", "H3", "H4"]
PATH_ALGEBRA_FALSE = ["A5", "B6", "D6", "E6", "E7", "E8"]
COMMUTATIVE_TRUE = ["A1", "B2"]
COMMUTATIVE_FALSE = ["A2", "A3", "B3", "D4", "H3", "H4", "F4", "E6"]


def golden_record(label: str) -> GoldenRecord:
    if label.startswith("I2(") and label.endswith(")"):
        return i2_record(int(label[3:-1]))
    rec = _FIXED.get(label)
    if rec is None:
        raise KeyError(f"no reference tables for {label}")
    return rec


def _strip_primes(name: str) -> str:
    return name.rstrip("'")


def compare(record: GoldenRecord, pres: QuiverPresentation) -> list[str]:
    """Mismatch descriptions between a reference record and a presentation."""
    diffs: list[str] = []
    datum = build_datum(record.label)
    if len(record.vertices) != len(pres.vertices):
        diffs.append(f"vertex count {len(pres.vertices)} != {len(record.vertices)}")
        return diffs
    # resolve the published vertex numbers through representative subsets
    to_mine: dict[int, int] = {}
    for num, name, rep in record.vertices:
        mask = datum.mask_of(int(ch) for ch in rep)
        mine = datum.class_of(mask) + 1
        to_mine[num] = mine
        mine_name = _strip_primes(pres.vertices[mine - 1].name)
        if mine_name != _strip_primes(name):
            diffs.append(f"vertex [{rep or 'empty'}]: type {mine_name} != {name}")
    if len(set(to_mine.values())) != len(to_mine):
        diffs.append("representative subsets do not separate the classes")
        return diffs
    # arrows as a multiset of (source, target) pairs
    from collections import Counter

    want = Counter((to_mine[a], to_mine[b]) for a, b in record.edges)
    have = Counter((e.src, e.dst) for e in pres.edges)
    if want != have:
        missing = want - have
        extra = have - want
        if missing:
            diffs.append(f"missing arrows: {sorted(missing.elements())}")
        if extra:
            diffs.append(f"unexpected arrows: {sorted(extra.elements())}")
    # relation profile
    have_rel: dict = {}
    for r in pres.relations:
        if record.central:
            part = "even" if pres.vertices[r.src - 1].size % 2 == 0 else "odd"
        else:
            part = "all"
        key = (part, r.degree)
        have_rel[key] = have_rel.get(key, 0) + 1
    if have_rel != dict(record.relations):
        diffs.append(f"relation profile {have_rel} != {dict(record.relations)}")
    # Cartan blocks, and vanishing outside them for central types
    for nums, rows in record.cartans:
        for i, ni in enumerate(nums):
            for j, nj in enumerate(nums):
                mine = pres.cartan[to_mine[ni] - 1][to_mine[nj] - 1]
                if mine != rows[i][j]:
                    diffs.append(
                        f"Cartan[{ni},{nj}] = {mine} != {rows[i][j]}"
                    )
    if record.central:
        for i, vi in enumerate(pres.vertices):
            for j, vj in enumerate(pres.vertices):
                if (vi.size - vj.size) % 2 and pres.cartan[i][j]:
                    diffs.append(f"nonzero Cartan entry across parity at ({i + 1},{j + 1})")
    # radical layers of every projective
    for num, layers in record.loewy.items():
        mine = pres.loewy[to_mine[num]]
        want_layers = tuple(
            tuple(sorted(to_mine[v] for v in layer)) for layer in layers
        )
        have_layers = tuple(
            tuple(sorted(v for v, mult in layer for _ in range(mult))) for layer in mine
        )
        if want_layers != have_layers:
            diffs.append(
                f"projective at vertex [{record.vertices[num - 1][2] or 'empty'}]: "
                f"layers {have_layers} != {want_layers}"
            )
    return diffs
