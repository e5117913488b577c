"""Reference data backing the dimension-4 and dimension-5 family
constructions, the fixture generator matrices, the classification count
tables, and the known largest-minimum-weight ledger.

Everything here is literal data; unit tests recompute each entry where
an independent path exists (family rows against exhaustive enumeration,
determinant polynomials against two evaluation schemes, fixture strings
against their stated parameters).
"""

from __future__ import annotations

# Column types of the block construction, one per block, as ints with
# bit i = entry in row i.  Block j of the non-identity part repeats
# column DIMx_COLUMN_TYPES[j] a_j times.
DIM4_COLUMN_TYPES = (15, 7, 11, 13, 14, 3, 5, 9, 6, 10, 12, 1, 2, 4, 8)

DIM5_COLUMN_TYPES = (31, 15, 23, 7, 27, 11, 19, 3, 29, 13, 21, 5, 25, 9, 17, 1,
                     30, 14, 22, 6, 26, 10, 18, 2, 28, 12, 20, 4, 24, 8, 16)

# Family rows, keyed by the length residue s.  Entry: (offsets, weight
# offset, t_min) where a_j(t) = t + offsets[j], the built code is
# [15t+s, 4, 8t + weight_offset] (resp. 16t for k = 5), and t_min is
# the published least admissible t.
DIM4_FAMILY: dict[int, tuple[tuple[int, ...], int, int]] = {
    2:  ((0, 0, 0, 0, 0, 0, 0, -1, 1, 1, -1, 0, -1, -1, 0), 0, 1),
    3:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0), 0, 1),
    4:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0), 1, 0),
    5:  ((0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, -1, -1), 2, 1),
    6:  ((0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0), 2, 0),
    9:  ((0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, -1), 4, 1),
    10: ((0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 1, 1, 0, 0, -1), 4, 1),
    13: ((0, 0, 0, 1, 1, 0, 1, 2, 2, 1, 1, 1, 1, -1, -1), 6, 1),
    1:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, -1, 0), -1, 1),
    7:  ((0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1), 2, 0),
    8:  ((0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0), 3, 0),
    11: ((0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0, -1), 4, 1),
    12: ((0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 1, 1, 1, -1, -1), 5, 1),
    14: ((0, 0, 0, 0, 1, 0, 1, 2, 2, 2, 1, 2, 0, 0, -1), 6, 1),
    0:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, -1, -1), -2, 1),
}

DIM5_FAMILY: dict[int, tuple[tuple[int, ...], int, int]] = {
    3:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
         -1, 0, 0, 1, 1, -1, -1, -1, 0), 0, 1),
    4:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, -1, 0, 0), 0, 1),
    5:  ((0,) * 31, 1, 0),
    7:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1,
         0, 0, 0, 1, 1, 0, 0, -1, -1), 2, 1),
    11: ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, -1, 0, 0, 1, 1, 1, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 4, 1),
    19: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0,
         0, 0, 1, 0, -1, -1, -1, 0, -1), 8, 1),
    20: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1, 1, 1, 0, 1, 0,
         0, -1, 1, 0, 0, -1, 0, -1, -1), 9, 1),
    22: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0,
         0, -1, 1, 0, 0, -1, 0, -1, -1), 10, 1),
    26: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
         0, -1, 1, 0, 1, -1, 1, -1, -1), 12, 1),
    1:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0,
         -1, -1, 0, 1, 1, -1, -1, -1, 0), -1, 1),
    2:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, -1, 0, -1, -1, 0), -1, 1),
    6:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 1, 0, 0), 1, 0),
    8:  ((0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 2, 1),
    9:  ((0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 3, 0),
    10: ((0, 0, 0, 0, 0, 0, 1, 1, 0, 2, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 3, 1),
    12: ((0, 0, 0, 0, 0, 1, 1, 1, 0, 2, 0, 1, 2, -1, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 4, 1),
    13: ((0, 0, 0, 1, 0, 1, 2, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 5, 0),
    14: ((0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 5, 0),
    15: ((0, 0, 0, 2, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 6, 0),
    17: ((0, 0, 0, 2, 1, 1, 1, 1, 1, 1, 2, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 7, 0),
    18: ((0, 0, 0, 2, 0, 2, 2, 0, 1, 1, 1, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, 0, 0, 0, 0, 0, 0), 7, 0),
    21: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0,
         1, 0, 0, 1, 0, 0, 0, 0, 0), 9, 0),
    23: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1,
         1, 0, 0, 1, 1, 0, 0, 0, 0), 10, 0),
    24: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0,
         1, 0, 1, 1, 0, 0, 0, 0, 0), 11, 0),
    25: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0,
         1, 1, 1, 1, 0, 1, 0, 0, 0), 11, 0),
    27: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1,
         1, 1, 1, 1, 1, 1, 0, 0, 0), 12, 0),
    28: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0, 1, 0,
         1, 1, 1, 1, 0, 1, 1, 0, 0), 13, 0),
    29: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1,
         1, 1, 1, 1, 1, 1, 1, 0, 0), 13, 0),
    30: ((1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1,
         1, 0, 1, 1, 1, 1, 0, 0, 1), 14, 0),
    0:  ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
         0, 0, 0, -1, -1, 0, -1, -1, -1), -2, 1),
    16: ((0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 2, 0, 1, 0, 1, 1, 1, 1,
         0, 0, 0, 0, 1, 0, 0, 0, 0), 6, 0),
}

# Weight enumerator rows: term list ((multiplicity, exponent offset), ...)
# with exponent 8t + offset (dimension 4) or 16t + offset (dimension 5);
# the constant term 1 is implicit.
DIM4_WE: dict[int, tuple[tuple[int, int], ...]] = {
    2:  ((8, 0), (6, 2), (1, 4)),
    3:  ((2, 0), (6, 1), (4, 2), (2, 3), (1, 4)),
    4:  ((4, 1), (6, 2), (4, 3), (1, 4)),
    5:  ((10, 2), (5, 4)),
    6:  ((6, 2), (9, 4)),
    9:  ((9, 4), (6, 6)),
    10: ((7, 4), (6, 6), (2, 8)),
    13: ((10, 6), (4, 8), (1, 12)),
    1:  ((3, -1), (5, 0), (4, 1), (2, 2), (1, 3)),
    7:  ((4, 2), (2, 3), (3, 4), (6, 5)),
    8:  ((4, 3), (5, 4), (4, 5), (2, 6)),
    11: ((6, 4), (5, 6), (3, 8), (1, 10)),
    12: ((6, 5), (4, 6), (1, 7), (3, 8), (1, 11)),
    14: ((8, 6), (4, 8), (2, 10), (1, 12)),
    0:  ((1, -2), (4, -1), (5, 0), (4, 1), (1, 2)),
}

DIM5_WE: dict[int, tuple[tuple[int, int], ...]] = {
    3:  ((8, 0), (9, 1), (6, 2), (6, 3), (1, 4), (1, 5)),
    4:  ((2, 0), (9, 1), (10, 2), (6, 3), (3, 4), (1, 5)),
    5:  ((5, 1), (10, 2), (10, 3), (5, 4), (1, 5)),
    7:  ((6, 2), (9, 3), (9, 4), (6, 5), (1, 7)),
    11: ((7, 4), (9, 5), (6, 6), (6, 7), (2, 8), (1, 9)),
    19: ((8, 8), (8, 9), (6, 10), (6, 11), (1, 12), (1, 13), (1, 17)),
    20: ((10, 9), (10, 10), (5, 11), (5, 12), (1, 15)),
    22: ((10, 10), (10, 11), (5, 12), (5, 13), (1, 17)),
    26: ((9, 12), (9, 13), (6, 14), (6, 15), (1, 17)),
    1:  ((9, -1), (8, 0), (6, 1), (6, 2), (1, 3), (1, 4)),
    2:  ((3, -1), (8, 0), (10, 1), (6, 2), (3, 3), (1, 4)),
    6:  ((3, 1), (6, 2), (10, 3), (9, 4), (3, 5)),
    8:  ((4, 2), (9, 3), (7, 4), (6, 5), (2, 6), (1, 7), (2, 8)),
    9:  ((6, 3), (9, 4), (9, 5), (6, 6), (1, 9)),
    10: ((6, 3), (8, 4), (5, 5), (5, 6), (4, 7), (1, 8), (1, 9), (1, 10)),
    12: ((6, 4), (8, 5), (5, 6), (5, 7), (3, 8), (2, 9), (1, 10), (1, 11)),
    13: ((8, 5), (9, 6), (5, 7), (5, 8), (2, 9), (1, 10), (1, 11)),
    14: ((4, 5), (5, 6), (9, 7), (9, 8), (2, 9), (1, 10), (1, 11)),
    15: ((8, 6), (9, 7), (4, 8), (6, 9), (2, 10), (1, 11), (1, 12)),
    17: ((9, 7), (8, 8), (4, 9), (6, 10), (1, 11), (1, 12), (2, 13)),
    18: ((6, 7), (7, 8), (6, 9), (5, 10), (3, 11), (2, 12), (1, 14), (1, 15)),
    21: ((6, 9), (6, 10), (9, 11), (9, 12), (1, 15)),
    23: ((4, 10), (9, 11), (9, 12), (6, 13), (2, 14), (1, 15)),
    24: ((9, 11), (9, 12), (6, 13), (6, 14), (1, 15)),
    25: ((7, 11), (7, 12), (6, 13), (6, 14), (3, 15), (2, 16)),
    27: ((4, 12), (9, 13), (9, 14), (6, 15), (1, 16), (1, 17), (1, 18)),
    28: ((9, 13), (9, 14), (6, 15), (5, 16), (1, 17), (1, 18)),
    29: ((5, 13), (5, 14), (10, 15), (9, 16), (1, 17), (1, 18)),
    30: ((9, 14), (9, 15), (5, 16), (6, 17), (1, 18), (1, 19)),
    0:  ((3, -2), (9, -1), (9, 0), (6, 1), (3, 2), (1, 3)),
    16: ((6, 6), (7, 7), (4, 8), (6, 9), (4, 10), (3, 11), (1, 12)),
}

# det(G G^T) as integer polynomials in t, coefficients ascending.
DIM4_DET: dict[int, tuple[int, ...]] = {
    2:  (1, -32, -96, 512, 1280),
    3:  (-1, -8, 64, 640, 1280),
    4:  (1, 32, 288, 1024, 1280),
    5:  (5, 104, 688, 1664, 1280),
    6:  (9, 144, 800, 1792, 1280),
    9:  (129, 976, 2656, 3072, 1280),
    10: (153, 1152, 3040, 3328, 1280),
    13: (493, 2744, 5424, 4480, 1280),
    1:  (1, 0, -80, 0, 1280),
    7:  (15, 216, 1056, 2048, 1280),
    8:  (45, 480, 1760, 2560, 1280),
    11: (161, 1240, 3248, 3456, 1280),
    12: (339, 2064, 4496, 4096, 1280),
    14: (597, 3208, 6064, 4736, 1280),
    0:  (1, 8, -80, -256, 1280),
}

DIM5_DET: dict[int, tuple[int, ...]] = {
    3:  (1, -48, -1280, -1024, 61440, 196608),
    4:  (-1, -32, 0, 7168, 69632, 196608),
    5:  (1, 80, 1920, 20480, 102400, 196608),
    7:  (15, 640, 9856, 66560, 192512, 196608),
    11: (301, 6704, 53888, 195584, 323584, 196608),
    19: (9697, 97904, 374656, 683008, 593920, 196608),
    20: (29875, 220400, 647040, 944128, 684032, 196608),
    22: (38125, 270000, 758400, 1054720, 724992, 196608),
    26: (91385, 541296, 1271168, 1480704, 856064, 196608),
    1:  (-1, 64, 64, -9216, 8192, 196608),
    2:  (1, 16, -320, -4096, 16384, 196608),
    6:  (3, 192, 3840, 33792, 135168, 196608),
    8:  (23, 1008, 14144, 82944, 212992, 196608),
    9:  (81, 2448, 25728, 118784, 249856, 196608),
    10: (91, 3088, 33984, 150528, 286720, 196608),
    12: (349, 9472, 73344, 240640, 356352, 196608),
    13: (803, 15792, 101568, 291840, 389120, 196608),
    14: (1167, 21808, 129536, 343040, 421888, 196608),
    15: (1797, 30496, 166464, 405504, 458752, 196608),
    17: (3575, 54080, 256256, 539648, 528384, 196608),
    18: (4555, 70368, 316928, 624640, 569344, 196608),
    21: (15015, 139264, 484544, 802816, 638976, 196608),
    23: (27811, 220560, 670912, 986112, 704512, 196608),
    24: (41999, 296032, 819264, 1114112, 745472, 196608),
    25: (41751, 298688, 832448, 1132544, 753664, 196608),
    27: (66915, 430352, 1085376, 1344512, 819200, 196608),
    28: (93971, 552592, 1290112, 1495040, 860160, 196608),
    29: (104319, 606016, 1390528, 1576960, 884736, 196608),
    30: (129085, 709760, 1552448, 1688576, 913408, 196608),
    0:  (-1, 16, 640, -4096, -36864, 196608),
    16: (2589, 35248, 179328, 424960, 471040, 196608),
}

# Fixture generator matrices in octal (non-identity part of [I_k | M],
# rows concatenated, digits = 3 bits MSB-first, a = single 0, b = single 1).
# Grouped as ((n, d), (string, ...)); none of these codes is LCD.
DIM4_GENERATORS: tuple[tuple[tuple[int, int], tuple[str, ...]], ...] = (
    ((22, 11), ("617170773600001777475345",
                "633330767460001777475345")),
    ((23, 12), ("7066743767400003777533415b",)),
    ((26, 13), ("74607433743630000077774773714a",
                "63653061761714000077771676540b")),
    ((27, 14), ("760663616177700000177775750755ba",)),
    ((30, 16), ("7074633617703754000007777766174433ab",)),
    ((30, 15), ("3746066317361730000003777767251176ab",
                "5147543306363674000003777767251176ab",
                "7436630317741714000003777751676754ba",
                "7306663617773600000003777764564745aa",
                "3615263617767700000003777764564745aa",
                "7314633617743740000003777764564745aa",
                "7707043617363614000003777764564745aa",
                "7317063617761714000003777764564745aa",
                "3615700757303746000003777764564745aa")),
    ((31, 16), ("554633154717077600000077777672511762",
                "730661730777077000000077777137753663",
                "347474036774170660000077777516767544",
                "760374630777633000000077777172511762",
                "547433154774077600000077777172511762")),
)

DIM5_GENERATORS: tuple[tuple[tuple[int, int], tuple[str, ...]], ...] = (
    ((25, 12), ("273153117315434776000007777760547b",
                "546617117315434776000007777760547b",
                "323615531466634773000007777760547b",
                "465630761547437636000007777266633a",
                "466530761547437636000007777266633a",
                "236363174077037770000007776616632b",
                "073663166617037336000007776616632b",
                "263531530747437336000007776616632b")),
    ((27, 13), ("263663176303615761714000037776375746aa",)),
    ((28, 14), ("43663307741547434377600000377773721733a",)),
    ((29, 14), ("4365154676031760775570000001777732725475",
                "1627171457614660775670000001777732725475",
                "7303615454636660775554000001777732725475",
                "7155415454770660774374000001777732725475",
                "7164314676154360774374000001777732725475",
                "4367714654754360774176000001777732725475",
                "5317606654746630774155400001777732725475",
                "4353606654636630774155400001777732725475",
                "5317606654636630774155400001777732725475")),
    ((30, 15), ("45571433147570361760776000001777747566530bb",)),
)

# Dimension-5 LCD witnesses found by search, as plain binary rows of the
# non-identity part: length -> (claimed minimum weight, rows).
DIM5_LCD_WITNESSES: dict[int, tuple[int, tuple[str, ...]]] = {
    19: (8, ("00000001111111",
             "01110011101110",
             "01011100111110",
             "10011001010101",
             "11101100100101")),
    20: (9, ("000000011111111",
             "000111101001110",
             "101011011100101",
             "110111010001001",
             "011101100111111")),
    22: (10, ("00000000111111111",
              "10111101010011010",
              "10100110011100011",
              "11001011101110010",
              "11110010110110101")),
    26: (12, ("000000000011111111111",
              "100111111011111001100",
              "011101111101101111000",
              "010010011111000101011",
              "111100001010001011110")),
}

# Classification counts around the dimension-4 nonexistence lengths.
# Keyed by (n, d); values: counts of [n,4,d], of [n-1,3,d], [n-1,3,d+1],
# and of [n-2,2,d+j] for j = 0..3.  Blank table cells are 0.
DIM4_COUNTS: dict[tuple[int, int], dict[str, tuple[int, ...]]] = {
    (22, 11): {"k4": (2,), "k3": (6, 1), "k2": (10, 6, 1, 0)},
    (23, 12): {"k4": (1,), "k3": (4, 0), "k2": (10, 3, 1, 0)},
    (26, 13): {"k4": (2,), "k3": (13, 1), "k2": (15, 10, 3, 1)},
    (27, 14): {"k4": (1,), "k3": (7, 0), "k2": (15, 6, 3, 0)},
    (30, 16): {"k4": (1,), "k3": (4, 0), "k2": (15, 6, 3, 0)},
    (30, 15): {"k4": (9,), "k3": (27, 4), "k2": (21, 15, 6, 3)},
    (31, 16): {"k4": (5,), "k3": (16, 0), "k2": (21, 10, 6, 1)},
}

# Same around the dimension-5 nonexistence lengths: counts of [n,5,d],
# [n-1,4,d], [n-2,3,d], [n-2,3,d+1], and [n-3,2,d+j] for j = 0..3.
DIM5_COUNTS: dict[tuple[int, int], dict[str, tuple[int, ...]]] = {
    (25, 12): {"k5": (8,), "k4": (11,), "k3": (16, 0), "k2": (15, 6, 3, 0)},
    (27, 13): {"k5": (1,), "k4": (2,), "k3": (13, 1), "k2": (15, 10, 3, 1)},
    (28, 14): {"k5": (1,), "k4": (1,), "k3": (7, 0), "k2": (15, 6, 3, 0)},
    (29, 14): {"k5": (9,), "k4": (13,), "k3": (28, 1), "k2": (21, 10, 6, 1)},
    (30, 15): {"k5": (1,), "k4": (1,), "k3": (6, 1), "k2": (15, 10, 3, 1)},
}

# Parameters (n, k, d) for which no LCD [n, k, d] code exists although
# [n, k, d] codes do; established by full classification.
NONEXISTENT_LCD: frozenset[tuple[int, int, int]] = frozenset({
    (22, 4, 11), (23, 4, 12), (26, 4, 13), (27, 4, 14),
    (30, 4, 16), (30, 4, 15), (31, 4, 16),
    (25, 5, 12), (27, 5, 13), (28, 5, 14), (29, 5, 14), (30, 5, 15),
})

# Known largest minimum weight of an LCD [n, k] code, 17 <= n <= 24,
# 4 <= k <= n-5 (smaller and larger k follow closed forms).
KNOWN_LCD_D: dict[tuple[int, int], int] = {
    (17, 4): 8, (17, 5): 7, (17, 6): 6, (17, 7): 6, (17, 8): 6, (17, 9): 5,
    (17, 10): 4, (17, 11): 3, (17, 12): 3,
    (18, 4): 8, (18, 5): 7, (18, 6): 7, (18, 7): 6, (18, 8): 6, (18, 9): 5,
    (18, 10): 4, (18, 11): 4, (18, 12): 4, (18, 13): 3,
    (19, 4): 9, (19, 5): 8, (19, 6): 8, (19, 7): 7, (19, 8): 6, (19, 9): 6,
    (19, 10): 5, (19, 11): 4, (19, 12): 4, (19, 13): 3, (19, 14): 3,
    (20, 4): 10, (20, 5): 9, (20, 6): 8, (20, 7): 7, (20, 8): 6, (20, 9): 6,
    (20, 10): 6, (20, 11): 5, (20, 12): 4, (20, 13): 4, (20, 14): 4, (20, 15): 3,
    (21, 4): 10, (21, 5): 9, (21, 6): 8, (21, 7): 8, (21, 8): 7, (21, 9): 6,
    (21, 10): 6, (21, 11): 5, (21, 12): 5, (21, 13): 4, (21, 14): 4, (21, 15): 3,
    (21, 16): 3,
    (22, 4): 10, (22, 5): 10, (22, 6): 9, (22, 7): 8, (22, 8): 8, (22, 9): 7,
    (22, 10): 6, (22, 11): 6, (22, 12): 6, (22, 13): 5, (22, 14): 4, (22, 15): 4,
    (22, 16): 4, (22, 17): 3,
    (23, 4): 11, (23, 5): 10, (23, 6): 9, (23, 7): 9, (23, 8): 8, (23, 9): 7,
    (23, 10): 7, (23, 11): 6, (23, 12): 6, (23, 13): 5, (23, 14): 4, (23, 15): 4,
    (23, 16): 4, (23, 17): 3, (23, 18): 3,
    (24, 4): 12, (24, 5): 11, (24, 6): 10, (24, 7): 9, (24, 8): 8, (24, 9): 8,
    (24, 10): 8, (24, 11): 7, (24, 12): 6, (24, 13): 6, (24, 14): 5, (24, 15): 4,
    (24, 16): 4, (24, 17): 4, (24, 18): 4, (24, 19): 3,
}

# Residues giving exact closed forms for the largest LCD minimum weight.
DIM4_EXACT_RESIDUES_0 = frozenset({5, 9, 13})       # floor(8n/15)
DIM4_EXACT_RESIDUES_1 = frozenset({2, 3, 4, 6, 10})  # floor(8n/15) - 1
DIM5_EXACT_RESIDUES_1 = frozenset({3, 5, 7, 11, 19, 20, 22, 26})  # -1
DIM5_EXACT_RESIDUES_2 = frozenset({4})                             # -2

# Residue classes of the unrestricted Griesmer case formulas (derived
# from the bound itself; the remainder class gets -2, which for k = 5
# leaves exactly residue 4).
DIM4_BOUND_RESIDUES_0 = frozenset({0, 1, 5, 7, 8, 9, 11, 12, 13, 14})
DIM5_BOUND_RESIDUES_0 = frozenset({0, 1, 9, 13, 15, 16, 17, 21, 23, 24, 25,
                                   27, 28, 29, 30})
DIM5_BOUND_RESIDUES_1 = frozenset({2, 3, 5, 6, 7, 8, 10, 11, 12, 14, 18, 19,
                                   20, 22, 26})
