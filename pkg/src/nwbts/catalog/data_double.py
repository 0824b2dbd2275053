"""Difference triples and seeds for the order-doubling build."""
DIFF_TRIPLES = {
    25: {
        (0, 0): ((1, 2, -3), (5, 6, -11), (4, 9, 12), (7, 8, 10)),
        (0, 1): ((1, 5, -6), (2, 8, -10), (3, 9, -12), (4, 7, -11)),
        (0, 2): ((1, 8, -9), (2, 3, -5), (4, 10, 11), (6, 7, 12)),
        (1, 0): ((4, 8, -12), (3, 6, -9), (1, 10, -11), (2, 5, -7)),
        (1, 1): ((1, 4, -5), (2, 7, -9), (3, 10, 12), (6, 8, 11)),
        (1, 2): ((1, 11, -12), (4, 5, -9), (2, 6, -8), (3, 7, -10)),
    },
    37: {
        (0, 0): ((2, 8, -10), (7, 11, -18), (1, 12, -13), (3, 14, -17), (4, 5, -9), (6, 15, 16)),
        (0, 1): ((1, 7, -8), (2, 9, -11), (3, 13, -16), (4, 10, -14), (5, 15, 17), (6, 12, -18)),
        (0, 2): ((1, 8, -9), (2, 13, -15), (3, 7, -10), (4, 12, -16), (5, 14, 18), (6, 11, -17)),
        (1, 0): ((4, 13, -17), (1, 6, -7), (2, 14, -16), (3, 9, -12), (5, 10, -15), (8, 11, 18)),
        (1, 1): ((1, 2, -3), (4, 15, 18), (5, 6, -11), (7, 9, -16), (8, 12, 17), (10, 13, 14)),
        (1, 2): ((1, 3, -4), (2, 7, -9), (5, 12, -17), (6, 13, 18), (8, 14, 15), (10, 11, 16)),
        (2, 0): ((3, 6, -9), (1, 10, -11), (2, 12, -14), (4, 16, 17), (5, 13, -18), (7, 8, -15)),
        (2, 1): ((1, 4, -5), (2, 15, -17), (3, 11, -14), (6, 7, -13), (8, 10, -18), (9, 12, 16)),
        (2, 2): ((1, 5, -6), (2, 17, 18), (3, 8, -11), (4, 9, -13), (7, 14, 16), (10, 12, 15)),
    },
}
DOUBLE_SEEDS = {
    25: {
        'E': (0, 6, 20),
        'C': (
            (1, 7, 21), (2, 8, 22), (3, 4, 6), (5, 19, 24), (9, 14, 20), (10, 11, 13),
            (12, 17, 23), (15, 16, 18),
        ),
    },
    37: {
        'E': (0, 11, 30),
        'C': (
            (1, 3, 11), (2, 13, 32), (4, 23, 30), (5, 24, 31), (6, 17, 36), (7, 14, 25),
            (8, 27, 34), (9, 28, 35), (10, 12, 20), (15, 22, 33), (16, 18, 26), (19, 21, 29),
        ),
    },
}
