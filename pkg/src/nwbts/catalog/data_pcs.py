"""Base blocks for the partitioned candelabra catalog."""
PICS433 = {
    'transverse_lines': (
        (
            ((0, 0, 0), (0, 0, 1), (0, 0, 2)), ((0, 0, 0), (0, 1, 1), (1, 0, 2)),
            ((0, 0, 0), (1, 0, 1), (1, 1, 2)), ((0, 0, 0), (1, 1, 1), (0, 1, 2)),
        ),
        (
            ((0, 0, 0), (0, 0, 1), (0, 1, 2)), ((0, 0, 0), (0, 1, 1), (1, 1, 2)),
            ((0, 0, 0), (1, 0, 1), (1, 0, 2)), ((0, 0, 0), (1, 1, 1), (0, 0, 2)),
        ),
    ),
    's2_marked': (
        ((0, 0, 0), (0, 1, 0), (1, 0, 1)), ((0, 0, 0), (0, 1, 0), (0, 1, 2)),
        ((0, 0, 0), (0, 1, 1), (1, 0, 0)), ((0, 0, 0), (1, 1, 0), (1, 1, 1)),
        ((0, 0, 0), (0, 0, 2), (1, 1, 2)), ((0, 0, 0), (0, 0, 1), (1, 0, 2)),
        ((0, 0, 2), (0, 1, 0), (1, 1, 1)), ((0, 1, 0), (1, 0, 0), (1, 0, 2)),
        ((0, 0, 1), (0, 1, 0), (0, 1, 1)), ((0, 0, 1), (0, 1, 1), (1, 1, 2)),
        ((0, 1, 0), (1, 1, 0), (1, 1, 2)), ((0, 0, 1), (1, 0, 0), (1, 0, 1)),
        ((1, 0, 0), (1, 1, 1), (1, 1, 2)), ((0, 0, 2), (0, 1, 2), (1, 0, 0)),
        ((0, 0, 2), (0, 1, 1), (0, 1, 2)), ((0, 0, 1), (0, 0, 2), (1, 1, 0)),
        ((0, 1, 1), (1, 0, 1), (1, 1, 0)), ((0, 1, 2), (1, 0, 2), (1, 1, 0)),
        ((0, 0, 1), (0, 1, 2), (1, 1, 1)), ((0, 1, 1), (1, 0, 2), (1, 1, 1)),
        ((0, 0, 2), (1, 0, 1), (1, 0, 2)), ((0, 1, 2), (1, 0, 1), (1, 1, 2)),
    ),
    's2_plain': (
        ((0, 0, 0), (0, 0, 1), (1, 1, 2)), ((1, 0, 0), (1, 0, 1), (1, 1, 0)),
        ((0, 1, 0), (0, 1, 1), (1, 1, 0)), ((0, 0, 1), (1, 1, 0), (1, 1, 1)),
        ((0, 0, 0), (0, 0, 2), (0, 1, 1)), ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
        ((0, 1, 1), (1, 0, 0), (1, 1, 1)), ((0, 1, 0), (0, 1, 2), (1, 1, 1)),
        ((0, 0, 0), (1, 0, 1), (1, 1, 1)), ((0, 1, 0), (1, 0, 1), (1, 1, 2)),
        ((0, 0, 2), (1, 0, 0), (1, 1, 0)), ((0, 0, 0), (0, 1, 2), (1, 0, 0)),
        ((0, 0, 0), (1, 0, 2), (1, 1, 0)), ((0, 0, 2), (0, 1, 0), (1, 0, 2)),
        ((1, 0, 0), (1, 0, 2), (1, 1, 2)), ((0, 1, 2), (1, 1, 0), (1, 1, 2)),
        ((1, 0, 1), (1, 0, 2), (1, 1, 1)), ((0, 0, 1), (0, 0, 2), (1, 0, 1)),
        ((0, 0, 1), (0, 1, 2), (1, 0, 2)), ((0, 0, 2), (1, 1, 1), (1, 1, 2)),
        ((0, 1, 1), (0, 1, 2), (1, 0, 1)), ((0, 1, 1), (1, 0, 2), (1, 1, 2)),
    ),
    'doubled': (((0, 0, 0), (0, 1, 0)), ((0, 0, 1), (0, 1, 1)), ((0, 0, 2), (0, 1, 2))),
    'uncovered': (((1, 0, 0), (1, 1, 0)), ((1, 0, 1), (1, 1, 1)), ((1, 0, 2), (1, 1, 2))),
    'r': 3,
}
PCS632 = {
    'marked': (
        (1, 2, 'a'), (4, 8, 'a'), (7, 14, 'a'), (4, 5, 'b'), (7, 11, 'b'), (1, 8, 'b'),
        (2, 6, 17), (5, 6, 11), (1, 3, 10), (3, 4, 13), (3, 7, 16), (0, 1, 7), (6, 7, 8),
        (5, 7, 10), (8, 13, 16), (3, 11, 17), (2, 10, 13), (1, 6, 13), (6, 10, 14), (0, 8, 10),
        (0, 2, 4), (4, 6, 16), (2, 3, 5), (3, 8, 14), (4, 9, 14), (2, 7, 9), (0, 14, 17),
    ),
    'plain': (
        (2, 3, 11), (3, 5, 14), (3, 8, 17), (2, 4, 'b'), (7, 17, 'b'), (3, 10, 13), (1, 3, 7),
        (3, 4, 16), (0, 2, 14), (0, 7, 8), (1, 6, 16), (4, 17, 'a'), (1, 14, 'b'), (0, 1, 5),
        (0, 13, 16), (0, 11, 17), (0, 4, 10), (6, 10, 17), (4, 6, 11), (1, 11, 'a'),
        (5, 7, 'a'), (1, 2, 17), (7, 11, 14), (2, 6, 7), (4, 5, 8), (5, 6, 13), (6, 8, 14),
    ),
    'doubled': ((1, 10), (13, 4), (16, 7)),
    'uncovered': ((11, 2), (14, 5), (17, 8)),
    'r': 3,
}
H1232 = {
    'marked': (
        ('a', (0, 1), (1, 2)), ('a', (1, 1), (3, 2)), ('a', (2, 1), (2, 2)),
        ('b', (0, 1), (2, 2)), ('b', (1, 1), (1, 2)), ('b', (2, 1), (9, 2)),
        ((0, 1), (0, 2), (6, 1)), ((1, 1), (5, 0), (7, 1)), ((2, 1), (5, 0), (8, 1)),
        ((0, 0), (0, 1), (2, 1)), ((1, 0), (1, 1), (4, 1)), ((0, 1), (5, 1), (10, 0)),
        ((1, 1), (2, 0), (2, 1)), ((1, 2), (2, 0), (9, 1)), ((0, 1), (3, 1), (11, 0)),
        ((0, 0), (0, 2), (1, 1)), ((0, 2), (4, 1), (5, 2)), ((1, 0), (2, 1), (7, 1)),
        ((0, 1), (1, 1), (4, 0)), ((1, 1), (3, 1), (6, 0)), ((2, 1), (3, 0), (6, 1)),
        ((0, 0), (5, 2), (6, 1)), ((1, 2), (2, 2), (6, 0)), ((0, 2), (2, 2), (3, 0)),
        ((2, 2), (5, 0), (7, 2)), ((1, 0), (1, 2), (3, 2)), ((2, 0), (2, 2), (7, 1)),
        ((1, 1), (6, 1), (11, 2)), ((1, 2), (3, 0), (7, 1)), ((1, 1), (3, 0), (5, 2)),
        ((0, 2), (2, 1), (6, 0)), ((0, 0), (1, 2), (5, 1)), ((0, 2), (1, 2), (9, 0)),
        ((1, 2), (4, 2), (8, 0)), ((0, 2), (2, 0), (8, 1)), ((0, 2), (3, 2), (11, 0)),
        ((1, 1), (5, 1), (6, 2)), ((1, 2), (2, 1), (4, 1)), ((0, 1), (4, 1), (7, 2)),
        ((2, 2), (3, 2), (10, 0)), ((1, 2), (5, 2), (7, 0)), ((0, 2), (1, 0), (4, 2)),
        ((0, 2), (3, 1), (4, 0)), ((2, 2), (4, 2), (7, 0)), ((2, 1), (3, 1), (10, 0)),
        ((2, 1), (4, 0), (5, 2)), ((2, 2), (6, 1), (8, 0)), ((2, 2), (5, 2), (8, 1)),
        ((2, 2), (6, 2), (11, 0)), ((1, 2), (3, 1), (6, 2)), ((2, 1), (5, 1), (7, 2)),
    ),
    'plain': (
        ('a', (0, 1), (4, 2)), ('a', (2, 1), (9, 2)), ('a', (1, 1), (11, 2)),
        ((0, 2), (2, 1), (6, 2)), ('b', (0, 1), (10, 2)), ('b', (1, 1), (9, 2)),
        ('b', (2, 1), (5, 2)), ((1, 2), (3, 0), (7, 2)), ((2, 2), (5, 0), (8, 2)),
        ((0, 2), (1, 2), (4, 0)), ((2, 1), (7, 1), (10, 2)), ((0, 2), (5, 2), (9, 0)),
        ((0, 0), (1, 2), (2, 2)), ((1, 1), (3, 1), (5, 2)), ((1, 1), (1, 2), (5, 0)),
        ((1, 2), (3, 2), (8, 0)), ((0, 2), (3, 1), (7, 0)), ((0, 1), (5, 1), (9, 0)),
        ((2, 2), (4, 0), (5, 2)), ((2, 2), (6, 1), (6, 2)), ((1, 1), (3, 0), (8, 2)),
        ((1, 0), (1, 2), (11, 1)), ((0, 2), (3, 2), (6, 0)), ((2, 0), (3, 2), (4, 1)),
        ((0, 2), (2, 2), (8, 0)), ((0, 1), (1, 0), (3, 2)), ((2, 1), (3, 2), (5, 0)),
        ((1, 2), (2, 0), (4, 2)), ((2, 0), (2, 1), (6, 1)), ((1, 1), (6, 1), (9, 0)),
        ((1, 1), (4, 0), (4, 1)), ((0, 0), (0, 1), (7, 2)), ((1, 2), (6, 2), (7, 0)),
        ((2, 2), (3, 0), (3, 2)), ((0, 1), (1, 1), (6, 2)), ((2, 1), (3, 1), (9, 0)),
        ((1, 1), (5, 1), (6, 0)), ((0, 0), (1, 1), (2, 1)), ((1, 0), (2, 1), (4, 1)),
        ((1, 1), (2, 0), (2, 2)), ((1, 0), (3, 1), (8, 2)), ((2, 1), (2, 2), (10, 0)),
        ((2, 2), (3, 1), (4, 2)), ((0, 1), (2, 1), (7, 0)), ((1, 0), (4, 2), (7, 1)),
        ((2, 1), (5, 1), (11, 0)), ((2, 2), (7, 2), (8, 1)), ((0, 1), (4, 1), (11, 0)),
        ((0, 1), (3, 1), (5, 0)), ((0, 2), (4, 2), (10, 1)), ((1, 2), (5, 2), (8, 1)),
    ),
    'doubled': (
        ((0, 1), (6, 1)), ((1, 1), (7, 1)), ((2, 1), (8, 1)), ((3, 1), (9, 1)),
        ((10, 1), (4, 1)), ((11, 1), (5, 1)),
    ),
    'uncovered': (
        ((0, 2), (6, 2)), ((1, 2), (7, 2)), ((2, 2), (8, 2)), ((3, 2), (9, 2)),
        ((10, 2), (4, 2)), ((11, 2), (5, 2)),
    ),
    'r': 6,
}
PCS634 = {
    0: {
        'marked': (
            (1, 2, 'a'), (7, 11, 'a'), (5, 13, 'a'), (4, 14, 'a'), (8, 10, 'a'), (16, 17, 'a'),
            (1, 5, 'b'), (10, 17, 'b'), (4, 8, 'b'), (2, 7, 'b'), (11, 13, 'b'), (14, 16, 'b'),
            (1, 8, 'c'), (7, 17, 'c'), (13, 14, 'c'), (2, 16, 'c'), (4, 11, 'c'), (5, 10, 'c'),
            (1, 11, 'd'), (10, 14, 'd'), (2, 4, 'd'), (13, 17, 'd'), (5, 16, 'd'), (7, 8, 'd'),
            (0, 2, 5), (1, 12, 14), (6, 8, 16), (6, 11, 17), (5, 11, 12), (0, 8, 11),
            (0, 14, 17), (4, 12, 17), (5, 15, 17), (2, 8, 12), (2, 6, 10), (2, 13, 15),
            (3, 11, 14), (2, 3, 17), (1, 9, 17), (2, 9, 14), (3, 5, 8), (6, 7, 14), (4, 5, 6),
            (1, 6, 13), (5, 7, 9), (8, 9, 13), (8, 14, 15), (9, 11, 16), (4, 9, 10),
            (10, 11, 15), (10, 12, 16), (4, 15, 16), (1, 7, 15), (7, 12, 13), (0, 1, 4),
            (0, 7, 10), (0, 13, 16), (1, 3, 16), (3, 4, 7), (3, 10, 13),
        ),
        'plain': (
            (1, 8, 'a'), (11, 13, 'a'), (10, 12, 13), (4, 17, 'a'), (5, 16, 'a'), (2, 7, 'a'),
            (10, 14, 'a'), (0, 1, 10), (0, 5, 14), (1, 10, 15), (8, 15, 17), (5, 14, 15),
            (2, 11, 15), (4, 13, 15), (7, 15, 16), (0, 2, 11), (0, 4, 13), (0, 7, 16),
            (0, 8, 17), (1, 11, 'b'), (16, 17, 'b'), (4, 14, 'b'), (2, 13, 'b'), (5, 10, 'b'),
            (7, 8, 'b'), (5, 7, 'c'), (1, 14, 'c'), (13, 17, 'c'), (2, 4, 'c'), (8, 16, 'c'),
            (10, 11, 'c'), (4, 5, 'd'), (7, 14, 'd'), (8, 13, 'd'), (11, 16, 'd'), (1, 17, 'd'),
            (2, 10, 'd'), (4, 8, 10), (2, 3, 8), (6, 8, 14), (2, 14, 16), (5, 8, 12),
            (8, 9, 11), (1, 2, 6), (2, 5, 9), (2, 12, 17), (3, 4, 11), (3, 13, 14), (5, 6, 11),
            (1, 5, 13), (3, 5, 17), (7, 11, 17), (6, 10, 17), (9, 14, 17), (11, 12, 14),
            (1, 3, 7), (3, 10, 16), (4, 6, 16), (6, 7, 13), (1, 4, 9), (1, 12, 16), (4, 7, 12),
            (7, 9, 10), (9, 13, 16),
        ),
        'doubled': (),
        'uncovered': ((1, 10), (11, 2), (13, 4), (14, 5), (16, 7), (17, 8)),
    },
    3: {
        'marked': (
            (1, 2, 'a'), (7, 14, 'a'), (4, 8, 'a'), (5, 13, 'a'), (10, 17, 'a'), (11, 16, 'a'),
            (7, 15, 16), (1, 10, 15), (4, 11, 15), (8, 13, 15), (2, 15, 17), (5, 14, 15),
            (2, 4, 'b'), (7, 8, 'b'), (13, 17, 'b'), (5, 16, 'b'), (1, 14, 'b'), (10, 11, 'b'),
            (4, 5, 'c'), (1, 17, 'c'), (7, 11, 'c'), (8, 10, 'c'), (13, 14, 'c'), (2, 16, 'c'),
            (4, 14, 'd'), (1, 8, 'd'), (2, 7, 'd'), (5, 10, 'd'), (11, 13, 'd'), (16, 17, 'd'),
            (0, 14, 17), (0, 8, 11), (0, 2, 5), (1, 9, 11), (2, 8, 9), (2, 3, 13), (2, 12, 14),
            (2, 6, 10), (5, 8, 12), (6, 8, 16), (3, 8, 14), (11, 12, 17), (3, 5, 11), (1, 5, 7),
            (3, 7, 17), (6, 11, 14), (5, 9, 14), (5, 6, 17), (4, 9, 17), (10, 14, 16),
            (1, 4, 6), (6, 7, 13), (0, 1, 13), (1, 10, 12), (0, 4, 16), (0, 7, 10), (1, 3, 16),
            (3, 4, 10), (4, 7, 12), (7, 9, 16), (9, 10, 13), (12, 13, 16),
        ),
        'plain': (
            (1, 17, 'a'), (4, 5, 'a'), (7, 11, 'a'), (2, 10, 'a'), (8, 13, 'a'), (14, 16, 'a'),
            (1, 11, 'b'), (2, 13, 'b'), (5, 7, 'b'), (10, 14, 'b'), (4, 17, 'b'), (8, 16, 'b'),
            (2, 7, 'c'), (1, 8, 'c'), (5, 13, 'c'), (10, 17, 'c'), (4, 14, 'c'), (11, 16, 'c'),
            (8, 10, 'd'), (4, 11, 'd'), (1, 5, 'd'), (2, 16, 'd'), (7, 17, 'd'), (13, 14, 'd'),
            (8, 12, 17), (4, 12, 13), (0, 4, 13), (0, 7, 8), (0, 1, 14), (0, 5, 11), (0, 2, 17),
            (0, 10, 16), (2, 11, 12), (2, 9, 11), (6, 8, 17), (4, 6, 7), (5, 6, 16), (1, 2, 15),
            (1, 6, 13), (1, 12, 16), (2, 3, 5), (2, 4, 8), (2, 6, 14), (3, 8, 11), (3, 14, 17),
            (4, 10, 15), (1, 4, 9), (1, 3, 7), (3, 4, 16), (3, 10, 13), (5, 10, 12), (5, 8, 15),
            (5, 9, 17), (6, 10, 11), (7, 9, 10), (7, 12, 14), (7, 13, 15), (8, 9, 14),
            (9, 13, 16), (11, 13, 17), (11, 14, 15), (15, 16, 17),
        ),
        'doubled': ((1, 10), (14, 5), (16, 7)),
        'uncovered': ((11, 2), (13, 4), (17, 8)),
    },
}
H12340 = {
    'table1': {
        'marked': (
            ('a', (0, 1), (6, 2)), ('a', (1, 1), (7, 2)), ('a', (2, 1), (8, 2)),
            ('b', (0, 1), (7, 2)), ('b', (1, 1), (8, 2)), ('b', (2, 1), (9, 2)),
            ('c', (0, 1), (8, 2)), ('c', (1, 1), (9, 2)), ('c', (2, 1), (10, 2)),
            ('d', (0, 1), (9, 2)), ('d', (1, 1), (10, 2)), ('d', (2, 1), (11, 2)),
            ((2, 1), (3, 1), (6, 0)), ((2, 1), (5, 2), (6, 1)), ((2, 1), (3, 0), (4, 1)),
            ((0, 1), (2, 1), (9, 0)), ((0, 2), (1, 2), (9, 0)), ((1, 1), (6, 0), (6, 1)),
            ((0, 2), (4, 2), (6, 0)), ((1, 1), (3, 0), (5, 1)), ((0, 0), (1, 2), (2, 2)),
            ((0, 2), (2, 2), (3, 0)), ((2, 2), (6, 0), (6, 2)), ((2, 2), (4, 2), (9, 0)),
            ((1, 1), (3, 1), (9, 0)), ((2, 1), (2, 2), (10, 0)), ((1, 1), (1, 2), (2, 1)),
            ((1, 2), (2, 0), (11, 1)), ((1, 2), (3, 2), (10, 1)), ((1, 1), (2, 0), (3, 2)),
            ((1, 0), (2, 1), (7, 1)), ((0, 1), (5, 0), (5, 1)), ((0, 2), (2, 1), (4, 0)),
            ((1, 0), (1, 2), (8, 1)), ((2, 1), (5, 1), (11, 0)), ((0, 2), (3, 2), (11, 1)),
            ((0, 1), (0, 2), (1, 0)), ((0, 1), (1, 1), (10, 0)), ((0, 2), (5, 2), (7, 0)),
            ((1, 2), (6, 2), (8, 0)), ((0, 2), (1, 1), (5, 0)), ((1, 0), (2, 2), (3, 2)),
            ((0, 1), (4, 0), (4, 1)), ((1, 2), (4, 2), (7, 0)), ((1, 0), (4, 2), (6, 1)),
            ((2, 2), (4, 1), (7, 0)), ((2, 0), (3, 1), (6, 2)), ((0, 1), (2, 2), (8, 0)),
            ((2, 2), (5, 0), (7, 2)), ((0, 1), (3, 1), (4, 2)), ((0, 1), (2, 0), (5, 2)),
            ((1, 1), (2, 2), (5, 2)), ((1, 1), (4, 1), (11, 0)), ((1, 2), (5, 0), (5, 2)),
        ),
        'plain': (
            ((1, 1), (2, 1), (11, 0)), ((2, 1), (4, 1), (5, 0)), ('a', (0, 1), (7, 2)),
            ('a', (1, 1), (8, 2)), ('a', (2, 1), (9, 2)), ('c', (0, 1), (6, 2)),
            ('c', (1, 1), (7, 2)), ('c', (2, 1), (8, 2)), ('d', (0, 1), (8, 2)),
            ('d', (2, 1), (10, 2)), ('d', (1, 1), (9, 2)), ('b', (0, 1), (9, 2)),
            ('b', (1, 1), (10, 2)), ('b', (2, 1), (11, 2)), ((0, 1), (2, 0), (6, 1)),
            ((1, 1), (3, 0), (7, 1)), ((2, 1), (4, 0), (8, 1)), ((0, 0), (0, 2), (6, 2)),
            ((1, 0), (1, 2), (7, 2)), ((2, 0), (2, 2), (8, 2)), ((0, 1), (1, 2), (3, 1)),
            ((2, 1), (6, 1), (6, 2)), ((2, 1), (3, 2), (5, 1)), ((2, 2), (3, 2), (7, 0)),
            ((0, 2), (2, 0), (5, 2)), ((1, 1), (5, 0), (5, 1)), ((0, 2), (3, 0), (4, 2)),
            ((1, 2), (3, 0), (6, 2)), ((0, 2), (1, 2), (5, 0)), ((1, 2), (2, 1), (6, 0)),
            ((2, 2), (4, 1), (7, 2)), ((2, 2), (5, 0), (6, 2)), ((1, 1), (1, 2), (3, 2)),
            ((1, 2), (2, 2), (10, 0)), ((1, 2), (4, 0), (5, 2)), ((0, 2), (2, 2), (9, 1)),
            ((0, 2), (1, 0), (7, 1)), ((0, 2), (3, 2), (10, 0)), ((2, 0), (6, 2), (7, 1)),
            ((1, 1), (4, 1), (5, 2)), ((0, 0), (2, 1), (7, 1)), ((2, 1), (3, 0), (7, 2)),
            ((0, 1), (2, 2), (3, 0)), ((2, 2), (5, 2), (9, 0)), ((0, 0), (2, 2), (3, 1)),
            ((2, 1), (2, 2), (4, 2)), ((1, 2), (4, 2), (11, 0)), ((2, 2), (4, 0), (11, 1)),
            ((1, 0), (1, 1), (3, 1)), ((0, 1), (4, 1), (7, 0)), ((0, 0), (0, 1), (1, 1)),
            ((2, 1), (3, 1), (9, 0)), ((0, 1), (5, 1), (11, 0)), ((0, 1), (1, 0), (2, 1)),
            ((1, 1), (6, 1), (10, 0)), ((1, 2), (2, 0), (9, 1)),
        ),
        'doubled': (),
        'uncovered': (
            ((0, 1), (6, 1)), ((0, 2), (6, 2)), ((1, 1), (7, 1)), ((1, 2), (7, 2)),
            ((2, 1), (8, 1)), ((2, 2), (8, 2)), ((3, 1), (9, 1)), ((3, 2), (9, 2)),
            ((10, 1), (4, 1)), ((10, 2), (4, 2)), ((11, 1), (5, 1)), ((11, 2), (5, 2)),
        ),
    },
    'table2': {
        'marked': (
            ('c', (2, 1), (8, 2)), ('a', (0, 1), (7, 2)), ('a', (2, 1), (9, 2)),
            ('a', (1, 1), (8, 2)), ('b', (0, 1), (8, 2)), ('b', (1, 1), (9, 2)),
            ('b', (2, 1), (10, 2)), ('c', (0, 1), (9, 2)), ('d', (0, 1), (10, 2)),
            ('d', (1, 1), (11, 2)), ('d', (0, 2), (2, 1)), ('c', (1, 1), (7, 2)),
            ((0, 1), (0, 2), (6, 1)), ((1, 1), (4, 2), (7, 1)), ((2, 1), (5, 2), (8, 1)),
            ((0, 2), (2, 0), (9, 1)), ((2, 1), (3, 1), (6, 0)), ((2, 1), (6, 1), (7, 2)),
            ((2, 1), (3, 0), (4, 1)), ((0, 2), (4, 2), (6, 0)), ((0, 2), (2, 2), (3, 0)),
            ((0, 1), (1, 1), (6, 0)), ((1, 1), (1, 2), (9, 0)), ((0, 0), (0, 1), (2, 1)),
            ((2, 1), (2, 2), (9, 0)), ((1, 1), (3, 0), (6, 1)), ((0, 0), (1, 2), (2, 2)),
            ((1, 2), (6, 0), (6, 2)), ((0, 2), (5, 2), (9, 0)), ((1, 2), (3, 2), (4, 0)),
            ((0, 2), (1, 2), (5, 0)), ((0, 1), (2, 2), (4, 2)), ((1, 2), (5, 2), (7, 0)),
            ((2, 2), (7, 0), (7, 2)), ((1, 0), (4, 2), (5, 1)), ((1, 2), (2, 0), (4, 2)),
            ((2, 1), (4, 2), (11, 0)), ((2, 1), (5, 1), (7, 0)), ((0, 1), (5, 1), (11, 0)),
            ((1, 0), (2, 1), (7, 1)), ((2, 2), (6, 2), (10, 0)), ((1, 1), (3, 1), (4, 0)),
            ((1, 0), (3, 2), (4, 1)), ((2, 0), (2, 2), (3, 2)), ((2, 2), (5, 2), (8, 0)),
            ((1, 1), (4, 1), (5, 2)), ((1, 1), (5, 1), (8, 0)), ((0, 2), (3, 2), (11, 1)),
            ((1, 1), (2, 0), (2, 1)), ((2, 0), (4, 1), (6, 2)), ((0, 1), (4, 1), (8, 0)),
            ((0, 1), (2, 0), (5, 2)), ((1, 0), (1, 1), (6, 2)), ((0, 1), (3, 1), (7, 0)),
            ((1, 0), (2, 2), (3, 1)),
        ),
        'plain': (
            ((1, 2), (6, 2), (8, 0)), ('a', (0, 1), (6, 2)), ('a', (2, 1), (8, 2)),
            ('a', (1, 1), (7, 2)), ('b', (0, 1), (7, 2)), ('b', (2, 1), (9, 2)),
            ('b', (1, 1), (8, 2)), ('c', (0, 1), (8, 2)), ('d', (0, 1), (9, 2)),
            ('d', (2, 1), (11, 2)), ('d', (1, 1), (10, 2)), ('c', (1, 1), (9, 2)),
            ('c', (2, 1), (10, 2)), ((0, 0), (0, 2), (6, 2)), ((1, 0), (1, 2), (7, 2)),
            ((1, 1), (1, 2), (11, 0)), ((0, 1), (3, 2), (4, 1)), ((2, 0), (2, 2), (8, 2)),
            ((0, 2), (1, 2), (9, 0)), ((1, 2), (2, 2), (6, 0)), ((2, 2), (3, 0), (5, 2)),
            ((1, 1), (4, 1), (6, 0)), ((0, 0), (0, 1), (1, 1)), ((1, 1), (3, 1), (9, 0)),
            ((2, 2), (7, 2), (9, 0)), ((0, 0), (2, 1), (3, 1)), ((2, 1), (5, 1), (9, 0)),
            ((0, 1), (2, 1), (3, 0)), ((0, 2), (3, 0), (4, 2)), ((0, 1), (3, 1), (11, 0)),
            ((2, 2), (3, 2), (11, 0)), ((2, 2), (5, 0), (6, 2)), ((1, 2), (4, 0), (5, 2)),
            ((0, 2), (2, 2), (10, 1)), ((1, 0), (3, 1), (5, 2)), ((2, 2), (3, 1), (4, 0)),
            ((2, 1), (6, 1), (10, 0)), ((1, 0), (2, 1), (4, 1)), ((1, 0), (1, 1), (6, 1)),
            ((0, 2), (3, 2), (7, 0)), ((2, 1), (4, 0), (7, 2)), ((1, 1), (4, 0), (6, 2)),
            ((2, 1), (5, 2), (7, 1)), ((0, 1), (0, 2), (5, 2)), ((0, 2), (1, 0), (8, 1)),
            ((1, 1), (2, 2), (7, 0)), ((2, 1), (2, 2), (4, 2)), ((1, 1), (2, 1), (8, 0)),
            ((1, 2), (2, 1), (3, 2)), ((0, 2), (2, 1), (5, 0)), ((0, 1), (5, 0), (5, 1)),
            ((1, 2), (2, 0), (10, 1)), ((0, 1), (1, 2), (4, 2)), ((1, 2), (3, 1), (5, 0)),
            ((1, 1), (2, 0), (5, 1)),
        ),
        'doubled': (
            ((0, 1), (6, 1)), ((1, 1), (7, 1)), ((2, 1), (8, 1)), ((3, 1), (9, 1)),
            ((10, 1), (4, 1)), ((11, 1), (5, 1)),
        ),
        'uncovered': (
            ((0, 2), (6, 2)), ((1, 2), (7, 2)), ((2, 2), (8, 2)), ((3, 2), (9, 2)),
            ((10, 2), (4, 2)), ((11, 2), (5, 2)),
        ),
    },
    'table3': (
        ('a', (0, 1), (0, 2)), ('a', (1, 1), (2, 2)), ('a', (2, 1), (7, 2)),
        ('b', (1, 1), (1, 2)), ('b', (2, 1), (3, 2)), ('b', (0, 1), (2, 2)),
        ('c', (0, 1), (1, 2)), ('c', (1, 1), (3, 2)), ('c', (2, 1), (5, 2)),
        ('d', (2, 1), (2, 2)), ('d', (0, 1), (4, 2)), ('d', (1, 1), (6, 2)),
        ('a', (0, 1), (2, 2)), ('a', (1, 1), (4, 2)), ('a', (2, 1), (6, 2)),
        ('b', (0, 1), (3, 2)), ('b', (1, 1), (5, 2)), ('b', (2, 1), (7, 2)),
        ('c', (0, 1), (4, 2)), ('c', (1, 1), (6, 2)), ('c', (2, 1), (2, 2)),
        ('d', (2, 1), (5, 2)), ('d', (1, 1), (3, 2)), ('d', (0, 1), (1, 2)),
        ((0, 2), (1, 2), (2, 0)), ((1, 2), (3, 0), (3, 2)), ((2, 2), (5, 2), (7, 0)),
        ((1, 1), (2, 1), (4, 2)), ((2, 0), (2, 2), (4, 2)), ((1, 0), (1, 2), (5, 2)),
        ((1, 2), (6, 0), (7, 2)), ((2, 0), (2, 1), (6, 2)), ((2, 1), (7, 0), (8, 1)),
        ((0, 0), (0, 1), (6, 1)), ((2, 1), (4, 0), (4, 1)), ((1, 1), (2, 0), (7, 1)),
        ((0, 2), (1, 0), (6, 2)), ((2, 2), (6, 0), (8, 2)), ((2, 2), (3, 0), (6, 2)),
        ((0, 2), (2, 1), (6, 0)), ((0, 2), (3, 2), (6, 1)), ((1, 2), (6, 2), (9, 0)),
        ((2, 1), (7, 1), (9, 0)), ((2, 1), (3, 1), (10, 0)), ((2, 1), (3, 0), (5, 1)),
        ((0, 1), (5, 1), (11, 2)), ((2, 2), (7, 2), (10, 1)), ((1, 1), (4, 0), (6, 1)),
        ((0, 2), (4, 0), (5, 2)), ((0, 1), (1, 1), (9, 0)), ((0, 1), (3, 0), (4, 1)),
        ((2, 2), (4, 1), (9, 0)), ((0, 1), (1, 0), (3, 2)), ((1, 2), (4, 0), (7, 1)),
        ((1, 1), (3, 1), (7, 0)), ((1, 2), (4, 2), (10, 0)), ((1, 1), (5, 1), (11, 0)),
        ((0, 2), (1, 1), (4, 1)), ((1, 1), (5, 0), (8, 2)), ((0, 2), (2, 2), (5, 1)),
        ((0, 2), (4, 2), (11, 0)), ((2, 1), (6, 1), (11, 0)), ((0, 1), (2, 1), (10, 2)),
        ((1, 2), (2, 1), (5, 0)), ((2, 2), (5, 0), (9, 1)), ((0, 1), (2, 0), (3, 1)),
        ((2, 2), (3, 2), (8, 0)), ((1, 2), (2, 2), (6, 1)), ((0, 0), (3, 1), (8, 2)),
        ((2, 1), (4, 2), (9, 0)), ((0, 2), (1, 2), (4, 0)), ((1, 2), (3, 2), (5, 0)),
        ((0, 2), (2, 2), (5, 0)), ((0, 2), (3, 0), (3, 2)), ((2, 2), (5, 2), (10, 0)),
        ((1, 2), (3, 0), (4, 2)), ((2, 2), (4, 0), (6, 2)), ((1, 1), (1, 2), (10, 0)),
        ((0, 2), (4, 2), (5, 1)), ((1, 2), (5, 2), (11, 0)), ((2, 2), (4, 2), (11, 0)),
        ((2, 2), (3, 0), (7, 2)), ((1, 2), (2, 0), (6, 1)), ((0, 1), (1, 1), (8, 2)),
        ((1, 2), (2, 2), (3, 1)), ((2, 0), (2, 2), (4, 1)), ((1, 0), (1, 2), (6, 2)),
        ((2, 1), (7, 0), (8, 2)), ((0, 2), (4, 1), (5, 2)), ((0, 0), (2, 2), (3, 2)),
        ((2, 2), (5, 1), (9, 0)), ((0, 1), (0, 2), (11, 0)), ((2, 1), (4, 1), (10, 2)),
        ((1, 2), (4, 1), (7, 0)), ((0, 1), (3, 0), (3, 1)), ((0, 2), (1, 1), (6, 0)),
        ((0, 2), (1, 0), (3, 1)), ((0, 1), (5, 1), (6, 2)), ((2, 1), (3, 0), (7, 1)),
        ((2, 0), (6, 2), (8, 1)), ((1, 1), (3, 1), (8, 0)), ((1, 1), (4, 1), (5, 0)),
        ((2, 0), (2, 1), (5, 1)), ((2, 1), (3, 1), (5, 0)), ((0, 0), (1, 1), (2, 1)),
        ((0, 1), (4, 1), (6, 0)), ((1, 1), (6, 1), (7, 0)), ((1, 0), (2, 1), (6, 1)),
        ((1, 0), (1, 1), (5, 1)), ((0, 1), (2, 1), (4, 0)),
    ),
}
W6420 = {
    't1_marked': (
        (1, 2, 'a'), (5, 7, 'a'), (6, 11, 'a'), (2, 3, 'b'), (7, 13, 'b'), (1, 6, 'b'),
        (0, 2, 22), (3, 7, 12), (3, 5, 9), (4, 10, 14), (1, 7, 23), (0, 5, 6), (6, 7, 22),
        (2, 7, 16), (0, 11, 23), (1, 3, 8), (0, 7, 14), (0, 1, 13), (2, 8, 17), (5, 8, 11),
        (7, 10, 17), (1, 4, 17), (3, 6, 17), (4, 6, 9), (6, 12, 19), (2, 11, 19), (3, 4, 13),
        (4, 5, 18), (2, 5, 10), (2, 4, 15), (4, 7, 21), (6, 13, 21),
    ),
    't1_plain': (
        (1, 7, 'a'), (2, 11, 'a'), (5, 22, 'a'), (1, 10, 'b'), (6, 19, 'b'), (5, 7, 'b'),
        (0, 6, 18), (1, 19, 23), (3, 17, 21), (4, 6, 22), (4, 5, 10), (3, 5, 13), (4, 7, 13),
        (0, 5, 15), (2, 4, 19), (4, 15, 23), (1, 3, 15), (3, 4, 11), (0, 2, 3), (0, 7, 11),
        (6, 7, 11), (3, 6, 8), (7, 8, 22), (5, 8, 18), (1, 4, 21), (0, 9, 13), (0, 1, 17),
        (1, 2, 12), (6, 9, 21), (1, 14, 18), (2, 7, 14), (4, 9, 14), (2, 5, 6), (7, 10, 18),
    ),
    't2': (
        (2, 5, 'a'), (3, 14, 'a'), (3, 13, 'a'), (2, 5, 'b'), (1, 6, 18), (3, 5, 15),
        (1, 4, 13), (3, 10, 'b'), (3, 13, 'b'), (2, 6, 16), (2, 8, 18), (2, 4, 18), (3, 9, 17),
        (0, 3, 19), (1, 4, 19), (0, 1, 9), (2, 7, 15), (1, 2, 21), (1, 5, 14), (3, 7, 22),
        (0, 1, 18), (1, 2, 3), (2, 3, 6), (0, 3, 7), (3, 4, 6), (3, 4, 10), (0, 2, 11),
        (0, 6, 17), (1, 3, 20), (0, 5, 11), (3, 5, 12), (3, 8, 21), (2, 4, 17),
    ),
    'doubled': (),
    'uncovered': ((1, 5), (10, 22), (11, 7), (13, 9), (14, 2), (15, 19), (17, 21), (18, 6), (23, 3)),
}
WP = {
    'a0': (
        (3, 9, 'a'), (1, 10, 'a'), (3, 10, 'a'), (2, 7, 'b'), (2, 9, 'b'), (3, 9, 'b'),
        (1, 3, 7), (0, 2, 18), (3, 6, 18), (1, 3, 15), (1, 2, 13), (2, 4, 6), (2, 4, 18),
        (3, 5, 10), (3, 5, 12), (3, 4, 11), (0, 1, 7), (0, 3, 17), (2, 6, 13), (0, 1, 5),
        (2, 3, 8), (0, 3, 6), (3, 8, 14), (3, 4, 19), (0, 5, 14), (1, 5, 16), (1, 2, 16),
        (2, 5, 21), (1, 4, 17), (2, 3, 16), (1, 4, 15), (2, 5, 15), (3, 7, 22),
    ),
    'a4_marked': (
        (1, 2, 'a'), (3, 5, 'a'), (6, 7, 'a'), (9, 10, 'a'), (11, 13, 'a'), (14, 15, 'a'),
        (17, 18, 'a'), (22, 23, 'a'), (2, 3, 'b'), (5, 6, 'b'), (10, 11, 'b'), (13, 14, 'b'),
        (18, 19, 'b'), (15, 17, 'b'), (7, 9, 'b'), (21, 22, 'b'), (0, 1, 21), (1, 8, 9),
        (5, 8, 13), (1, 4, 5), (12, 13, 21), (13, 16, 17), (1, 14, 17), (3, 6, 14), (3, 4, 7),
        (5, 7, 15), (0, 3, 11), (0, 10, 23), (7, 8, 11), (7, 10, 18), (2, 15, 18), (6, 20, 22),
        (1, 6, 16), (1, 7, 12), (1, 10, 19), (1, 3, 20), (1, 18, 22), (8, 10, 21), (6, 8, 23),
        (2, 6, 9), (6, 12, 15), (6, 10, 13), (4, 6, 21), (0, 7, 14), (0, 9, 18), (0, 5, 19),
        (0, 2, 13), (0, 15, 22), (3, 8, 15), (2, 8, 19), (8, 17, 22), (2, 12, 22), (7, 13, 22),
        (3, 19, 22), (12, 19, 23), (3, 10, 12), (11, 12, 14), (3, 15, 21), (3, 17, 23),
        (3, 9, 13), (3, 16, 18), (7, 16, 23), (2, 4, 23), (11, 18, 20), (9, 15, 20), (5, 9, 23),
        (13, 15, 23), (13, 19, 20), (4, 17, 19), (4, 10, 15), (4, 14, 22), (4, 9, 11),
        (9, 16, 22), (5, 11, 22), (15, 16, 19), (18, 21, 23), (14, 20, 23), (5, 16, 21),
        (2, 11, 16), (2, 5, 14), (2, 14, 21), (11, 17, 21), (2, 7, 17), (2, 10, 20),
        (5, 17, 20), (7, 20, 21), (19, 21, 'a'), (1, 23, 'b'), (9, 12, 17), (6, 11, 19),
        (1, 11, 15), (0, 6, 17), (8, 14, 18), (5, 12, 18), (4, 13, 18), (9, 14, 19),
        (10, 14, 16), (5, 10, 17),
    ),
    'a4_plain': (
        (2, 3, 'a'), (5, 6, 'a'), (7, 9, 'a'), (10, 11, 'a'), (13, 14, 'a'), (15, 17, 'a'),
        (1, 23, 'a'), (18, 19, 'a'), (21, 22, 'a'), (1, 2, 'b'), (6, 7, 'b'), (9, 10, 'b'),
        (14, 15, 'b'), (17, 18, 'b'), (3, 5, 'b'), (19, 21, 'b'), (11, 13, 'b'), (22, 23, 'b'),
        (0, 1, 9), (5, 8, 9), (4, 5, 13), (8, 13, 21), (9, 12, 13), (9, 16, 17), (1, 12, 17),
        (1, 6, 14), (3, 4, 14), (4, 7, 15), (3, 6, 11), (0, 3, 23), (2, 10, 23), (8, 11, 19),
        (6, 19, 22), (7, 8, 18), (3, 8, 22), (1, 8, 10), (8, 14, 23), (2, 8, 15), (6, 8, 17),
        (2, 16, 18), (6, 10, 16), (2, 6, 20), (2, 13, 17), (4, 6, 9), (17, 20, 21), (3, 16, 19),
        (3, 7, 17), (3, 12, 18), (1, 3, 13), (3, 9, 21), (3, 10, 20), (6, 12, 23), (14, 17, 19),
        (0, 10, 14), (0, 17, 22), (4, 10, 17), (11, 17, 23), (5, 10, 18), (10, 12, 21),
        (7, 10, 19), (10, 15, 22), (10, 13, 22), (12, 15, 19), (2, 7, 12), (9, 19, 23),
        (5, 19, 20), (2, 9, 11), (9, 14, 21), (9, 15, 18), (9, 20, 22), (5, 15, 23), (0, 6, 18),
        (6, 13, 18), (6, 15, 21), (0, 7, 11), (0, 13, 15), (0, 2, 19), (0, 5, 21), (2, 5, 22),
        (2, 4, 21), (1, 4, 19), (7, 13, 19), (1, 13, 20), (1, 15, 16), (1, 7, 22), (1, 5, 11),
        (1, 18, 21), (5, 7, 16), (5, 12, 14), (7, 14, 20), (7, 21, 23), (11, 12, 22),
        (4, 18, 22), (4, 11, 23), (11, 15, 20), (11, 14, 18), (11, 16, 21), (13, 16, 23),
        (14, 16, 22), (18, 20, 23),
    ),
    'a5': (
        (1, 3, 'a'), (1, 6, 'a'), (3, 22, 'a'), (6, 11, 'a'), (9, 11, 'a'), (9, 14, 'a'),
        (14, 19, 'a'), (17, 22, 'a'), (17, 19, 'a'), (5, 7, 'a'), (5, 10, 'a'), (2, 7, 'a'),
        (2, 21, 'a'), (13, 15, 'a'), (10, 15, 'a'), (13, 18, 'a'), (18, 23, 'a'), (21, 23, 'a'),
        (1, 3, 'b'), (1, 11, 'b'), (3, 13, 'b'), (11, 14, 'b'), (14, 17, 'b'), (17, 19, 'b'),
        (2, 13, 'b'), (2, 15, 'b'), (5, 15, 'b'), (5, 18, 'b'), (6, 19, 'b'), (6, 9, 'b'),
        (9, 22, 'b'), (7, 22, 'b'), (7, 18, 'b'), (10, 21, 'b'), (10, 23, 'b'), (21, 23, 'b'),
        (0, 2, 3), (0, 3, 22), (3, 4, 23), (3, 4, 6), (0, 13, 14), (0, 6, 14), (0, 1, 13),
        (0, 5, 6), (0, 5, 10), (0, 7, 15), (0, 7, 9), (0, 9, 17), (0, 2, 15), (0, 21, 22),
        (0, 19, 21), (0, 10, 18), (0, 17, 23), (0, 1, 11), (0, 11, 19), (0, 18, 23),
        (4, 17, 18), (4, 10, 18), (9, 10, 20), (6, 10, 20), (1, 4, 9), (1, 2, 4), (1, 12, 13),
        (1, 2, 12), (1, 9, 18), (1, 7, 18), (1, 17, 20), (1, 15, 20), (1, 16, 17), (1, 6, 22),
        (1, 21, 22), (1, 10, 21), (1, 10, 23), (1, 16, 23), (1, 14, 15), (1, 5, 14), (1, 5, 8),
        (1, 7, 19), (1, 8, 19), (2, 9, 10), (2, 10, 16), (10, 12, 22), (10, 17, 22),
        (4, 10, 11), (7, 8, 10), (8, 10, 11), (10, 12, 13), (6, 7, 10), (10, 13, 14),
        (3, 10, 19), (10, 14, 19), (3, 10, 16), (10, 15, 17), (16, 18, 19), (16, 19, 21),
        (6, 7, 19), (8, 9, 19), (19, 20, 23), (15, 19, 20), (7, 14, 15), (14, 17, 18),
        (3, 14, 18), (13, 17, 20), (3, 13, 17), (3, 18, 19), (9, 12, 19), (5, 12, 19),
        (5, 15, 19), (3, 15, 17), (3, 6, 15), (11, 13, 19), (7, 12, 17), (6, 12, 17),
        (5, 16, 17), (7, 17, 21), (6, 17, 21), (2, 4, 19), (2, 13, 19), (4, 19, 22),
        (19, 22, 23), (2, 9, 17), (2, 8, 17), (4, 11, 17), (8, 11, 17), (5, 17, 23),
        (8, 13, 18), (8, 13, 15), (4, 13, 21), (4, 7, 13), (8, 15, 23), (15, 16, 18),
        (9, 15, 16), (15, 18, 22), (11, 12, 15), (11, 15, 21), (12, 15, 23), (9, 15, 21),
        (4, 15, 22), (4, 6, 15), (4, 7, 9), (4, 5, 21), (4, 5, 14), (4, 14, 23), (3, 7, 8),
        (5, 8, 23), (3, 8, 21), (5, 13, 22), (5, 13, 20), (2, 5, 7), (2, 14, 16), (2, 14, 20),
        (2, 6, 8), (2, 22, 23), (2, 11, 22), (8, 14, 22), (8, 18, 22), (8, 9, 21), (6, 8, 14),
        (13, 16, 21), (11, 20, 22), (7, 20, 22), (12, 14, 22), (5, 9, 22), (6, 16, 22),
        (13, 16, 22), (7, 11, 13), (6, 9, 13), (6, 13, 23), (9, 13, 23), (3, 9, 23), (2, 6, 23),
        (11, 16, 23), (11, 14, 23), (7, 12, 23), (7, 20, 23), (3, 7, 16), (9, 14, 16),
        (7, 14, 21), (7, 11, 16), (5, 6, 16), (3, 12, 14), (14, 20, 21), (3, 9, 12),
        (3, 11, 21), (2, 12, 21), (2, 18, 20), (2, 11, 18), (2, 3, 5), (3, 5, 20), (3, 11, 20),
        (5, 9, 11), (9, 18, 20), (6, 20, 21), (5, 11, 12), (5, 18, 21), (6, 11, 18),
        (6, 12, 18), (12, 18, 21),
    ),
    'a6': (
        (7, 8, 'b'), (7, 20, 'b'), (8, 10, 'b'), (10, 12, 'b'), (19, 20, 'b'), (16, 19, 'b'),
        (0, 22, 'b'), (12, 22, 'b'), (0, 11, 'b'), (2, 11, 'b'), (2, 23, 'b'), (14, 23, 'b'),
        (14, 16, 'b'), (3, 4, 'b'), (3, 6, 'b'), (6, 15, 'b'), (4, 18, 'b'), (15, 18, 'b'),
        (1, 7, 15), (1, 10, 15), (5, 18, 19), (5, 11, 19), (0, 2, 'a'), (2, 4, 'a'),
        (15, 16, 'a'), (15, 20, 'a'), (16, 18, 'a'), (18, 20, 'a'), (4, 6, 'a'), (6, 8, 'a'),
        (3, 8, 'a'), (3, 14, 'a'), (7, 12, 'a'), (7, 10, 'a'), (0, 19, 'a'), (19, 22, 'a'),
        (10, 23, 'a'), (12, 23, 'a'), (11, 14, 'a'), (11, 22, 'a'), (6, 7, 17), (7, 17, 23),
        (6, 17, 18), (10, 11, 21), (7, 11, 21), (7, 10, 11), (1, 7, 23), (6, 7, 15), (2, 5, 6),
        (2, 3, 6), (6, 9, 10), (6, 10, 19), (1, 6, 11), (1, 6, 20), (1, 11, 19), (1, 2, 19),
        (1, 4, 12), (0, 1, 4), (1, 8, 16), (1, 8, 14), (1, 2, 10), (0, 1, 18), (1, 3, 18),
        (1, 3, 16), (1, 22, 23), (1, 20, 22), (1, 12, 14), (2, 5, 10), (3, 7, 20), (3, 7, 12),
        (7, 13, 14), (0, 7, 13), (4, 5, 7), (5, 7, 8), (7, 9, 22), (7, 9, 18), (0, 7, 16),
        (2, 4, 7), (7, 16, 18), (7, 14, 22), (2, 7, 19), (7, 19, 21), (2, 13, 14), (2, 9, 14),
        (2, 3, 22), (2, 15, 22), (3, 9, 19), (9, 10, 19), (2, 12, 20), (2, 12, 18), (2, 13, 18),
        (2, 15, 16), (2, 16, 21), (2, 21, 23), (2, 8, 9), (0, 2, 8), (2, 11, 17), (2, 17, 20),
        (12, 13, 15), (13, 15, 18), (8, 10, 13), (10, 13, 20), (10, 17, 18), (10, 18, 23),
        (10, 12, 20), (5, 10, 15), (3, 10, 14), (10, 14, 17), (3, 10, 22), (0, 10, 16),
        (0, 10, 22), (4, 10, 21), (4, 10, 16), (3, 15, 20), (3, 5, 15), (12, 13, 16),
        (11, 13, 16), (0, 3, 9), (3, 11, 16), (3, 11, 17), (3, 17, 19), (3, 13, 23), (3, 4, 13),
        (3, 12, 21), (3, 18, 21), (0, 3, 8), (3, 5, 23), (11, 13, 23), (8, 13, 20), (0, 6, 13),
        (4, 13, 19), (6, 13, 22), (13, 19, 22), (5, 14, 16), (16, 17, 20), (16, 17, 19),
        (0, 12, 17), (0, 4, 17), (0, 5, 18), (0, 5, 20), (5, 11, 20), (11, 18, 23), (9, 12, 18),
        (18, 21, 22), (11, 18, 22), (6, 8, 18), (4, 8, 18), (14, 18, 19), (14, 18, 20),
        (6, 11, 12), (0, 11, 15), (6, 9, 16), (0, 6, 21), (0, 20, 21), (0, 9, 14), (0, 12, 23),
        (0, 19, 23), (0, 14, 15), (9, 15, 23), (9, 15, 22), (4, 9, 23), (11, 14, 15),
        (8, 12, 14), (14, 17, 22), (5, 14, 23), (5, 6, 22), (4, 5, 22), (5, 8, 12), (5, 12, 16),
        (9, 11, 12), (4, 11, 20), (4, 8, 11), (8, 9, 11), (4, 9, 20), (9, 16, 20), (4, 6, 14),
        (4, 14, 21), (6, 16, 23), (6, 20, 23), (14, 19, 20), (6, 14, 21), (6, 12, 19),
        (4, 16, 22), (12, 17, 22), (4, 12, 19), (12, 15, 21), (8, 19, 23), (4, 15, 23),
        (4, 15, 17), (8, 15, 17), (8, 17, 23), (8, 20, 22), (20, 21, 23), (16, 22, 23),
        (8, 16, 21), (8, 21, 22), (8, 15, 19), (15, 19, 21),
    ),
    'a7': (
        (4, 7, 'b'), (7, 10, 'b'), (10, 19, 'b'), (19, 22, 'b'), (11, 22, 'b'), (11, 12, 'b'),
        (6, 8, 'b'), (8, 18, 'b'), (6, 20, 'b'), (20, 23, 'b'), (3, 18, 'b'), (0, 23, 'b'),
        (2, 4, 'b'), (2, 16, 'b'), (15, 16, 'b'), (12, 15, 'b'), (0, 14, 'b'), (3, 14, 'b'),
        (1, 15, 18), (1, 15, 19), (5, 14, 19), (5, 19, 22), (2, 15, 'a'), (2, 23, 'a'),
        (15, 18, 'a'), (7, 18, 'a'), (7, 8, 'a'), (3, 4, 'a'), (4, 23, 'a'), (3, 6, 'a'),
        (6, 19, 'a'), (12, 14, 'a'), (14, 16, 'a'), (11, 16, 'a'), (19, 20, 'a'), (20, 22, 'a'),
        (0, 22, 'a'), (0, 11, 'a'), (8, 10, 'a'), (10, 12, 'a'), (4, 15, 19), (7, 8, 17),
        (7, 10, 17), (1, 6, 7), (1, 7, 14), (7, 11, 12), (7, 11, 20), (6, 11, 21), (11, 14, 21),
        (9, 11, 19), (7, 9, 19), (7, 18, 19), (5, 6, 7), (5, 7, 20), (0, 7, 12), (0, 4, 7),
        (3, 7, 9), (3, 7, 21), (7, 13, 23), (7, 13, 16), (7, 14, 23), (7, 16, 21), (2, 7, 15),
        (2, 7, 22), (7, 15, 22), (2, 6, 16), (2, 6, 19), (2, 9, 18), (2, 9, 20), (1, 2, 22),
        (1, 3, 6), (0, 1, 19), (2, 17, 18), (2, 10, 21), (2, 3, 21), (0, 8, 21), (0, 21, 23),
        (9, 22, 23), (9, 18, 23), (0, 2, 10), (2, 4, 17), (1, 2, 14), (2, 14, 19), (2, 3, 23),
        (0, 2, 12), (2, 5, 12), (2, 5, 11), (2, 8, 13), (2, 8, 11), (2, 13, 20), (3, 8, 19),
        (3, 13, 19), (3, 8, 13), (3, 12, 23), (10, 11, 19), (0, 8, 19), (13, 19, 23),
        (16, 19, 23), (4, 16, 19), (8, 12, 17), (10, 21, 22), (12, 13, 22), (6, 12, 13),
        (10, 13, 18), (13, 18, 20), (6, 13, 14), (10, 13, 15), (13, 15, 16), (11, 13, 14),
        (0, 4, 13), (0, 11, 13), (4, 13, 22), (0, 3, 5), (0, 5, 15), (0, 6, 15), (0, 14, 17),
        (0, 17, 20), (14, 16, 17), (0, 16, 18), (0, 9, 16), (0, 18, 22), (0, 6, 9), (0, 1, 10),
        (0, 3, 20), (6, 9, 15), (3, 9, 15), (9, 12, 16), (9, 11, 20), (3, 10, 15), (3, 10, 17),
        (3, 14, 22), (3, 12, 20), (1, 3, 4), (1, 11, 23), (1, 4, 11), (1, 8, 22), (1, 8, 20),
        (1, 10, 18), (1, 12, 16), (1, 16, 20), (1, 12, 23), (8, 12, 18), (4, 8, 9), (8, 9, 10),
        (9, 12, 14), (4, 9, 10), (9, 14, 22), (5, 10, 12), (6, 10, 11), (6, 10, 23),
        (8, 11, 15), (5, 11, 23), (3, 11, 22), (3, 11, 18), (3, 5, 16), (3, 16, 17),
        (11, 15, 17), (11, 17, 18), (4, 11, 16), (6, 8, 16), (14, 15, 23), (8, 14, 15),
        (5, 15, 22), (15, 17, 23), (12, 15, 20), (4, 15, 21), (15, 20, 21), (5, 10, 20),
        (10, 16, 23), (5, 8, 14), (6, 14, 20), (8, 20, 23), (14, 18, 21), (4, 14, 18),
        (4, 10, 14), (10, 14, 20), (10, 16, 22), (4, 5, 8), (5, 16, 18), (5, 6, 18), (4, 5, 23),
        (8, 16, 22), (8, 21, 23), (16, 20, 21), (6, 21, 22), (6, 18, 23), (17, 22, 23),
        (12, 18, 22), (4, 20, 22), (4, 6, 12), (4, 6, 17), (4, 12, 21), (4, 18, 20),
        (6, 17, 22), (12, 17, 19), (12, 19, 21), (17, 19, 20), (18, 19, 21),
    ),
    'a8': (
        (3, 16, 'a'), (3, 13, 'a'), (3, 17, 'a'), (0, 3, 'a'), (7, 20, 'a'), (7, 17, 'a'),
        (7, 21, 'a'), (4, 7, 'a'), (11, 12, 'a'), (1, 11, 'a'), (11, 21, 'a'), (8, 11, 'a'),
        (4, 15, 'a'), (5, 15, 'a'), (1, 15, 'a'), (12, 15, 'a'), (0, 1, 'a'), (1, 20, 'a'),
        (4, 5, 'a'), (4, 9, 'a'), (12, 13, 'a'), (12, 17, 'a'), (16, 17, 'a'), (20, 21, 'a'),
        (20, 23, 'a'), (8, 9, 'a'), (9, 19, 'a'), (9, 23, 'a'), (0, 23, 'a'), (13, 23, 'a'),
        (0, 5, 'a'), (8, 13, 'a'), (16, 21, 'a'), (8, 19, 'a'), (5, 19, 'a'), (16, 19, 'a'),
        (3, 17, 'b'), (3, 16, 'b'), (0, 3, 'b'), (3, 12, 'b'), (5, 7, 'b'), (7, 17, 'b'),
        (7, 21, 'b'), (7, 16, 'b'), (9, 11, 'b'), (11, 21, 'b'), (8, 11, 'b'), (11, 20, 'b'),
        (13, 15, 'b'), (1, 15, 'b'), (4, 15, 'b'), (0, 15, 'b'), (0, 1, 'b'), (0, 13, 'b'),
        (1, 12, 'b'), (1, 4, 'b'), (16, 17, 'b'), (5, 16, 'b'), (12, 13, 'b'), (13, 23, 'b'),
        (4, 5, 'b'), (4, 19, 'b'), (17, 20, 'b'), (5, 19, 'b'), (9, 19, 'b'), (8, 19, 'b'),
        (20, 21, 'b'), (9, 20, 'b'), (8, 21, 'b'), (8, 23, 'b'), (9, 23, 'b'), (12, 23, 'b'),
        (3, 6, 7), (3, 7, 10), (0, 3, 7), (3, 7, 13), (2, 3, 11), (3, 10, 11), (1, 3, 11),
        (3, 5, 11), (3, 9, 10), (3, 10, 21), (0, 3, 4), (0, 10, 20), (0, 10, 19), (0, 4, 10),
        (0, 10, 17), (2, 3, 15), (3, 14, 15), (3, 15, 22), (3, 15, 18), (3, 17, 18), (3, 5, 18),
        (3, 8, 18), (2, 3, 19), (3, 14, 19), (3, 19, 21), (3, 12, 19), (3, 16, 23), (3, 8, 23),
        (3, 6, 23), (3, 20, 23), (7, 11, 14), (1, 7, 11), (4, 7, 11), (7, 11, 17), (7, 14, 16),
        (7, 12, 14), (7, 14, 19), (7, 12, 19), (0, 7, 19), (7, 19, 22), (4, 14, 20), (0, 4, 14),
        (4, 9, 14), (4, 8, 14), (7, 10, 15), (7, 15, 20), (7, 15, 21), (7, 9, 15), (7, 22, 23),
        (6, 7, 23), (7, 18, 23), (2, 7, 23), (2, 7, 8), (2, 7, 21), (2, 7, 20), (2, 8, 16),
        (2, 8, 23), (2, 8, 12), (2, 4, 12), (2, 12, 16), (2, 3, 12), (2, 4, 5), (2, 4, 15),
        (2, 4, 13), (2, 9, 15), (2, 15, 17), (2, 5, 13), (2, 13, 21), (2, 9, 13), (1, 2, 5),
        (0, 2, 5), (2, 9, 21), (2, 9, 19), (2, 16, 17), (2, 16, 20), (2, 11, 19), (2, 19, 23),
        (0, 2, 17), (2, 17, 21), (1, 2, 20), (0, 2, 20), (0, 1, 2), (1, 2, 11), (2, 11, 23),
        (11, 18, 19), (11, 14, 19), (4, 11, 19), (10, 11, 23), (11, 22, 23), (6, 11, 23),
        (4, 19, 23), (1, 19, 23), (5, 19, 23), (0, 1, 17), (0, 17, 21), (0, 9, 21), (0, 15, 21),
        (0, 4, 21), (0, 5, 13), (0, 5, 16), (0, 7, 8), (0, 7, 18), (5, 7, 18), (7, 18, 20),
        (0, 6, 16), (0, 6, 11), (0, 6, 20), (0, 6, 12), (0, 8, 18), (0, 11, 18), (0, 12, 18),
        (8, 9, 18), (8, 11, 18), (9, 16, 18), (5, 9, 18), (9, 13, 18), (0, 11, 12), (0, 11, 16),
        (0, 12, 14), (0, 9, 23), (0, 9, 22), (0, 9, 15), (0, 15, 19), (0, 20, 23), (0, 14, 16),
        (0, 8, 14), (0, 13, 19), (0, 13, 22), (0, 8, 22), (0, 22, 23), (14, 16, 19),
        (15, 18, 19), (15, 19, 22), (9, 15, 19), (19, 20, 22), (19, 21, 22), (1, 13, 18),
        (1, 5, 18), (1, 12, 18), (1, 18, 23), (11, 15, 18), (11, 15, 16), (4, 11, 15),
        (5, 11, 15), (4, 5, 17), (15, 18, 23), (15, 22, 23), (10, 15, 23), (6, 15, 23),
        (8, 12, 22), (4, 8, 22), (8, 15, 22), (8, 16, 23), (10, 15, 16), (10, 15, 20),
        (15, 17, 20), (6, 15, 20), (5, 6, 15), (6, 15, 17), (1, 5, 15), (13, 15, 21),
        (13, 14, 15), (1, 13, 15), (8, 15, 21), (8, 15, 16), (8, 12, 15), (12, 15, 16),
        (12, 14, 15), (14, 15, 17), (17, 18, 20), (18, 20, 21), (18, 19, 20), (17, 18, 21),
        (16, 18, 21), (4, 18, 21), (4, 18, 23), (4, 12, 18), (4, 16, 18), (4, 6, 19), (4, 6, 7),
        (1, 4, 6), (4, 6, 16), (6, 7, 9), (6, 11, 16), (6, 12, 16), (6, 11, 13), (6, 9, 17),
        (5, 6, 9), (6, 8, 9), (5, 6, 8), (3, 5, 6), (5, 9, 10), (5, 9, 14), (6, 12, 20),
        (6, 12, 21), (6, 13, 20), (3, 6, 13), (3, 12, 17), (6, 8, 21), (1, 6, 8), (1, 6, 17),
        (6, 17, 19), (1, 6, 21), (6, 13, 19), (6, 19, 21), (1, 14, 21), (1, 3, 21), (1, 4, 21),
        (1, 3, 9), (1, 3, 22), (1, 9, 22), (1, 16, 22), (1, 5, 22), (3, 14, 21), (3, 4, 16),
        (3, 4, 20), (3, 4, 22), (3, 13, 22), (3, 5, 8), (3, 8, 20), (3, 9, 20), (3, 9, 14),
        (5, 8, 10), (5, 8, 17), (5, 14, 21), (5, 14, 20), (5, 11, 14), (5, 17, 19), (5, 13, 23),
        (5, 7, 13), (5, 7, 22), (5, 10, 21), (5, 10, 11), (5, 12, 17), (5, 16, 22), (5, 12, 22),
        (5, 16, 20), (5, 12, 20), (5, 12, 21), (5, 20, 23), (5, 21, 23), (1, 9, 20),
        (1, 14, 20), (9, 12, 20), (1, 9, 14), (1, 14, 23), (1, 4, 23), (11, 14, 20),
        (13, 14, 16), (11, 16, 17), (8, 10, 16), (11, 12, 20), (13, 16, 18), (12, 18, 19),
        (13, 17, 18), (4, 12, 17), (12, 14, 23), (1, 12, 19), (1, 10, 12), (12, 16, 22),
        (4, 12, 22), (4, 17, 23), (4, 7, 22), (4, 11, 13), (4, 9, 16), (4, 9, 17), (4, 8, 21),
        (4, 8, 10), (4, 10, 20), (4, 10, 13), (4, 13, 20), (1, 7, 8), (7, 8, 9), (1, 8, 17),
        (1, 8, 13), (1, 7, 16), (7, 10, 16), (8, 10, 20), (8, 12, 13), (8, 11, 20), (8, 13, 14),
        (8, 14, 17), (8, 17, 19), (8, 19, 20), (17, 20, 22), (9, 11, 17), (11, 17, 22),
        (9, 11, 22), (11, 13, 22), (9, 11, 21), (9, 17, 22), (7, 9, 12), (1, 7, 10),
        (7, 12, 13), (7, 13, 17), (1, 10, 17), (1, 10, 16), (1, 13, 19), (1, 16, 19),
        (16, 19, 20), (10, 19, 21), (9, 10, 13), (9, 10, 12), (9, 12, 21), (9, 13, 16),
        (9, 16, 23), (13, 16, 20), (16, 21, 22), (16, 21, 23), (10, 11, 12), (10, 12, 23),
        (11, 13, 21), (12, 21, 23), (10, 17, 19), (10, 13, 19), (10, 13, 21), (10, 17, 23),
        (13, 20, 22), (17, 21, 22), (14, 21, 23), (20, 21, 22), (13, 14, 17), (13, 17, 23),
        (14, 17, 23),
    ),
    'a9': (
        (0, 13, 'a'), (0, 10, 'a'), (0, 14, 'a'), (0, 21, 'a'), (10, 21, 'a'), (10, 20, 'a'),
        (10, 13, 'a'), (2, 13, 'a'), (13, 16, 'a'), (8, 21, 'a'), (18, 21, 'a'), (2, 12, 'a'),
        (2, 16, 'a'), (2, 5, 'a'), (5, 16, 'a'), (6, 16, 'a'), (5, 18, 'a'), (5, 8, 'a'),
        (8, 18, 'a'), (8, 22, 'a'), (4, 18, 'a'), (4, 17, 'a'), (4, 14, 'a'), (1, 4, 'a'),
        (1, 14, 'a'), (14, 17, 'a'), (1, 12, 'a'), (1, 22, 'a'), (12, 22, 'a'), (9, 12, 'a'),
        (9, 22, 'a'), (9, 20, 'a'), (6, 9, 'a'), (6, 17, 'a'), (6, 20, 'a'), (17, 20, 'a'),
        (0, 10, 'b'), (0, 3, 10), (0, 6, 10), (0, 2, 'b'), (0, 21, 'b'), (0, 9, 'b'),
        (0, 2, 21), (0, 7, 21), (0, 2, 23), (0, 2, 11), (2, 12, 'b'), (2, 5, 'b'), (2, 17, 'b'),
        (2, 5, 20), (2, 5, 9), (2, 6, 12), (2, 12, 19), (5, 8, 'b'), (5, 14, 'b'), (5, 20, 'b'),
        (5, 8, 16), (5, 8, 15), (5, 16, 23), (5, 11, 16), (5, 20, 21), (5, 18, 20), (5, 13, 18),
        (5, 11, 18), (5, 11, 21), (5, 11, 17), (5, 19, 21), (5, 15, 21), (4, 5, 15), (5, 9, 15),
        (5, 9, 19), (5, 9, 12), (5, 13, 19), (1, 5, 19), (5, 12, 13), (3, 5, 13), (0, 5, 12),
        (5, 12, 23), (5, 6, 23), (5, 10, 23), (9, 12, 'b'), (8, 9, 12), (8, 9, 'b'),
        (9, 18, 'b'), (8, 22, 'b'), (8, 17, 'b'), (12, 14, 'b'), (12, 21, 'b'), (4, 14, 'b'),
        (1, 14, 'b'), (6, 17, 'b'), (4, 17, 'b'), (4, 6, 'b'), (4, 13, 'b'), (6, 16, 'b'),
        (6, 21, 'b'), (18, 21, 'b'), (16, 18, 'b'), (18, 20, 'b'), (13, 16, 'b'), (1, 16, 'b'),
        (1, 22, 'b'), (1, 10, 'b'), (10, 20, 'b'), (10, 13, 'b'), (13, 22, 'b'), (20, 22, 'b'),
        (1, 3, 14), (1, 14, 16), (1, 9, 16), (1, 13, 16), (0, 13, 16), (0, 8, 13), (0, 13, 20),
        (0, 1, 22), (1, 10, 22), (1, 5, 10), (1, 4, 10), (1, 4, 13), (1, 4, 8), (1, 5, 6),
        (1, 5, 7), (1, 6, 13), (1, 7, 13), (1, 6, 19), (1, 6, 18), (1, 7, 17), (1, 7, 21),
        (1, 9, 19), (1, 17, 19), (1, 9, 23), (1, 9, 15), (1, 15, 17), (1, 11, 17), (1, 15, 21),
        (1, 8, 15), (1, 8, 12), (1, 8, 18), (1, 12, 20), (1, 3, 12), (0, 1, 3), (1, 2, 3),
        (0, 1, 20), (0, 1, 23), (0, 3, 12), (0, 3, 18), (0, 12, 19), (0, 12, 15), (0, 9, 20),
        (0, 14, 20), (0, 9, 11), (0, 4, 9), (0, 11, 22), (0, 11, 17), (11, 17, 20), (0, 14, 19),
        (0, 14, 18), (0, 15, 18), (0, 4, 18), (0, 4, 5), (0, 4, 6), (0, 5, 7), (0, 5, 17),
        (0, 6, 22), (0, 6, 7), (0, 7, 17), (0, 8, 17), (0, 19, 22), (0, 16, 19), (0, 8, 23),
        (0, 8, 15), (0, 15, 16), (0, 16, 23), (8, 15, 20), (1, 2, 18), (1, 11, 18), (1, 2, 21),
        (1, 2, 23), (1, 11, 21), (1, 11, 20), (1, 20, 23), (2, 18, 21), (2, 15, 21),
        (15, 21, 22), (6, 18, 21), (2, 7, 18), (2, 8, 18), (8, 10, 18), (2, 9, 23), (2, 17, 23),
        (2, 7, 9), (2, 9, 16), (2, 6, 7), (2, 7, 14), (2, 6, 15), (2, 6, 11), (2, 11, 13),
        (2, 11, 20), (10, 11, 20), (10, 16, 20), (2, 3, 13), (2, 13, 15), (2, 10, 15),
        (2, 3, 20), (2, 3, 4), (2, 8, 20), (2, 8, 22), (2, 8, 14), (8, 22, 23), (2, 4, 14),
        (2, 14, 17), (2, 10, 17), (4, 7, 14), (2, 4, 10), (2, 4, 22), (2, 10, 19), (2, 16, 19),
        (2, 16, 22), (2, 19, 22), (3, 4, 12), (3, 6, 12), (3, 4, 21), (3, 4, 5), (4, 5, 6),
        (4, 6, 23), (5, 6, 14), (3, 5, 14), (3, 5, 22), (5, 14, 22), (3, 13, 21), (3, 13, 20),
        (3, 14, 16), (3, 14, 20), (3, 17, 20), (4, 17, 20), (4, 8, 17), (8, 9, 17), (3, 8, 9),
        (3, 6, 21), (3, 17, 21), (6, 13, 21), (3, 6, 8), (3, 6, 10), (3, 8, 16), (3, 8, 10),
        (3, 10, 18), (3, 9, 16), (3, 16, 22), (9, 16, 21), (3, 9, 17), (3, 9, 18), (3, 17, 22),
        (3, 18, 22), (4, 7, 8), (4, 8, 13), (4, 13, 15), (4, 7, 12), (4, 7, 16), (4, 10, 19),
        (4, 10, 22), (4, 11, 12), (4, 12, 23), (4, 15, 16), (4, 15, 20), (4, 16, 21),
        (4, 16, 23), (4, 20, 23), (4, 19, 20), (16, 20, 23), (20, 22, 23), (4, 18, 19),
        (4, 11, 18), (4, 9, 19), (9, 13, 19), (11, 16, 18), (4, 9, 22), (4, 9, 21), (4, 11, 21),
        (4, 11, 22), (11, 12, 21), (5, 7, 10), (5, 7, 17), (5, 10, 22), (5, 17, 22), (7, 9, 17),
        (9, 17, 23), (9, 21, 23), (9, 20, 21), (7, 9, 20), (7, 9, 10), (9, 10, 22), (9, 13, 22),
        (6, 7, 16), (6, 7, 8), (6, 16, 20), (16, 20, 22), (7, 16, 22), (7, 8, 16), (7, 8, 20),
        (8, 11, 16), (8, 14, 20), (11, 14, 16), (14, 15, 16), (12, 14, 20), (15, 16, 17),
        (15, 20, 22), (15, 18, 20), (6, 18, 20), (6, 9, 18), (6, 19, 20), (9, 10, 18),
        (9, 10, 11), (10, 12, 18), (6, 8, 11), (6, 8, 19), (6, 14, 19), (6, 9, 14), (6, 9, 11),
        (6, 11, 22), (6, 14, 23), (6, 17, 23), (6, 13, 17), (6, 13, 15), (9, 11, 14),
        (11, 14, 22), (10, 11, 14), (10, 11, 13), (10, 13, 17), (9, 13, 15), (9, 13, 14),
        (9, 14, 15), (17, 21, 23), (6, 10, 15), (6, 10, 12), (6, 12, 22), (6, 15, 22),
        (12, 15, 22), (7, 12, 22), (7, 10, 12), (7, 10, 14), (7, 12, 20), (7, 14, 18),
        (7, 13, 20), (10, 12, 15), (10, 14, 15), (10, 14, 23), (12, 15, 17), (12, 19, 20),
        (12, 16, 19), (13, 20, 21), (7, 13, 21), (7, 13, 18), (7, 18, 22), (7, 21, 22),
        (14, 15, 18), (14, 18, 23), (13, 14, 23), (15, 17, 18), (10, 16, 19), (8, 10, 19),
        (8, 10, 23), (8, 13, 23), (8, 11, 13), (8, 11, 12), (8, 12, 21), (10, 21, 23),
        (11, 12, 13), (12, 16, 21), (10, 16, 21), (10, 16, 17), (10, 17, 21), (14, 17, 21),
        (12, 14, 17), (12, 13, 14), (12, 13, 23), (12, 18, 23), (13, 14, 22), (13, 17, 22),
        (13, 17, 19), (13, 18, 19), (13, 18, 23), (14, 21, 22), (17, 19, 22), (17, 18, 19),
        (18, 19, 22), (18, 22, 23), (19, 20, 21), (21, 22, 23), (8, 14, 21), (8, 14, 19),
        (8, 19, 21), (14, 19, 21), (12, 16, 17), (12, 16, 18), (12, 17, 18), (16, 17, 18),
    ),
    'doubled': ((14, 2), (15, 3), (17, 5)),
    'uncovered': ((1, 13), (10, 22), (11, 23), (18, 6), (19, 7), (21, 9)),
}
