"""Known reference values for the crossing- and nesting-bounded families.

These are the closed-form generating functions and series prefixes that
appear in the published literature on coloured noncrossing/nonnesting
diagrams with both statistics below 2.  The self-test and the regression
suite compare freshly computed results against them.

Polynomials are coefficient tuples in ascending powers of x.  Series are
counts by object size: set partition prefixes start at size 1 (a
one-vertex partition), permutation prefixes at size 0 (the empty word).
"""
from __future__ import annotations

SETPARTITION_GF: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    1: ((1, -1), (1, -3, 1)),
    2: ((1, -4, 1), (1, -7, 11, -1)),
    3: ((1, -10, 22, -1), (1, -14, 59, -74, 1)),
    4: ((1, -20, 122, -224, 1), (1, -25, 218, -782, 973, -1)),
}

PERMUTATION_GF: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    1: ((1, -1), (1, -2)),
    2: ((1, -6, 4), (1, -8, 12)),
    3: ((1, -17, 66, -36), (1, -20, 108, -144)),
    4: ((1, -36, 380, -1200, 576), (1, -40, 508, -2304, 2880)),
}

# The permutation denominators factor completely: (1-2x)(1-6x)...(1-r(r+1)x).
PERMUTATION_FACTOR_SLOPES: dict[int, tuple[int, ...]] = {
    1: (2,),
    2: (2, 6),
    3: (2, 6, 12),
    4: (2, 6, 12, 20),
}

SETPARTITION_SERIES: dict[int, tuple[int, ...]] = {
    1: (1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181, 10946),
    2: (1, 3, 11, 45, 197, 895, 4143, 19353, 90793, 426811),
    3: (1, 4, 19, 103, 616, 3949, 26545, 184120),
    4: (1, 5, 29, 193, 1441, 11765, 102701, 941857),
}

PERMUTATION_SERIES: dict[int, tuple[int, ...]] = {
    1: (1, 1, 2, 4, 8, 16, 32, 64, 128, 256),
    2: (1, 2, 8, 40, 224, 1312, 7808, 46720, 280064, 1679872),
    3: (1, 3, 18, 144, 1368, 14400, 160992, 1861632),
    4: (1, 4, 32, 352, 4736, 72832, 1226240, 21948928),
}

# A worked instance of the involution: the image of this 2-coloured
# permutation swaps the crossing and nesting numbers within each colour.
INVOLUTION_EXAMPLE_INPUT = "4 5 3 6 2 1 / 1 2 1 2 2 2"
INVOLUTION_EXAMPLE_IMAGE = "3 6 4 5 1 2 / 1 2 1 2 2 2"

# Fully worked tableau walks, one per encoding, with every intermediate
# shape and filling.  `arcs` lists (left, right) pairs; loops appear as
# (v, v) and only the hesitating walk may contain them.
TABLEAU_EXAMPLES: tuple[dict, ...] = (
    {
        "kind": "semioscillating",
        "n": 7,
        "arcs": ((1, 6), (3, 7), (4, 5)),
        "shapes": ((), (1,), (1,), (2,), (2, 1), (2,), (1,), ()),
        "fillings": (
            (),
            ((6,),),
            ((6,),),
            ((6, 7),),
            ((5, 7), (6,)),
            ((6, 7),),
            ((7,),),
            (),
        ),
    },
    {
        "kind": "vacillating",
        "n": 6,
        "arcs": ((1, 3), (3, 6), (4, 5)),
        "shapes": (
            (), (), (1,), (1,), (1,), (), (1,), (1,), (1, 1), (1,), (1,), (), (),
        ),
        "fillings": (
            (),
            (),
            ((3,),),
            ((3,),),
            ((3,),),
            (),
            ((6,),),
            ((6,),),
            ((5,), (6,)),
            ((6,),),
            ((6,),),
            (),
            (),
        ),
    },
    {
        "kind": "hesitating",
        "n": 6,
        "arcs": ((1, 4), (2, 5), (3, 3), (4, 6)),
        "shapes": (
            (), (1,), (1,), (2,), (2,), (2, 1), (2,), (3,), (2,), (2,), (1,), (1,), (),
        ),
        "fillings": (
            (),
            ((4,),),
            ((4,),),
            ((4, 5),),
            ((4, 5),),
            ((3, 5), (4,)),
            ((4, 5),),
            ((4, 5, 6),),
            ((5, 6),),
            ((5, 6),),
            ((6,),),
            ((6,),),
            (),
        ),
    },
)

# Per-colour walks of the worked involution input above.  Keys are
# (colour, side) with side "upper" (hesitating) or "lower" (vacillating).
INVOLUTION_EXAMPLE_SEQUENCES: dict[tuple[int, str], dict] = {
    (1, "upper"): {
        "arcs": ((1, 4), (3, 3)),
        "shapes": (
            (), (1,), (1,), (1,), (1,), (1, 1), (1,), (1,), (), (), (), (), (),
        ),
        "fillings": (
            (),
            ((4,),),
            ((4,),),
            ((4,),),
            ((4,),),
            ((3,), (4,)),
            ((4,),),
            ((4,),),
            (),
            (),
            (),
            (),
            (),
        ),
    },
    (1, "lower"): {
        "arcs": (),
        "shapes": ((),) * 13,
        "fillings": ((),) * 13,
    },
    (2, "upper"): {
        "arcs": ((2, 5), (4, 6)),
        "shapes": (
            (), (), (), (1,), (1,), (1,), (1,), (2,), (2,), (2,), (1,), (1,), (),
        ),
        "fillings": (
            (),
            (),
            (),
            ((5,),),
            ((5,),),
            ((5,),),
            ((5,),),
            ((5, 6),),
            ((5, 6),),
            ((5, 6),),
            ((6,),),
            ((6,),),
            (),
        ),
    },
    (2, "lower"): {
        "arcs": ((1, 6), (2, 5)),
        "shapes": (
            (), (), (1,), (1,), (1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (1,), (1,), (), (),
        ),
        "fillings": (
            (),
            (),
            ((6,),),
            ((6,),),
            ((5,), (6,)),
            ((5,), (6,)),
            ((5,), (6,)),
            ((5,), (6,)),
            ((5,), (6,)),
            ((6,),),
            ((6,),),
            (),
            (),
        ),
    },
}
