"""Default seed classes for the construction-explanation pipeline.

The pipeline starts from a small set of catalogued classes and derives
as much of every other catalogue as the three constructions allow.  The
default seeds are the trivial classes of lengths 1 and 2, every class
of lengths 5, 7 and 8, one designated class of length 6, and nine
designated 2x9 classes.  The designated classes are exactly the ones
the constructions cannot produce, so they are also the expected
residue of the pipeline at their own shapes.

Triads are written as lists of row-major digit lists, members in
far-corner-digit order.
"""

from __future__ import annotations

UNEXPLAINED_6 = [
    [[0, 0, 0, 1, 1, 0], [0, 2, 0, 2, 2, 1], [0, 1, 2, 2, 0, 2]],
]

UNEXPLAINED_21 = [
    [[0, 0, 0, 0, 1, 2, 0, 1, 2, 2, 2, 1, 0, 2, 1, 2, 1, 2, 2, 1, 0],
     [0, 1, 1, 2, 0, 0, 1, 2, 2, 1, 2, 1, 1, 1, 2, 1, 2, 0, 2, 2, 1],
     [0, 0, 0, 0, 2, 1, 1, 0, 1, 0, 2, 1, 1, 0, 2, 0, 0, 0, 0, 1, 2]],
    [[0, 0, 0, 0, 1, 2, 2, 1, 0, 1, 2, 0, 0, 1, 0, 1, 0, 0, 2, 1, 0],
     [0, 0, 0, 0, 1, 2, 2, 1, 0, 0, 0, 1, 2, 0, 1, 2, 1, 2, 1, 2, 1],
     [0, 0, 0, 0, 1, 2, 2, 1, 0, 2, 2, 2, 1, 2, 2, 0, 2, 1, 0, 0, 2]],
    [[0, 0, 0, 1, 2, 2, 2, 1, 2, 2, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0],
     [0, 0, 0, 1, 2, 1, 0, 0, 2, 0, 1, 0, 1, 1, 2, 0, 2, 1, 2, 2, 1],
     [0, 0, 0, 1, 2, 0, 0, 2, 0, 1, 1, 0, 0, 2, 0, 2, 0, 2, 1, 0, 2]],
    [[0, 0, 1, 1, 0, 1, 0, 2, 1, 2, 1, 2, 1, 2, 0, 1, 0, 1, 1, 0, 0],
     [0, 0, 1, 1, 0, 0, 0, 2, 0, 0, 1, 1, 2, 1, 1, 0, 1, 0, 2, 2, 1],
     [0, 0, 2, 2, 0, 0, 0, 1, 0, 0, 2, 2, 1, 2, 2, 0, 2, 0, 1, 1, 2]],
    [[0, 0, 1, 1, 0, 2, 2, 0, 2, 0, 2, 0, 2, 1, 2, 2, 0, 1, 1, 0, 0],
     [0, 0, 1, 1, 2, 2, 2, 1, 0, 0, 2, 0, 2, 0, 1, 2, 1, 1, 2, 1, 1],
     [0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 2, 0, 1, 1, 1, 0, 0, 2, 2]],
    [[0, 0, 1, 1, 2, 0, 0, 1, 2, 2, 1, 0, 2, 0, 2, 1, 0, 0, 2, 1, 0],
     [0, 0, 0, 0, 2, 2, 2, 2, 0, 0, 0, 0, 2, 0, 1, 0, 1, 2, 1, 2, 1],
     [0, 0, 2, 1, 2, 2, 1, 2, 0, 1, 0, 0, 1, 2, 0, 0, 2, 0, 0, 0, 2]],
    [[0, 1, 1, 1, 1, 0, 0, 1, 2, 2, 2, 0, 1, 2, 1, 1, 2, 2, 2, 1, 0],
     [0, 0, 0, 2, 1, 2, 1, 1, 2, 0, 1, 0, 2, 0, 1, 0, 0, 2, 1, 0, 1],
     [0, 0, 0, 1, 2, 1, 0, 2, 2, 0, 2, 2, 0, 2, 2, 2, 2, 0, 1, 0, 2]],
    [[0, 1, 1, 1, 2, 1, 1, 2, 1, 2, 0, 1, 0, 0, 2, 2, 2, 1, 2, 1, 0],
     [0, 0, 0, 2, 2, 0, 1, 1, 2, 2, 2, 2, 1, 0, 2, 2, 1, 0, 2, 0, 1],
     [0, 0, 1, 1, 0, 2, 0, 0, 0, 0, 0, 1, 2, 0, 1, 2, 1, 0, 1, 0, 2]],
    [[0, 1, 1, 1, 2, 2, 0, 2, 2, 1, 2, 2, 1, 1, 1, 0, 2, 1, 2, 1, 0],
     [0, 0, 0, 1, 1, 1, 1, 0, 2, 2, 1, 2, 2, 1, 1, 2, 1, 2, 1, 0, 1],
     [0, 0, 1, 1, 0, 0, 1, 2, 0, 0, 1, 2, 1, 2, 0, 1, 0, 0, 2, 0, 2]],
]

UNEXPLAINED_24 = [
    [[0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 2, 0, 1, 2, 0, 0, 2, 1, 1, 2, 1, 0, 0],
     [0, 0, 1, 2, 2, 2, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 2, 1, 0, 0, 2, 2, 1],
     [0, 0, 1, 1, 0, 0, 2, 2, 0, 1, 1, 0, 2, 0, 0, 2, 0, 2, 0, 2, 1, 2, 1, 2]],
    [[0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 2, 0, 0, 2, 2, 0, 1, 2, 2, 2, 1, 0],
     [0, 0, 0, 2, 1, 2, 0, 1, 0, 0, 2, 0, 1, 2, 2, 0, 0, 2, 1, 0, 1, 0, 2, 1],
     [0, 0, 0, 1, 1, 2, 1, 1, 0, 2, 1, 2, 0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0, 2]],
    [[0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2, 1, 2, 1, 1, 0, 2, 0, 1, 2, 1, 0],
     [0, 0, 0, 1, 2, 0, 0, 0, 2, 2, 0, 0, 2, 0, 1, 1, 0, 1, 0, 2, 2, 0, 2, 1],
     [0, 0, 0, 2, 2, 2, 2, 0, 1, 1, 2, 1, 2, 2, 0, 2, 0, 1, 0, 2, 1, 1, 0, 2]],
    [[0, 1, 2, 0, 2, 2, 2, 0, 2, 0, 0, 0, 2, 1, 2, 2, 2, 1, 0, 1, 1, 2, 1, 0],
     [0, 0, 0, 1, 2, 1, 1, 0, 1, 2, 2, 1, 0, 2, 0, 0, 0, 2, 0, 2, 2, 2, 0, 1],
     [0, 0, 0, 0, 2, 0, 1, 1, 0, 0, 1, 2, 1, 0, 0, 1, 2, 1, 0, 0, 1, 1, 0, 2]],
    [[0, 1, 2, 1, 2, 2, 0, 1, 0, 2, 1, 0, 0, 1, 2, 0, 1, 0, 2, 2, 1, 2, 1, 0],
     [0, 0, 0, 2, 0, 0, 0, 2, 2, 1, 1, 2, 0, 0, 2, 1, 2, 2, 2, 2, 0, 2, 0, 1],
     [0, 0, 0, 1, 0, 0, 0, 1, 1, 2, 2, 1, 0, 0, 1, 2, 1, 1, 1, 1, 0, 1, 0, 2]],
]

UNEXPLAINED_2X9 = [
    [[0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 1, 0, 2, 0, 1, 2, 1, 0],
     [0, 2, 0, 0, 1, 1, 2, 1, 2, 1, 2, 2, 1, 1, 0, 2, 2, 1],
     [0, 1, 1, 2, 0, 0, 1, 0, 1, 2, 2, 1, 1, 0, 1, 0, 0, 2]],
    [[0, 0, 0, 0, 0, 1, 2, 2, 2, 2, 1, 0, 2, 0, 2, 1, 2, 0],
     [0, 1, 1, 2, 1, 1, 2, 1, 2, 1, 1, 0, 0, 1, 0, 2, 2, 1],
     [0, 1, 0, 0, 2, 1, 1, 0, 0, 1, 1, 2, 1, 2, 0, 1, 1, 2]],
    [[0, 0, 0, 0, 1, 0, 0, 0, 2, 2, 0, 1, 2, 1, 1, 0, 2, 0],
     [0, 0, 2, 0, 2, 1, 1, 1, 2, 1, 2, 2, 1, 2, 0, 2, 1, 1],
     [0, 0, 1, 2, 0, 0, 1, 1, 1, 2, 0, 2, 1, 0, 1, 1, 0, 2]],
    [[0, 0, 0, 0, 1, 0, 2, 2, 2, 0, 1, 2, 0, 0, 1, 2, 1, 0],
     [0, 2, 0, 0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 2, 2, 1],
     [0, 1, 1, 2, 1, 0, 0, 1, 1, 0, 2, 0, 2, 0, 1, 0, 0, 2]],
    [[0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 2, 0, 1, 0, 1, 0, 2, 0],
     [0, 0, 2, 0, 0, 2, 2, 2, 0, 0, 1, 1, 0, 2, 0, 2, 1, 1],
     [0, 0, 1, 2, 0, 1, 2, 2, 2, 1, 2, 1, 0, 2, 1, 1, 0, 2]],
    [[0, 0, 0, 0, 1, 2, 0, 1, 1, 1, 0, 2, 1, 1, 1, 0, 2, 0],
     [0, 0, 2, 0, 2, 2, 0, 1, 0, 2, 1, 2, 2, 2, 0, 2, 1, 1],
     [0, 0, 1, 2, 0, 2, 1, 2, 0, 1, 0, 0, 0, 0, 1, 1, 0, 2]],
    [[0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 2, 1, 1, 2, 1, 2, 0, 0],
     [0, 0, 2, 2, 1, 0, 2, 2, 0, 0, 2, 0, 2, 0, 1, 1, 2, 1],
     [0, 0, 1, 0, 2, 0, 1, 1, 1, 0, 2, 2, 0, 1, 1, 0, 1, 2]],
    [[0, 0, 0, 1, 0, 1, 0, 2, 0, 1, 2, 0, 2, 2, 1, 2, 0, 0],
     [0, 0, 2, 2, 1, 1, 2, 1, 1, 1, 2, 2, 0, 0, 1, 1, 2, 1],
     [0, 0, 1, 0, 2, 1, 1, 0, 2, 1, 2, 1, 1, 1, 1, 0, 1, 2]],
    [[0, 0, 0, 1, 0, 2, 1, 0, 1, 0, 1, 2, 1, 1, 1, 2, 0, 0],
     [0, 0, 2, 2, 1, 2, 0, 2, 2, 0, 1, 1, 2, 2, 1, 1, 2, 1],
     [0, 0, 1, 0, 2, 2, 2, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 2]],
]

# shape string -> "all" or a list of designated class representatives
DEFAULT_SEEDS: dict[str, object] = {
    "1": "all",
    "2": "all",
    "5": "all",
    "7": "all",
    "8": "all",
    "6": UNEXPLAINED_6,
    "2x9": UNEXPLAINED_2X9,
}
