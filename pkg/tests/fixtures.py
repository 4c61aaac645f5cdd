"""Worked examples transcribed by hand, shared by unit and acceptance tests."""

# (alpha, permutation, code) for every composition of n <= 3
ENCODE_TABLE = [
    ((1,), "1", (0,)),
    ((2,), "1 2", (0, 0)),
    ((1, 1), "1 2", (0, 0)),
    ((1, 1), "2 1", (1, 0)),
    ((3,), "1 2 3", (0, 0, 0)),
    ((2, 1), "1 2 3", (0, 0, 0)),
    ((2, 1), "1 3 2", (0, 1, 0)),
    ((2, 1), "2 3 1", (1, 1, 0)),
    ((1, 2), "1 2 3", (0, 0, 0)),
    ((1, 2), "2 1 3", (1, 0, 0)),
    ((1, 2), "3 1 2", (2, 0, 0)),
    ((1, 1, 1), "1 2 3", (0, 0, 0)),
    ((1, 1, 1), "1 3 2", (0, 1, 0)),
    ((1, 1, 1), "2 1 3", (1, 0, 0)),
    ((1, 1, 1), "2 3 1", (0, 1, 0)),
    ((1, 1, 1), "3 1 2", (2, 0, 0)),
    ((1, 1, 1), "3 2 1", (2, 1, 0)),
]

# code -> reduced -> bracket for alpha = (1,2,1)
CONVERSION_121 = [
    ((0, 0, 0, 0), (1, 3, 3, 4), (0, 1, 1, 2, 3, 3, 3, 4, 4)),
    ((1, 0, 0, 0), (2, 3, 3, 4), (0, 2, 1, 2, 3, 3, 3, 4, 4)),
    ((0, 0, 1, 0), (1, 4, 3, 4), (0, 1, 1, 2, 4, 3, 3, 4, 4)),
    ((2, 0, 0, 0), (3, 3, 3, 4), (0, 3, 1, 2, 3, 3, 3, 4, 4)),
    ((1, 0, 1, 0), (2, 4, 3, 4), (0, 2, 1, 2, 4, 3, 3, 4, 4)),
    ((0, 1, 1, 0), (1, 4, 4, 4), (0, 1, 1, 2, 4, 4, 3, 4, 4)),
    ((3, 0, 0, 0), (4, 3, 3, 4), (0, 4, 1, 2, 3, 3, 3, 4, 4)),
    ((3, 0, 1, 0), (4, 4, 3, 4), (0, 4, 1, 2, 4, 3, 3, 4, 4)),
    ((1, 1, 1, 0), (2, 4, 4, 4), (0, 2, 1, 2, 4, 4, 3, 4, 4)),
    ((3, 1, 1, 0), (4, 4, 4, 4), (0, 4, 1, 2, 4, 4, 3, 4, 4)),
]

# the (2,3,2,1) running example
ALPHA_2321 = (2, 3, 2, 1)
PERM_2321 = "5 8 1 4 7 3 6 2"
CODE_2321 = (2, 6, 0, 1, 3, 1, 1, 0)
REDUCED_2321 = (8, 4, 8, 6, 5, 8, 8, 8)
BRACKET_2321 = (0, 1, 8, 4, 2, 3, 4, 8, 6, 5, 5, 6, 8, 8, 7, 8, 8)
BRACKET_2321_FIXED = (1, 2, 5, 6, 7, 11, 12, 15, 17)

# intermediate codes while decoding CODE_2321 (None = already placed)
_ = None
DECODE_STEPS_2321 = [
    ((2, 6, 0, 1, 3, 1, 1, 0), 3),
    ((1, 5, _, 1, 3, 1, 1, 0), 8),
    ((1, 4, _, 1, 2, 0, 0, _), 6),
    ((1, 3, _, 0, 1, _, 0, _), 4),
    ((0, 2, _, _, 1, _, 0, _), 1),
    ((_, 2, _, _, 1, _, 0, _), 7),
    ((_, 1, _, _, 0, _, _, _), 5),
    ((_, 0, _, _, _, _, _, _), 2),
]

# weak order on S_(1,2,1): elements with codes, and the drawn cover edges
WEAK_121 = {
    "1 2 3 4": (0, 0, 0, 0),
    "2 1 3 4": (1, 0, 0, 0),
    "1 2 4 3": (0, 0, 1, 0),
    "3 1 2 4": (2, 0, 0, 0),
    "2 1 4 3": (1, 0, 1, 0),
    "1 3 4 2": (0, 1, 1, 0),
    "4 1 2 3": (3, 0, 0, 0),
    "3 1 4 2": (1, 0, 1, 0),
    "2 3 4 1": (0, 1, 1, 0),
    "4 1 3 2": (3, 0, 1, 0),
    "3 2 4 1": (1, 1, 1, 0),
    "4 2 3 1": (3, 1, 1, 0),
}
WEAK_121_COVERS = [
    ("1 2 3 4", "2 1 3 4"),
    ("1 2 3 4", "1 2 4 3"),
    ("2 1 3 4", "3 1 2 4"),
    ("2 1 3 4", "2 1 4 3"),
    ("1 2 4 3", "2 1 4 3"),
    ("1 2 4 3", "1 3 4 2"),
    ("3 1 2 4", "4 1 2 3"),
    ("2 1 4 3", "3 1 4 2"),
    ("1 3 4 2", "2 3 4 1"),
    ("4 1 2 3", "4 1 3 2"),
    ("3 1 4 2", "4 1 3 2"),
    ("3 1 4 2", "3 2 4 1"),
    ("2 3 4 1", "3 2 4 1"),
    ("4 1 3 2", "4 2 3 1"),
    ("3 2 4 1", "4 2 3 1"),
]
# shaded cells of the figure: the only non-singleton fibers
NONTRIVIAL_FIBERS_121 = [("2 1 4 3", "3 1 4 2"), ("1 3 4 2", "2 3 4 1")]

CATALAN = [1, 2, 5, 14, 42, 132]
