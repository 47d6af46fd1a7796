"""Reference data for the two worked examples (Boolean semiring and Z_4, rank 2).

Transcribed by hand from the published tables and Hasse diagrams; nothing in
this module is computed.  Vectors use element labels as strings.
"""

from __future__ import annotations

EXAMPLE1 = {
    "semiring": "bool",
    "rank": 2,
    "subsemimodules": {
        "U1": [("0", "0")],
        "U2": [("0", "0"), ("0", "1")],
        "U3": [("0", "0"), ("1", "1")],
        "U4": [("0", "0"), ("1", "0")],
        "U5": [("0", "0"), ("0", "1"), ("1", "1")],
        "U6": [("0", "0"), ("1", "0"), ("1", "1")],
        "M": [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")],
    },
    "perp": {"U1": "M", "U2": "U4", "U3": "U1", "U4": "U2", "U5": "U1", "U6": "U1", "M": "U1"},
    "closed": ["U1", "U2", "U4", "M"],
    "splitting": ["U1", "U2", "U4", "M"],
    # Figure 1
    "covers": [
        ("U1", "U2"), ("U1", "U3"), ("U1", "U4"),
        ("U2", "U5"), ("U3", "U5"), ("U3", "U6"), ("U4", "U6"),
        ("U5", "M"), ("U6", "M"),
    ],
    # Figure 2
    "closed_covers": [("U1", "U2"), ("U1", "U4"), ("U2", "M"), ("U4", "M")],
    "n5": ["U1", "U2", "U4", "U6", "M"],
}


def _z4(*pairs):
    return [tuple(str(c) for c in p) for p in pairs]


_A = (0, 2)
_Z4 = (0, 1, 2, 3)

EXAMPLE2 = {
    "semiring": "z4",
    "rank": 2,
    "subsemimodules": {
        "U1": _z4((0, 0)),
        "U2": _z4(*[(0, a) for a in _A]),
        "U3": _z4((0, 0), (2, 2)),
        "U4": _z4(*[(a, 0) for a in _A]),
        "U5": _z4(*[(0, a) for a in _Z4]),
        "U6": _z4((0, 0), (0, 2), (2, 1), (2, 3)),
        "U7": _z4((0, 0), (1, 1), (2, 2), (3, 3)),
        "U8": _z4(*[(a, b) for a in _A for b in _A]),
        "U9": _z4((0, 0), (1, 3), (2, 2), (3, 1)),
        "U10": _z4((0, 0), (1, 2), (2, 0), (3, 2)),
        "U11": _z4(*[(a, 0) for a in _Z4]),
        "U12": _z4(*[(a, b) for a in _A for b in _Z4]),
        "U13": _z4((0, 0), (0, 2), (1, 1), (1, 3), (2, 0), (2, 2), (3, 1), (3, 3)),
        "U14": _z4(*[(a, b) for a in _Z4 for b in _A]),
        "M": _z4(*[(a, b) for a in _Z4 for b in _Z4]),
    },
    "perp": {
        "U1": "M", "U2": "U14", "U3": "U13", "U4": "U12", "U5": "U11", "U6": "U10",
        "U7": "U9", "U8": "U8", "U9": "U7", "U10": "U6", "U11": "U5", "U12": "U4",
        "U13": "U3", "U14": "U2", "M": "U1",
    },
    "closed": ["U1", "U2", "U3", "U4", "U5", "U6", "U7", "U8", "U9", "U10",
               "U11", "U12", "U13", "U14", "M"],
    "splitting": ["U1", "U5", "U6", "U10", "U11", "M"],
    # Figure 3
    "covers": [
        ("U1", "U2"), ("U1", "U3"), ("U1", "U4"),
        ("U2", "U5"), ("U2", "U6"), ("U2", "U8"),
        ("U3", "U7"), ("U3", "U8"), ("U3", "U9"),
        ("U4", "U8"), ("U4", "U10"), ("U4", "U11"),
        ("U5", "U12"), ("U6", "U12"), ("U8", "U12"),
        ("U7", "U13"), ("U8", "U13"), ("U9", "U13"),
        ("U8", "U14"), ("U10", "U14"), ("U11", "U14"),
        ("U12", "M"), ("U13", "M"), ("U14", "M"),
    ],
    # Figure 4
    "splitting_covers": [
        ("U1", "U5"), ("U1", "U6"), ("U1", "U10"), ("U1", "U11"),
        ("U5", "M"), ("U6", "M"), ("U10", "M"), ("U11", "M"),
    ],
}

EXAMPLES = {"example1": EXAMPLE1, "example2": EXAMPLE2}
