"""Frozen reference data for the eight supported triples.

Centering constant C and sup-norm bound B are exact rationals in
"p/q" form; K is the largest k whose blocks need scanning and L(k) the
largest block index inside each such k.  The table2 command recomputes
everything from scratch and diffs against this copy.
"""

from __future__ import annotations

TRIPLES = (
    (1, 2, 3),
    (1, 2, 5),
    (1, 2, 7),
    (1, 3, 4),
    (1, 3, 5),
    (1, 4, 9),
    (2, 3, 5),
    (2, 3, 7),
)

#: triple -> (C, B, K, (L(1), ..., L(8)))
TABLE2 = {
    (1, 2, 3): ("17/24", "7/24", 3, (15, 2, 1, 0, 0, 0, 0, 0)),
    (1, 2, 5): ("27/40", "13/40", 4, (23, 4, 1, 1, 0, 0, 0, 0)),
    (1, 2, 7): ("41/56", "23/56", 5, (35, 6, 2, 1, 1, 0, 0, 0)),
    (1, 3, 4): ("7/12", "5/12", 4, (29, 5, 2, 1, 0, 0, 0, 0)),
    (1, 3, 5): ("19/30", "11/30", 5, (33, 6, 2, 1, 1, 0, 0, 0)),
    (1, 4, 9): ("13/24", "7/12", 8, (99, 22, 10, 4, 2, 1, 1, 1)),
    (2, 3, 5): ("49/120", "71/120", 7, (82, 18, 7, 3, 1, 1, 1, 0)),
    (2, 3, 7): ("71/168", "97/168", 8, (110, 25, 11, 5, 3, 1, 1, 1)),
}
