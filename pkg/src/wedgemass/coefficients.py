"""Closed-form coefficient tables for the CM, LM and EX mass rules.

Every table is stored as exact integers together with its divisor; the
divisor is applied only after the weighted sum.
Consistent rule:  M = density / divisor * sum_k J_k * C_k
Lumped rule:      m = density / divisor * sum_k J_k * c_k
"""

import numpy as np

CM_CONSISTENT = (
    (4, 2, 2, 2, 1, 1),
    (2, 4, 2, 1, 2, 1),
    (2, 2, 4, 1, 1, 2),
    (2, 1, 1, 4, 2, 2),
    (1, 2, 1, 2, 4, 2),
    (1, 1, 2, 2, 2, 4),
)
CM_CONSISTENT_DIVISOR = 72
CM_LUMPED = (1, 1, 1, 1, 1, 1)
CM_LUMPED_DIVISOR = 6

LM_CONSISTENT = (
    (
        (244, 98, 98, 62, 19, 19),
        (98, 148, 74, 19, 14, 7),
        (98, 74, 148, 19, 7, 14),
        (62, 19, 19, 4, -22, -22),
        (19, 14, 7, -22, -92, -46),
        (19, 7, 14, -22, -46, -92),
    ),
    (
        (28, 38, 14, 14, 19, 7),
        (38, 124, 38, 19, 62, 19),
        (14, 38, 28, 7, 19, 14),
        (14, 19, 7, 28, 38, 14),
        (19, 62, 19, 38, 124, 38),
        (7, 19, 14, 14, 38, 28),
    ),
    (
        (28, 14, 38, 14, 7, 19),
        (14, 28, 38, 7, 14, 19),
        (38, 38, 124, 19, 19, 62),
        (14, 7, 19, 28, 14, 38),
        (7, 14, 19, 14, 28, 38),
        (19, 19, 62, 38, 38, 124),
    ),
    (
        (-60, -30, -30, 30, 15, 15),
        (-30, -60, -30, 15, 30, 15),
        (-30, -30, -60, 15, 15, 30),
        (30, 15, 15, 180, 90, 90),
        (15, 30, 15, 90, 180, 90),
        (15, 15, 30, 90, 90, 180),
    ),
)
LM_CONSISTENT_DIVISOR = 4320
LM_LUMPED = (
    (9, 6, 6, 1, -2, -2),
    (2, 5, 2, 2, 5, 2),
    (2, 2, 5, 2, 2, 5),
    (-1, -1, -1, 7, 7, 7),
)
LM_LUMPED_DIVISOR = 72

EX_CONSISTENT = (
    (
        (6, 0, 0, -2, -2, -2),
        (0, -6, -3, -2, -6, -3),
        (0, -3, -6, -2, -3, -6),
        (-2, -2, -2, -6, -4, -4),
        (-2, -6, -3, -4, -10, -5),
        (-2, -3, -6, -4, -5, -10),
    ),
    (
        (6, 6, 3, 2, 2, 1),
        (6, 18, 6, 2, 6, 2),
        (3, 6, 6, 1, 2, 2),
        (2, 2, 1, 2, 2, 1),
        (2, 6, 2, 2, 6, 2),
        (1, 2, 2, 1, 2, 2),
    ),
    (
        (6, 3, 6, 2, 1, 2),
        (3, 6, 6, 1, 2, 2),
        (6, 6, 18, 2, 2, 6),
        (2, 1, 2, 2, 1, 2),
        (1, 2, 2, 1, 2, 2),
        (2, 2, 6, 2, 2, 6),
    ),
    (
        (-6, -4, -4, -2, -2, -2),
        (-4, -10, -5, -2, -6, -3),
        (-4, -5, -10, -2, -3, -6),
        (-2, -2, -2, 6, 0, 0),
        (-2, -6, -3, 0, -6, -3),
        (-2, -3, -6, 0, -3, -6),
    ),
    (
        (2, 2, 1, 2, 2, 1),
        (2, 6, 2, 2, 6, 2),
        (1, 2, 2, 1, 2, 2),
        (2, 2, 1, 6, 6, 3),
        (2, 6, 2, 6, 18, 6),
        (1, 2, 2, 3, 6, 6),
    ),
    (
        (2, 1, 2, 2, 1, 2),
        (1, 2, 2, 1, 2, 2),
        (2, 2, 6, 2, 2, 6),
        (2, 1, 2, 6, 3, 6),
        (1, 2, 2, 3, 6, 6),
        (2, 2, 6, 6, 6, 18),
    ),
    (
        (24, 12, 12, 16, 8, 8),
        (12, 24, 12, 8, 16, 8),
        (12, 12, 24, 8, 8, 16),
        (16, 8, 8, 24, 12, 12),
        (8, 16, 8, 12, 24, 12),
        (8, 8, 16, 12, 12, 24),
    ),
)
EX_CONSISTENT_DIVISOR = 720
EX_LUMPED = (
    (0, -2, -2, -2, -3, -3),
    (2, 4, 2, 1, 2, 1),
    (2, 2, 4, 1, 1, 2),
    (-2, -3, -3, 0, -2, -2),
    (1, 2, 1, 2, 4, 2),
    (1, 1, 2, 2, 2, 4),
    (8, 8, 8, 8, 8, 8),
)
EX_LUMPED_DIVISOR = 72

#: (scheme, kind) -> (integer tables with leading sample axis, divisor)
TABLES = {
    ("cm", "consistent"): ((CM_CONSISTENT,), CM_CONSISTENT_DIVISOR),
    ("cm", "lumped"): ((CM_LUMPED,), CM_LUMPED_DIVISOR),
    ("lm", "consistent"): (LM_CONSISTENT, LM_CONSISTENT_DIVISOR),
    ("lm", "lumped"): (LM_LUMPED, LM_LUMPED_DIVISOR),
    ("ex", "consistent"): (EX_CONSISTENT, EX_CONSISTENT_DIVISOR),
    ("ex", "lumped"): (EX_LUMPED, EX_LUMPED_DIVISOR),
}


def integer_table(scheme, kind):
    """Integer array (k, 6, 6) or (k, 6) and its divisor."""
    tables, divisor = TABLES[(scheme, kind)]
    return np.array(tables, dtype=np.int64), divisor


def _as_float(scheme, kind):
    ints, divisor = integer_table(scheme, kind)
    out = ints.astype(np.float64)
    out.flags.writeable = False
    return out, divisor


#: float copies of the integer tables (divisor still separate)
FLOAT_TABLES = {key: _as_float(*key) for key in TABLES}
