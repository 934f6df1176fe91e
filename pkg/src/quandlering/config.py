"""Search caps and default seeds.

Every cap can be raised at once through the ``QR_SIZE_CAP`` environment
variable, which replaces the numeric caps below (the enumeration order cap
is not affected).
"""

from __future__ import annotations

import os

AUTOMORPHISM_MAX_N = 8
HOMOMORPHISM_CAP = 10**7
ENUMERATE_MAX_N = 5
BOX_CAP = 5 * 10**6
CLOSURE_CAP = 2 * 10**6
DYADIC_MAX_DEPTH = 12

DEFAULT_SEED = 20240615


def size_cap(default: int) -> int:
    raw = os.environ.get("QR_SIZE_CAP")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default
