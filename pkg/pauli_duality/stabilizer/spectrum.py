"""Closed-form spectrum of the periodic ZXZ chain."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import comb


def zxz_spectrum(N: int, J: float, B: float) -> np.ndarray:
    """All 2^N eigenvalues, ascending.

    The CZ layer turns the chain into N decoupled sites with levels
    +-sqrt(B^2 + J^2), so the spectrum is sum_k +-sqrt(B^2 + J^2) with
    binomial multiplicities.
    """
    eps = math.hypot(B, J)
    levels = [eps * (2 * flipped - N) for flipped in range(N + 1)]
    counts = [int(comb(N, flipped, exact=True)) for flipped in range(N + 1)]
    return np.repeat(np.array(levels, dtype=float), counts)
