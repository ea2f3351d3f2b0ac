"""Integer-relation detection with conservative acceptance rules."""

from __future__ import annotations

from typing import List, Optional, Sequence

import mpmath as mp


def integer_relation(
    values: Sequence,
    prec: int = 384,
    max_coeff: int = 10**6,
    max_steps: int = 20000,
) -> Optional[List[int]]:
    """Small integer vector v with |sum v_i x_i| below the detection
    threshold 10^-(D-20) at D working digits, or None.

    A candidate from the lattice search is accepted only if its residual
    also survives re-evaluation with doubled working precision, so noise
    relations at the detection edge are rejected.
    """
    if len(values) < 2:
        raise ValueError("need at least two values")
    if prec < 128:
        raise ValueError("precision below 128 bits is not reliable here")
    digits = int(prec * 0.30103)
    with mp.workprec(prec):
        xs = [mp.mpf(v) for v in values]
        tol = mp.mpf(10) ** (-(digits - 20))
        rel = mp.pslq(xs, tol=tol, maxcoeff=max_coeff, maxsteps=max_steps)
        if rel is None:
            return None
    with mp.workprec(2 * prec):
        resid = mp.fsum(int(c) * mp.mpf(v) for c, v in zip(rel, values))
        scale = max(abs(mp.mpf(v)) for v in values)
        if abs(resid) > tol * scale:
            return None
    return [int(c) for c in rel]
