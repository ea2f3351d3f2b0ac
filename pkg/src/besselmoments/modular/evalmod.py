"""Multiprecision evaluation of the level-6 q-objects on the upper half-plane.

Direct series summation is accurate once |q| is small; points with
|q| > exp(-pi/2) are first moved by exact transformation steps (period
shift, the two inversions z -> -1/(6z) and z -> (3z-2)/(6z-3), and their
composition) and the known value laws are unwound afterwards.  The series
tail is bounded from the stored coefficients and must fall below the
target accuracy, otherwise evaluation fails loudly with diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import mpmath as mp

from .eta import modular_objects

Q_EASY = 0.2079  # exp(-pi/2)


@dataclass(frozen=True)
class HalfPlanePoint:
    z: object

    def __post_init__(self):
        if not mp.im(self.z) > 0:
            raise ValueError("point must have positive imaginary part")

    def q(self, prec: int):
        with mp.workprec(prec + 16):
            return mp.exp(2j * mp.pi * mp.mpmathify(self.z))


class ReductionError(RuntimeError):
    pass


def _w6(z):
    return -1 / (6 * z)


def _w3(z):
    return (3 * z - 2) / (6 * z - 3)


def _w2(z):
    return (4 * z + 1) / (6 * z + 2)


def _reduce(z, need_im: float) -> Tuple[object, List[Tuple[str, object]]]:
    """Move z upward with exact maps until Im z is comfortable.

    Returns the reduced point and the word of applied steps, each recorded
    with the point it was applied at (needed to unwind the value laws).
    """
    word = []
    for _ in range(64):
        shift = int(mp.nint(mp.re(z)))
        if shift:
            word.append(("T", z))
            z = z - shift
        if mp.im(z) >= need_im:
            return z, word
        cands = []
        if abs(z) ** 2 < mp.mpf(1) / 6:
            cands.append(("W6", _w6(z)))
        if abs(6 * z - 3) ** 2 < 3:
            cands.append(("W3", _w3(z)))
        if abs(6 * z + 2) ** 2 < 2:
            cands.append(("W2", _w2(z)))
        cands = [(n, w) for n, w in cands if mp.im(w) > mp.im(z) * (1 + 1e-12)]
        if not cands:
            return z, word
        name, znew = max(cands, key=lambda nw: mp.im(nw[1]))
        word.append((name, z))
        z = znew
    raise ReductionError("argument reduction did not converge")


def eval_qseries_checked(series, q, prec: int):
    """Evaluate an integer-grid QSeries at numeric q and bound its tail.

    The unstored coefficients are dominated by (max stored magnitude)
    times the windowed per-slot growth rate, with the growth exponent
    inflated by a safety quarter.  Returns (value, tail_bound)."""
    val = series.eval(q, prec)
    with mp.workprec(prec + 16):
        absq = abs(mp.mpmathify(q))
        n = series.nslots()
        bmax = series.max_abs_coeff()
        bmax = mp.mpf(bmax.numerator) / bmax.denominator if bmax else mp.mpf(0)
        rho = mp.mpf(series.growth_rate()) ** mp.mpf("1.25")
        if rho * absq >= 1:
            raise ReductionError(
                f"series tail not summable at |q|={mp.nstr(absq, 6)} "
                f"(inflated growth {mp.nstr(rho, 6)})"
            )
        tail = bmax * (rho * absq) ** n / (1 - rho * absq)
    return val, tail


def eval_modular(name: str, z, prec: int = 384, nterms: int = 200):
    """Evaluate X63, Z63, f66 or alpha3 at a half-plane point to ``prec`` bits.

    The cubic invariant has no reduction laws wired in and is evaluated
    directly (its use sites keep |q| small); the other three reduce freely.
    """
    objs = modular_objects(nterms)
    if name not in ("X63", "Z63", "f66", "alpha3"):
        raise ValueError(f"unknown object {name!r}")
    wp = prec + 32
    with mp.workprec(wp):
        z = mp.mpmathify(z)
        if not mp.im(z) > 0:
            raise ValueError("point must lie in the upper half-plane")
        target = mp.mpf(2) ** (-prec - 8)

        if name == "alpha3":
            q = mp.exp(2j * mp.pi * z)
            val, tail = eval_qseries_checked(objs["alpha3"], q, wp)
            if tail > target * max(1, abs(val)):
                raise ReductionError(
                    f"alpha3 tail {mp.nstr(tail, 4)} exceeds target at Im z = {mp.nstr(mp.im(z), 6)}"
                )
            return +val

        need_im = 0.24
        zr, word = _reduce(z, need_im)
        q = mp.exp(2j * mp.pi * zr)
        vals = {}
        tails = {}
        for nm in ("X63", "Z63", "f66"):
            vals[nm], tails[nm] = eval_qseries_checked(objs[nm], q, wp)
        scale = max(1, abs(vals[name]))
        worst = max(tails.values())
        if worst > target * scale:
            raise ReductionError(
                f"series tail {mp.nstr(worst, 4)} exceeds target after reduction "
                f"to Im z = {mp.nstr(mp.im(zr), 6)}; word = {[w[0] for w in word]}"
            )
        # unwind the word (last applied step first)
        for step, zp in reversed(word):
            x, zv, fv = vals["X63"], vals["Z63"], vals["f66"]
            if step == "T":
                continue
            if step == "W6":
                xp = 1 / (64 * x)
                zvp = zv / (-48 * zp**2 * xp)
                fvp = fv / (-216 * zp**6)
            elif step == "W3":
                xp = x
                zvp = zv / (-3 * (2 * zp - 1) ** 2)
                fvp = fv / (27 * (2 * zp - 1) ** 6)
            else:  # W2
                xp = 1 / (64 * x)
                zvp = zv / (16 * (1 + 3 * zp) ** 2 * xp)
                fvp = fv / (-8 * (1 + 3 * zp) ** 6)
            vals = {"X63": xp, "Z63": zvp, "f66": fvp}
        return +vals[name]
