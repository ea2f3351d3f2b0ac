"""Machine-readable certificates for verified identities, plus emitters."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field, asdict
from typing import List, Optional

import mpmath as mp


@dataclass
class Certificate:
    """One verified identity: computed sides, residual and verdict.

    ``status`` is "pass" iff |residual| < tolerance, with the tolerance
    recorded here; ``relative`` says whether the residual was normalized by
    the larger side's magnitude.  All numeric fields are decimal strings
    with an explicit digit count so emitted files are exact and stable.
    """

    identity_id: str
    lhs: str
    rhs: str
    residual: str
    relative: bool
    tolerance: str
    precision_bits: int
    trunc_order: int
    wall_ms: int
    status: str
    digits: int = 0
    provenance: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)


def _fmt(x, digits: int) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, mp.mpc):
        if abs(x.imag) == 0:
            x = x.real
        else:
            return f"({_fmt(x.real, digits)} {'+' if x.imag >= 0 else '-'} {_fmt(abs(x.imag), digits)}j)"
    return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


def make_certificate(
    identity_id: str,
    lhs,
    rhs,
    tolerance,
    *,
    relative: bool = True,
    precision_bits: int = 0,
    trunc_order: int = 0,
    provenance: Optional[List[str]] = None,
    started: Optional[float] = None,
) -> Certificate:
    """Build a certificate from two computed sides.

    The residual is |lhs - rhs|, divided by max(|lhs|, |rhs|) when
    ``relative`` is set and that scale is nonzero.
    """
    digits = max(int(precision_bits * 0.30103), 17)
    with mp.workprec(max(precision_bits, 64) + 16):
        l = mp.mpmathify(lhs)
        r = mp.mpmathify(rhs)
        res = abs(l - r)
        scale = max(abs(l), abs(r))
        if relative and scale > 0:
            res = res / scale
        tol = mp.mpf(tolerance)
        ok = res < tol if tol > 0 else res == 0
    wall = int((time.time() - started) * 1000) if started is not None else 0
    return Certificate(
        identity_id=identity_id,
        lhs=_fmt(l, digits),
        rhs=_fmt(r, digits),
        residual=_fmt(res, 8),
        relative=relative,
        tolerance=_fmt(tol, 5),
        precision_bits=precision_bits,
        trunc_order=trunc_order,
        wall_ms=wall,
        status="pass" if ok else "fail",
        digits=digits,
        provenance=list(provenance or []),
    )


def make_exact_certificate(
    identity_id: str,
    ok: bool,
    lhs: str,
    rhs: str,
    *,
    trunc_order: int = 0,
    provenance: Optional[List[str]] = None,
    started: Optional[float] = None,
) -> Certificate:
    """Certificate for a symbolic identity checked with zero tolerance."""
    wall = int((time.time() - started) * 1000) if started is not None else 0
    return Certificate(
        identity_id=identity_id,
        lhs=lhs,
        rhs=rhs,
        residual="0" if ok else "nonzero",
        relative=False,
        tolerance="0",
        precision_bits=0,
        trunc_order=trunc_order,
        wall_ms=wall,
        status="pass" if ok else "fail",
        digits=0,
        provenance=list(provenance or []),
    )


_FIELDS = [
    "identity_id",
    "lhs",
    "rhs",
    "residual",
    "relative",
    "tolerance",
    "precision_bits",
    "trunc_order",
    "wall_ms",
    "status",
    "digits",
    "provenance",
]


def render(certs: List[Certificate], fmt: str) -> str:
    """Render certificates as json, csv or markdown text (sorted by id)."""
    certs = sorted(certs, key=lambda c: c.identity_id)
    if fmt == "json":
        return json.dumps([c.to_dict() for c in certs], indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=_FIELDS, lineterminator="\n")
        w.writeheader()
        for c in certs:
            d = c.to_dict()
            d["provenance"] = ";".join(d["provenance"])
            w.writerow(d)
        return buf.getvalue()
    if fmt == "markdown":
        lines = [
            "| identity_id | residual | tolerance | status |",
            "|---|---|---|---|",
        ]
        for c in certs:
            lines.append(
                f"| {c.identity_id} | {c.residual} | {c.tolerance} | {c.status} |"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format: {fmt}")


def emit(certs: List[Certificate], fmt: str, path: str) -> str:
    """Write certificates to ``path``; returns the path."""
    text = render(certs, fmt)
    with open(path, "w") as fh:
        fh.write(text)
    return path
