"""Run configuration for the verification suites.

Config files use one ``key = value`` pair per line; ``#`` starts a comment.
Recognized keys: precision_bits, trunc_order, out, format, and
``tolerance.<suite>`` overrides.  The environment variable
BESSELMOMENTS_PREC_BITS overrides the precision (and only the precision).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Dict, Optional

# Default tolerances per suite.  Exact suites demand identity; smooth
# exponential-decay quadrature suites get 1e-25; oscillatory machinery is
# capped at 1e-10 (1e-8 for the direct random-walk integral); asymptotic
# ratio checks accept 10%.  Individual items may tighten or document a
# looser bound (recorded per certificate).
DEFAULT_TOLERANCES = {
    "table1": "0",
    "bmw-annihilation": "0",
    "recurrences": "1e-30",
    "conjecture-bbbg": "1e-25",
    "vanhove-ode": "1e-20",
    "reflection": "0",
    "exceptional-8bessel": "1e-25",
    "lvalues": "1e-25",
    "determinants": "1e-25",
    "crandall": "1e-25",
    "modular-param": "1e-20",
    "basechange": "1e-20",
    "kluyver": "1e-15",
    "asymptotics": "0.1",
    "pslq-discovery": "1e-60",
}

SUITE_NAMES = tuple(DEFAULT_TOLERANCES)


@dataclass
class SuiteConfig:
    precision_bits: int = 384
    trunc_order: int = 200
    tolerances: Dict[str, str] = field(default_factory=dict)
    out: Optional[str] = None
    format: str = "json"

    def tolerance(self, suite: str) -> str:
        return self.tolerances.get(suite, DEFAULT_TOLERANCES[suite])

    @classmethod
    def load(cls, path: Optional[str] = None) -> "SuiteConfig":
        cfg = cls()
        if path:
            with open(path) as fh:
                for raw in fh:
                    line = raw.split("#", 1)[0].strip()
                    if not line:
                        continue
                    if "=" not in line:
                        raise ValueError(f"bad config line: {raw.rstrip()}")
                    key, val = (s.strip() for s in line.split("=", 1))
                    if key == "precision_bits":
                        cfg.precision_bits = int(val)
                    elif key == "trunc_order":
                        cfg.trunc_order = int(val)
                    elif key == "out":
                        cfg.out = val
                    elif key == "format":
                        cfg.format = val
                    elif key.startswith("tolerance."):
                        cfg.tolerances[key.split(".", 1)[1]] = val
                    else:
                        raise ValueError(f"unknown config key: {key}")
        env = os.environ.get("BESSELMOMENTS_PREC_BITS")
        if env:
            cfg.precision_bits = int(env)
        return cfg
