"""Closed-form bounds on |Simpson functional - path mean|.

All four theorem bounds are built from |f'| at the real endpoints a and b,
the segment length L = b - a (the rotation factor enters only through its
modulus, which is 1), and an exponent q >= 1.  The classical fourth-order
bound m4 * L^4 / 2880 is included for phi = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite
from typing import Optional

from .domain import PhiInterval
from .expr import Expr, differentiate, evaluate

__all__ = [
    "BoundInputs",
    "BoundReport",
    "make_bound_report",
    "kernel_moment",
    "bound_t31",
    "bound_t32",
    "bound_t33",
    "bound_t34",
    "classical_bound",
    "estimate_m4",
    "DOMINANCE_SLOP",
]

# Numeric slop when flagging dominance: actual <= bound + DOMINANCE_SLOP.
DOMINANCE_SLOP = 1e-12


@dataclass(frozen=True)
class BoundInputs:
    """|f'(a)|, |f'(b)|, segment length and the exponent q."""

    deriv_a: float
    deriv_b: float
    length: float
    q: float = 1.0

    def __post_init__(self) -> None:
        if not (isfinite(self.deriv_a) and self.deriv_a >= 0.0):
            raise ValueError(f"deriv_a must be finite and >= 0, got {self.deriv_a}")
        if not (isfinite(self.deriv_b) and self.deriv_b >= 0.0):
            raise ValueError(f"deriv_b must be finite and >= 0, got {self.deriv_b}")
        if not self.length > 0.0:
            raise ValueError(f"length must be positive, got {self.length}")
        if not self.q >= 1.0:
            raise ValueError(f"q must be >= 1, got {self.q}")

    @property
    def p(self) -> float:
        """Conjugate exponent q/(q-1); defined only for q > 1."""
        if self.q <= 1.0:
            raise ValueError("conjugate exponent requires q > 1")
        return self.q / (self.q - 1.0)

    @classmethod
    def from_function(cls, f: Expr, iv: PhiInterval, q: float = 1.0) -> "BoundInputs":
        fp = differentiate(f)
        return cls(
            deriv_a=abs(evaluate(fp, complex(iv.a))),
            deriv_b=abs(evaluate(fp, complex(iv.b))),
            length=iv.length,
            q=q,
        )


@dataclass(frozen=True)
class BoundReport:
    """One bound row: value, measured |lhs|, slack and the dominance flag."""

    theorem: str  # T31 | T32 | T33 | T34 | CLASSICAL
    q: Optional[float]
    bound: float
    actual: float
    slack: float
    dominant: bool
    certificate_status: str  # verified | violated | skipped


def make_bound_report(theorem: str, q: Optional[float], bound: float,
                      actual: float, certificate_status: str) -> BoundReport:
    slack = bound - actual
    return BoundReport(theorem, q, bound, actual, slack,
                       slack >= -DOMINANCE_SLOP, certificate_status)


def kernel_moment(p: float) -> float:
    """Closed form of the half-interval moment: integral of |t-1/6|^p over [0, 1/2].

    Equals (1 + 2^(p+1)) / (6^(p+1) (p+1)); at p=1 this is 5/72, at p=2 it
    is 1/72.
    """
    if not p > 0.0:
        raise ValueError(f"moment exponent must be positive, got {p}")
    return (1.0 + 2.0 ** (p + 1.0)) / (6.0 ** (p + 1.0) * (p + 1.0))


def bound_t31(inputs: BoundInputs) -> float:
    """(5/72) L (|f'(a)| + |f'(b)|)."""
    return (5.0 / 72.0) * inputs.length * (inputs.deriv_a + inputs.deriv_b)


def bound_t32(inputs: BoundInputs) -> float:
    """Hoelder-split bound; requires q > 1.

    L * kernel_moment(p)^(1/p) * [ ((3A^q + B^q)/8)^(1/q) + ((A^q + 3B^q)/8)^(1/q) ]
    with A = |f'(a)|, B = |f'(b)| and p the conjugate exponent.
    """
    p = inputs.p
    q = inputs.q
    aq = inputs.deriv_a ** q
    bq = inputs.deriv_b ** q
    factor = kernel_moment(p) ** (1.0 / p)
    halves = ((3.0 * aq + bq) / 8.0) ** (1.0 / q) + ((aq + 3.0 * bq) / 8.0) ** (1.0 / q)
    return inputs.length * factor * halves


def bound_t33(inputs: BoundInputs) -> float:
    """Whole-interval Hoelder bound; requires q > 1.

    L * (2 kernel_moment(p))^(1/p) * ((A^q + B^q)/2)^(1/q).
    """
    p = inputs.p
    q = inputs.q
    mean = ((inputs.deriv_a ** q + inputs.deriv_b ** q) / 2.0) ** (1.0 / q)
    return inputs.length * (2.0 * kernel_moment(p)) ** (1.0 / p) * mean


def bound_t34(inputs: BoundInputs) -> float:
    """Power-mean bound, valid for all q >= 1; reduces to bound_t31 at q = 1.

    L * (5/72)^(1-1/q) * [ ((61A^q + 29B^q)/1296)^(1/q) + ((29A^q + 61B^q)/1296)^(1/q) ].
    """
    q = inputs.q
    aq = inputs.deriv_a ** q
    bq = inputs.deriv_b ** q
    lead = (5.0 / 72.0) ** (1.0 - 1.0 / q)
    halves = (((61.0 * aq + 29.0 * bq) / 1296.0) ** (1.0 / q)
              + ((29.0 * aq + 61.0 * bq) / 1296.0) ** (1.0 / q))
    return inputs.length * lead * halves


def classical_bound(m4: float, length: float) -> float:
    """Fourth-order bound m4 * length^4 / 2880 (phi = 0 setting)."""
    if not m4 >= 0.0:
        raise ValueError(f"m4 must be >= 0, got {m4}")
    if not length > 0.0:
        raise ValueError(f"length must be positive, got {length}")
    return m4 * length**4 / 2880.0


def estimate_m4(f: Expr, iv: PhiInterval, samples: int = 101) -> float:
    """Grid maximum of the fourth derivative magnitude on [a, b].

    A lower estimate of the supremum (sampling cannot certify a sup);
    only defined for phi = 0.
    """
    if iv.phi != 0.0:
        raise ValueError("fourth-derivative estimate requires phi = 0")
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    d4 = f
    for _ in range(4):
        d4 = differentiate(d4)
    best = 0.0
    for k in range(samples):
        t = k / (samples - 1)
        x = iv.a + t * (iv.b - iv.a)
        best = max(best, abs(evaluate(d4, complex(x))))
    return best
