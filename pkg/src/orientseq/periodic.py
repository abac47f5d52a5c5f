"""Recursive construction of periodic orientable sequences.

An orientable cycle whose period contains exactly one run of n-4 zeros stays
usable under the inverse adjacent-XOR map: the preimage contains exactly one
run of n-3 ones, and when its weight comes out even a single extra 1 inserted
into that run restores odd weight without breaking orientability.  Iterating
inverse-then-extend doubles the period (give or take one bit) at every order.

Also provided: the closed-form period prediction for the iteration and the
classical upper bound on the period of any orientable cycle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .lempel import InverseKind, d_inverse_periodic
from .seqcore import (
    GeneratingCycle,
    PreconditionError,
    cyclic_occurrences,
    cyclic_positions,
    window,
)
from .verifier import verify_orientable

__all__ = [
    "TraceStep",
    "ConstructionTrace",
    "DEFAULT_STARTER",
    "DEFAULT_STARTER_ORDER",
    "dai_bound",
    "is_good",
    "extend_odd",
    "next_orientable",
    "build_orientable",
    "predicted_period",
]

#: Hand-found good orientable starter of order 6, period 9, odd weight.
DEFAULT_STARTER = GeneratingCycle("001010111")
DEFAULT_STARTER_ORDER = 6


@dataclass(frozen=True)
class TraceStep:
    order: int
    period: int
    weight: int
    inserted_bit: bool
    insert_position: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "period": self.period,
            "weight": self.weight,
            "inserted_bit": self.inserted_bit,
            "insert_position": self.insert_position,
        }


@dataclass
class ConstructionTrace:
    """Per-order record of a recursive construction run."""

    steps: list[TraceStep] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"steps": [s.as_dict() for s in self.steps]}


def dai_bound(n: int) -> int:
    """Upper bound on the period of an orientable cycle of order n (n >= 5)."""
    if n < 5:
        raise ValueError(f"no periodic orientable sequence exists for order {n} < 5")
    two = Fraction(2)
    r = n % 4
    if r == 0:
        v = two ** (n - 1) - Fraction(41, 9) * two ** (n // 2 - 1) + Fraction(n, 3) + Fraction(16, 9)
    elif r == 1:
        v = two ** (n - 1) - Fraction(31, 9) * two ** ((n - 1) // 2) + Fraction(n, 3) + Fraction(19, 9)
    elif r == 2:
        v = two ** (n - 1) - Fraction(41, 9) * two ** (n // 2 - 1) + Fraction(n, 6) + Fraction(20, 9)
    else:
        v = two ** (n - 1) - Fraction(31, 9) * two ** ((n - 1) // 2) + Fraction(n, 6) + Fraction(43, 18)
    return math.floor(v)


def is_good(c: GeneratingCycle, n: int) -> bool:
    """True iff exactly one run of n-4 zeros occurs in a period of c."""
    if n < 5:
        raise ValueError(f"goodness needs order >= 5, got {n}")
    return cyclic_occurrences(c, "0" * (n - 4)) == 1


def _extend_odd(c: GeneratingCycle, n: int) -> tuple[GeneratingCycle, Optional[int]]:
    if n < 5:
        raise ValueError(f"extension needs order >= 5, got {n}")
    run = "1" * (n - 4)
    positions = cyclic_positions(c, run)
    if len(positions) != 1:
        raise PreconditionError(
            f"expected exactly one occurrence of 1^{n - 4}, found {len(positions)}"
        )
    if c.weight % 2 == 1:
        return c, None
    r = positions[0]
    # Minimality holds: the unique longest 1-run cannot recur at a shorter period.
    out = GeneratingCycle._trusted(c.bits[:r] + "1" + c.bits[r:])
    # The four windows covering the grown run must all contain 1^{n-3} and be
    # pairwise distinct; anything else means the input was not orientable.
    grown = "1" * (n - 3)
    replaced = [window(out, (r - 3 + k) % len(out), n) for k in range(4)]
    assert all(grown in w for w in replaced) and len(set(replaced)) == 4
    return out, r


def extend_odd(c: GeneratingCycle, n: int) -> GeneratingCycle:
    """Insert one extra 1 into the unique longest 1-run if the weight is even.

    Requires exactly one cyclic occurrence of 1^{n-4} in c.  Output always has
    odd weight; the period grows by one exactly when a bit was inserted.
    """
    return _extend_odd(c, n)[0]


def next_orientable(c: GeneratingCycle, n: int) -> tuple[GeneratingCycle, TraceStep]:
    """One recursion step: inverse map then odd-weight extension, at order n+1.

    The input must be a good orientable cycle of odd weight at order n (the
    caller can check via build_orientable's starter validation); its preimage
    is then a single doubled cycle, which is extended to odd weight.
    """
    inv = d_inverse_periodic(c)
    if inv.kind is not InverseKind.DOUBLED_SINGLE:
        raise PreconditionError(
            f"input weight {c.weight} is even; the recursion needs odd weight"
        )
    doubled = inv.first
    inserted = doubled.weight % 2 == 0
    out, pos = _extend_odd(doubled, n + 1)
    return out, TraceStep(n + 1, out.period, out.weight, inserted, pos)


def build_orientable(
    starter: GeneratingCycle,
    n0: int,
    n_target: int,
    *,
    verify_steps: bool = False,
) -> tuple[GeneratingCycle, ConstructionTrace]:
    """Iterate the recursion from a validated starter up to n_target.

    The starter must be orientable at order n0, good, and of odd weight; the
    first failing property is reported.  With verify_steps=True every
    intermediate cycle is re-verified (cost grows with the period).
    """
    if n_target < n0:
        raise PreconditionError(f"target order {n_target} below starter order {n0}")
    cx = verify_orientable(starter, n0)
    if cx is not None:
        raise PreconditionError(
            f"starter is not orientable at order {n0}: windows at "
            f"{cx.i} and {cx.j} collide ({cx.kind})"
        )
    if not is_good(starter, n0):
        raise PreconditionError(f"starter is not good at order {n0}")
    if starter.weight % 2 == 0:
        raise PreconditionError(f"starter weight {starter.weight} is even")
    trace = ConstructionTrace(
        [TraceStep(n0, starter.period, starter.weight, False, None)]
    )
    c = starter
    for n in range(n0, n_target):
        c, step = next_orientable(c, n)
        if verify_steps:
            bad = verify_orientable(c, n + 1)
            if bad is not None or not is_good(c, n + 1) or c.weight % 2 == 0:
                raise PreconditionError(f"recursion invariant broken at order {n + 1}")
        trace.steps.append(step)
    return c, trace


def predicted_period(m_start: int, j: int, offset: int) -> int:
    """Closed-form period after 2j+offset recursion steps from period m_start.

    offset selects the even (0) or odd (1) step of the two-order cycle; the
    applicable formula is determined by the parity of m_start.
    """
    if j < 0 or offset not in (0, 1):
        raise ValueError("need j >= 0 and offset in {0, 1}")
    q = 4**j
    if m_start % 2 == 1:
        if offset == 0:
            return q * m_start + (q - 1) // 3
        return 2 * q * m_start + (2 * q - 2) // 3
    if offset == 0:
        return q * m_start + (2 * q - 2) // 3
    return 2 * q * m_start + (4 * q - 1) // 3
