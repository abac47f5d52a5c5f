"""Recursive construction of finite (aperiodic) orientable sequences.

The recursion lives on *ideal* sequences: words that begin with n-1 zeros and
end with n-1 ones.  The preimage pair of an ideal word under the adjacent-XOR
map is {T, complement(T)} with T starting in n zeros and ending in n
alternating bits; reversing the complement and overlapping it with T (by n
bits for even n, n-1 for odd n) produces an ideal word one order higher.
Starting from 01 this yields a family whose length roughly doubles per order.
"""
from __future__ import annotations

from .lempel import d_inverse_aperiodic
from .periodic import ConstructionTrace, TraceStep
from .seqcore import (
    FiniteSeq,
    GeneratingCycle,
    PreconditionError,
    complement,
    cyclic_slice,
)
from .verifier import verify_orientable

__all__ = [
    "BURNS_TABLE",
    "is_ideal",
    "merge_step",
    "build_aos",
    "predicted_length",
    "burns_bound",
    "aos_from_periodic",
]

#: Longest known aperiodic orientable sequence lengths from the literature
#: (exhaustive search results for orders 4-7, best-found beyond).  These are
#: reference values for reporting, not recomputed here.
BURNS_TABLE = {
    4: 8,
    5: 14,
    6: 26,
    7: 48,
    8: 108,
    9: 210,
    10: 440,
    11: 872,
    12: 1860,
    13: 3710,
    14: 7400,
    15: 15467,
    16: 31766,
}

#: Base of the recursion: the ideal order-2 word of (optimal) length 2.
DEFAULT_STARTER = FiniteSeq("01")
DEFAULT_STARTER_ORDER = 2


def is_ideal(s: FiniteSeq, n: int) -> bool:
    """True iff s starts with n-1 zeros and ends with n-1 ones."""
    if n < 2:
        raise ValueError(f"idealness needs order >= 2, got {n}")
    k = n - 1
    b = s.bits
    return len(b) >= 2 * k and b[:k] == "0" * k and b[-k:] == "1" * k


def merge_step(s: FiniteSeq, n: int) -> FiniteSeq:
    """One recursion step: split s via the inverse map and overlap the halves.

    T is the preimage starting with 0 (hence with n zeros), U the reversal of
    its complement; the output is T followed by U with its first n bits
    dropped (n even) or first n-1 bits dropped (n odd).  Output length is
    2l-n+2 or 2l-n+3 respectively.
    """
    if not is_ideal(s, n):
        raise PreconditionError(f"input is not ideal at order {n}: {s.bits!r}")
    t = d_inverse_aperiodic(s).first
    u = complement(t.bits)[::-1]
    drop = n if n % 2 == 0 else n - 1
    return FiniteSeq(t.bits + u[drop:])


def build_aos(
    n_target: int,
    *,
    starter: FiniteSeq = DEFAULT_STARTER,
    starter_order: int = DEFAULT_STARTER_ORDER,
    verify_steps: bool = False,
) -> tuple[FiniteSeq, ConstructionTrace]:
    """Iterate merge_step from the starter up to order n_target.

    The starter is always fully validated (ideal and orientable at its
    order); with verify_steps=True every intermediate is re-verified as well.
    The trace records one step per order; inserted_bit marks the odd-order
    merges, which add one extra window (the alternating one).
    """
    n0 = starter_order
    if n_target < n0:
        raise PreconditionError(f"target order {n_target} below starter order {n0}")
    if not is_ideal(starter, n0):
        raise PreconditionError(f"starter is not ideal at order {n0}")
    cx = verify_orientable(starter, n0)
    if cx is not None:
        raise PreconditionError(
            f"starter is not orientable at order {n0}: windows at "
            f"{cx.i} and {cx.j} collide ({cx.kind})"
        )
    s = starter
    trace = ConstructionTrace([TraceStep(n0, len(s), s.weight, False, None)])
    for n in range(n0, n_target):
        s = merge_step(s, n)
        if verify_steps:
            if not is_ideal(s, n + 1) or verify_orientable(s, n + 1) is not None:
                raise PreconditionError(f"recursion invariant broken at order {n + 1}")
        trace.steps.append(TraceStep(n + 1, len(s), s.weight, n % 2 == 1, None))
    return s, trace


def predicted_length(ell_n: int, n: int, m: int) -> int:
    """Closed-form length after m merge steps from an ideal word of length ell_n."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if n % 2 == 0:
        x = 2**m - 1 if m % 2 == 0 else 2**m - 2
    else:
        x = 2 ** (m + 1) - 2 if m % 2 == 0 else 2 ** (m + 1) - 1
    return 2**m * (ell_n - n + 1) + x // 3 + m + n - 1


def burns_bound(n: int) -> int:
    """Upper bound on the length of any aperiodic orientable sequence of order n."""
    if n < 2:
        raise ValueError(f"need order >= 2, got {n}")
    return 2 ** (n - 1) - 2 ** ((n - 1) // 2) + n - 1


def aos_from_periodic(c: GeneratingCycle, n: int) -> FiniteSeq:
    """Unroll an orientable cycle into a finite word of length period + n - 1."""
    return FiniteSeq(cyclic_slice(c, 0, c.period + n - 1))
