"""Cycle joining at conjugate windows and the recursive de Bruijn generator.

Two disjoint n-window cycles that contain a pair of conjugate n-windows can be
spliced into a single n-window cycle whose period is the sum of the input
periods.  Iterating the inverse adjacent-XOR map and splicing the resulting
complementary pair doubles a de Bruijn sequence's order; starting from [01]
this yields a de Bruijn cycle of any order.
"""
from __future__ import annotations

from typing import Optional

from .lempel import InverseKind, d_inverse_periodic
from .seqcore import (
    GeneratingCycle,
    PreconditionError,
    conjugate,
    cyclic_slice,
    window,
)
from .verifier import all_windows

__all__ = ["find_conjugate_positions", "join_at", "debruijn_lempel"]


def find_conjugate_positions(
    s: GeneratingCycle, t: GeneratingCycle, n: int
) -> Optional[tuple[int, int]]:
    """First (i, j) with the n-window of s at i conjugate to that of t at j.

    Positions are scanned with smallest i first, then smallest j, so the
    result is deterministic.  Returns None when no conjugate pair exists;
    callers are responsible for the inputs being disjoint n-window cycles.
    """
    first_j: dict[str, int] = {}
    for j, w in enumerate(all_windows(t, n)):
        first_j.setdefault(w, j)
    for i, w in enumerate(all_windows(s, n)):
        j = first_j.get(conjugate(w))
        if j is not None:
            return (i, j)
    return None


def join_at(
    s: GeneratingCycle, t: GeneratingCycle, i: int, j: int, n: int
) -> GeneratingCycle:
    """Splice t into s where their conjugate n-windows sit.

    The output cycle is
    [s_0..s_{i+n-1}, t_{j+n}..t_{m-1}, t_0..t_{j+n-1}, s_{i+n}..s_{l-1}]
    of period l+m, with index arithmetic cyclic in each source.
    """
    ell, m = s.period, t.period
    i %= ell
    j %= m
    if window(s, i, n) != conjugate(window(t, j, n)):
        raise PreconditionError(
            f"windows at positions {i} and {j} are not conjugate at order {n}"
        )
    joined = cyclic_slice(s, i + n, ell) + cyclic_slice(t, j + n, m)
    # Rotate so the cycle starts at s_0, matching the display above.
    k = (ell - i - n) % (ell + m)
    return GeneratingCycle(joined[k:] + joined[:k])


def debruijn_lempel(n: int) -> GeneratingCycle:
    """De Bruijn cycle of order n built by the doubling recursion from [01]."""
    if n < 1:
        raise PreconditionError(f"order must be >= 1, got {n}")
    c = GeneratingCycle("01")
    for k in range(1, n):
        inv = d_inverse_periodic(c)
        if inv.kind is InverseKind.DOUBLED_SINGLE:
            c = inv.first
            continue
        pos = find_conjugate_positions(inv.first, inv.second, k + 1)
        # A complementary pair covering all (k+1)-tuples always contains a
        # conjugate pair next to the alternating tuples.
        assert pos is not None
        c = join_at(inv.first, inv.second, pos[0], pos[1], k + 1)
    return c
