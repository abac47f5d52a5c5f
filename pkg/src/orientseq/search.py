"""Exhaustive branch-and-bound search for maximum orientable sequences.

Windows of order n trace walks on the shift graph over (n-1)-bit vertices;
an orientable cycle is a closed walk whose n-bit edges are distinct even
after reversal, and an aperiodic orientable sequence is the open-walk
analogue.  The searcher claims edges in reversal-closed orbits (symmetric
windows are never claimable), prunes branches that cannot beat the best
result found so far, and stops early once the best result meets the known
upper bound for the order.

Budgets are node counts, not wall time, so outcomes are machine independent.
A budget-limited run reports the best sequence found with exhaustive=False;
its result can seed a later run as an initial lower bound.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional

from .aperiodic import burns_bound
from .periodic import dai_bound
from .seqcore import least_rotation

__all__ = ["SearchResult", "max_orientable_period", "max_aos_length"]


@dataclass(frozen=True)
class SearchResult:
    value: int  # maximum period (cycles) or length (paths) found
    witness: Optional[str]
    exhaustive: bool
    nodes: int

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": self.witness,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
        }


class _BudgetExhausted(Exception):
    pass


def _orbit_table(n: int) -> list[Optional[int]]:
    """orbit[u] is the id of {u, reverse(u)}, or None when u is symmetric."""
    size = 1 << n
    table: list[Optional[int]] = [None] * size
    for u in range(size):
        r = int(format(u, f"0{n}b")[::-1], 2)
        table[u] = None if r == u else min(u, r)
    return table


def max_orientable_period(
    n: int,
    *,
    node_budget: Optional[int] = None,
    prune: bool = True,
    symmetry_reduction: bool = True,
    initial_best: Optional[tuple[int, str]] = None,
) -> SearchResult:
    """Maximum period of an orientable cycle of order n, with a witness.

    Each candidate cycle is anchored at the smallest edge orbit it uses, which
    enumerates every cycle once up to rotation; reversed traversals are
    skipped since the reversed cycle has the same period.  With
    symmetry_reduction the anchor's first bit is fixed to 0 (complement
    symmetry); disabling it or `prune` only slows the search down.
    """
    if n < 5:
        raise ValueError(f"no periodic orientable sequence exists for order {n} < 5")
    vmask = (1 << (n - 1)) - 1
    orbit = _orbit_table(n)
    orbit_ids = sorted({o for o in orbit if o is not None})
    cap = dai_bound(n)

    best_len = 0
    best_bits: Optional[str] = None
    if initial_best is not None:
        best_len, best_bits = initial_best
    nodes = 0
    exhaustive = True

    if symmetry_reduction:
        anchors = [o for o in orbit_ids if o < 1 << (n - 1)]
    else:
        anchors = [u for u in range(1 << n) if orbit[u] is not None]

    def dfs(cur: int, start: int, used: set, path: list, a_orbit: int, claimable: int):
        nonlocal nodes, best_len, best_bits
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _BudgetExhausted
        if cur == start:
            length = len(path)
            if length >= best_len:
                cand = least_rotation("".join(path))
                if length > best_len or best_bits is None or cand < best_bits:
                    best_len, best_bits = length, cand
        if prune and len(path) + claimable - len(used) <= best_len:
            return
        base = cur << 1
        for b in "01":
            t = base | (b == "1")
            o = orbit[t]
            if o is None or o < a_orbit or o in used:
                continue
            used.add(o)
            path.append(b)
            dfs(t & vmask, start, used, path, a_orbit, claimable)
            path.pop()
            used.discard(o)

    try:
        for anchor in anchors:
            if best_len >= cap:
                break
            a_orbit = orbit[anchor]
            claimable = len(orbit_ids) - bisect_left(orbit_ids, a_orbit)
            dfs(
                anchor & vmask,
                anchor >> 1,
                {a_orbit},
                ["1" if anchor & 1 else "0"],
                a_orbit,
                claimable,
            )
    except _BudgetExhausted:
        exhaustive = False
    return SearchResult(best_len, best_bits, exhaustive, nodes)


def max_aos_length(
    n: int,
    *,
    node_budget: Optional[int] = None,
    prune: bool = True,
    symmetry_reduction: bool = True,
    initial_best: Optional[tuple[int, str]] = None,
) -> SearchResult:
    """Maximum length of an aperiodic orientable sequence of order n.

    Open walks are enumerated from every start vertex (each path has a unique
    one); symmetry_reduction fixes the first bit to 0 via complement symmetry.
    """
    if n < 2:
        raise ValueError(f"aperiodic search needs order >= 2, got {n}")
    vmask = (1 << (n - 1)) - 1
    orbit = _orbit_table(n)
    total_claimable = len({o for o in orbit if o is not None})
    cap = burns_bound(n)

    best_len = 0
    best_bits: Optional[str] = None
    if initial_best is not None:
        best_len, best_bits = initial_best
    nodes = 0
    exhaustive = True

    starts = range(1 << (n - 2)) if symmetry_reduction else range(1 << (n - 1))

    def dfs(cur: int, prefix: str, used: set, path: list):
        nonlocal nodes, best_len, best_bits
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _BudgetExhausted
        length = (n - 1) + len(path)
        if path and length >= best_len:
            cand = prefix + "".join(path)
            if length > best_len or best_bits is None or cand < best_bits:
                best_len, best_bits = length, cand
        if prune and length + total_claimable - len(used) <= best_len:
            return
        base = cur << 1
        for b in "01":
            t = base | (b == "1")
            o = orbit[t]
            if o is None or o in used:
                continue
            used.add(o)
            path.append(b)
            dfs(t & vmask, prefix, used, path)
            path.pop()
            used.discard(o)

    try:
        for v in starts:
            if best_len >= cap:
                break
            dfs(v, format(v, f"0{n - 1}b"), set(), [])
    except _BudgetExhausted:
        exhaustive = False
    return SearchResult(best_len, best_bits, exhaustive, nodes)
