"""Position and orientation lookup over an orientable sequence.

Once a sequence is orientable at order n, every n-bit window read off it in
either direction is unique, so a plain table maps any window a reader sees to
the position where it occurs and the direction of travel.  Building the index
refuses non-orientable sources.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Union

from .seqcore import FiniteSeq, GeneratingCycle, PreconditionError, Window
from .verifier import all_windows, verify_orientable

__all__ = ["FORWARD", "REVERSE", "LocatorIndex", "build_index", "locate", "save_index", "load_index"]

FORWARD = "forward"
REVERSE = "reverse"

Seq = Union[GeneratingCycle, FiniteSeq]


@dataclass(frozen=True)
class LocatorIndex:
    """Complete window -> (position, orientation) table for one sequence.

    Periodic positions are modulo the period, anchored at the generating
    cycle's first bit; a reverse entry reports the position of the window
    whose reversal was looked up, in source coordinates.
    """

    order: int
    mode: str  # "periodic" | "aperiodic"
    source_size: int  # period or length of the indexed sequence
    entries: dict[Window, tuple[int, str]]

    def __len__(self) -> int:
        return len(self.entries)


def build_index(s: Seq, n: int) -> LocatorIndex:
    """Index every window of s, in both directions, at order n."""
    cx = verify_orientable(s, n)
    if cx is not None:
        raise PreconditionError(
            f"source is not orientable at order {n}: windows at "
            f"{cx.i} and {cx.j} collide ({cx.kind})"
        )
    windows = all_windows(s, n)
    entries: dict[Window, tuple[int, str]] = {}
    for i, w in enumerate(windows):
        entries[w] = (i, FORWARD)
    for i, w in enumerate(windows):
        entries[w[::-1]] = (i, REVERSE)
    # Orientability guarantees the two passes never collide.
    assert len(entries) == 2 * len(windows)
    if isinstance(s, GeneratingCycle):
        return LocatorIndex(n, "periodic", s.period, entries)
    return LocatorIndex(n, "aperiodic", len(s), entries)


def locate(idx: LocatorIndex, t: Window) -> Optional[tuple[int, str]]:
    """(position, orientation) of the window t, or None if absent."""
    if len(t) != idx.order:
        raise PreconditionError(
            f"window has {len(t)} bits but the index was built at order {idx.order}"
        )
    return idx.entries.get(t)


def save_index(idx: LocatorIndex, path: Union[str, os.PathLike]) -> None:
    """Write the index as sorted 'window position orientation' lines."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# locator order={idx.order} mode={idx.mode} size={idx.source_size}\n")
        for w in sorted(idx.entries):
            pos, orient = idx.entries[w]
            fh.write(f"{w} {pos} {orient}\n")


def load_index(path: Union[str, os.PathLike]) -> LocatorIndex:
    order = mode = size = None
    entries: dict[Window, tuple[int, str]] = {}
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for token in line[1:].split():
                    key, _, value = token.partition("=")
                    if key == "order":
                        order = int(value)
                    elif key == "mode":
                        mode = value
                    elif key == "size":
                        size = int(value)
                continue
            w, pos, orient = line.split()
            entries[w] = (int(pos), orient)
    if order is None or mode is None or size is None:
        raise ValueError(f"missing locator header in {path}")
    return LocatorIndex(order, mode, size, entries)
