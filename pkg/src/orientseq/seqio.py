"""Text format for sequence files.

A sequence file holds optional '#' comment lines followed by a single line of
'0'/'1' characters.  Exports write a header comment of the form

    # mode=periodic order=6

which is parsed leniently on import: unknown keys are ignored and a missing
header is fine.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Union

from .seqcore import BitsError, FiniteSeq, GeneratingCycle

__all__ = ["SequenceFile", "parse_sequence", "read_sequence", "write_sequence"]


@dataclass(frozen=True)
class SequenceFile:
    bits: str
    mode: Optional[str] = None  # "periodic" | "aperiodic"
    order: Optional[int] = None

    def to_cycle(self) -> GeneratingCycle:
        return GeneratingCycle(self.bits)

    def to_finite(self) -> FiniteSeq:
        return FiniteSeq(self.bits)


def parse_sequence(text: str) -> SequenceFile:
    mode: Optional[str] = None
    order: Optional[int] = None
    bits_lines = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                key, _, value = token.partition("=")
                if key == "mode" and value in ("periodic", "aperiodic"):
                    mode = value
                elif key == "order":
                    try:
                        order = int(value)
                    except ValueError:
                        pass
            continue
        bits_lines.append(line)
    if len(bits_lines) != 1:
        raise BitsError(
            f"expected exactly one line of bits, found {len(bits_lines)}"
        )
    bits = bits_lines[0]
    if bits.strip("01"):
        raise BitsError(f"sequence line contains non-binary characters: {bits!r}")
    return SequenceFile(bits=bits, mode=mode, order=order)


def read_sequence(path: Union[str, os.PathLike]) -> SequenceFile:
    with open(path, encoding="ascii") as fh:
        return parse_sequence(fh.read())


def write_sequence(
    path: Union[str, os.PathLike],
    seq: Union[GeneratingCycle, FiniteSeq, str],
    *,
    mode: Optional[str] = None,
    order: Optional[int] = None,
) -> None:
    if isinstance(seq, GeneratingCycle):
        bits = seq.bits
        mode = mode or "periodic"
    elif isinstance(seq, FiniteSeq):
        bits = seq.bits
        mode = mode or "aperiodic"
    else:
        bits = seq
    header = f"# mode={mode}" if mode else "#"
    if order is not None:
        header += f" order={order}"
    with open(path, "w", encoding="ascii") as fh:
        fh.write(header + "\n" + bits + "\n")
