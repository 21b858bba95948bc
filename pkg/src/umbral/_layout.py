"""Packing of exponent vectors into single Python ints.

Monomial multiplication becomes integer addition.  Capped fields (series
variables) carry a guard bit so that a product exceeding any cap is detected
with one add and one mask.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

FREE_BITS = 24  # width of an uncapped field; degrees stay far below 2**24


class Layout:
    __slots__ = ("caps", "shifts", "widths", "masks", "offset", "guard", "n", "ncapped")

    def __init__(self, caps: Sequence[Optional[int]]):
        self.caps = tuple(caps)
        self.n = len(self.caps)
        shifts, widths, masks = [], [], []
        offset = guard = 0
        pos = 0
        ncapped = 0
        for c in self.caps:
            if c is None:
                w = FREE_BITS
            else:
                ncapped += 1
                g = c.bit_length()  # 2**g > c, so 2c fits in g+1 bits
                w = g + 1
                offset |= ((1 << g) - 1 - c) << pos
                guard |= (1 << g) << pos
            shifts.append(pos)
            widths.append(w)
            masks.append((1 << w) - 1)
            pos += w
        self.shifts = tuple(shifts)
        self.widths = tuple(widths)
        self.masks = tuple(masks)
        self.offset = offset
        self.guard = guard
        self.ncapped = ncapped

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.n:
            raise ValueError(f"expected {self.n} exponents, got {len(exps)}")
        key = 0
        for e, s, w, c in zip(exps, self.shifts, self.widths, self.caps):
            if e < 0:
                raise ValueError("negative exponent")
            if c is None and e >= (1 << w):
                raise OverflowError("exponent too large")
            key |= e << s
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> s) & m for s, m in zip(self.shifts, self.masks))

    def in_caps(self, key: int) -> bool:
        """Valid for keys that are sums of two in-cap keys (or in-cap keys)."""
        return not ((key + self.offset) & self.guard)

    def exps_in_caps(self, exps: Sequence[int]) -> bool:
        return all(c is None or e <= c for e, c in zip(exps, self.caps))


@lru_cache(maxsize=None)
def layout_for(caps: tuple) -> Layout:
    return Layout(caps)
