"""Row echelon forms over GF(2) on int bitsets."""

from __future__ import annotations


class Echelon:
    """Incrementally built echelon basis; each row is keyed by its top bit.

    A row stored under pivot ``p`` has no set bits above ``p``, so one
    descending sweep over the pivots reduces any vector to the unique
    representative of its coset that avoids every pivot bit.
    """

    __slots__ = ("rows", "_order")

    def __init__(self, rows=()):
        self.rows: dict[int, int] = {}
        self._order: list[int] | None = None
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        if self._order is None:
            self._order = sorted(self.rows, reverse=True)
        return self._order

    def reduce(self, v: int) -> int:
        rows = self.rows
        while v:
            top = v.bit_length() - 1
            row = rows.get(top)
            if row is None:
                # the top bit is free; clear the remaining pivots below it
                rest = v & ((1 << top) - 1)
                for p in self.pivots():
                    if p < top and (rest >> p) & 1:
                        rest ^= rows[p]
                return (1 << top) | rest
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; return True if it enlarged the row space."""
        v = self.reduce(v)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = v
        self._order = None
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

