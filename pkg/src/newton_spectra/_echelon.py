"""Sparse exact row reduction."""

from __future__ import annotations

from fractions import Fraction


class Echelon:
    """Incremental row echelon form over Q on sparse rows {column: value}.

    Columns are any mutually comparable keys; the pivot of a row is its
    least column."""

    def __init__(self):
        self.pivots: dict = {}

    def add(self, row: dict) -> bool:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                self.pivots[lead] = {c: v * inv for c, v in row.items()}
                return True
            f = row[lead]
            for c, v in piv.items():
                x = row.get(c, 0) - f * v
                if x:
                    row[c] = x
                else:
                    row.pop(c, None)
        return False
