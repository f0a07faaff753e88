"""Dense exact linear algebra over any field-like scalar type.

Scalars only need +, -, *, /, and truthiness (nonzero).  Everything here
is desk-scale: no pivoting strategy beyond "first nonzero".
"""

from __future__ import annotations

from typing import List, Optional, Sequence


def solve_in_span(columns: Sequence[Sequence], target: Sequence, zero, one) -> Optional[List]:
    """Coefficients c with sum c_j * columns[j] = target, or None.

    When the columns are dependent an arbitrary consistent solution comes
    back; callers that need uniqueness pass independent columns.
    """
    m = len(columns)
    n = len(target)
    if any(len(col) != n for col in columns):
        raise ValueError("ragged column lengths")
    rows = [[col[i] for col in columns] + [target[i]] for i in range(n)]
    pivots = []
    row = 0
    for col in range(m):
        sel = None
        for r in range(row, n):
            if bool(rows[r][col]):
                sel = r
                break
        if sel is None:
            continue
        rows[row], rows[sel] = rows[sel], rows[row]
        inv = one / rows[row][col]
        rows[row] = [v * inv for v in rows[row]]
        for r in range(n):
            if r != row and bool(rows[r][col]):
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, n):
        if bool(rows[r][m]):
            return None
    sol = [zero] * m
    for r, c in pivots:
        sol[c] = rows[r][m]
    return sol


class SpanTracker:
    """Incremental span with combination tracking.

    Feed vectors one at a time.  `add` returns None while the fed vectors
    stay independent; at the first dependence it returns coefficients
    c_0..c_{j-1} with v_j = sum c_i v_i over the previously fed vectors.
    """

    def __init__(self, zero, one):
        self.zero = zero
        self.one = one
        self.rows = []  # (pivot, reduced vector, expression over fed vectors)
        self.count = 0

    def _pad(self, expr: List) -> List:
        return expr + [self.zero] * (self.count - len(expr))

    def add(self, vec: Sequence) -> Optional[List]:
        cur = list(vec)
        used = [self.zero] * self.count  # cur = vec - sum used_i * v_i
        for pivot, rvec, rexpr in self.rows:
            c = cur[pivot]
            if bool(c):
                cur = [a - c * b for a, b in zip(cur, rvec)]
                rex = self._pad(rexpr)
                used = [a + c * b for a, b in zip(used, rex)]
        pivot = None
        for i, c in enumerate(cur):
            if bool(c):
                pivot = i
                break
        if pivot is None:
            self.count += 1
            return used
        inv = self.one / cur[pivot]
        rvec = [inv * c for c in cur]
        # rvec = inv * (vec - sum used_i v_i): expression over fed vectors
        rexpr = [-(inv * c) for c in used] + [inv]
        self.rows.append((pivot, rvec, rexpr))
        self.count += 1
        return None
