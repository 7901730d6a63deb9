"""Smith normal form over the integers with smallest-magnitude pivoting."""

from typing import NamedTuple, Sequence


class SmithForm(NamedTuple):
    rank: int
    invariant_factors: tuple[int, ...]

    @property
    def torsion(self) -> tuple[int, ...]:
        """Invariant factors greater than one."""
        return tuple(d for d in self.invariant_factors if d > 1)


def _smallest_entry(matrix: list[list[int]], start: int) -> tuple[int, int] | None:
    best = None
    best_abs = 0
    for i in range(start, len(matrix)):
        row = matrix[i]
        for j in range(start, len(row)):
            a = row[j]
            if a and (best is None or abs(a) < best_abs):
                best, best_abs = (i, j), abs(a)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """
    Diagonalize an integer matrix by unimodular row and column operations.

    Args:
        matrix: Rows of integers; may be empty or have empty rows

    Returns:
        Rank and invariant factors d1 | d2 | ... (all positive)
    """
    m = [list(map(int, row)) for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    factors: list[int] = []

    t = 0
    while t < min(n_rows, n_cols):
        pos = _smallest_entry(m, t)
        if pos is None:
            break
        i, j = pos
        m[t], m[i] = m[i], m[t]
        if j != t:
            for row in m:
                row[t], row[j] = row[j], row[t]

        while True:
            pivot = m[t][t]
            pivot_row = m[t]
            support = [c for c in range(t, n_cols) if pivot_row[c]]
            for r in range(t + 1, n_rows):
                a = m[r][t]
                if a:
                    q = a // pivot
                    row = m[r]
                    for c in support:
                        row[c] -= q * pivot_row[c]

            leftover = [r for r in range(t + 1, n_rows) if m[r][t]]
            if leftover:
                r = min(leftover, key=lambda r: abs(m[r][t]))
                m[t], m[r] = m[r], m[t]
                continue

            # column t is clear below the pivot, so column operations only touch row t
            for c in range(t + 1, n_cols):
                if pivot_row[c]:
                    pivot_row[c] %= pivot
            leftover = [c for c in range(t + 1, n_cols) if pivot_row[c]]
            if leftover:
                c = min(leftover, key=lambda c: abs(pivot_row[c]))
                for row in m:
                    row[t], row[c] = row[c], row[t]
                continue

            if abs(pivot) == 1:
                break
            offender = next(
                (r for r in range(t + 1, n_rows) for c in range(t + 1, n_cols) if m[r][c] % pivot),
                None,
            )
            if offender is not None:
                pivot_row_new = m[t]
                offender_row = m[offender]
                for c in range(t, n_cols):
                    pivot_row_new[c] += offender_row[c]
                continue
            break

        factors.append(abs(m[t][t]))
        t += 1

    return SmithForm(rank=len(factors), invariant_factors=tuple(factors))
