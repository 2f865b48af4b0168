"""Exact dense linear algebra over the package's scalar domains.

Row reduction only ever divides by invertible scalars.  Over polynomial
scalars that means nonzero constants: if elimination would require
inverting a nonconstant polynomial, :class:`NeedsSpecialization` is
raised instead of guessing.
"""

from __future__ import annotations

from .scalars import MultiPoly, NeedsSpecialization, field_invert


def _invertible(x) -> bool:
    if isinstance(x, MultiPoly):
        return bool(x) and x.is_constant()
    return bool(x)


def rref(rows):
    """Reduced row echelon form.  Returns (reduced nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        stuck = False
        for i in range(r, len(rows)):
            if _invertible(rows[i][col]):
                pivot_row = i
                break
            if rows[i][col]:
                stuck = True
        if pivot_row is None:
            if stuck:
                raise NeedsSpecialization(
                    f"no invertible pivot in column {col}")
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field_invert(rows[r][col])
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def nullspace(rows, ncols: int):
    """Basis of the right nullspace of the matrix (list of length-ncols vectors)."""
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def in_span(spanning, v) -> bool:
    """Is v in the row span of `spanning`?  Exact."""
    if not any(v):
        return True
    if not spanning:
        return False
    base_rank = rank(spanning)
    return rank(list(spanning) + [list(v)]) == base_rank


def span_equal(a, b) -> bool:
    return all(in_span(a, v) for v in b) and all(in_span(b, v) for v in a)
