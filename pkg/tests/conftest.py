"""Frozen reference data and independent brute-force oracles for the tests.

The counters here deliberately avoid the package's own algorithms: fillings
are assembled row by row from weakly increasing candidate rows, and shapes
come from a separate recursion.  A bug in the library cannot hide inside
its own test oracle.
"""

from itertools import combinations_with_replacement

# mu((3,2,3,2,3,2,3,2), (i, j)) for 0 <= i, j <= 8, row index i, column j.
# Frozen from direct enumeration of nonnegative integer matrices with row
# sums (3,2,3,2,3,2,3,2) and column sums (i, j).  The checkerboard of zeros
# marks weights i+j that are not partial sums of the row-sum sequence.
MU_REFERENCE_RHO = (3, 2, 3, 2, 3, 2, 3, 2)
MU_REFERENCE_TABLE = [
    [1, 0, 0, 1, 0, 1, 0, 0, 1],
    [0, 0, 1, 0, 2, 0, 0, 3, 0],
    [0, 1, 0, 3, 0, 0, 6, 0, 10],
    [1, 0, 3, 0, 0, 9, 0, 18, 0],
    [0, 2, 0, 0, 10, 0, 25, 0, 0],
    [1, 0, 0, 9, 0, 28, 0, 0, 81],
    [0, 0, 6, 0, 25, 0, 0, 96, 0],
    [0, 3, 0, 18, 0, 0, 96, 0, 273],
    [1, 0, 10, 0, 0, 81, 0, 273, 0],
]

# One fully worked enumeration case: this shape and content admit exactly
# 15 fillings (frozen from reference_ssyt below), one of which is spelled
# out as WORKED_TABLEAU.
WORKED_SHAPE = (4, 4, 3, 3)
WORKED_CONTENT = (3, 3, 2, 2, 3, 1)
WORKED_COUNT = 15
WORKED_TABLEAU = ((1, 1, 1, 2), (2, 2, 3, 4), (3, 4, 5), (5, 5, 6))


def reference_ssyt(shape, content):
    """All semistandard fillings of ``shape`` with the given content.

    Rows are drawn whole from combinations_with_replacement (weakly
    increasing by construction) and admitted when strictly above the
    previous row in every column and within the remaining supply.
    """
    shape = tuple(shape)
    content = tuple(content)
    values = range(1, len(content) + 1)
    out = []

    def rows_from(i, prev, counts, acc):
        if i == len(shape):
            if all(c == 0 for c in counts):
                out.append(tuple(acc))
            return
        for row in combinations_with_replacement(values, shape[i]):
            if prev is not None and any(row[j] <= prev[j] for j in range(len(row))):
                continue
            new = list(counts)
            for v in row:
                new[v - 1] -= 1
            if min(new, default=0) >= 0:
                rows_from(i + 1, row, new, acc + [row])

    rows_from(0, None, list(content), [])
    return out


def count_fillings_with_entries_up_to(shape, p):
    """Number of semistandard fillings of ``shape`` with entries in 1..p."""
    shape = tuple(shape)

    def rows_from(i, prev):
        if i == len(shape):
            return 1
        total = 0
        for row in combinations_with_replacement(range(1, p + 1), shape[i]):
            if prev is None or all(row[j] > prev[j] for j in range(len(row))):
                total += rows_from(i + 1, row)
        return total

    return rows_from(0, None)


def shapes_in_box(p, q):
    """All partitions with at most p rows and every part at most q."""
    out = [()]

    def rec(prefix, rows_left, max_part):
        for part in range(1, max_part + 1):
            shape = prefix + (part,)
            out.append(shape)
            if rows_left > 1:
                rec(shape, rows_left - 1, part)

    if p > 0 and q > 0:
        rec((), p, q)
    return out


def nonneg_tuples(m, length):
    """All tuples of `length` nonnegative integers summing to m."""
    if length == 0:
        if m == 0:
            yield ()
        return
    for first in range(m + 1):
        for rest in nonneg_tuples(m - first, length - 1):
            yield (first,) + rest
