"""Semistandard tableaux by brute force, and standard-tableau count formulas.

A tableau is represented as a tuple of row tuples.  A filling of shape
alpha with content beta is semistandard when rows weakly increase left to
right, columns strictly increase top to bottom, and the value v occurs
exactly beta[v-1] times.
"""

from math import factorial

from .core import as_content, as_partition, is_partition, signed_shifted_vectors, trim, weight
from .errors import SizeLimitError, WeightMismatchError
from .multinomials import multinomial

# Enumeration is exponential in the number of cells; refuse above this.
MAX_ENUM_WEIGHT = 20


def is_valid_ssyt(rows, alpha, beta) -> bool:
    """True iff `rows` is a semistandard filling of shape alpha with content beta.

    Accepts beta with zero parts (the corresponding value must then not
    occur); any negative beta entry or non-partition alpha gives False.
    """
    a = trim(alpha)
    if not is_partition(a):
        return False
    b = tuple(beta)
    if any(x < 0 for x in b):
        return False
    grid = [tuple(row) for row in rows]
    if len(grid) != len(a) or any(len(row) != ai for row, ai in zip(grid, a)):
        return False
    counts = {}
    for row in grid:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                return False
            counts[v] = counts.get(v, 0) + 1
    if counts != {v + 1: c for v, c in enumerate(b) if c != 0}:
        return False
    for row in grid:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(1, len(grid)):
        if any(grid[i][j] <= grid[i - 1][j] for j in range(len(grid[i]))):
            return False
    return True


def _fill(a, b, collect):
    """Row-major backtracking over all semistandard fillings.

    Returns (count, tableaux or None).  Trying values in increasing order
    at each cell makes the collected output lexicographic in the row-major
    entry list.
    """
    k = len(a)
    ell = len(b)
    remaining = [0] + list(b)
    grid = [[0] * ai for ai in a]
    cells = [(i, j) for i in range(k) for j in range(a[i])]
    out = [] if collect else None
    count = 0

    def rec(pos):
        nonlocal count
        if pos == len(cells):
            count += 1
            if collect:
                out.append(tuple(tuple(row) for row in grid))
            return
        i, j = cells[pos]
        lo = 1
        if j > 0 and grid[i][j - 1] > lo:
            lo = grid[i][j - 1]
        if i > 0 and grid[i - 1][j] + 1 > lo:
            lo = grid[i - 1][j] + 1
        for v in range(lo, ell + 1):
            if remaining[v] == 0:
                continue
            remaining[v] -= 1
            grid[i][j] = v
            rec(pos + 1)
            remaining[v] += 1

    rec(0)
    return count, out


def _checked(alpha, beta, limit):
    a = as_partition(alpha)
    b = as_content(beta)
    n = weight(a)
    if n != weight(b):
        raise WeightMismatchError(f"shape sums to {n}, content to {weight(b)}")
    if n > limit:
        raise SizeLimitError(f"{n} cells exceed the enumeration cap {limit}")
    return a, b


def enumerate_ssyt(alpha, beta, limit=MAX_ENUM_WEIGHT) -> list:
    """All semistandard tableaux of the given shape and content.

    Tableaux come out in lexicographic order of their row-major entry
    lists and are pairwise distinct; the empty shape yields one empty
    tableau.  Raises WeightMismatchError when the totals differ and
    SizeLimitError beyond `limit` cells.
    """
    a, b = _checked(alpha, beta, limit)
    _, ts = _fill(a, b, collect=True)
    return ts


def count_ssyt(alpha, beta, limit=MAX_ENUM_WEIGHT) -> int:
    """Number of semistandard tableaux of the given shape and content."""
    a, b = _checked(alpha, beta, limit)
    count, _ = _fill(a, b, collect=False)
    return count


def hook_lengths(alpha) -> list:
    """Hook length of each cell: the cell, its arm to the right, its leg below."""
    a = as_partition(alpha)
    k = len(a)
    table = []
    for i in range(k):
        row = []
        for j in range(a[i]):
            arm = a[i] - j - 1
            leg = sum(1 for ii in range(i + 1, k) if a[ii] > j)
            row.append(1 + arm + leg)
        table.append(row)
    return table


def f_hook(alpha) -> int:
    """Number of standard tableaux of shape alpha, by the hook-length product."""
    a = as_partition(alpha)
    denominator = 1
    for row in hook_lengths(a):
        for h in row:
            denominator *= h
    value, remainder = divmod(factorial(weight(a)), denominator)
    assert remainder == 0, "the hook product must divide n! exactly"
    return value


def f_det(alpha, perm_cap=None) -> int:
    """Number of standard tableaux of shape alpha, by the signed multinomial sum.

    Sums sign(sigma) * multinomial(alpha_i - i + sigma(i)) over permutations
    sigma of the rows; terms with a negative component vanish and are
    skipped.  Raises SizeLimitError when alpha has more rows than the
    permutation cap.
    """
    a = as_partition(alpha)
    total = 0
    for sign, shifted in signed_shifted_vectors(a, perm_cap):
        total += sign * multinomial(shifted)
    assert total >= 0, "signed terms must cancel to a count"
    return total
