"""A generalized multinomial on integer sequences, with a matrix-count oracle.

For a content rho = (rho_1, ..., rho_L) the function mu(rho, .) sends a
finitely supported integer sequence delta to a nonnegative integer.  It is
1 at the zero sequence and 0 wherever delta has a negative entry; when the
weight of delta equals a partial sum rho_1 + ... + rho_l it satisfies

    mu(rho, delta)  =  sum of mu(rho, delta - g)
                       over g >= 0 with sum(g) == rho_l,

and it is 0 at every weight that is not a partial sum of rho.  Two useful
readings anchor the definition: for rho = (1, ..., 1) the value is the
multinomial coefficient (sum(delta); delta_1, delta_2, ...), and in general
it counts nonnegative integer matrices with row sums (rho_1, ..., rho_l)
and column sums delta, the coefficient of X^delta in the product of the
complete homogeneous expansions of degrees rho_1, ..., rho_l.

``mu_matrix_oracle`` counts those matrices by direct exhaustive search and
never consults the recursion above, so the two routes check each other.
"""

from math import factorial

from .core import as_content, bounded_compositions, trim
from .errors import NegativeEntryError, SizeLimitError

# The matrix oracle enumerates fillings; beyond this total it refuses.
DEFAULT_ORACLE_CAP = 30


def _prefix_sums(rho):
    """Map each partial sum rho_1 + ... + rho_l to its length l."""
    sums = {}
    acc = 0
    for i, part in enumerate(rho):
        acc += part
        sums[acc] = i + 1
    return sums


def mu(rho, delta, cache=None) -> int:
    """Evaluate the generalized multinomial for content rho at delta.

    delta may contain negative entries (the value is then 0).  The value is
    symmetric in the entries of delta, so cache keys use the sorted form;
    keys also carry the rho-prefix they depend on, which makes one cache
    safe to share across calls whose rho agree on prefixes.  With no cache
    argument each call memoizes only within itself.
    """
    r = as_content(rho)
    if cache is None:
        cache = {}
    return _mu(trim(delta), r, _prefix_sums(r), cache)


def _mu(d, rho, sums, cache):
    d = tuple(sorted(d, reverse=True))
    if d and d[-1] < 0:
        return 0
    d = trim(d)
    if not d:
        return 1
    w = sum(d)
    ell = sums.get(w)
    if ell is None:
        return 0
    key = (rho[:ell], d)
    value = cache.get(key)
    if value is None:
        value = 0
        # Only g supported inside d's positive entries can avoid a negative
        # entry in d - g, so bounding g by d loses nothing.
        for g in bounded_compositions(rho[ell - 1], d):
            value += _mu(tuple(x - y for x, y in zip(d, g)), rho, sums, cache)
        cache[key] = value
    return value


def multinomial(delta) -> int:
    """Exact multinomial coefficient (sum(delta); delta_1, delta_2, ...)."""
    d = tuple(delta)
    for x in d:
        if x < 0:
            raise NegativeEntryError(f"multinomial needs nonnegative entries, got {d!r}")
    value = factorial(sum(d))
    for x in d:
        value //= factorial(x)
    return value


def _bounded_count(total, bounds) -> int:
    """Number of tuples g with 0 <= g[i] <= bounds[i] and sum(g) == total.

    Sliding-window DP over the bounds; counts without enumerating.
    """
    if total < 0:
        return 0
    dp = [0] * (total + 1)
    dp[0] = 1
    for b in bounds:
        new = [0] * (total + 1)
        run = 0
        for s in range(total + 1):
            run += dp[s]
            if s > b:
                run -= dp[s - b - 1]
            new[s] = run
        dp = new
    return dp[total]


def mu_matrix_oracle(rho, delta, limit=DEFAULT_ORACLE_CAP) -> int:
    """Count nonnegative integer matrices with row sums rho and column sums delta.

    Exhaustive search, independent of ``mu``: rows are filled one by one
    with every composition that fits under the remaining column sums.  Four
    count-preserving devices keep it usable: transposing a matrix swaps its
    margins, so the search is oriented with the shorter margin as rows;
    permuting prescribed margins permutes matrices bijectively, so rows are
    sorted ascending (cheap rows get enumerated, expensive ones bundled);
    the final row is forced by column conservation; and the next-to-last
    row is counted by ``_bounded_count`` since each of its fillings forces
    the final row.  Returns 0 when the margins disagree in total or delta
    has a negative entry; raises SizeLimitError when the total exceeds
    `limit`.
    """
    r = as_content(rho)
    d = trim(delta)
    if any(x < 0 for x in d):
        return 0
    if sum(r) != sum(d):
        return 0
    if sum(r) > limit:
        raise SizeLimitError(f"matrix total {sum(r)} exceeds the oracle cap {limit}")
    if not r:
        return 1
    if len(d) < len(r):
        rows, cols = sorted(d), sorted(r, reverse=True)
    else:
        rows, cols = sorted(r), sorted(d, reverse=True)
    nrows = len(rows)
    if nrows == 1:
        return 1
    rem = list(cols)
    w = len(rem)

    def fill(i, j, left):
        # Place row i from column j on; `left` is what row i still needs.
        if j == w - 1:
            if left > rem[j]:
                return 0
            rem[j] -= left
            total = rows_from(i + 1)
            rem[j] += left
            return total
        capacity_after = 0
        for jj in range(j + 1, w):
            capacity_after += rem[jj]
        lo = left - capacity_after
        if lo < 0:
            lo = 0
        hi = rem[j] if rem[j] < left else left
        total = 0
        for v in range(lo, hi + 1):
            rem[j] -= v
            total += fill(i, j + 1, left - v)
            rem[j] += v
        return total

    def rows_from(i):
        if i == nrows - 2:
            # Every fitting filling of row i forces the final row.
            return _bounded_count(rows[i], rem)
        return fill(i, 0, rows[i])

    return rows_from(0)


def mu_table(rho, rows, cols, cache=None) -> list:
    """The table T[d1][d2] = mu(rho, (d1, d2)) for 0 <= d1 < rows, 0 <= d2 < cols."""
    if rows < 1 or cols < 1:
        raise ValueError(f"table needs at least one row and column, got {rows}x{cols}")
    r = as_content(rho)
    cache = {} if cache is None else cache
    sums = _prefix_sums(r)
    return [[_mu((d1, d2), r, sums, cache) for d2 in range(cols)] for d1 in range(rows)]
