"""Integer sequences, partitions, strips, and signed-permutation plumbing.

Sequences are plain tuples of ints and are always read as if they continued
with zeros, so (2, 1) and (2, 1, 0) denote the same object; ``trim`` gives
the canonical representative.  A *proper partition* is weakly decreasing
with positive parts; a *content* is a sequence of positive parts in a fixed
order (the multiplicities of the values 1, 2, ... in a tableau).
"""

from itertools import permutations as _itertools_permutations

from .errors import InvalidShapeError, NegativeEntryError, SizeLimitError

# k! permutations are generated for a length-k shape; above this cap we
# refuse instead of silently looping for hours.
DEFAULT_PERM_CAP = 10


def trim(entries) -> tuple:
    """Drop trailing zeros: the canonical form of an integer sequence."""
    t = tuple(entries)
    end = len(t)
    while end > 0 and t[end - 1] == 0:
        end -= 1
    return t[:end]


def weight(entries) -> int:
    """Sum of the entries (negative entries count with their sign)."""
    return sum(entries)


def is_partition(entries) -> bool:
    """True iff the sequence is weakly decreasing and positive up to trailing zeros."""
    t = trim(entries)
    if any(a <= 0 for a in t):
        return False
    return all(a >= b for a, b in zip(t, t[1:]))


def as_partition(entries) -> tuple:
    """Trim and validate a proper partition; raises InvalidShapeError otherwise."""
    t = trim(entries)
    if not is_partition(t):
        raise InvalidShapeError(f"not a proper partition: {tuple(entries)!r}")
    return t


def as_content(entries) -> tuple:
    """Trim trailing zeros and validate a gap-free content (all parts positive)."""
    t = trim(entries)
    for a in t:
        if a < 0:
            raise NegativeEntryError(f"content entries must be >= 0, got {tuple(entries)!r}")
        if a == 0:
            raise ValueError(
                f"content has an interior zero part, normalize it first: {tuple(entries)!r}"
            )
    return t


def normalize_content(entries) -> tuple:
    """Remove zero parts, keeping the nonzero parts in their original order.

    Relabelling tableau entries along the removed value gaps is a bijection
    on tableaux, so Kostka numbers are unchanged: K(alpha, s) equals
    K(alpha, normalize_content(s)) for every shape alpha.
    """
    t = tuple(entries)
    if any(a < 0 for a in t):
        raise NegativeEntryError(f"content entries must be >= 0, got {t!r}")
    return tuple(a for a in t if a != 0)


def bounded_compositions(total, bounds):
    """Yield every tuple g with 0 <= g[i] <= bounds[i] and sum(g) == total.

    Suffix capacities keep the search from entering dead ends, so the cost
    is proportional to the number of tuples produced.
    """
    bounds = tuple(bounds)
    n = len(bounds)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bounds[i]

    def rec(i, left):
        if i == n:
            yield ()
            return
        lo = left - suffix[i + 1]
        if lo < 0:
            lo = 0
        hi = bounds[i] if bounds[i] < left else left
        for g in range(lo, hi + 1):
            for rest in rec(i + 1, left - g):
                yield (g,) + rest

    if total < 0 or total > suffix[0]:
        return iter(())
    return rec(0, total)


def horizontal_strips(alpha, m) -> list:
    """All removal vectors g of weight m leaving a shape that is still a partition.

    Removing g[i] cells from the right end of row i keeps the rows nested
    exactly when g[i] <= alpha[i] - alpha[i+1], i.e. row i may not be cut
    below the length of row i+1.  Returned tuples have one entry per row of
    alpha; the empty shape admits only the empty strip of weight 0.
    """
    a = as_partition(alpha)
    k = len(a)
    bounds = tuple(a[i] - (a[i + 1] if i + 1 < k else 0) for i in range(k))
    return list(bounded_compositions(m, bounds))


def shifted_vector(alpha, sigma) -> tuple:
    """Entrywise alpha_i - i + sigma(i) for i = 1..k, both inputs length k."""
    return tuple(a - i + s for i, (a, s) in enumerate(zip(alpha, sigma, strict=True), start=1))


def perm_sign(sigma) -> int:
    """Signature of a permutation given as a tuple of distinct values."""
    inversions = 0
    for i, si in enumerate(sigma):
        for sj in sigma[i + 1 :]:
            if sj < si:
                inversions += 1
    return -1 if inversions & 1 else 1


def permutations_signed(k, cap=None):
    """Every permutation of {1..k} as a tuple paired with its sign.

    Permutations appear in lexicographic order; k = 0 yields the single
    empty permutation with sign +1.  Raises SizeLimitError when k exceeds
    the cap (DEFAULT_PERM_CAP unless overridden).
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    cap = DEFAULT_PERM_CAP if cap is None else cap
    if k > cap:
        raise SizeLimitError(f"k = {k} exceeds the permutation cap {cap}")
    return ((sigma, perm_sign(sigma)) for sigma in _itertools_permutations(range(1, k + 1)))


def signed_shifted_vectors(alpha, cap=None):
    """Yield (sign, alpha_i - i + sigma(i)) over permutations with all entries >= 0.

    Signed sums over permutations of such shifted vectors are the common
    shape of the counting formulas built on top of this module, and every
    one of them vanishes on a negative entry.  Assigning sigma position by
    position lets whole blocks of permutations be skipped as soon as one
    entry would go negative; the sign is tracked through the number of
    still-unused values below the one chosen, which accumulates to the
    inversion count.
    """
    a = tuple(alpha)
    k = len(a)
    cap = DEFAULT_PERM_CAP if cap is None else cap
    if k > cap:
        raise SizeLimitError(f"k = {k} exceeds the permutation cap {cap}")
    entries = [0] * k
    used = [False] * (k + 1)

    def rec(pos, parity):
        if pos == k:
            yield 1 - 2 * parity, tuple(entries)
            return
        lo = pos + 1 - a[pos]
        if lo < 1:
            lo = 1
        for v in range(lo, k + 1):
            if used[v]:
                continue
            smaller = 0
            for w in range(1, v):
                if not used[w]:
                    smaller += 1
            used[v] = True
            entries[pos] = a[pos] - (pos + 1) + v
            yield from rec(pos + 1, parity ^ (smaller & 1))
            used[v] = False

    return rec(0, 0)


def partitions(n, max_part=None, max_parts=None):
    """Yield the proper partitions of n as tuples, largest part first.

    Optional bounds restrict the largest part and the number of parts.
    """
    if n < 0:
        return
    max_part = n if max_part is None else max_part
    max_parts = n if max_parts is None else max_parts
    if n == 0:
        yield ()
        return
    if max_part <= 0 or max_parts <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first, max_parts - 1):
            yield (first,) + rest


def compositions(n, parts):
    """Yield the compositions of n into exactly `parts` positive parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if n < parts:
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def contents(n, max_parts=None):
    """Yield every gap-free content of n (positive parts, order significant)."""
    max_parts = n if max_parts is None else max_parts
    if n == 0:
        yield ()
        return
    for r in range(1, min(n, max_parts) + 1):
        yield from compositions(n, r)
