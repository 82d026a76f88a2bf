"""Kostka numbers three ways, plus the column-bounded aggregate identities.

K(alpha, beta) is the number of semistandard tableaux of shape alpha and
content beta.  The three routes implemented here are deliberately
independent so they can check one another:

  * ``kostka_det``: a signed sum over row permutations of generalized
    multinomial values, the same shape of expansion as the classical
    signed-binomial formula for standard tableaux;
  * ``kostka_rec``: peel all cells holding the largest value off as a
    horizontal strip and recurse on the remaining content;
  * brute-force enumeration (``tableaux.count_ssyt``).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import (
    as_content,
    as_partition,
    compositions,
    horizontal_strips,
    normalize_content,
    partitions,
    signed_shifted_vectors,
    trim,
    weight,
)
from .errors import SizeLimitError, WeightMismatchError
from .multinomials import mu
from .tableaux import count_ssyt

# gordon_sum runs a triple sum over all n <= p*q; refuse above this.
DEFAULT_GORDON_CAP = 16

METHODS = ("det_formula", "recursion", "oracle")
_METHOD_ALIASES = {"det": "det_formula", "rec": "recursion", **{m: m for m in METHODS}}


def _det_terms(a, b, perm_cap, cache):
    total = 0
    terms = 0
    for sign, shifted in signed_shifted_vectors(a, perm_cap):
        terms += 1
        total += sign * mu(b, shifted, cache)
    assert total >= 0, "signed terms must cancel to a count"
    return total, terms


def kostka_det(alpha, beta, perm_cap=None, mu_cache=None) -> int:
    """K(alpha, beta) as a signed permutation sum of mu values.

    For a k-row shape, sums sign(sigma) * mu(beta, alpha_i - i + sigma(i))
    over sigma; permutations producing a negative entry contribute 0 and
    are skipped.  `mu_cache` may be shared between calls with the same
    beta (or any beta agreeing on prefixes).  Requires gap-free beta of
    the same weight as alpha; raises SizeLimitError when k exceeds the
    permutation cap.
    """
    a = as_partition(alpha)
    b = as_content(beta)
    if weight(a) != weight(b):
        raise WeightMismatchError(f"shape sums to {weight(a)}, content to {weight(b)}")
    cache = {} if mu_cache is None else mu_cache
    value, _ = _det_terms(a, b, perm_cap, cache)
    return value


def _rec(a, ell, b, memo):
    if ell == 0:
        return 1 if not a else 0
    key = (a, ell)
    value = memo.get(key)
    if value is None:
        value = 0
        for g in horizontal_strips(a, b[ell - 1]):
            rest = trim(x - y for x, y in zip(a, g))
            value += _rec(rest, ell - 1, b, memo)
        memo[key] = value
    return value


def kostka_rec(alpha, beta, memo=None) -> int:
    """K(alpha, beta) by peeling the largest value off as a horizontal strip.

    In a semistandard tableau the cells holding the largest value form a
    horizontal strip (at most one per column, at row ends), so

        K(alpha, (b_1..b_l)) = sum over strips g of weight b_l
                               of K(alpha - g, (b_1..b_{l-1})),

    grounded at K((), ()) = 1.  Memoized on (remaining shape, number of
    remaining values); `memo` may be shared between calls with the same
    beta.  Requires gap-free beta of the same weight as alpha.
    """
    a = as_partition(alpha)
    b = as_content(beta)
    if weight(a) != weight(b):
        raise WeightMismatchError(f"shape sums to {weight(a)}, content to {weight(b)}")
    if memo is None:
        memo = {}
    return _rec(a, len(b), b, memo)


@dataclass(frozen=True)
class KostkaResult:
    """One computed Kostka number plus how it was obtained.

    `beta` is the gap-free content actually used.  `terms_evaluated` is a
    work measure whose meaning follows the method: permutation terms
    evaluated (det_formula), memoized subproblems computed (recursion), or
    tableaux enumerated (oracle).
    """

    value: int
    method: str
    alpha: tuple
    beta: tuple
    terms_evaluated: int


def kostka(alpha, beta, method="det_formula", perm_cap=None) -> KostkaResult:
    """Normalize inputs and compute K(alpha, beta) by the chosen method.

    alpha must be a proper partition up to trailing zeros; beta may contain
    zero parts, which are removed first (relabelling the tableau values is
    a bijection, so the count is unchanged).  A weight mismatch yields the
    count 0 rather than an error.  Accepted methods: det/det_formula,
    rec/recursion, oracle.
    """
    a = as_partition(alpha)
    b = normalize_content(beta)
    m = _METHOD_ALIASES.get(method)
    if m is None:
        raise ValueError(f"unknown method {method!r}, expected one of det, rec, oracle")
    if weight(a) != weight(b):
        return KostkaResult(0, m, a, b, 0)
    if m == "det_formula":
        value, terms = _det_terms(a, b, perm_cap, {})
    elif m == "recursion":
        memo = {}
        value = _rec(a, len(b), b, memo)
        terms = len(memo)
    else:
        value = count_ssyt(a, b)
        terms = value
    return KostkaResult(value, m, a, b, terms)


def gordon_product(p, q) -> int:
    """Number of semistandard tableaux with entries <= p and at most q columns.

    Closed-form product over pairs 1 <= i <= j <= p of
    (q + i + j - 1) / (i + j - 1), evaluated in exact rationals; the
    result is asserted to be an integer.  Counts the empty tableau too.
    """
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be >= 1, got p={p}, q={q}")
    value = Fraction(1)
    for i in range(1, p + 1):
        for j in range(i, p + 1):
            value *= Fraction(q + i + j - 1, i + j - 1)
    assert value.denominator == 1, "the product must come out an integer"
    return int(value)


def gordon_sum(p, q, limit=DEFAULT_GORDON_CAP) -> int:
    """The same tableau count as ``gordon_product``, via Kostka numbers.

    Every nonempty tableau with entries <= p and at most q columns has a
    shape alpha (at most p rows, parts at most q) and a content vector
    telling how often each of the p values occurs.  Grouping content
    vectors by their gap-free form rho leaves comb(p, len(rho)) ways to
    embed the positive counts among the p available values, so the total is

        1 + sum over n, alpha, rho of comb(p, len(rho)) * K(alpha, rho),

    the 1 counting the empty tableau.  Raises SizeLimitError when p*q
    exceeds `limit`.
    """
    if p < 1 or q < 1:
        raise ValueError(f"p and q must be >= 1, got p={p}, q={q}")
    if p * q > limit:
        raise SizeLimitError(f"p*q = {p * q} exceeds the aggregation cap {limit}")
    total = 1
    for n in range(1, p * q + 1):
        shapes = list(partitions(n, max_part=q, max_parts=p))
        if not shapes:
            continue
        for r in range(1, min(p, n) + 1):
            ways = comb(p, r)
            for rho in compositions(n, r):
                memo = {}
                for a in shapes:
                    total += ways * _rec(a, r, rho, memo)
    return total
