"""Compute the same Kostka numbers by three unrelated routes.

The signed permutation formula, the strip-peeling recursion, and plain
brute-force enumeration have no code in common past the input parsing,
so agreement across a spread of inputs is strong evidence for each.
"""

from kostka import METHODS, kostka

CASES = [
    ((2, 1), (1, 1, 1)),
    ((3, 2), (2, 2, 1)),
    ((4, 4, 3, 3), (3, 3, 2, 2, 3, 1)),
    ((2, 2), (1, 3)),          # no filling exists: the signed sum cancels
    ((3, 1), (0, 2, 0, 2)),    # zero parts in the content are removed first
    ((5, 3, 2), (1,) * 10),    # standard fillings of a 10-cell shape
]


def main():
    for alpha, beta in CASES:
        print(f"alpha={alpha}  beta={beta}")
        for method in METHODS:
            r = kostka(alpha, beta, method=method)
            print(f"  {r.method:<12} value={r.value:<6} work={r.terms_evaluated}")
        print()

    # The dispatcher treats a weight mismatch as "no tableaux", not an error.
    r = kostka((2, 1), (2, 2))
    print(f"weight mismatch: alpha=(2, 1) beta=(2, 2) -> {r.value}")


if __name__ == "__main__":
    main()
