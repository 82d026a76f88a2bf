"""Counting all bounded tableaux at once: closed product vs Kostka sums.

A(p, q) counts every semistandard tableau with entries at most p and at
most q columns, the empty one included.  A closed product formula gives
the total directly; summing Kostka numbers over all shapes and contents
in the box must give the same answer.
"""

from kostka import gordon_product, gordon_sum


def main():
    print("A(p, q) as product / as Kostka sum, for p*q <= 12:\n")
    print("p\\q " + "".join(f"{q:>8}" for q in range(1, 13)))
    for p in range(1, 13):
        cells = []
        for q in range(1, 13):
            if p * q <= 12:
                prod = gordon_product(p, q)
                agg = gordon_sum(p, q)
                cells.append(f"{prod}={agg}" if prod != agg else str(prod))
            else:
                cells.append(".")
        print(f"{p:>3} " + "".join(f"{c:>8}" for c in cells))
    print("\n(a cell showing x=y would mark a disagreement; none do)")


if __name__ == "__main__":
    main()
