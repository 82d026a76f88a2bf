"""Tables of the generalized multinomial mu.

mu(rho, (i, j)) is nonzero only when i + j is a partial sum of rho, which
paints a checkerboard of zeros into every table.  With rho = (1, 1, ...)
every weight is a partial sum and the table is Pascal's triangle read
along anti-diagonals: mu((1, ..., 1), (i, j)) = C(i + j, i).
"""

from math import comb

from kostka import mu_table


def show(title, rho, size):
    print(title)
    table = mu_table(rho, size, size)
    width = max(len(str(v)) for row in table for v in row)
    for row in table:
        print("  " + " ".join(str(v).rjust(width) for v in row))
    print()
    return table


def main():
    show("rho = (3, 2, 3, 2, 3, 2, 3, 2), 9 x 9:", (3, 2, 3, 2, 3, 2, 3, 2), 9)
    table = show("rho = (1, 1, 1, 1, 1, 1, 1, 1), 5 x 5:", (1,) * 8, 5)

    ok = all(table[i][j] == comb(i + j, i) for i in range(5) for j in range(5))
    print(f"binomial cross-check C(i+j, i): {'ok' if ok else 'MISMATCH'}")

    # The value at weight w depends only on the prefix of rho summing to w.
    show("rho = (3, 2), 6 x 6 (agrees with the big table up to weight 5):", (3, 2), 6)


if __name__ == "__main__":
    main()
