"""A tour of semistandard tableaux: enumeration, hooks, standard counts."""

from kostka import enumerate_ssyt, f_det, f_hook, hook_lengths, partitions


def show_tableaux(alpha, beta):
    ts = enumerate_ssyt(alpha, beta)
    print(f"shape {alpha}, content {beta}: {len(ts)} tableaux")
    for t in ts:
        for row in t:
            print("   " + " ".join(str(v) for v in row))
        print()


def main():
    show_tableaux((2, 1), (1, 1, 1))
    show_tableaux((4, 4, 3, 3), (3, 3, 2, 2, 3, 1))

    print("hook lengths of (4, 2, 1):")
    for row in hook_lengths((4, 2, 1)):
        print("   " + " ".join(str(h) for h in row))
    print()

    print("standard fillings of every shape of 6, two formulas:")
    for a in partitions(6):
        print(f"   {str(a):<20} hooks={f_hook(a):<4} signed sum={f_det(a)}")


if __name__ == "__main__":
    main()
