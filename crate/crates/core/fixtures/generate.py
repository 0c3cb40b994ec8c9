"""Writes the bundled b-file prefixes.

Each sequence is produced by the Somos-4 recurrence over exact fractions from
four consecutive terms of its OEIS data listing, independently of the Rust
engine. Run from this directory: python3 generate.py
"""

from fractions import Fraction


def somos4(seed_index, seed, lo, hi):
    terms = {seed_index + i: Fraction(v) for i, v in enumerate(seed)}
    n = seed_index + 4
    while n <= hi:
        terms[n] = (terms[n - 1] * terms[n - 3] + terms[n - 2] ** 2) / terms[n - 4]
        n += 1
    n = seed_index - 1
    while n >= lo:
        terms[n] = (terms[n + 1] * terms[n + 3] + terms[n + 2] ** 2) / terms[n + 4]
        n -= 1
    out = []
    for i in range(lo, hi + 1):
        v = terms[i]
        assert v.denominator == 1, (i, v)
        out.append((i, v.numerator))
    return out


def write(name, title, rows):
    with open(name, "w") as fh:
        fh.write(f"# {title}\n")
        fh.write("# generated by generate.py from the Somos-4 recurrence\n")
        for i, v in rows:
            fh.write(f"{i} {v}\n")


# a(1..4) = 1, 1, -1, 1; a(0) = 0 blocks the backward recurrence below -3
write("b006769.txt", "A006769", somos4(1, [1, 1, -1, 1], -3, 60))
write("b006720.txt", "A006720", somos4(0, [1, 1, 1, 1], 0, 50))
# a(1..4) = 1, 1, -1, -5
write("b051138.txt", "A051138", somos4(1, [1, 1, -1, -5], 0, 30))
