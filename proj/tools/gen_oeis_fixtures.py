#!/usr/bin/env python3
"""Regenerate the offline b-file fixtures under data/oeis/.

Every sequence is computed here with a method that shares no code with the
C++ library, so the fixtures act as an external oracle when oeis.org is out
of reach. Files follow the b-file layout: "n a(n)" per line, '#' comments.
"""

import argparse
import math
import pathlib


def fib(n):
    # F(-1) = 1, F(0) = 0
    if n < 0:
        return (-1) ** (n + 1) * fib(-n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def a001519(n_max):
    return {n: fib(2 * n - 1) for n in range(n_max + 1)}


def a006318(n_max):
    def cat(k):
        return math.comb(2 * k, k) // (k + 1)

    return {n: sum(math.comb(n + k, n - k) * cat(k) for k in range(n + 1)) for n in range(n_max + 1)}


def a000111(n_max):
    # Seidel boustrophedon
    out = {0: 1}
    row = [1]
    for n in range(1, n_max + 1):
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
        out[n] = row[-1]
    return out


def a000079(n_max):
    return {n: 2 ** n for n in range(n_max + 1)}


def a000110(n_max):
    # Bell triangle: each row starts with the last entry of the previous one
    out = {}
    row = [1]
    for n in range(n_max + 1):
        out[n] = row[0]
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return out


def a113227(n_max):
    # permutations with no i < j < k, p_i < p_j < p_{j+1} < p_k
    def closes_pattern(w):
        k = len(w) - 1
        top = w[k]
        for j in range(1, k - 1):
            if w[j] < w[j + 1] < top and min(w[:j]) < w[j]:
                return True
        return False

    def count(n):
        total = 0
        stack = [[]]
        while stack:
            w = stack.pop()
            if len(w) == n:
                total += 1
                continue
            used = set(w)
            for v in range(1, n + 1):
                if v not in used:
                    w2 = w + [v]
                    if not closes_pattern(w2):
                        stack.append(w2)
        return total

    out = {0: 1}
    for n in range(1, n_max + 1):
        out[n] = count(n)
    return out


def a200753(n_max):
    # A = 1 + (x - x^2) A^3, solved one coefficient at a time
    a = [1]
    for n in range(1, n_max + 1):
        a.append(0)
        sq = [sum(a[i] * a[m - i] for i in range(m + 1)) for m in range(n + 1)]
        cube = [sum(sq[i] * a[m - i] for i in range(m + 1)) for m in range(n + 1)]
        a[n] = cube[n - 1] - (cube[n - 2] if n >= 2 else 0)
    return dict(enumerate(a))


PUBLISHED = {
    "A263777": [1, 2, 6, 24, 118, 674, 4306, 29990, 223668, 1763468, 14558588, 124938648],
    "A263778": [1, 2, 6, 23, 103, 515, 2803, 16334, 100700],
    "A263779": [1, 2, 5, 15, 53, 215, 979, 4922, 26992],
    "A263780": [1, 2, 6, 23, 106, 565, 3399, 22678, 165646],
}


def write(path, seq_id, note, terms):
    with open(path, "w") as f:
        f.write(f"# {seq_id}\n# {note}\n")
        for n in sorted(terms):
            f.write(f"{n} {terms[n]}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"))
    ap.add_argument("--brute-max", type=int, default=10, help="largest n for A113227")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    computed = {
        "A001519": ("F(2n-1)", a001519(40)),
        "A006318": ("sum_k C(n+k, n-k) Catalan(k)", a006318(40)),
        "A000111": ("Seidel boustrophedon", a000111(40)),
        "A000079": ("2^n", a000079(60)),
        "A000110": ("Bell triangle", a000110(40)),
        "A113227": ("exhaustive search over permutations", a113227(args.brute_max)),
        "A200753": ("coefficient recursion for A = 1 + (x - x^2) A^3", a200753(40)),
    }
    for seq_id, (note, terms) in computed.items():
        write(out / f"b{seq_id[1:]}.txt", seq_id, note, terms)
    for seq_id, terms in PUBLISHED.items():
        write(out / f"b{seq_id[1:]}.txt", seq_id, "published initial terms, offset 1",
              {i + 1: t for i, t in enumerate(terms)})


if __name__ == "__main__":
    main()
