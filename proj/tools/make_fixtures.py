#!/usr/bin/env python3
"""Regenerate the offline OEIS b-file fixtures under data/oeis/.

Terms are counted directly from the lattice-path definitions with a
transfer-matrix walk (state: x, y, previous step was U), then checked
against the binomial-sum formulas and, where one is known, the holonomic
recurrence of the sequence. None of these routes shares code with the
C++ library.

    python3 tools/make_fixtures.py [--terms 200] [--out data/oeis]
"""

import argparse
import math
import pathlib
from collections import defaultdict

# key: (oeis id, flat step or None, flat width, span per n, nonpositive, forbid U-then-flat)
FAMILIES = {
    "central": ("A000984", None, 0, 2, False, False),
    "dyck": ("A000108", None, 0, 2, True, False),
    "delannoy": ("A001850", "H", 2, 2, False, False),
    "schroeder": ("A006318", "H", 2, 2, True, False),
    "big_motzkin": ("A002426", "F", 1, 1, False, False),
    "motzkin": ("A001006", "F", 1, 1, True, False),
    "avoid_flat_big_motzkin": ("A026569", "F", 1, 1, False, True),
    "avoid_flat_motzkin": ("A090344", "F", 1, 1, True, True),
    "avoid_flat_delannoy": ("A026375", "H", 2, 2, False, True),
    "avoid_flat_schroeder": ("A007317", "H", 2, 2, True, True),
}


def count_paths(span, flat_width, nonpositive, forbid):
    # layer[x][(y, last_up)] = number of prefixes
    layers = [defaultdict(int) for _ in range(span + 1)]
    layers[0][(0, False)] = 1
    for x in range(span + 1):
        for (y, last_up), ways in layers[x].items():
            moves = [(1, 1, True), (1, -1, False)]
            if flat_width and not (forbid and last_up):
                moves.append((flat_width, 0, False))
            for dx, dy, up in moves:
                nx, ny = x + dx, y + dy
                if nx > span or (nonpositive and ny > 0):
                    continue
                layers[nx][(ny, up)] += ways
    return sum(w for (y, _), w in layers[span].items() if y == 0)


def binom(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial_sum(key, n):
    """Sum over d of (insertion count) * (base term), straight from the definitions."""
    insert = {
        "central": lambda d: 1 if d == n else 0,
        "delannoy": lambda d: binom(n + d, n - d),
        "big_motzkin": lambda d: binom(n, 2 * d),
        "avoid_flat_big_motzkin": lambda d: binom(n - d, d),
        "avoid_flat_delannoy": lambda d: binom(n, d),
    }
    base_key = {"dyck": "central", "schroeder": "delannoy", "motzkin": "big_motzkin",
                "avoid_flat_motzkin": "avoid_flat_big_motzkin",
                "avoid_flat_schroeder": "avoid_flat_delannoy"}
    constrained = key in base_key
    b = insert[base_key.get(key, key)]
    total = 0
    for d in range(n + 1):
        term = b(d) * binom(2 * d, d)
        if constrained:
            assert term % (d + 1) == 0
            term //= d + 1
        total += term
    return total


def recurrence_terms(oeis, count):
    """Known holonomic recurrences, used only as a cross-check."""
    a = []
    for n in range(count):
        def at(k):
            return a[n - k] if n - k >= 0 else 0
        if oeis == "A000984":
            v = 1 if n == 0 else at(1) * 2 * (2 * n - 1) // n
        elif oeis == "A000108":
            v = 1 if n == 0 else at(1) * 2 * (2 * n - 1) // (n + 1)
        elif oeis == "A001850":
            v = [1, 3][n] if n < 2 else (3 * (2 * n - 1) * at(1) - (n - 1) * at(2)) // n
        elif oeis == "A006318":
            v = [1, 2][n] if n < 2 else (3 * (2 * n - 1) * at(1) - (n - 2) * at(2)) // (n + 1)
        elif oeis == "A002426":
            v = [1, 1][n] if n < 2 else ((2 * n - 1) * at(1) + 3 * (n - 1) * at(2)) // n
        elif oeis == "A001006":
            v = [1, 1][n] if n < 2 else ((2 * n + 1) * at(1) + 3 * (n - 1) * at(2)) // (n + 2)
        elif oeis == "A026569":
            # 1/sqrt(1-2x-3x^2+4x^3): n a(n) = (2n-1)a(n-1) + 3(n-1)a(n-2) - (4n-6)a(n-3)
            v = 1 if n == 0 else ((2 * n - 1) * at(1) + 3 * (n - 1) * at(2) - (4 * n - 6) * at(3)) // n
        elif oeis == "A026375":
            # 1/sqrt(1-6x+5x^2): n a(n) = 3(2n-1)a(n-1) - 5(n-1)a(n-2)
            v = 1 if n == 0 else (3 * (2 * n - 1) * at(1) - 5 * (n - 1) * at(2)) // n
        elif oeis in ("A090344", "A007317"):
            return None
        else:
            raise KeyError(oeis)
        a.append(v)
    return a


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--terms", type=int, default=200)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for key, (oeis, flat, width, per_n, nonpositive, forbid) in FAMILIES.items():
        terms = [count_paths(per_n * n, width, nonpositive, forbid) for n in range(args.terms)]
        check = recurrence_terms(oeis, args.terms)
        if check is not None and check != terms:
            bad = next(i for i, (p, q) in enumerate(zip(terms, check)) if p != q)
            raise SystemExit(f"{key}: path count disagrees with recurrence at n={bad}")
        sums = [binomial_sum(key, n) for n in range(args.terms)]
        if sums != terms:
            raise SystemExit(f"{key}: path count disagrees with binomial sum")
        text = "".join(f"{n} {v}\n" for n, v in enumerate(terms))
        (out / f"b{oeis[1:]}.txt").write_text(text)
        print(f"{oeis} {key}: {args.terms} terms" + ("" if check is not None else " (no recurrence check)"))


if __name__ == "__main__":
    main()
