#!/usr/bin/env python3
"""Writes the b-file corpus of D-finite sequences from explicit sum formulas."""

import argparse
import json
import pathlib
from math import comb, factorial

TERMS = 60


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def motzkin(n):
    return sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def delannoy(n):
    return sum(comb(n, k) * comb(n + k, k) for k in range(n + 1))


def schroeder(n):
    return sum(comb(n + k, 2 * k) * catalan(k) for k in range(n + 1))


def trinomial(n):
    return sum(comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1))


def franel(n):
    return sum(comb(n, k) ** 3 for k in range(n + 1))


def apery(n):
    return sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1))


def derangements(n):
    return sum((-1) ** k * factorial(n) // factorial(k) for k in range(n + 1))


def riordan(n):
    # M_n = R_n + R_{n+1}
    r = [1]
    for m in range(n):
        r.append(motzkin(m) - r[-1])
    return r[n]


def fine(n):
    # C_n = 2F_n + F_{n-1}
    f = [1]
    for m in range(1, n + 1):
        f.append((catalan(m) - f[-1]) // 2)
    return f[n]


def little_schroeder(n):
    return schroeder(n) // 2 if n > 0 else 1


def involutions(n):
    return sum(factorial(n) // (factorial(n - 2 * k) * 2 ** k * factorial(k)) for k in range(n // 2 + 1))


def partial(f):
    return lambda n: sum(f(k) for k in range(n + 1))


SEQUENCES = [
    ("catalan", catalan, 1, 1),
    ("motzkin", motzkin, 2, 1),
    ("central_binomial", lambda n: comb(2 * n, n), 1, 1),
    ("delannoy", delannoy, 2, 1),
    ("large_schroeder", schroeder, 2, 1),
    ("little_schroeder", little_schroeder, 2, 1),
    ("central_trinomial", trinomial, 2, 1),
    ("franel", franel, 2, 2),
    ("apery", apery, 2, 3),
    ("derangements", derangements, 2, 1),
    ("riordan", riordan, 2, 1),
    ("fine", fine, 2, 1),
    ("involutions", involutions, 2, 1),
    ("catalan_squared", lambda n: catalan(n) ** 2, 1, 2),
    ("catalan_sums", partial(catalan), 2, 1),
    ("motzkin_sums", partial(motzkin), 3, 1),
    ("central_binomial_sums", partial(lambda n: comb(2 * n, n)), 2, 1),
    ("delannoy_sums", partial(delannoy), 3, 1),
    ("catalan3_sums", partial(lambda n: catalan(3 * n)), 2, 3),
    ("schroeder_sums", partial(schroeder), 3, 1),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out", type=pathlib.Path)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for name, f, r, d in SEQUENCES:
        path = args.out / f"{name}.txt"
        with path.open("w") as fh:
            fh.write(f"# {name}\n")
            for n in range(TERMS):
                fh.write(f"{n} {f(n)}\n")
        manifest.append({"name": name, "file": path.name, "order": r, "degree": d})
    (args.out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
