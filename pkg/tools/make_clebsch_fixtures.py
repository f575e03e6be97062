"""Generate Clebsch-invariant fixtures with sympy as the oracle.

Computes, in exact rational arithmetic over Q and independently of the
package's own transvectant code, the Igusa-Clebsch invariants of a few
integer sextics from their root-difference expressions:

    I2  = a0^2  * sum over the 15 pairings of (ab)^2 (cd)^2 (ef)^2
    I4  = a0^4  * sum over the 10 triple-splits of (abc)^2 (def)^2
    I6  = a0^6  * sum over the 60 matched triple-splits
    I10 = a0^10 * prod of all squared root differences (= disc(f))

then converts to Clebsch (A, B, C, D) by the classical relations

    I2  = -120 A
    I4  = -720 A^2 + 6750 B
    I6  = 8640 A^3 - 108000 A B + 202500 C
    I10 = -62208 A^5 + 972000 A^3 B + 1620000 A^2 C
          - 3037500 A B^2 - 6075000 B C - 4556250 D

The I10 value is cross-checked against sympy's resultant-based
discriminant.  Output is written to tests/clebsch_fixtures.py as exact
rationals; the test suite reduces them modulo each prime.

Run:  python tools/make_clebsch_fixtures.py
"""

from fractions import Fraction
from itertools import combinations, permutations

import sympy

# integer sextics with known rational roots: (roots, leading coefficient)
FIXTURE_CURVES = [
    ([0, 1, -1, 2, -2, 3], 1),
    ([1, 2, 3, 4, 5, 7], 2),
    ([0, 1, 3, -4, 5, -9], 1),
    ([2, -3, 5, -7, 11, -13], 3),
]


def pairings(items):
    if not items:
        yield []
        return
    a, rest = items[0], items[1:]
    for k in range(len(rest)):
        for sub in pairings(rest[:k] + rest[k + 1:]):
            yield [(a, rest[k])] + sub


def igusa_clebsch(roots, a0):
    r = [sympy.Rational(x) for x in roots]
    idx = list(range(6))
    d = {(i, j): r[i] - r[j] for i in idx for j in idx if i != j}

    I2 = sympy.Integer(0)
    for pr in pairings(idx):
        term = sympy.Integer(1)
        for (a, b) in pr:
            term *= d[(a, b)] ** 2
        I2 += term

    I4 = sympy.Integer(0)
    I6 = sympy.Integer(0)
    seen = set()
    for tri in combinations(idx, 3):
        other = tuple(sorted(set(idx) - set(tri)))
        key = tuple(sorted([tri, other]))
        if key in seen:
            continue
        seen.add(key)
        t1 = d[(tri[0], tri[1])] * d[(tri[1], tri[2])] * d[(tri[2], tri[0])]
        t2 = d[(other[0], other[1])] * d[(other[1], other[2])] \
            * d[(other[2], other[0])]
        I4 += t1 ** 2 * t2 ** 2
        for perm in permutations(other):
            cross = d[(tri[0], perm[0])] * d[(tri[1], perm[1])] \
                * d[(tri[2], perm[2])]
            I6 += t1 ** 2 * t2 ** 2 * cross ** 2

    I10 = sympy.Integer(1)
    for i, j in combinations(idx, 2):
        I10 *= d[(i, j)] ** 2

    a = sympy.Integer(a0)
    return a ** 2 * I2, a ** 4 * I4, a ** 6 * I6, a ** 10 * I10


def clebsch_from_igusa(I2, I4, I6, I10):
    A = -I2 / sympy.Integer(120)
    B = (I4 + 720 * A ** 2) / sympy.Integer(6750)
    C = (I6 - 8640 * A ** 3 + 108000 * A * B) / sympy.Integer(202500)
    D = -(I10 + 62208 * A ** 5 - 972000 * A ** 3 * B
          - 1620000 * A ** 2 * C + 3037500 * A * B ** 2
          + 6075000 * B * C) / sympy.Integer(4556250)
    return A, B, C, D


def main():
    x = sympy.Symbol("x")
    rows = []
    for roots, a0 in FIXTURE_CURVES:
        f = sympy.expand(sympy.Integer(a0)
                         * sympy.prod([x - r for r in roots]))
        coeffs = [int(f.coeff(x, k)) for k in range(7)]
        I2, I4, I6, I10 = igusa_clebsch(roots, a0)
        disc = sympy.discriminant(sympy.Poly(f, x))
        assert I10 == disc, (I10, disc)
        A, B, C, D = clebsch_from_igusa(I2, I4, I6, I10)
        rows.append((coeffs, [(int(sympy.numer(v)), int(sympy.denom(v)))
                              for v in (A, B, C, D)]))
    with open("tests/clebsch_fixtures.py", "w") as fh:
        fh.write('"""Clebsch fixtures generated by '
                 'tools/make_clebsch_fixtures.py.\n\n'
                 "Each entry: (sextic coefficients c0..c6 over Z, "
                 "[(num, den) for A, B, C, D over Q]).\n"
                 'Computed by sympy from root-difference formulas; '
                 'do not edit by hand.\n"""\n\n')
        fh.write("FIXTURES = [\n")
        for coeffs, vals in rows:
            fh.write(f"    ({coeffs},\n     {vals}),\n")
        fh.write("]\n")
    print(f"wrote {len(rows)} fixtures to tests/clebsch_fixtures.py")


if __name__ == "__main__":
    main()
