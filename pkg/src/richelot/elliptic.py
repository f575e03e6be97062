"""Elliptic curves with labelled rational 2-torsion.

A curve is an ordered triple of distinct x-coordinates (r1, r2, r3)
over GF(p^2), representing y^2 = (x - r1)(x - r2)(x - r3); its
2-torsion points are P_i = (r_i, 0).  Keeping the roots ordered is
what lets the product-kernel bookkeeping track where torsion points
go under 2-isogenies and isomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldCtx, FieldElement
from .poly import Poly, roots as poly_roots


class EllipticError(ValueError):
    """Invalid curve or isogeny operation."""


class NonSplitTorsionError(EllipticError):
    """Codomain 2-torsion is not rational over GF(p^2).

    Signals a non-supersingular context: supersingular curves over
    GF(p^2) have group structure (Z/(p -+ 1))^2, so their 2-isogeny
    codomains always have fully rational 2-torsion.
    """


@dataclass(frozen=True)
class EllipticCurveE2:
    """y^2 = (x - r1)(x - r2)(x - r3) with ordered, distinct roots."""

    r1: FieldElement
    r2: FieldElement
    r3: FieldElement

    def __post_init__(self):
        if self.r1 == self.r2 or self.r1 == self.r3 or self.r2 == self.r3:
            raise EllipticError("2-torsion x-coordinates must be distinct")

    @property
    def ctx(self) -> FieldCtx:
        return self.r1.ctx

    def roots(self):
        return (self.r1, self.r2, self.r3)

    def root(self, i: int) -> FieldElement:
        """x-coordinate of P_i, i in {1, 2, 3}."""
        return self.roots()[i - 1]

    def sorted_key(self):
        return tuple(sorted(r.key() for r in self.roots()))

    def __repr__(self):
        return f"E({self.r1}, {self.r2}, {self.r3})"


@dataclass(frozen=True)
class TwoIsogeny:
    """A 2-isogeny E -> E/<P_k> with codomain 2-torsion tracked.

    torsion_image maps each surviving domain index (the two indices
    other than kernel_index) to the codomain index of its image; both
    surviving points map to the same codomain point, which generates
    the kernel of the dual isogeny.
    """

    domain: EllipticCurveE2
    kernel_index: int
    codomain: EllipticCurveE2
    torsion_image: dict


def j_invariant(E: EllipticCurveE2) -> FieldElement:
    """The j-invariant, via the cross-ratio of the three roots."""
    lam = (E.r3 - E.r1) / (E.r2 - E.r1)
    one = E.ctx.one
    num = (lam * lam - lam + one) ** 3 * 256
    den = (lam * lam) * ((lam - one) * (lam - one))
    return num / den


def two_isogeny(E: EllipticCurveE2, i: int) -> TwoIsogeny:
    """Quotient by <P_i>, by Velu's formulas on the translated model.

    Translating P_i to the origin gives y^2 = x(x^2 + Ax + B); the
    quotient is y^2 = x(x^2 - 2Ax + (A^2 - 4B)), and both surviving
    2-torsion points map onto the codomain point above the origin.
    """
    if i not in (1, 2, 3):
        raise EllipticError(f"kernel index must be 1..3, got {i}")
    ctx = E.ctx
    rk = E.root(i)
    survivors = [k for k in (1, 2, 3) if k != i]
    a = E.root(survivors[0]) - rk
    b = E.root(survivors[1]) - rk
    A = -(a + b)
    B = a * b
    s = B.sqrt()
    if s is None:
        raise NonSplitTorsionError(
            "codomain 2-torsion is irrational; curve is not in a "
            "supersingular context")
    two = ctx.from_int(2)
    u = A + two * s
    v = A - two * s
    # shift back so the dual-kernel point sits at x = rk
    r_new = [rk, rk + u, rk + v]
    if r_new[2] < r_new[1]:
        r_new[1], r_new[2] = r_new[2], r_new[1]
    cod = EllipticCurveE2(*r_new)
    return TwoIsogeny(domain=E, kernel_index=i, codomain=cod,
                      torsion_image={survivors[0]: 1, survivors[1]: 1})


def is_supersingular(E: EllipticCurveE2) -> bool:
    """Exact point count over GF(p^2): supersingular iff #E = (p -+ 1)^2."""
    ctx = E.ctx
    sq = ctx.square_table()
    count = 1  # point at infinity
    r1, r2, r3 = E.roots()
    for x in ctx.elements():
        y2 = (x - r1) * (x - r2) * (x - r3)
        if y2.is_zero():
            count += 1
        elif (y2.a, y2.b) in sq:
            count += 2
    p = ctx.p
    return count == (p - 1) ** 2 or count == (p + 1) ** 2


def isomorphisms_with_torsion(E: EllipticCurveE2, E2: EllipticCurveE2):
    """All 2-torsion matchings induced by geometric isomorphisms E ~ E2.

    Returns the permutations pi of (1, 2, 3), as tuples
    (pi(1), pi(2), pi(3)), for which an affine substitution
    x -> alpha*x + beta maps (r1, r2, r3) to the pi-relabelled roots
    of E2.  The scaling alpha may be a non-square: the y-coordinate
    scaling then lives in GF(p^4), i.e. the isomorphism is geometric
    (twists are identified, matching vertex semantics).
    """
    out = []
    r = E.roots()
    t = E2.roots()
    for perm in ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1),
                 (3, 1, 2), (3, 2, 1)):
        alpha = (t[perm[0] - 1] - t[perm[1] - 1]) / (r[0] - r[1])
        beta = t[perm[0] - 1] - alpha * r[0]
        if alpha * r[2] + beta == t[perm[2] - 1]:
            out.append(perm)
    return out


def curve_from_j(ctx: FieldCtx, j: FieldElement):
    """Some curve with the given j-invariant and split 2-torsion, or None.

    Uses y^2 = x^3 + 3kx + 2k with k = j/(1728 - j) for j != 0, 1728;
    returns None if the cubic has no three rational roots (which never
    happens for supersingular j over GF(p^2)).
    """
    c1728 = ctx.from_int(1728)
    if j == c1728:
        return EllipticCurveE2(ctx.one, ctx.from_int(-1), ctx.zero)
    if j.is_zero():
        z3 = ctx.nth_root_of_unity(3)
        return EllipticCurveE2(ctx.one, z3, z3 * z3)
    k = j / (c1728 - j)
    f = Poly(ctx, [ctx.from_int(2) * k, ctx.from_int(3) * k,
                   ctx.zero, ctx.one])
    rts = poly_roots(f)
    if len(rts) != 3 or len(set(r.key() for r in rts)) != 3:
        return None
    return EllipticCurveE2(*rts)


def find_supersingular_seed(ctx: FieldCtx) -> EllipticCurveE2:
    """A supersingular curve over GF(p^2) with labelled 2-torsion.

    Uses j = 1728 when p = 3 (mod 4) and j = 0 when p = 2 (mod 3);
    otherwise scans j in GF(p) with the exact point-count test.
    """
    p = ctx.p
    if p % 4 == 3:
        return EllipticCurveE2(ctx.one, ctx.from_int(-1), ctx.zero)
    if p % 3 == 2:
        z3 = ctx.nth_root_of_unity(3)
        return EllipticCurveE2(ctx.one, z3, z3 * z3)
    for jint in range(p):
        E = curve_from_j(ctx, ctx.from_int(jint))
        if E is not None and is_supersingular(E):
            return E
    raise EllipticError(f"no supersingular curve found for p={p}")
