"""The (2,2)-isogeny step out of an elliptic product E x E'.

Nine of the fifteen kernels are products of elliptic 2-isogeny
kernels; the other six pair the 2-torsion of the factors via a
permutation (anti-isometry).  A paired kernel either comes from an
isomorphism E ~ E' (the quotient is the same product again) or glues
to the Jacobian of a genus-2 curve by the Howe--Leprevost--Poonen
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .elliptic import (EllipticCurveE2, TwoIsogeny, isomorphisms_with_torsion,
                       j_invariant, two_isogeny)
from .field import FieldElement
from .genus2 import Genus2Curve, Genus2Error, QuadraticSplitting, RAType, \
    RA_ORDER
from .poly import Poly


class GluingError(ValueError):
    """Invalid product-side quotient."""


class DegenerateGluingError(GluingError):
    """The HLP formulas degenerated on a kernel that is not induced by
    an isomorphism; carries the offending kernel."""

    def __init__(self, message, kernel):
        super().__init__(message)
        self.kernel = kernel


@dataclass(frozen=True)
class ProductSurface:
    """E1 x E2 with ordered factors (the vertex itself is unordered)."""

    E1: EllipticCurveE2
    E2: EllipticCurveE2

    @property
    def ctx(self):
        return self.E1.ctx

    def j_pair(self):
        """Unordered pair of j-invariants, sorted for canonical use."""
        j1, j2 = j_invariant(self.E1), j_invariant(self.E2)
        return tuple(sorted([j1, j2]))

    def __repr__(self):
        return f"Product({self.E1}, {self.E2})"


@dataclass(frozen=True)
class ProductKernel:
    """Either a product kernel <(P_i,0),(0,P_j')> or the graph of an
    anti-isometry P_i -> P'_perm(i)."""

    kind: str  # "product" | "diagonal"
    i: int = 0
    j: int = 0
    perm: tuple = ()

    @classmethod
    def product(cls, i, j):
        return cls(kind="product", i=i, j=j)

    @classmethod
    def diagonal(cls, perm):
        return cls(kind="diagonal", perm=tuple(perm))

    def elements(self) -> frozenset:
        """Nonzero elements as (a, b) index pairs; 0 = identity."""
        if self.kind == "product":
            return frozenset([(self.i, 0), (0, self.j), (self.i, self.j)])
        return frozenset((a, self.perm[a - 1]) for a in (1, 2, 3))

    def key(self):
        return (self.kind, self.i, self.j, self.perm)

    def __repr__(self):
        if self.kind == "product":
            return f"K({self.i},{self.j})"
        return f"K{self.perm}"


def product_kernels() -> list:
    """The fifteen kernels in a fixed order: nine products, then the
    six diagonals by permutation order."""
    out = [ProductKernel.product(i, j)
           for i in (1, 2, 3) for j in (1, 2, 3)]
    out.extend(ProductKernel.diagonal(p)
               for p in sorted(permutations((1, 2, 3))))
    return out


_KERNEL_BY_ELEMENTS = {k.elements(): k for k in product_kernels()}


@dataclass(frozen=True)
class ProductQuotient:
    """Quotient isomorphic to a product; psi1/psi2 are the factor
    2-isogenies (None for an isomorphism-induced diagonal kernel,
    where the quotient is the original surface again)."""

    surface: ProductSurface
    psi1: TwoIsogeny = None
    psi2: TwoIsogeny = None


@dataclass(frozen=True)
class GluedJacobian:
    """Quotient glued to a Jacobian; `dual` is the splitting of the
    dual kernel, `blocks_by_index` the same blocks in i-order (block i
    covers the pair (P_i, P'_perm(i))), `intermediates` the HLP data."""

    curve: Genus2Curve
    dual: QuadraticSplitting
    blocks_by_index: tuple
    intermediates: dict


def quotient_product(S: ProductSurface, k: ProductKernel) -> ProductQuotient:
    """Quotient by a product kernel: psi_i x psi_j via Velu's formulas."""
    if k.kind != "product":
        raise GluingError("need a product kernel")
    psi1 = two_isogeny(S.E1, k.i)
    psi2 = two_isogeny(S.E2, k.j)
    return ProductQuotient(surface=ProductSurface(psi1.codomain,
                                                  psi2.codomain),
                           psi1=psi1, psi2=psi2)


def quotient_diagonal(S: ProductSurface, k: ProductKernel):
    """Quotient by an anti-isometry kernel K_pi.

    If the matching P_i -> P'_pi(i) is induced by an isomorphism of
    the factors, the quotient is E1 x E2 again (a ProductQuotient);
    otherwise the Howe--Leprevost--Poonen construction produces the
    genus-2 curve y^2 = -F1 F2 F3 whose Jacobian is the quotient,
    with dual kernel the splitting {F1, F2, F3}.
    """
    if k.kind != "diagonal":
        raise GluingError("need a diagonal kernel")
    pi = k.perm
    if pi in isomorphisms_with_torsion(S.E1, S.E2):
        return ProductQuotient(surface=S)
    ctx = S.ctx
    s = S.E1.roots()
    sp = tuple(S.E2.root(pi[t]) for t in range(3))
    cyc = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    a2 = sum((s[i] * (sp[k2] - sp[j]) for i, j, k2 in cyc), ctx.zero)
    b2 = sum((sp[i] * (s[k2] - s[j]) for i, j, k2 in cyc), ctx.zero)
    if a2.is_zero() or b2.is_zero():
        # provably only happens for isomorphism-induced matchings,
        # which were handled above; defensive
        raise DegenerateGluingError("HLP denominator vanished", k)
    a1 = sum(((s[j] - s[i]) * (s[j] - s[i]) / (sp[j] - sp[i])
              for i, j, _ in cyc), ctx.zero)
    b1 = sum(((sp[j] - sp[i]) * (sp[j] - sp[i]) / (s[j] - s[i])
              for i, j, _ in cyc), ctx.zero)
    prod_sp = ctx.one
    prod_s = ctx.one
    for i, j, _ in cyc:
        prod_sp = prod_sp * ((sp[i] - sp[j]) * (sp[i] - sp[j]))
        prod_s = prod_s * ((s[i] - s[j]) * (s[i] - s[j]))
    A = (a1 / a2) * prod_sp
    B = (b1 / b2) * prod_s
    blocks = []
    for i, j, k2 in cyc:
        c2 = A * ((s[j] - s[i]) * (s[i] - s[k2]))
        c0 = B * ((sp[j] - sp[i]) * (sp[i] - sp[k2]))
        blocks.append(Poly(ctx, [c0, ctx.zero, c2]))
    f = -(blocks[0] * blocks[1] * blocks[2])
    try:
        curve = Genus2Curve(f)
    except Genus2Error as exc:
        raise DegenerateGluingError(f"glued curve invalid: {exc}", k) \
            from exc
    dual = QuadraticSplitting.make(blocks, f.leading())
    inter = {"A": A, "B": B, "a1": a1, "a2": a2, "b1": b1, "b2": b2}
    return GluedJacobian(curve=curve, dual=dual,
                         blocks_by_index=tuple(b.monic() for b in blocks),
                         intermediates=inter)


def ra_type_product_vertex(j1: FieldElement, j2: FieldElement) -> str:
    """RA-type of an elliptic product from the pair of j-invariants,
    most special condition first."""
    ctx = j1.ctx
    c0, c1728 = ctx.zero, ctx.from_int(1728)
    js = {j1.key(), j2.key()}
    if j1 == j2:
        if j1 == c0:
            return RAType.SIGMA0
        if j1 == c1728:
            return RAType.SIGMA1728
        return RAType.SIGMA
    if js == {c0.key(), c1728.key()}:
        return RAType.PI01728
    if c0.key() in js:
        return RAType.PI0
    if c1728.key() in js:
        return RAType.PI1728
    return RAType.PI


def ra_order_product(t: str) -> int:
    """Order of the reduced automorphism group of a product type."""
    if t not in RAType.PRODUCT:
        raise GluingError(f"{t} is not an elliptic-product type")
    return RA_ORDER[t]


@dataclass(frozen=True)
class TorsionActionGenerator:
    """A generator of the RA-action on the 15 kernels.

    Without swap: (a, b) -> (perm1[a], perm2[b]).  With swap (factors
    isomorphic via a matching psi), (a, b) -> (psi^-1[b], psi[a]).
    """

    perm1: tuple = (1, 2, 3)
    perm2: tuple = (1, 2, 3)
    swap: tuple = ()

    def apply(self, element):
        a, b = element
        if self.swap:
            psi = self.swap
            inv = {psi[t]: t + 1 for t in range(3)}
            na = inv[b] if b else 0
            nb = psi[a - 1] if a else 0
            return (na, nb)
        na = self.perm1[a - 1] if a else 0
        nb = self.perm2[b - 1] if b else 0
        return (na, nb)

    def apply_kernel(self, k: ProductKernel) -> ProductKernel:
        elems = frozenset(self.apply(e) for e in k.elements())
        return _KERNEL_BY_ELEMENTS[elems]


def torsion_action_generators(S: ProductSurface) -> list:
    """Generators of the reduced-automorphism action on the kernels.

    Factor automorphisms act through their 2-torsion permutations
    ([-1] acts trivially and never appears); when the factors are
    isomorphic one swap generator is added, relabelled through a
    fixed isomorphism.
    """
    gens = []
    for p1 in isomorphisms_with_torsion(S.E1, S.E1):
        if p1 != (1, 2, 3):
            gens.append(TorsionActionGenerator(perm1=p1))
    for p2 in isomorphisms_with_torsion(S.E2, S.E2):
        if p2 != (1, 2, 3):
            gens.append(TorsionActionGenerator(perm2=p2))
    cross = isomorphisms_with_torsion(S.E1, S.E2)
    if cross:
        gens.append(TorsionActionGenerator(swap=cross[0]))
    return gens


def kernel_orbits(S: ProductSurface):
    """Orbits of the 15 kernels under the RA-action, sorted."""
    kernels = product_kernels()
    gens = torsion_action_generators(S)
    index = {k.key(): i for i, k in enumerate(kernels)}
    seen = [False] * 15
    orbits = []
    for i, k in enumerate(kernels):
        if seen[i]:
            continue
        orbit = {i}
        frontier = [k]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                img = g.apply_kernel(cur)
                t = index[img.key()]
                if t not in orbit:
                    orbit.add(t)
                    frontier.append(img)
        for t in orbit:
            seen[t] = True
        orbits.append(tuple(sorted(orbit)))
    orbits.sort()
    return orbits, kernels
