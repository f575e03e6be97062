"""One (2,2)-isogeny step out of a genus-2 Jacobian.

A quadratic splitting groups the six Weierstrass points into three
pairs; the coefficient determinant delta decides whether the quotient
is another Jacobian (Richelot's formulas) or an elliptic product
(the U/V decomposition).
"""

from richelot import (make_field, Genus2Curve, Poly, splittings,
                      clebsch_invariants, canonical_key, delta,
                      richelot_generic, split_degenerate, j_invariant,
                      ra_type_from_clebsch)

ctx = make_field(23)
s, t = ctx.from_int(3), ctx.from_int(5)
C = Genus2Curve(Poly.from_roots(
    ctx, [ctx.one, -ctx.one, s, -s, t, -t]))
print("curve: y^2 = (x^2 - 1)(x^2 - 9)(x^2 - 25) over GF(23^2)")
print("type:", ra_type_from_clebsch(clebsch_invariants(C)))

spls = splittings(C)
print(f"{len(spls)} quadratic splittings; delta values:")
for spl in spls:
    print("  delta =", delta(spl), " blocks:", [str(b) for b in spl.blocks])

key = canonical_key(clebsch_invariants(C))
for spl in spls:
    if delta(spl).is_zero():
        # the quotient splits: two elliptic curves
        res = split_degenerate(spl)
        print("split kernel  ->  E x E' with j-invariants",
              j_invariant(res.E), j_invariant(res.E2))
        print("  decomposition check F_i = a_i U^2 + b_i V^2:",
              res.split_data.verify())
    else:
        cod = richelot_generic(spl)
        back = richelot_generic(cod.dual)
        same = canonical_key(clebsch_invariants(back.curve)) == key
        print("generic kernel -> Jacobian of type",
              ra_type_from_clebsch(clebsch_invariants(cod.curve)),
              "| double step returns start:", same)
