"""Local neighbourhood tables for each vertex type.

Every special vertex type has a normal form; its kernel orbits and
codomain types follow fixed tables, with a handful of small primes
behaving exceptionally.  verify_case recomputes and compares.
"""

from richelot.atlas import (normal_form, verify_case,
                            verify_permutation_fixtures)
from richelot.field import make_field
from richelot.graph import neighbourhood

# the unique order-12 vertex (y^2 = x^6 + 1) and its weight pattern
ctx = make_field(23)
C, (s, t) = normal_form("V", ctx)
print("orbit edges out of the Type-V vertex at p = 23:")
for e in neighbourhood(C):
    label = "loop" if e.is_loop else e.target.as_string()
    print(f"  weight {e.weight}  ->  {label}")
print()

# the same vertex at exceptional primes
for p in (11, 17, 29, 41):
    print(verify_case("V", make_field(p)).summary())
print()

# the quintic vertex: three orbits of five, with a weight-5 loop at 19
for p in (19, 29, 89):
    print(verify_case("II", make_field(p)).summary())
print()

# kernel actions: the computed Moebius action on the fifteen indexed
# kernels generates the tabulated orbit partition
for case in ("I", "III", "IV", "V", "VI"):
    print(verify_permutation_fixtures(case, ctx).summary())
