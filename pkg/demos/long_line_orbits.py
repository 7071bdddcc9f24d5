"""
Orbit classes on the closed long line
=====================================

Points of [0, omega_1 * w^w] are written omega_1*gamma + rho + t.  The
positive multiples of omega_1 are the points with no countable
neighborhood base from the left; homeomorphisms fixing the ends permute
them among themselves, which is what every argument below leans on.
"""

from fractions import Fraction

from longsol import (
    LongPoint,
    add,
    distinct_orbit_proof,
    is_ng,
    mul,
    nat,
    omega_pow,
    parse_long_point,
    partition_class,
    same_orbit_recipe,
)

W = omega_pow(nat(1))

# The partition: each point is either a multiple of omega_1 or sits in
# the open block between two consecutive multiples.
for text in ["w1*(2)", "w1*(2) + w*5 + 1/2", "w^3 + 4"]:
    p = parse_long_point(text)
    label = partition_class(p)
    print("%-22s ng=%-5s class=%s gamma=%s" % (text, is_ng(p), label.kind, label.gamma))

# Within one block everything is one orbit, and the witness token says
# which bounding multiples it leaves fixed.
x = LongPoint(gamma=nat(2), rho=W, frac=Fraction(1, 2))
y = LongPoint(gamma=nat(2), rho=mul(W, nat(3)))
answer = same_orbit_recipe(x, y)
print("same block:", answer.status,
      "fixes below", answer.token.fixed_below, "and above", answer.token.fixed_above)

# Across blocks, provable distinctness covers two argument patterns:
# a multiple of omega_1 against a block-interior point, and two
# multiples whose indices are distinct powers of w.
a = LongPoint(gamma=omega_pow(nat(2)))
b = LongPoint(gamma=omega_pow(nat(4)))
print("w^2-th vs w^4-th multiple:", distinct_orbit_proof(a, b))
print("multiple vs interior:", distinct_orbit_proof(a, x))

# Distinct multiples with non-power indices stay open rather than being
# guessed; the report is honest about what the invariant can see.
c = LongPoint(gamma=nat(3))
d = LongPoint(gamma=add(W, nat(1)))
print("3rd vs (w+1)-th multiple:", distinct_orbit_proof(c, d))
print("  and same_orbit_recipe says:", same_orbit_recipe(c, d).status)
