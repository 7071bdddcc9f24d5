"""
First cohomology of long solenoids
==================================

Each bonding map multiplies degree by its covering multiplicity, so the
first Cech cohomology of the inverse limit is the direct limit
Z -> Z -> ... with those multiplications: the rationals whose
denominators divide some partial product.  For eventually periodic
bonding sequences the group is pinned down by a supernatural number.
"""

from fractions import Fraction

from longsol import (
    dl_add,
    dl_of_rational,
    dl_value,
    h1_action,
    inequivalent_family,
    mccord_equivalent,
    member,
    parse_descriptor,
    supernatural_of,
)

# The induced map on H^1 of one bond is multiplication by its degree.
print("degree of the 3-fold bond over stage 2:", h1_action(3, 2))

# A descriptor is PREFIX:CYCLE.  Prefix primes keep finite counts unless
# the cycle repeats them forever.
for text in ["12:5", ":2", "6:6"]:
    s = parse_descriptor(text)
    sup = supernatural_of(s)
    print("%-6s finite=%s infinite=%s" % (text, dict(sup.finite), set(sup.infinite)))

# Group membership is a divisibility question against that invariant.
doubling = parse_descriptor(":2")
for r in [Fraction(5, 8), Fraction(1, 3)]:
    print("%s in the dyadic group: %s" % (r, member(doubling, r)))

# Elements live at a level; arithmetic lifts to the deeper level and
# canonicalizes back down.
s = parse_descriptor(":2,3")
u = dl_of_rational(s, Fraction(5, 6))
v = dl_of_rational(s, Fraction(1, 2))
total = dl_add(s, u, v)
print("5/6 + 1/2 -> level %d numerator %d = %s"
      % (total.level, total.numerator, dl_value(s, total)))

# Two solenoids are homeomorphic exactly when finitely many deletions
# match the sequences, which for these descriptors is equality of the
# infinite prime sets.
print("2,2,2,... ~ 3,2,2,... :", mccord_equivalent(
    parse_descriptor(":2"), parse_descriptor("3:2")))
print("2,3,2,3,... ~ 6,6,... :", mccord_equivalent(
    parse_descriptor(":2,3"), parse_descriptor(":6")))
print("2,2,... ~ 3,3,...     :", mccord_equivalent(
    parse_descriptor(":2"), parse_descriptor(":3")))

# Distinct cycle primes give as many pairwise distinct homeomorphism
# types as requested.
family = inequivalent_family(8)
print("an inequivalent family:", [str(s) for s in family])
