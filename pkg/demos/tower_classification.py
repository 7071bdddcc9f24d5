"""
Finite towers and their kappa + 1 point types
=============================================

Level 1 is the closed long line; level kappa glues integer-many copies
of level kappa - 1 end to end and compactifies with one joint.  A point
is classified by how it is approached from the left: an interval, a copy
of [0, omega_1), or a countable ladder of previously classified points.
"""

from longsol import (
    Address,
    TowerPoint,
    base_automorphism_token,
    mul,
    nat,
    omega_pow,
    parse_tower_point,
    point_type,
    same_orbit,
    strip_top,
    within_copy_hat,
)

W = omega_pow(nat(1))

# Types at level 3: bases are 1, deeper stops climb, the joint tops out.
level = 3
samples = ["[1,-3; w + 1/2]", "[2,7]", "[4]", "inf"]
for text in samples:
    p = parse_tower_point(text, level)
    print("level %d point %-16s type %d" % (level, text, point_type(p)))

# That gives kappa + 1 classes per level, with the joint alone on top.
for kappa in (1, 2, 3, 4, 5):
    joint = TowerPoint(kappa)
    print("level %d: joint type %d of %d classes" %
          (kappa, point_type(joint), kappa + 1))

# same_orbit is just equality of types at equal levels.
a = parse_tower_point("[4]", 3)
b = parse_tower_point("[9]", 3)
print("[4] ~ [9] at level 3:", same_orbit(a, b))
print("[4] ~ [4,0]:", same_orbit(a, parse_tower_point("[4,0]", 3)))

# Stripping the leading integer lands one level down; a depth-1 stop
# strips to the fixed minimum marker of its factor.
print("strip [2,7] ->", strip_top(parse_tower_point("[2,7]", 3)))
print("strip [5]   ->", strip_top(parse_tower_point("[5]", 2)))

# Witness tokens: at level 1 an automorphism moving w to w*2 can be
# supported on a countable initial segment; at higher levels the move
# factors through a shift of the top integer.
x = TowerPoint(1, Address((), W))
y = TowerPoint(1, Address((), mul(W, nat(2))))
token = base_automorphism_token(x, y)
print("level 1 token fixes everything above", token.fixed_above)

shift, hat = within_copy_hat(
    TowerPoint(3, Address((1, 4))), TowerPoint(3, Address((2, 9)))
)
print("level 3 move = shift by %d, then a level-2 hat %s -> %s"
      % (shift, hat.source, hat.target))
