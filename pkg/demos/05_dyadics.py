"""The dyadic order: exact arithmetic, interpolants, and stream ideals.

Run with:  python3 demos/05_dyadics.py
"""

import random

from dcpolab.dyadics import (
    FuelAnswer,
    dy_interpolant,
    dy_prec,
    dyadic_abstract_basis,
    format_path,
    left,
    no_compact_ideals_evidence,
    parse_path,
    principal_stream,
    right,
    stream_member,
    stream_way_below,
    to_rational,
)

# Constructor strings read outside-in; the dotted surface syntax mirrors them.
x = parse_path("L.R.M")
print("L.R.M as a rational:", to_rational(x))
print("M as a rational:", to_rational("M"))

# The strict order is defined by structural recursion and matches the exact
# rational semantics.
rng = random.Random(1)
for _ in range(5):
    a = "".join(rng.choice("LR") for _ in range(rng.randint(0, 6))) + "M"
    b = "".join(rng.choice("LR") for _ in range(rng.randint(0, 6))) + "M"
    print(f"{format_path(a)} < {format_path(b)}:",
          dy_prec(a, b), "(rationals:", to_rational(a), "<", to_rational(b), ")")

# Density is constructive: the interpolant comes from a case analysis, not
# from searching rationals.
z = dy_interpolant("M", "RM")
print("\nbetween M and R.M sits", format_path(z), "=", to_rational(z))

# No endpoints: left and right land strictly under and over any point.
print("left/right of L.M:", format_path(left("LM")), format_path(right("LM")))

# The dyadics form an abstract basis with constructive witnesses.
print("basis axioms verified up to depth 4:", dyadic_abstract_basis().validate(4))

# Ideals of the dyadic basis are infinite, so they travel as generator
# streams and all queries carry fuel.  Negative answers never claim to be
# refutations.
down_half = principal_stream("RM")
print("\nis M under one half (fuel 4):", stream_member(down_half, "M", 4).value)
print("is 3/4 under one half (fuel 16):", stream_member(down_half, "RRM", 16).value)

down_three_quarters = principal_stream("RRM")
print("down(1/2) way below down(3/4):",
      stream_way_below(down_half, down_three_quarters, 8).value)
print("down(1/2) way below itself:",
      stream_way_below(down_half, down_half, 8).value)

# Self-way-below staying unknown at every fuel is the finite face of the
# completion having no compact elements at all.
print("no-compact-elements evidence at M:", no_compact_ideals_evidence("M"))
assert stream_way_below(down_half, down_half, 32) is FuelAnswer.UNKNOWN
