"""Exponentials, step-function bases, and the function-space tower.

Run with:  python3 demos/06_step_functions_and_tower.py
"""

from dcpolab import BasisMap, check_small_compact_basis
from dcpolab.bilimit import dinfty_demo, finite_bilimit, scott_tower
from dcpolab.canonex import sierpinski
from dcpolab.expo import exponential, step_basis, step_function

# The exponential of two finite posets: every monotone map, pointwise order.
omega, omega_basis = sierpinski()
self_maps = exponential(omega, omega)
print("monotone self-maps of the two-point chain:", self_maps.poset.elements)
for name, m in zip(self_maps.poset.elements, self_maps.maps):
    print(" ", name, {x: m.apply(x) for x in omega.elements})

# A step function jumps from bottom to a fixed value at a threshold.
step = step_function(omega, omega, "top", "top")
print("\nstep at (top, top):", {x: step.apply(x) for x in omega.elements})

# Joins of step functions below a map rebuild the map; saturating those joins
# gives a small compact basis of the exponential.
basis = step_basis(omega, omega_basis, omega, omega_basis)
print("step basis size:", len(basis.labels))
print("step basis is a small compact basis:", check_small_compact_basis(self_maps.poset, basis))

# The tower iterates self-exponentials from the two-point chain, glued by
# section/retraction pairs; its finite bilimit is the top stage in disguise.
tower = scott_tower(2)
print("\ntower stage sizes:", [s.n for s in tower.stages])
bilim = finite_bilimit(tower)
print("bilimit elements (tuples over the stages):")
for name in bilim.poset.elements[:3]:
    print(" ", name)
print("  ...")

# The full demonstration: per-stage step bases pushed into the bilimit give
# a small compact basis there.
report = dinfty_demo()
for key, value in report.items():
    print(f"{key}: {value}")
