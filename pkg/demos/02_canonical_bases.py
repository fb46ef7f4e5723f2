"""The canonical examples and their small compact bases.

Run with:  python3 demos/02_canonical_bases.py
"""

from dcpolab import (
    basis_contains_all_compacts_check,
    check_small_compact_basis,
    compacts,
    interpolate_binary,
    leq_via_basis,
)
from dcpolab.canonex import (
    kuratowski_induction,
    kuratowski_union_singleton_check,
    lifting,
    powerset,
    sierpinski,
)

# The two-point chain plays the poset of truth values; its basis has exactly
# one label per point and both points are compact.
omega, omega_basis = sierpinski()
print("two-point compacts:", compacts(omega))
print("two-element basis is a small compact basis:", check_small_compact_basis(omega, omega_basis))

# Flat domains: bottom under n incomparable points, basis indexed by 1 + n.
flat, flat_basis = lifting(3)
print("\nlifting(3) elements:", flat.elements)
print("its basis is small and compact:", check_small_compact_basis(flat, flat_basis))
print("basis hits every compact element:", basis_contains_all_compacts_check(flat, flat_basis))

# The powerset lattice with the list-to-set basis.  Lists are the index, the
# set of elements is the value, and every subset is hit.
lattice, lists = powerset(3)
print("\npowerset(3) size:", lattice.poset.n)
print("number of compacts:", len(compacts(lattice.poset)))
print("list basis is a small compact basis:", check_small_compact_basis(lattice.poset, lists.basis))

# The order is recoverable from the basis alone.
x, y = "{x0}", "{x0,x1}"
print(f"\norder via basis agrees at ({x}, {y}):",
      leq_via_basis(lattice.poset, lists.basis, x, y) == lattice.poset.le(x, y))

# Interpolation happens inside the basis: two sets way below the top admit a
# common basis bound that is still way below the top.
witness = interpolate_binary(lattice.poset, lists.basis, "{x0}", "{x1}", "{x0,x1,x2}")
print("a bound for {x0},{x1} under the top:", lists.basis.value(witness))

# Finite-subset induction: a property closed under empty set, singletons and
# binary unions holds for every subset.
print("\ninduction proves 'at most 3 members':", kuratowski_induction(lambda s: len(s) <= 3, 3))
print("list image closed under union-by-concatenation:", kuratowski_union_singleton_check(3))
