"""Abstract bases, rounded ideals, and the presentation theorems.

Run with:  python3 demos/04_ideal_completion.py
"""

from dcpolab import BasisMap, closure_from_covers
from dcpolab.idealcomp import (
    AbstractBasis,
    basis_from_order,
    basis_from_waybelow,
    idl_basis_check,
    idl_iso_algebraic_check,
    idl_iso_continuous_check,
    idl_poset,
    idl_way_below,
    mediating_map,
    principal_ideal,
    validate_abstract_basis,
)

# An abstract basis needs transitivity plus nullary and binary interpolation.
# Any reflexive transitive relation qualifies.
refl = AbstractBasis.from_pairs(
    ("a", "b"), [("a", "a"), ("b", "b"), ("a", "b")]
)
print("reflexive 2-chain valid:", validate_abstract_basis(refl))

# A strict order on two points fails: nothing sits under the minimum.
strict = AbstractBasis.from_pairs(("a", "b"), [("a", "b")])
print("strict 2-chain valid:", validate_abstract_basis(strict))

# The ideals, ordered by inclusion, form the completion.
completion = idl_poset(refl)
print("\nideals of the reflexive 2-chain:", completion.poset.elements)
print("principal ideal of b:", sorted(principal_ideal(refl, "b")))
print("principal ideals are a small compact basis:", idl_basis_check(refl))

# Way-below between ideals has a member-bound characterisation.
i1, i2 = completion.ideals
print("down(a) << whole:", idl_way_below(refl, i1, i2))

# A monotone assignment out of the basis extends uniquely over the completion.
target = closure_from_covers(["lo", "hi"], [("lo", "hi")])
extension = mediating_map(completion, {"a": "lo", "b": "hi"}, target)
print("extension along principal ideals:",
      [extension.apply(x) for x in completion.poset.elements])

# Presentation theorems: a poset with a small basis is isomorphic to the
# completion of that basis under way-below, and embeds into the completion
# under the plain order (an isomorphism when the basis is compact).
diamond = closure_from_covers(
    ["bot", "a", "b", "top"],
    [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
)
identity = BasisMap.identity(diamond)
print("\ndiamond ~ ideals of its way-below basis:", idl_iso_continuous_check(diamond, identity))
print("diamond ~ ideals of its order basis:", idl_iso_algebraic_check(diamond, identity))
print("derived relations validate:",
      validate_abstract_basis(basis_from_waybelow(diamond, identity))[0],
      validate_abstract_basis(basis_from_order(diamond, identity))[0])
