"""Directed families, the exceeds preorder, and its poset reflection.

Run with:  python3 demos/03_ind_completion.py
"""

from dcpolab import approximates, closure_from_covers
from dcpolab.indcomp import (
    DirectedFamily,
    all_directed_subset_families,
    exceeds,
    ind_sup,
    is_left_adjunct,
    poset_reflection,
)

chain = closure_from_covers(["bot", "mid", "top"], [("bot", "mid"), ("mid", "top")])

# A family exceeds another when every member of the lower one is dominated by
# some member of the higher one.
low = DirectedFamily.from_names(chain, ("bot",))
high = DirectedFamily.from_names(chain, ("bot", "mid"))
print("low <~ high:", exceeds(chain, low, high))
print("high <~ low:", exceeds(chain, high, low))

# Families of families have suprema: the disjoint-union family.
merged = ind_sup(chain, {"l": low, "h": high})
print("merged family image:", merged.image_names())

# A family approximates a point exactly when it is left adjunct to it.
for fam in all_directed_subset_families(chain):
    for x in chain.elements:
        a = approximates(chain, fam, x)
        b = is_left_adjunct(chain, fam, x)
        assert a == b
print("approximates and left-adjunct agree on every family/point pair")

# The reflection collapses mutually exceeding families.  A family and its
# doubled copy always share a class.
single = DirectedFamily.from_names(chain, ("mid",))
doubled = DirectedFamily(chain, ("i", "j"), {"i": "mid", "j": "mid"})
quotient, classes = poset_reflection(chain, [single, doubled, low])
print("quotient elements:", quotient.elements)
print("single and doubled land together:", classes[0] == classes[1])
