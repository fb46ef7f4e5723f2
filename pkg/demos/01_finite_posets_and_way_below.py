"""Tour of the substrate: finite posets, directed subsets, and way-below.

Run with:  python3 demos/01_finite_posets_and_way_below.py
"""

from dcpolab import (
    closure_from_covers,
    compacts,
    directed_sup,
    is_directed,
    way_below,
)
from dcpolab.cli import emit_dot, generate_corpus

# A poset is born from its cover relation; the order is the closure.
diamond = closure_from_covers(
    ["bot", "a", "b", "top"],
    [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
)
print("diamond covers:", diamond.covers())
print("bot <= top:", diamond.le("bot", "top"))
print("a <= b:", diamond.le("a", "b"))

# Directedness asks every pair of members for an upper bound inside the set.
print("\n{a, b} directed:", is_directed(diamond, ["a", "b"]))
print("{bot, a, top} directed:", is_directed(diamond, ["bot", "a", "top"]))
print("sup {bot, a, top}:", directed_sup(diamond, ["bot", "a", "top"]))

# Way-below quantifies over every directed subset.  On a finite poset each
# directed subset contains its own supremum, which collapses way-below onto
# the order itself; watching that collapse happen is the point of the check.
print("\nbot << top:", way_below(diamond, "bot", "top"))
print("top << top:", way_below(diamond, "top", "top"))
for poset in generate_corpus(seed=0, count=3, max_size=5):
    degenerate = all(
        way_below(poset, x, y) == poset.le(x, y)
        for x in poset.elements
        for y in poset.elements
    )
    print(f"poset of size {poset.n}: way-below equals order: {degenerate}")

# Everything in a finite poset is compact (way below itself).
print("\ncompacts of the diamond:", compacts(diamond))

# The Hasse diagram travels as DOT for rendering elsewhere.
print("\n" + emit_dot(diamond))
