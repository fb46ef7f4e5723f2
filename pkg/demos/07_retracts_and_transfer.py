"""Section/retraction pairs and how bases travel down along them.

Run with:  python3 demos/07_retracts_and_transfer.py
"""

from dcpolab import (
    BasisMap,
    EpPair,
    MonoMap,
    check_small_basis,
    closure_from_covers,
    retract_way_below_transfer_check,
    transfer_basis_along_retract,
    validate_ep_pair,
    way_below,
)
from dcpolab.cli import generate_ep_corpus

# The two-point chain sits inside the diamond: include the ends, collapse the
# middle layer to the bottom.  Round trip on the chain is the identity, and
# the round trip on the diamond only ever moves points down.
chain = closure_from_covers(["bot", "top"], [("bot", "top")])
diamond = closure_from_covers(
    ["bot", "a", "b", "top"],
    [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
)
section = MonoMap.from_mapping(chain, diamond, {"bot": "bot", "top": "top"})
retraction = MonoMap.from_mapping(
    diamond, chain, {"bot": "bot", "a": "bot", "b": "bot", "top": "top"}
)
pair = EpPair(embed=section, project=retraction)
print("section/retraction laws hold:", validate_ep_pair(pair))

# Way-below transfers backwards: anything way under the image of x maps to
# something way under x.
print("way-below transfer law:", retract_way_below_transfer_check(section, retraction))
print("  e.g. a << section(top) in the diamond:", way_below(diamond, "a", "top"),
      "and retraction(a) << top in the chain:",
      way_below(chain, retraction.apply("a"), "top"))

# A small basis upstairs becomes a small basis downstairs by post-composing
# with the retraction (labels survive, values get collapsed).
moved = transfer_basis_along_retract(section, retraction, BasisMap.identity(diamond))
print("\ntransferred basis values:", moved.image_names())
print("still a small basis for the chain:", check_small_basis(chain, moved))

# The same story holds over a whole seeded corpus of pairs, each one obtained
# by splitting a monotone idempotent deflation of a random poset.
corpus = generate_ep_corpus(seed=2, count=10, max_size=5)
all_ok = all(
    check_small_basis(
        p.embed.source,
        transfer_basis_along_retract(p.embed, p.project, BasisMap.identity(p.embed.target)),
    )
    and retract_way_below_transfer_check(p.embed, p.project)
    for p in corpus
)
print("ten random pairs transfer cleanly:", all_ok)
