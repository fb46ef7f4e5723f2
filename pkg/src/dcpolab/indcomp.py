"""Directed families over a finite poset, the exceeds preorder, and its quotient.

Quantifiers over "all directed families" range over all directed subsets of
the host: every directed family in a finite poset exceeds, and is exceeded by,
the family carried by its image, so the subsets are a complete set of
representatives (README, "finite semantics").
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDirected
from .finposet import FinPoset, directed_sup, is_directed
from .waybelow import approximates


@dataclass(frozen=True)
class DirectedFamily:
    """An index list plus a map into the host poset, required directed."""

    poset: FinPoset
    labels: tuple
    mapping: dict

    def __post_init__(self):
        if not is_directed(self.poset, self.image_names()):
            raise NotDirected(f"family image {self.image_names()} is not directed")

    @classmethod
    def from_names(cls, poset, names) -> "DirectedFamily":
        names = tuple(names)
        return cls(poset, names, {x: x for x in names})

    def value(self, label):
        return self.mapping[label]

    def image_names(self):
        return tuple(self.mapping[i] for i in self.labels)

    def sup(self):
        return directed_sup(self.poset, self.image_names())


def exceeds(poset: FinPoset, low: DirectedFamily, high: DirectedFamily) -> bool:
    """Every member of the low family sits below some member of the high one."""
    for i in low.labels:
        vi = poset.index(low.value(i))
        if not any(poset.leq[vi, poset.index(high.value(j))] for j in high.labels):
            return False
    return True


def mutually_exceed(poset, a, b) -> bool:
    return exceeds(poset, a, b) and exceeds(poset, b, a)


def ind_sup(poset: FinPoset, families: dict) -> DirectedFamily:
    """Supremum of a directed family of families: the disjoint-union family.

    ``families`` maps outer labels to DirectedFamily values; the outer family
    must be directed with respect to exceeds.
    """
    outer = list(families)
    if not outer:
        raise NotDirected("no inner families given")
    for i in outer:
        for j in outer:
            if not any(
                exceeds(poset, families[i], families[k])
                and exceeds(poset, families[j], families[k])
                for k in outer
            ):
                raise NotDirected("outer family is not directed under exceeds")
    labels = tuple((i, j) for i in outer for j in families[i].labels)
    mapping = {(i, j): families[i].value(j) for (i, j) in labels}
    return DirectedFamily(poset, labels, mapping)


def sup_map_monotone_check(poset: FinPoset, low: DirectedFamily, high: DirectedFamily) -> bool:
    """Exceeding families have comparable suprema."""
    if not exceeds(poset, low, high):
        return True
    return poset.le(low.sup(), high.sup())


def all_directed_subset_families(poset: FinPoset):
    """Every directed subset of the host, as a family; canonical order."""
    dmasks, _ = poset.directed_table
    return [DirectedFamily.from_names(poset, poset.names_of(int(m))) for m in dmasks]


def is_left_adjunct(poset: FinPoset, fam: DirectedFamily, x) -> bool:
    """fam <= beta exactly when x is below sup(beta), for every directed beta."""
    xi = poset.index(x)
    dmasks, sups = poset.directed_table
    for mask, sup in zip(dmasks.tolist(), sups.tolist()):
        beta = DirectedFamily.from_names(poset, poset.names_of(mask))
        if exceeds(poset, fam, beta) != bool(poset.leq[xi, sup]):
            return False
    return True


def poset_reflection(poset: FinPoset, families) -> tuple:
    """Quotient the given families by mutual exceeds.

    Returns the quotient FinPoset (ordered by exceeds) together with the list
    of class names, parallel to the input.  Class representatives are the
    lexicographically least sorted image among the members.
    """
    families = list(families)
    classes: list[list[int]] = []
    for idx, fam in enumerate(families):
        for cls in classes:
            if mutually_exceed(poset, fam, families[cls[0]]):
                cls.append(idx)
                break
        else:
            classes.append([idx])

    def class_name(cls):
        rep = min(tuple(sorted(families[i].image_names())) for i in cls)
        return "{" + ",".join(rep) + "}"

    names = [class_name(cls) for cls in classes]
    order = sorted(range(len(classes)), key=lambda c: names[c])
    leq = [
        [
            exceeds(poset, families[classes[order[a]][0]], families[classes[order[b]][0]])
            for b in range(len(classes))
        ]
        for a in range(len(classes))
    ]
    quotient = FinPoset(tuple(names[c] for c in order), leq)
    member_class = {}
    for ci, cls in enumerate(classes):
        for idx in cls:
            member_class[idx] = names[ci]
    return quotient, [member_class[i] for i in range(len(families))]


def approximating_class_is_unique_adjunct(poset: FinPoset, families, x) -> bool:
    """In the quotient, approximating families of x form exactly one class and
    it is the only one left adjunct to x."""
    adjunct_classes = set()
    approx_classes = set()
    _, class_names = poset_reflection(poset, families)
    for fam, cname in zip(families, class_names):
        if is_left_adjunct(poset, fam, x):
            adjunct_classes.add(cname)
        if approximates(poset, fam, x):
            approx_classes.add(cname)
    return adjunct_classes == approx_classes and len(adjunct_classes) <= 1
