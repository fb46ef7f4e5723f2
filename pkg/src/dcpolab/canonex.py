"""Canonical example posets with their small compact bases.

The two-point poset stands in for the poset of truth values: the toolkit's
metatheory is classical, so the extra constructive structure of truth values
collapses to bottom-versus-top (see README).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ClauseViolation
from .finposet import FinPoset, _bits, closure_from_covers
from .waybelow import BasisMap

BOT = "bot"
TOP = "top"


def sierpinski():
    """The two-point chain with its two-element basis."""
    poset = closure_from_covers((BOT, TOP), [(BOT, TOP)])
    basis = BasisMap(poset, ("0", "1"), {"0": BOT, "1": TOP})
    return poset, basis


def lifting(n: int):
    """A flat domain: bottom under n pairwise-incomparable points.

    The basis is indexed by one unit label plus one label per point.
    """
    points = tuple(f"x{i}" for i in range(n))
    poset = closure_from_covers((BOT,) + points, [(BOT, p) for p in points])
    labels = ("inl",) + tuple(f"inr_{p}" for p in points)
    into = {"inl": BOT, **{f"inr_{p}": p for p in points}}
    return poset, BasisMap(poset, labels, into)


def subset_name(ground, members) -> str:
    ordered = [g for g in ground if g in set(members)]
    return "{" + ",".join(ordered) + "}"


@dataclass(frozen=True)
class PowersetLattice:
    """The full subset lattice of a finite ground set, ordered by inclusion."""

    ground: tuple
    poset: FinPoset

    def name(self, members) -> str:
        return subset_name(self.ground, members)

    def members(self, name) -> frozenset:
        i = self.poset.index(name)
        return frozenset(self.ground[b] for b in _bits(i))


@dataclass(frozen=True)
class ListBasis:
    """All lists over the ground set up to the surjectivity length bound,
    mapped to the set of their elements.

    Duplicates past length n add nothing, so the bound equals the ground size.
    """

    lattice: PowersetLattice
    basis: BasisMap


def powerset(n: int):
    """The subset lattice of an n-element ground set with its list basis."""
    ground = tuple(f"x{i}" for i in range(n))
    names = [subset_name(ground, [ground[b] for b in _bits(mask)]) for mask in range(1 << n)]
    leq = [[(a | b) == b for b in range(1 << n)] for a in range(1 << n)]
    lattice = PowersetLattice(ground, FinPoset(tuple(names), leq))
    labels = []
    into = {}
    for length in range(n + 1):
        for tup in product(ground, repeat=length):
            labels.append(tup)
            into[tup] = subset_name(ground, tup)
    return lattice, ListBasis(lattice, BasisMap(lattice.poset, tuple(labels), into))


def _subsets(ground):
    for mask in range(1 << len(ground)):
        yield frozenset(ground[b] for b in _bits(mask))


def kuratowski_induction(prop, n: int) -> bool:
    """Run the finite-subset induction principle against direct evaluation.

    ``prop`` takes a frozenset of ground names.  The three clauses (empty set,
    singletons, binary unions) are verified by exhaustion; a failing clause
    raises ClauseViolation naming it.  The conclusion, that the property holds
    for every subset, is then checked directly as well.
    """
    ground = tuple(f"x{i}" for i in range(n))
    if not prop(frozenset()):
        raise ClauseViolation("empty", frozenset())
    for g in ground:
        if not prop(frozenset((g,))):
            raise ClauseViolation("singleton", g)
    subsets = list(_subsets(ground))
    for a in subsets:
        if not prop(a):
            continue
        for b in subsets:
            if prop(b) and not prop(a | b):
                raise ClauseViolation("union", (a, b))
    return all(prop(s) for s in subsets)


def kuratowski_union_singleton_check(n: int) -> bool:
    """The list-to-set map hits the empty set, all singletons, and realises
    binary unions by concatenation; its image is every subset."""
    lattice, lists = powerset(n)
    beta = lists.basis
    if beta.value(()) != lattice.name(()):
        return False
    for g in lattice.ground:
        if beta.value((g,)) != lattice.name((g,)):
            return False
    for l1 in beta.labels:
        for l2 in beta.labels:
            if len(l1) + len(l2) <= n:
                joined = beta.value(l1 + l2)
                union = lattice.members(beta.value(l1)) | lattice.members(beta.value(l2))
                if joined != lattice.name(union):
                    return False
    return set(beta.image_names()) == set(lattice.poset.elements)
