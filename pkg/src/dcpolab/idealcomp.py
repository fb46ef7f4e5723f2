"""Abstract bases and their rounded ideal completions.

A finite abstract basis keeps its carrier as a tuple of hashable labels and
its transitive relation as a boolean matrix.  Ideals are frozensets of carrier
members; the completed poset names each ideal by the brace-wrapped, canonically
ordered member list.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    CarrierTooLarge,
    NoJoins,
    NotABasis,
    NotMonotone,
    TooLarge,
    UnknownElement,
)
from .finposet import FinPoset, MonoMap, _bits, directed_sup, is_scott_continuous
from .waybelow import BasisMap, check_small_basis, way_below

ENUMERATION_CARRIER_LIMIT = 12


@dataclass(frozen=True)
class AbstractBasis:
    """A carrier with a transitive relation satisfying interpolation."""

    carrier: tuple
    prec: np.ndarray

    def __post_init__(self):
        mat = np.array(self.prec, dtype=bool)
        n = len(self.carrier)
        if mat.shape != (n, n):
            raise UnknownElement("relation shape does not match carrier")
        mat.setflags(write=False)
        object.__setattr__(self, "prec", mat)

    @classmethod
    def from_pairs(cls, carrier, pairs) -> "AbstractBasis":
        carrier = tuple(carrier)
        index = {c: i for i, c in enumerate(carrier)}
        mat = np.zeros((len(carrier), len(carrier)), dtype=bool)
        for a, b in pairs:
            if a not in index or b not in index:
                raise UnknownElement(f"pair {a!r}<{b!r} mentions an unknown element")
            mat[index[a], index[b]] = True
        return cls(carrier, mat)

    @property
    def n(self) -> int:
        return len(self.carrier)

    def index(self, member) -> int:
        try:
            return self.carrier.index(member)
        except ValueError:
            raise UnknownElement(f"{member!r} is not in the carrier") from None

    def prec_holds(self, a, b) -> bool:
        return bool(self.prec[self.index(a), self.index(b)])

    def is_reflexive(self) -> bool:
        return bool(self.prec[np.diag_indices(self.n)].all()) if self.n else True

    @cached_property
    def names(self) -> tuple:
        if all(isinstance(c, str) for c in self.carrier) and len(set(self.carrier)) == self.n:
            return self.carrier
        return tuple(f"b{i}" for i in range(self.n))


def validate_abstract_basis(basis: AbstractBasis):
    """Transitivity plus nullary and binary interpolation, by exhaustion.

    Returns (True, None) or (False, counterexample) where the counterexample
    names the first failing axiom and its witnesses.
    """
    n, rel = basis.n, basis.prec
    for a in range(n):
        for b in range(n):
            if rel[a, b]:
                for c in range(n):
                    if rel[b, c] and not rel[a, c]:
                        return False, (
                            "transitivity",
                            basis.carrier[a],
                            basis.carrier[b],
                            basis.carrier[c],
                        )
    for a in range(n):
        if not rel[:, a].any():
            return False, ("nullary-interpolation", basis.carrier[a])
    for b in range(n):
        under = [a for a in range(n) if rel[a, b]]
        for a1 in under:
            for a2 in under:
                if not any(rel[a1, c] and rel[a2, c] and rel[c, b] for c in range(n)):
                    return False, (
                        "binary-interpolation",
                        basis.carrier[a1],
                        basis.carrier[a2],
                        basis.carrier[b],
                    )
    return True, None


def _mask_is_ideal(basis: AbstractBasis, mask: int) -> bool:
    if mask == 0:
        return False
    rel = basis.prec
    members = list(_bits(mask))
    for b in members:
        for a in range(basis.n):
            if rel[a, b] and not mask & (1 << a):
                return False
    for b1 in members:
        for b2 in members:
            if not any(rel[b1, c] and rel[b2, c] for c in _bits(mask)):
                return False
    return True


def is_ideal(basis: AbstractBasis, subset) -> bool:
    """A directed lower set with respect to the basis relation."""
    mask = 0
    for member in subset:
        mask |= 1 << basis.index(member)
    return _mask_is_ideal(basis, mask)


def principal_ideal(basis: AbstractBasis, member) -> frozenset:
    """Everything strictly under the member: {a | a < member}."""
    j = basis.index(member)
    return frozenset(basis.carrier[i] for i in range(basis.n) if basis.prec[i, j])


def ideal_is_rounded(basis: AbstractBasis, ideal) -> bool:
    return all(any(basis.prec_holds(a, b) for b in ideal) for a in ideal)


def enumerate_ideals(basis: AbstractBasis):
    """All ideals of a finite basis, in ascending bitmask order."""
    if basis.n > ENUMERATION_CARRIER_LIMIT:
        raise CarrierTooLarge(f"carrier of {basis.n} exceeds the subset-scan bound")
    out = []
    for mask in range(1, 1 << basis.n):
        if _mask_is_ideal(basis, mask):
            out.append(frozenset(basis.carrier[i] for i in _bits(mask)))
    return out


def ideal_name(basis: AbstractBasis, ideal) -> str:
    ordered = sorted(basis.index(m) for m in ideal)
    return "{" + ",".join(basis.names[i] for i in ordered) + "}"


@dataclass(frozen=True)
class IdealCompletion:
    basis: AbstractBasis
    ideals: tuple
    poset: FinPoset

    def name_of(self, ideal) -> str:
        return ideal_name(self.basis, ideal)

    def ideal_of(self, name) -> frozenset:
        return self.ideals[self.poset.index(name)]

    def principal_basis(self) -> BasisMap:
        """The principal-ideal map, as a basis candidate for the completion."""
        return BasisMap(
            self.poset,
            tuple(self.basis.carrier),
            {b: self.name_of(principal_ideal(self.basis, b)) for b in self.basis.carrier},
        )


def idl_poset(basis: AbstractBasis) -> IdealCompletion:
    """The ideals ordered by inclusion, as a finite poset.

    Construction re-verifies that directed unions of ideals are ideals and
    that every ideal is rounded.
    """
    ideals = enumerate_ideals(basis)
    names = [ideal_name(basis, ideal) for ideal in ideals]
    leq = [[a <= b for b in ideals] for a in ideals]
    poset = FinPoset(tuple(names), leq)
    for ideal in ideals:
        if not ideal_is_rounded(basis, ideal):
            raise NotABasis(f"ideal {ideal} is not rounded")
    if len(ideals) <= 16:
        dmasks, _ = poset.directed_table
        for mask in dmasks.tolist():
            union = frozenset().union(*(ideals[i] for i in _bits(mask)))
            if not is_ideal(basis, union):
                raise NotABasis("a directed union of ideals is not an ideal")
    return IdealCompletion(basis, tuple(ideals), poset)


def idl_way_below(basis: AbstractBasis, i_ideal, j_ideal) -> bool:
    """Way-below between ideals via the characterisation: some member of the
    right ideal bounds the whole left ideal."""
    return any(i_ideal <= principal_ideal(basis, b) for b in j_ideal)


def idl_basis_check(basis: AbstractBasis) -> bool:
    """Principal ideals form a small basis; a compact one when reflexive."""
    from .waybelow import check_small_compact_basis, is_compact

    completion = idl_poset(basis)
    beta = completion.principal_basis()
    if not check_small_basis(completion.poset, beta):
        return False
    if basis.is_reflexive():
        if not check_small_compact_basis(completion.poset, beta):
            return False
        if not all(
            is_compact(completion.poset, completion.name_of(principal_ideal(basis, b)))
            for b in basis.carrier
        ):
            return False
    return True


def mediating_map(completion: IdealCompletion, assignment, target: FinPoset) -> MonoMap:
    """Extend a monotone basis assignment to the whole completion.

    Sends an ideal to the directed supremum of the images of its members; the
    result is Scott continuous, and it is the unique continuous extension when
    the basis relation is reflexive.
    """
    basis = completion.basis
    getter = assignment.__getitem__ if hasattr(assignment, "__getitem__") else assignment
    values = {b: getter(b) for b in basis.carrier}
    for a in basis.carrier:
        for b in basis.carrier:
            if basis.prec_holds(a, b) and not target.le(values[a], values[b]):
                raise NotMonotone(f"assignment breaks monotonicity at {a!r} < {b!r}")
    graph = []
    for ideal in completion.ideals:
        image = tuple(values[m] for m in ideal)
        graph.append(target.index(directed_sup(target, image)))
    out = MonoMap(completion.poset, target, graph)
    if not is_scott_continuous(out):
        raise NotMonotone("extension failed to be continuous")
    if basis.is_reflexive():
        for b in basis.carrier:
            if out.apply(ideal_name(basis, principal_ideal(basis, b))) != values[b]:
                raise NotMonotone(f"extension misses the assignment at {b!r}")
    return out


def directify(poset: FinPoset, fam) -> "DirectedFamily":
    """Close a family under finite joins, indexing by deduplicated subsets.

    Finite lists of indices all collapse to their member sets because joins
    are associative, commutative and idempotent; the empty subset contributes
    the least element.
    """
    from .indcomp import DirectedFamily

    if poset.bottom is None or not (poset.lub_table >= 0).all():
        raise NoJoins("host poset lacks a least element or binary joins")
    if hasattr(fam, "labels"):
        base = [(label, fam.value(label)) for label in fam.labels]
    else:
        base = list(fam.items())
    seen = set()
    deduped = []
    for label, value in base:
        if value not in seen:
            seen.add(value)
            deduped.append((label, value))
    if len(deduped) > 16:
        raise TooLarge("directification over more than 2^16 subsets")
    labels = []
    mapping = {}
    for mask in range(1 << len(deduped)):
        subset = tuple(deduped[i][0] for i in _bits(mask))
        j = poset.bottom
        for i in _bits(mask):
            j = int(poset.lub_table[j, poset.index(deduped[i][1])])
        labels.append(subset)
        mapping[subset] = poset.elements[j]
    return DirectedFamily(poset, tuple(labels), mapping)


def basis_from_waybelow(poset: FinPoset, beta: BasisMap) -> AbstractBasis:
    """Turn a small basis into an abstract basis under the way-below relation."""
    return _basis_from_relation(poset, beta, use_way_below=True)


def basis_from_order(poset: FinPoset, beta: BasisMap) -> AbstractBasis:
    """Turn a small basis into an abstract basis under the order relation."""
    return _basis_from_relation(poset, beta, use_way_below=False)


def _basis_from_relation(poset, beta, *, use_way_below) -> AbstractBasis:
    if not check_small_basis(poset, beta):
        raise NotABasis("input is not a small basis")
    n = len(beta.labels)
    mat = np.zeros((n, n), dtype=bool)
    for i, b in enumerate(beta.labels):
        for j, c in enumerate(beta.labels):
            if use_way_below:
                mat[i, j] = way_below(poset, beta.value(b), beta.value(c))
            else:
                mat[i, j] = poset.le(beta.value(b), beta.value(c))
    out = AbstractBasis(tuple(beta.labels), mat)
    ok, witness = validate_abstract_basis(out)
    if not ok:
        raise NotABasis(f"derived relation is not an abstract basis: {witness}")
    return out


def way_fiber_ideal(poset: FinPoset, beta: BasisMap, x) -> frozenset:
    """The way-below fiber of x, as a subset of the basis carrier."""
    return frozenset(b for b in beta.labels if way_below(poset, beta.value(b), x))


def idl_ep_pair(poset: FinPoset, beta: BasisMap, *, use_way_below):
    """The fiber map into the completion and the supremum map back."""
    from .finposet import EpPair

    ab = _basis_from_relation(poset, beta, use_way_below=use_way_below)
    completion = idl_poset(ab)
    graph = []
    for x in poset.elements:
        fiber = way_fiber_ideal(poset, beta, x)
        try:
            graph.append(completion.poset.index(ideal_name(ab, fiber)))
        except UnknownElement:
            raise NotABasis(f"fiber of {x} is not an ideal of the derived basis") from None
    section = MonoMap(poset, completion.poset, graph)
    retraction = mediating_map(completion, {b: beta.value(b) for b in ab.carrier}, poset)
    return EpPair(embed=section, project=retraction), completion


def idl_iso_continuous_check(poset: FinPoset, beta: BasisMap) -> bool:
    """The fiber map onto the way-below completion is an order-isomorphism."""
    pair, completion = idl_ep_pair(poset, beta, use_way_below=True)
    s, r = pair.embed, pair.project
    if sorted(s.graph) != list(range(completion.poset.n)):
        return False
    if any(r.graph[s.graph[i]] != i for i in range(poset.n)):
        return False
    if any(s.graph[r.graph[j]] != j for j in range(completion.poset.n)):
        return False
    for i in range(poset.n):
        for j in range(poset.n):
            if bool(poset.leq[i, j]) != bool(completion.poset.leq[s.graph[i], s.graph[j]]):
                return False
    return True


def idl_iso_algebraic_check(poset: FinPoset, beta: BasisMap) -> bool:
    """The fiber map into the order completion embeds; iso for compact bases."""
    from .finposet import validate_ep_pair
    from .waybelow import check_small_compact_basis

    pair, completion = idl_ep_pair(poset, beta, use_way_below=False)
    if not validate_ep_pair(pair):
        return False
    if check_small_compact_basis(poset, beta):
        s, r = pair.embed, pair.project
        if sorted(s.graph) != list(range(completion.poset.n)):
            return False
        if any(s.graph[r.graph[j]] != j for j in range(completion.poset.n)):
            return False
    return True
