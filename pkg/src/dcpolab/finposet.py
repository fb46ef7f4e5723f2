"""Finite posets with a dense boolean order matrix, plus the maps between them.

Elements are string identifiers; the canonical order is construction order and
every enumeration in the package iterates in it, so all outputs are
deterministic.  Subsets travel as machine-word bitmasks keyed to the canonical
order, which makes subset enumeration (the hot loop of everything downstream)
a vectorised pass over ``numpy`` integer arrays.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import (
    CycleDetected,
    DuplicateElement,
    InvalidPoset,
    NotDirected,
    NotMonotone,
    ShapeMismatch,
    TooLarge,
    UnknownElement,
)

# Hard cap for materialising all 2^n subsets of a carrier.
SUBSET_ENUM_LIMIT = 16


class FinPoset:
    """An immutable finite poset over named elements.

    ``leq`` is an n-by-n boolean matrix in canonical element order;
    it is validated to be reflexive, transitive and antisymmetric.
    """

    __slots__ = ("elements", "leq", "_index", "above_int", "below_int", "__dict__")

    def __init__(self, elements, leq):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise DuplicateElement(f"duplicate element among {elements}")
        n = len(elements)
        mat = np.array(leq, dtype=bool).reshape((n, n)) if n else np.zeros((0, 0), bool)
        if n:
            if not mat[np.diag_indices(n)].all():
                raise InvalidPoset("order is not reflexive")
            if (mat & mat.T & ~np.eye(n, dtype=bool)).any():
                raise InvalidPoset("order is not antisymmetric")
            closed = mat | (mat @ mat)
            if (closed != mat).any():
                raise InvalidPoset("order is not transitive")
        mat.setflags(write=False)
        self.elements = elements
        self.leq = mat
        self._index = {name: i for i, name in enumerate(elements)}
        self.above_int = [_row_mask(mat[i]) for i in range(n)]
        self.below_int = [_row_mask(mat[:, i]) for i in range(n)]

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"{name!r} is not an element") from None

    def le(self, x, y) -> bool:
        """Decide x below-or-equal y, by name."""
        return bool(self.leq[self.index(x), self.index(y)])

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def mask_of(self, subset) -> int:
        """Coerce a subset (bitmask or iterable of names) to a bitmask."""
        if isinstance(subset, int):
            if subset < 0 or subset > self.full_mask():
                raise UnknownElement(f"mask {subset:#x} out of range")
            return subset
        mask = 0
        for name in subset:
            mask |= 1 << self.index(name)
        return mask

    def names_of(self, mask: int) -> tuple:
        return tuple(self.elements[i] for i in _bits(mask))

    def covers(self):
        """Cover pairs (lower, upper) of the Hasse diagram, canonical order."""
        n = self.n
        lt = self.leq & ~np.eye(n, dtype=bool)
        has_mid = lt @ lt
        out = []
        for i in range(n):
            for j in range(n):
                if lt[i, j] and not has_mid[i, j]:
                    out.append((self.elements[i], self.elements[j]))
        return out

    @cached_property
    def bottom(self):
        """Index of the least element, or None."""
        for i in range(self.n):
            if self.below_int[i] == 1 << i and self.above_int[i] == self.full_mask():
                return i
        return None

    @cached_property
    def lub_table(self):
        """n-by-n table of least-upper-bound indices, -1 where none exists."""
        n = self.n
        table = np.full((n, n), -1, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                ubs = self.above_int[i] & self.above_int[j]
                for u in _bits(ubs):
                    if ubs & ~self.above_int[u] == 0:
                        table[i, j] = u
                        break
        table.setflags(write=False)
        return table

    def is_lattice(self) -> bool:
        """Pointed with all binary joins; at finite scale that settles meets too."""
        return self.n > 0 and self.bottom is not None and (self.lub_table >= 0).all()

    @cached_property
    def directed_table(self):
        """All directed subset masks paired with the index of their greatest member.

        Vectorised over every subset of the carrier; guarded so that no caller
        silently asks for 2^n past the desk-scale budget.
        """
        n = self.n
        if n == 0:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
        if n > SUBSET_ENUM_LIMIT:
            raise TooLarge(f"2^{n} subsets exceeds the enumeration budget")
        masks = np.arange(1, 1 << n, dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for i in range(n):
            has_i = (masks & (1 << i)) != 0
            for j in range(i + 1, n):
                both = has_i & ((masks & (1 << j)) != 0)
                ub = self.above_int[i] & self.above_int[j]
                ok &= ~(both & ((masks & ub) == 0))
        dmasks = masks[ok]
        sups = np.full(dmasks.shape, -1, dtype=np.int64)
        full = self.full_mask()
        for g in range(n):
            outside = full ^ self.below_int[g]
            is_g = ((dmasks & (1 << g)) != 0) & ((dmasks & outside) == 0)
            sups[is_g] = g
        if (sups < 0).any():
            raise InvalidPoset("a directed subset without greatest element")
        dmasks.setflags(write=False)
        sups.setflags(write=False)
        return dmasks, sups

    def __repr__(self):
        return f"FinPoset({list(self.elements)!r}, covers={self.covers()!r})"

    def __eq__(self, other):
        return (
            isinstance(other, FinPoset)
            and self.elements == other.elements
            and bool((self.leq == other.leq).all())
        )

    def __hash__(self):
        return hash((self.elements, self.leq.tobytes()))


def _row_mask(row) -> int:
    mask = 0
    for i, v in enumerate(row):
        if v:
            mask |= 1 << i
    return mask


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def closure_from_covers(elements, covers) -> FinPoset:
    """Build a poset as the reflexive-transitive closure of cover pairs."""
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise DuplicateElement(f"duplicate element among {elements}")
    index = {name: i for i, name in enumerate(elements)}
    n = len(elements)
    mat = np.eye(n, dtype=bool)
    for lo, hi in covers:
        if lo not in index or hi not in index:
            raise UnknownElement(f"cover {lo}<{hi} mentions an unknown element")
        mat[index[lo], index[hi]] = True
    for _ in range(max(n, 1)):
        new = mat | (mat @ mat)
        if (new == mat).all():
            break
        mat = new
    if (mat & mat.T & ~np.eye(n, dtype=bool)).any():
        raise CycleDetected("cover relation contains a cycle")
    return FinPoset(elements, mat)


def subposet(poset: FinPoset, names) -> FinPoset:
    """The induced sub-poset on the given elements (canonical order kept)."""
    keep = [poset.index(x) for x in names]
    order = sorted(keep)
    sub = poset.leq[np.ix_(order, order)]
    return FinPoset(tuple(poset.elements[i] for i in order), sub)


def is_directed(poset: FinPoset, subset) -> bool:
    """Inhabited, and every pair of members has an upper bound among members."""
    mask = poset.mask_of(subset)
    if mask == 0:
        return False
    members = list(_bits(mask))
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if mask & poset.above_int[members[a]] & poset.above_int[members[b]] == 0:
                return False
    return True


def directed_sup(poset: FinPoset, subset):
    """Greatest member of a directed subset; equals its least upper bound."""
    mask = poset.mask_of(subset)
    if not is_directed(poset, mask):
        raise NotDirected(f"{poset.names_of(mask)} is not directed")
    outside = poset.full_mask()
    for g in _bits(mask):
        if mask & (outside ^ poset.below_int[g]) == 0:
            return poset.elements[g]
    raise InvalidPoset("directed subset without greatest element")


def upper_bounds_mask(poset: FinPoset, subset) -> int:
    """Bitmask of common upper bounds of a subset (full mask when empty)."""
    mask = poset.mask_of(subset)
    ubs = poset.full_mask()
    for i in _bits(mask):
        ubs &= poset.above_int[i]
    return ubs


class MonoMap:
    """A monotone total map between finite posets, stored as an index graph."""

    __slots__ = ("source", "target", "graph")

    def __init__(self, source: FinPoset, target: FinPoset, graph, *, check=True):
        graph = tuple(int(g) for g in graph)
        if len(graph) != source.n or any(not 0 <= g < target.n for g in graph):
            raise ShapeMismatch("graph does not assign every source element")
        if check and not _graph_is_monotone(source, target, graph):
            raise NotMonotone("assignment is not monotone")
        self.source = source
        self.target = target
        self.graph = graph

    @classmethod
    def from_mapping(cls, source, target, mapping) -> "MonoMap":
        getter = mapping.__getitem__ if hasattr(mapping, "__getitem__") else mapping
        return cls(source, target, tuple(target.index(getter(x)) for x in source.elements))

    @classmethod
    def identity(cls, poset) -> "MonoMap":
        return cls(poset, poset, range(poset.n), check=False)

    def apply(self, name):
        return self.target.elements[self.graph[self.source.index(name)]]

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in _bits(mask):
            out |= 1 << self.graph[i]
        return out

    def __eq__(self, other):
        return (
            isinstance(other, MonoMap)
            and self.source == other.source
            and self.target == other.target
            and self.graph == other.graph
        )

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.graph))

    def __repr__(self):
        pairs = ", ".join(
            f"{x}->{self.target.elements[g]}" for x, g in zip(self.source.elements, self.graph)
        )
        return f"MonoMap({pairs})"


def _graph_is_monotone(source, target, graph) -> bool:
    n = source.n
    for i in range(n):
        row = source.leq[i]
        for j in range(n):
            if row[j] and not target.leq[graph[i], graph[j]]:
                return False
    return True


def mono_compose(outer: MonoMap, inner: MonoMap) -> MonoMap:
    """outer after inner."""
    if inner.target is not outer.source and inner.target != outer.source:
        raise ShapeMismatch("composition shapes do not align")
    return MonoMap(
        inner.source, outer.target, tuple(outer.graph[g] for g in inner.graph), check=False
    )


def scott_continuity_of_graph(source, target, graph) -> bool:
    """Monotone and preserving directed suprema; works on unchecked graphs.

    The image supremum is recomputed from scratch (least common upper bound)
    rather than read off the image's greatest member, so the directed-sup
    clause is checked independently of the monotonicity shortcut.
    """
    graph = tuple(graph)
    if not _graph_is_monotone(source, target, graph):
        return False
    dmasks, sups = source.directed_table
    full = target.full_mask()
    for mask, sup in zip(dmasks.tolist(), sups.tolist()):
        ubs = full
        m = mask
        i = 0
        while m:
            if m & 1:
                ubs &= target.above_int[graph[i]]
            m >>= 1
            i += 1
        lub = None
        for u in _bits(ubs):
            if ubs & (full ^ target.above_int[u]) == 0:
                lub = u
                break
        if lub != graph[sup]:
            return False
    return True


def is_scott_continuous(f: MonoMap) -> bool:
    """On finite posets this coincides with monotonicity; checked literally."""
    return scott_continuity_of_graph(f.source, f.target, f.graph)


class EpPair:
    """A section/retraction pair whose round trip on the big side deflates."""

    __slots__ = ("embed", "project")

    def __init__(self, embed: MonoMap, project: MonoMap):
        self.embed = embed
        self.project = project

    def __repr__(self):
        return f"EpPair(embed={self.embed!r}, project={self.project!r})"


def validate_ep_pair(pair: EpPair) -> bool:
    """Section law, deflation law and continuity of both halves."""
    e, p = pair.embed, pair.project
    if e.source != p.target or e.target != p.source:
        raise ShapeMismatch("embed/project endpoints do not align")
    d, up = e.source, e.target
    if any(p.graph[e.graph[i]] != i for i in range(d.n)):
        return False
    if any(not up.leq[e.graph[p.graph[j]], j] for j in range(up.n)):
        return False
    return is_scott_continuous(e) and is_scott_continuous(p)
