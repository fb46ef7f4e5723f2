"""Towers of section/retraction pairs and their finite bilimits.

A linear tower D0 <| D1 <| ... <| Dn generates a bilimit whose elements are
the compatible tuples; for a finite linear tower that poset is isomorphic to
the top stage, and the isomorphism is constructed and verified rather than
assumed.

The function-space tower starts from the two-point chain and iterates the
exponential, with the standard pair recursion fixed bit-for-bit: the base
embedding sends a point to the constant map at it, the base projection
evaluates at bottom, and each next pair conjugates by the previous one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .canonex import sierpinski
from .errors import IncompatibleTower, NotABasis, NotApproximating, StageTooLarge
from .finposet import EpPair, FinPoset, MonoMap, mono_compose, validate_ep_pair
from .indcomp import DirectedFamily
from .waybelow import (
    BasisMap,
    approximates,
    check_small_basis,
    check_small_compact_basis,
    is_compact,
    way_below,
)


@dataclass(frozen=True)
class Tower:
    """Stages with a validated section/retraction pair between neighbours."""

    stages: tuple
    pairs: tuple

    def __post_init__(self):
        if len(self.pairs) != max(len(self.stages) - 1, 0):
            raise IncompatibleTower("need exactly one pair per neighbouring stage")
        for k, pair in enumerate(self.pairs):
            if pair.embed.source != self.stages[k] or pair.embed.target != self.stages[k + 1]:
                raise IncompatibleTower(f"pair {k} does not join stages {k} and {k + 1}")
            if not validate_ep_pair(pair):
                raise IncompatibleTower(f"pair {k} fails the section/deflation laws")

    @property
    def top(self) -> FinPoset:
        return self.stages[-1]

    def embed_between(self, i: int, j: int) -> MonoMap:
        out = MonoMap.identity(self.stages[i])
        for k in range(i, j):
            out = mono_compose(self.pairs[k].embed, out)
        return out

    def project_between(self, j: int, i: int) -> MonoMap:
        out = MonoMap.identity(self.stages[j])
        for k in range(j - 1, i - 1, -1):
            out = mono_compose(self.pairs[k].project, out)
        return out


def scott_tower(n: int, *, unsafe: bool = False) -> Tower:
    """The function-space tower over the two-point chain, up to stage n."""
    from .expo import exponential

    if n > 2 and not unsafe:
        raise StageTooLarge("stage 3 and beyond exceed desk scale; pass unsafe to attempt")
    base, _ = sierpinski()
    stages = [base]
    pairs = []
    prev_pair = None
    for _ in range(n):
        below = stages[-1]
        expo = exponential(below, below)
        if prev_pair is None:
            embed = MonoMap(
                base,
                expo.poset,
                [
                    expo.poset.index(expo.name_of(MonoMap(base, base, [x] * base.n, check=False)))
                    for x in range(base.n)
                ],
            )
            project = MonoMap(
                expo.poset,
                base,
                [m.graph[base.bottom] for m in expo.maps],
            )
        else:
            below_expo = prev_expo
            embed_graph = []
            project_graph = []
            for f in below_expo.maps:
                conj = mono_compose(prev_pair.embed, mono_compose(f, prev_pair.project))
                embed_graph.append(expo.poset.index(expo.name_of(conj)))
            for g in expo.maps:
                conj = mono_compose(prev_pair.project, mono_compose(g, prev_pair.embed))
                project_graph.append(below_expo.poset.index(below_expo.name_of(conj)))
            embed = MonoMap(below_expo.poset, expo.poset, embed_graph)
            project = MonoMap(expo.poset, below_expo.poset, project_graph)
        pair = EpPair(embed=embed, project=project)
        stages.append(expo.poset)
        pairs.append(pair)
        prev_pair, prev_expo = pair, expo
    return Tower(tuple(stages), tuple(pairs))


@dataclass(frozen=True)
class Bilimit:
    """Compatible tuples over a tower, with the verified top-stage isomorphism."""

    tower: Tower
    poset: FinPoset
    tuples: tuple
    iso_from_top: MonoMap

    def component(self, name, i: int):
        return self.tuples[self.poset.index(name)][i]

    def embed_infinity(self, i: int) -> MonoMap:
        """The stage-i elements inside the bilimit."""
        top_index = len(self.tower.stages) - 1
        up = self.tower.embed_between(i, top_index)
        return mono_compose(self.iso_from_top, up)

    def project_infinity(self, i: int) -> MonoMap:
        return MonoMap(
            self.poset,
            self.tower.stages[i],
            [self.tower.stages[i].index(t[i]) for t in self.tuples],
        )


def finite_bilimit(tower: Tower) -> Bilimit:
    """Materialise the compatible tuples and verify the top-stage isomorphism."""
    stages = tower.stages
    top_index = len(stages) - 1
    projections = [tower.project_between(top_index, i) for i in range(len(stages))]
    tuples = []
    for x in stages[-1].elements:
        tuples.append(tuple(projections[i].apply(x) for i in range(len(stages))))
    expected = set(tuples)
    proj = {
        (j, i): tower.project_between(j, i)
        for i in range(len(stages))
        for j in range(i, len(stages))
    }
    for combo in product(*(s.elements for s in stages)):
        compatible = all(
            proj[j, i].apply(combo[j]) == combo[i]
            for i in range(len(stages))
            for j in range(i, len(stages))
        )
        if compatible != (combo in expected):
            raise IncompatibleTower(f"compatible tuples are not exactly the top stage: {combo}")
    names = tuple(";".join(t) for t in tuples)
    leq = [
        [
            all(stages[i].le(a[i], b[i]) for i in range(len(stages)))
            for b in tuples
        ]
        for a in tuples
    ]
    poset = FinPoset(names, leq)
    iso = MonoMap(stages[-1], poset, range(stages[-1].n))
    for i in range(stages[-1].n):
        for j in range(stages[-1].n):
            if bool(stages[-1].leq[i, j]) != bool(poset.leq[iso.graph[i], iso.graph[j]]):
                raise IncompatibleTower("tuple order disagrees with the top stage")
    return Bilimit(tower, poset, tuple(tuples), iso)


def alpha_infinity(bilim: Bilimit, families, sigma) -> DirectedFamily:
    """Combine per-stage approximating families of sigma's components into one
    family on the bilimit, indexed by (stage, inner label)."""
    tower = bilim.tower
    for i, fam in enumerate(families):
        if not approximates(tower.stages[i], fam, bilim.component(sigma, i)):
            raise NotApproximating(f"stage-{i} family does not approximate the component")
    labels = []
    mapping = {}
    for i, fam in enumerate(families):
        eps = bilim.embed_infinity(i)
        for j in fam.labels:
            labels.append((i, j))
            mapping[(i, j)] = eps.apply(fam.value(j))
    out = DirectedFamily(bilim.poset, tuple(labels), mapping)
    if not approximates(bilim.poset, out, sigma):
        raise NotApproximating("combined family fails to approximate")
    return out


def bilimit_basis(bilim: Bilimit, stage_bases) -> BasisMap:
    """Push every stage basis up into the bilimit, indexed by (stage, label)."""
    tower = bilim.tower
    for i, beta in enumerate(stage_bases):
        if not check_small_basis(tower.stages[i], beta):
            raise NotABasis(f"stage-{i} input is not a small basis")
    labels = []
    into = {}
    for i, beta in enumerate(stage_bases):
        eps = bilim.embed_infinity(i)
        for b in beta.labels:
            labels.append((i, b))
            into[(i, b)] = eps.apply(beta.value(b))
    return BasisMap(bilim.poset, tuple(labels), into)


def embedding_preserves_way_below_check(tower: Tower, i: int, j: int) -> bool:
    """The stage embedding preserves and reflects way-below (and compactness)."""
    eps = tower.embed_between(i, j)
    low, high = tower.stages[i], tower.stages[j]
    for x in low.elements:
        for y in low.elements:
            if way_below(low, x, y) != way_below(high, eps.apply(x), eps.apply(y)):
                return False
    return all(
        is_compact(low, x) == is_compact(high, eps.apply(x)) for x in low.elements
    )


def dinfty_demo() -> dict:
    """The desk-scale witness for the function-space tower having a small
    compact basis on its bilimit; returns a machine-readable report."""
    from .expo import step_basis

    tower = scott_tower(2)
    base, base_basis = sierpinski()
    bases = [base_basis]
    for k in range(2):
        below = tower.stages[k]
        bases.append(step_basis(below, bases[k], below, bases[k]))
    bilim = finite_bilimit(tower)
    binf = bilimit_basis(bilim, bases)
    laws = {
        "ep_pairs": all(validate_ep_pair(p) for p in tower.pairs),
        "embeddings_transfer_way_below": all(
            embedding_preserves_way_below_check(tower, i, j)
            for i in range(len(tower.stages))
            for j in range(i, len(tower.stages))
        ),
        "bilimit_iso_top_stage": bilim.poset.n == tower.top.n
        and all(
            bool(tower.top.leq[i, j])
            == bilim.poset.le(
                bilim.iso_from_top.apply(tower.top.elements[i]),
                bilim.iso_from_top.apply(tower.top.elements[j]),
            )
            for i in range(tower.top.n)
            for j in range(tower.top.n)
        ),
        "stage_bases_compact": all(
            check_small_compact_basis(tower.stages[i], bases[i]) for i in range(3)
        ),
        "bilimit_small_compact_basis": check_small_compact_basis(bilim.poset, binf),
    }
    return {
        "stage_sizes": [s.n for s in tower.stages],
        "basis_sizes": [len(b.labels) for b in bases],
        "bilimit_size": bilim.poset.n,
        "bilimit_basis_size": len(binf.labels),
        "laws": laws,
    }
