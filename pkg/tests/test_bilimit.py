from __future__ import annotations

import pytest

from dcpolab.bilimit import (
    alpha_infinity,
    bilimit_basis,
    dinfty_demo,
    embedding_preserves_way_below_check,
    finite_bilimit,
    scott_tower,
)
from dcpolab.canonex import sierpinski
from dcpolab.errors import NotApproximating, StageTooLarge
from dcpolab.expo import step_basis
from dcpolab.finposet import validate_ep_pair
from dcpolab.indcomp import DirectedFamily
from dcpolab.waybelow import (
    approximates,
    check_small_basis,
    check_small_compact_basis,
    is_compact,
)


@pytest.fixture(scope="module")
def tower2():
    return scott_tower(2)


@pytest.fixture(scope="module")
def bilim2(tower2):
    return finite_bilimit(tower2)


def stage_bases(tower, n):
    _, base_basis = sierpinski()
    bases = [base_basis]
    for k in range(n):
        below = tower.stages[k]
        bases.append(step_basis(below, bases[k], below, bases[k]))
    return bases


def test_stage_sizes(tower2):
    assert [s.n for s in tower2.stages] == [2, 3, 10]


def test_all_pairs_validate(tower2):
    for pair in tower2.pairs:
        assert validate_ep_pair(pair)


def test_pair_composites_functorial(tower2):
    e02 = tower2.embed_between(0, 2)
    via = [
        tower2.pairs[1].embed.apply(tower2.pairs[0].embed.apply(x))
        for x in tower2.stages[0].elements
    ]
    assert [e02.apply(x) for x in tower2.stages[0].elements] == via
    p20 = tower2.project_between(2, 0)
    for x in tower2.stages[0].elements:
        assert p20.apply(e02.apply(x)) == x


def test_composite_section_and_deflation_laws(tower2):
    for i in range(3):
        for j in range(i, 3):
            up = tower2.embed_between(i, j)
            down = tower2.project_between(j, i)
            low, high = tower2.stages[i], tower2.stages[j]
            for x in low.elements:
                assert down.apply(up.apply(x)) == x
            for y in high.elements:
                assert high.le(up.apply(down.apply(y)), y)


def test_stage_three_guard():
    with pytest.raises(StageTooLarge):
        scott_tower(3)


def test_single_stage_bilimit_is_base():
    tower = scott_tower(0)
    bilim = finite_bilimit(tower)
    assert bilim.poset.n == 2
    for x in tower.stages[0].elements:
        assert bilim.iso_from_top.apply(x) in bilim.poset.elements


def test_bilimit_of_tower1_is_stage1():
    tower = scott_tower(1)
    bilim = finite_bilimit(tower)
    assert bilim.poset.n == tower.top.n == 3


def test_bilimit_of_tower2_is_stage2(tower2, bilim2):
    assert bilim2.poset.n == tower2.top.n == 10
    top = tower2.top
    for i in range(top.n):
        for j in range(top.n):
            assert bool(top.leq[i, j]) == bilim2.poset.le(
                bilim2.iso_from_top.apply(top.elements[i]),
                bilim2.iso_from_top.apply(top.elements[j]),
            )


def test_bilimit_tuples_are_projections(tower2, bilim2):
    for name, tup in zip(bilim2.poset.elements, bilim2.tuples):
        for i in range(len(tower2.stages)):
            assert bilim2.component(name, i) == tup[i]
            assert bilim2.project_infinity(i).apply(name) == tup[i]


def test_embed_infinity_sections(tower2, bilim2):
    for i in range(len(tower2.stages)):
        eps = bilim2.embed_infinity(i)
        proj = bilim2.project_infinity(i)
        for x in tower2.stages[i].elements:
            assert proj.apply(eps.apply(x)) == x


def test_alpha_infinity_down_families(tower2, bilim2):
    families = []
    for sigma in bilim2.poset.elements:
        families = [
            DirectedFamily.from_names(
                tower2.stages[i],
                tuple(
                    y
                    for y in tower2.stages[i].elements
                    if tower2.stages[i].le(y, bilim2.component(sigma, i))
                ),
            )
            for i in range(len(tower2.stages))
        ]
        fam = alpha_infinity(bilim2, families, sigma)
        assert approximates(bilim2.poset, fam, sigma)
        # all stage values are compact here, so the combined values must be
        assert all(is_compact(bilim2.poset, v) for v in fam.image_names())


def test_alpha_infinity_rejects_non_approximating(tower2, bilim2):
    sigma = bilim2.poset.elements[-1]
    bottoms = [
        DirectedFamily.from_names(s, (s.elements[s.bottom],)) for s in tower2.stages
    ]
    top_stage = tower2.top
    if bilim2.component(sigma, 2) != top_stage.elements[top_stage.bottom]:
        with pytest.raises(NotApproximating):
            alpha_infinity(bilim2, bottoms, sigma)


def test_bilimit_basis_single_stage():
    tower = scott_tower(0)
    bilim = finite_bilimit(tower)
    _, base_basis = sierpinski()
    binf = bilimit_basis(bilim, [base_basis])
    assert len(binf.labels) == len(base_basis.labels)
    assert check_small_compact_basis(bilim.poset, binf)


def test_bilimit_basis_tower2(tower2, bilim2):
    bases = stage_bases(tower2, 2)
    binf = bilimit_basis(bilim2, bases)
    assert check_small_basis(bilim2.poset, binf)
    assert check_small_compact_basis(bilim2.poset, binf)


def test_bilimit_basis_image_is_union_of_stage_images(tower2, bilim2):
    bases = stage_bases(tower2, 2)
    binf = bilimit_basis(bilim2, bases)
    expected = set()
    for i, beta in enumerate(bases):
        eps = bilim2.embed_infinity(i)
        for b in beta.labels:
            expected.add(eps.apply(beta.value(b)))
    assert set(binf.image_names()) == expected


def test_embeddings_preserve_and_reflect_way_below(tower2):
    for i in range(3):
        for j in range(i, 3):
            assert embedding_preserves_way_below_check(tower2, i, j)


def test_dinfty_demo_report():
    report = dinfty_demo()
    assert report["stage_sizes"] == [2, 3, 10]
    assert report["basis_sizes"] == [2, 3, 10]
    assert report["bilimit_size"] == 10
    assert all(report["laws"].values())
