from fractions import Fraction as Q
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crbr.errors import EmptySubbase, TotalConflict
from crbr.evidence import (
    MassFunction, belief_of, combine_all, combine_with_conflict, credibility_table, dec4,
    dempster_combine, plausibility_of, simple_bba,
)
from crbr.formula import BeliefBase
from crbr.subbase import Subbase, SubbaseFamily, all_intersections


def nway_oracle(ms):
    """Unnormalized n-way product expansion over every choice of focal sets."""
    raw, k = {}, Q(0)
    for picks in product(*[list(m.masses.items()) for m in ms]):
        inter, weight = -1, Q(1)
        for s, v in picks:
            inter &= s.mask
            weight *= v
        if inter:
            raw[inter] = raw.get(inter, Q(0)) + weight
        else:
            k += weight
    return {m: v / (1 - k) for m, v in raw.items()}, k


def by_indices(m):
    return {s.indices: v for s, v in m.masses.items()}


def test_dec4_rounds_half_away_from_zero():
    assert dec4(Q(1, 3)) == "0.3333"
    assert dec4(Q(5, 100000)) == "0.0001"
    assert dec4(Q(-5, 100000)) == "-0.0001"
    assert dec4(Q(4, 100000)) == "0.0000"
    assert dec4(Q(1)) == "1.0000"
    assert dec4(Q(70, 517)) == "0.1354"


def test_simple_bba_examples(ex2, ex3):
    base2, _, fam2 = ex2
    m = simple_bba(fam2.sets[1], base2)  # canonical order puts the 4-set first
    assert by_indices(m) == {(0, 1, 2): Q(3, 9), tuple(range(9)): Q(6, 9)}
    base3, _, fam3 = ex3
    m = simple_bba(Subbase.of([4, 8, 9]), base3)
    assert by_indices(m) == {(4, 8, 9): Q(3, 10), tuple(range(10)): Q(7, 10)}
    assert simple_bba(Subbase(base3.full_mask), base3) == MassFunction.vacuous(10)
    with pytest.raises(EmptySubbase):
        simple_bba(Subbase(0), base3)


def test_mass_function_validation():
    with pytest.raises(ValueError):
        MassFunction(2, {Subbase(1): Q(1, 2)})
    with pytest.raises(ValueError):
        MassFunction(2, {Subbase(0): Q(1, 2), Subbase(3): Q(1, 2)})
    m = MassFunction(2, {Subbase(1): Q(0), Subbase(3): Q(1)})
    assert m.focal_sets() == [Subbase(3)]


def test_combination_examples():
    x, y, full = Subbase.of([0]), Subbase.of([1]), Subbase.of([0, 1, 2])
    m1 = MassFunction(3, {x: Q(1, 2), full: Q(1, 2)})
    m2 = MassFunction(3, {y: Q(1, 2), full: Q(1, 2)})
    # four product terms: x∩y=∅ (1/4), x (1/4), y (1/4), full (1/4); normalize by 3/4
    m, k = combine_with_conflict(m1, m2)
    assert k == Q(1, 4)
    assert m.masses == {x: Q(1, 3), y: Q(1, 3), full: Q(1, 3)}
    assert dempster_combine(m1, MassFunction.vacuous(3)) == m1
    assert combine_all([m1]) == m1


def test_total_conflict():
    m1 = MassFunction(2, {Subbase.of([0]): Q(1)})
    m2 = MassFunction(2, {Subbase.of([1]): Q(1)})
    with pytest.raises(TotalConflict):
        dempster_combine(m1, m2)


def test_nine_base_combined_masses(ex2):
    base, _, fam = ex2
    bbas = [simple_bba(s, base) for s in fam]
    combined = combine_all(bbas)
    expected = {
        (0, 1, 2): Q(630, 4653), (0, 2, 3): Q(630, 4653), (0, 4): Q(360, 4653),
        (5, 6, 7, 8): Q(1008, 4653), (0, 2): Q(315, 4653), (0,): Q(450, 4653),
        tuple(range(9)): Q(1260, 4653),
    }
    assert by_indices(combined) == expected
    oracle, _ = nway_oracle(bbas)
    assert {s.mask: v for s, v in combined.masses.items()} == oracle
    assert [dec4(expected[k]) for k in [(0, 1, 2), (0, 2, 3), (0, 4), (5, 6, 7, 8), (0, 2), (0,),
                                         tuple(range(9))]] == \
        ["0.1354", "0.1354", "0.0774", "0.2166", "0.0677", "0.0967", "0.2708"]


def test_ten_base_combination_and_conflict(ex3):
    base, _, fam = ex3
    bbas = [simple_bba(s, base) for s in fam]
    oracle, k = nway_oracle(bbas)
    assert k == Q(3040, 10000)
    expected = {
        (0, 1, 2, 3): Q(1176, 6960), (4, 5, 6, 7): Q(1176, 6960), (0, 8, 9): Q(756, 6960),
        (4, 8, 9): Q(756, 6960), (0,): Q(504, 6960), (4,): Q(504, 6960), (8, 9): Q(324, 6960),
        tuple(range(10)): Q(1764, 6960),
    }
    assert {Subbase(m).indices: v for m, v in oracle.items()} == expected
    for order in (bbas, bbas[::-1], [bbas[2], bbas[0], bbas[3], bbas[1]]):
        assert by_indices(combine_all(order)) == expected
    table = credibility_table(fam)
    assert table.conflict == Q(3040, 10000)
    assert dec4(table.base_mass) == "0.2534"


def test_belief_examples(ex2, ex3):
    base3, _, fam3 = ex3
    m = credibility_table(fam3).combined
    assert belief_of(m, m.frame) == 1
    b1 = Subbase.of([0, 1, 2, 3])
    assert belief_of(m, b1) == m[b1] + m[Subbase.of([0])]
    assert dec4(belief_of(m, b1)) == "0.2414"
    base2, _, fam2 = ex2
    m2 = credibility_table(fam2).combined
    assert dec4(belief_of(m2, Subbase.of([0, 4]))) == "0.1741"
    assert belief_of(m2, Subbase.of([0, 4])) == Q(360 + 450, 4653)


def test_plausibility_examples(ex3):
    _, _, fam = ex3
    m = credibility_table(fam).combined
    assert plausibility_of(m, m.frame) == 1
    assert plausibility_of(m, Subbase(0)) == 0
    a = Subbase.of([0, 4])
    assert plausibility_of(m, a) == 1 - belief_of(m, Subbase(m.frame.mask & ~a.mask))


def test_credibility_table_examples(ex2, ex3):
    _, _, fam2 = ex2
    t2 = credibility_table(fam2)
    bel = {r.subbase.indices: dec4(r.belief) for r in t2.members}
    assert [bel[k] for k in [(0, 1, 2), (0, 2, 3), (0, 4), (5, 6, 7, 8)]] == \
        ["0.2998", "0.2998", "0.1741", "0.2166"]
    _, _, fam3 = ex3
    t3 = credibility_table(fam3)
    bel = {r.subbase.indices: dec4(r.belief) for r in t3.members + t3.intersections}
    assert [bel[k] for k in [(0, 1, 2, 3), (4, 5, 6, 7), (0, 8, 9), (4, 8, 9)]] == \
        ["0.2414", "0.2414", "0.2276", "0.2276"]
    assert [bel[k] for k in [(0,), (4,), (8, 9)]] == ["0.0724", "0.0724", "0.0466"]
    base = BeliefBase.of("a", "b", "c", "d")
    one = SubbaseFamily(base, (Subbase.of([1, 3]),))
    t = credibility_table(one)
    assert t.members[0].belief == Q(2, 4) and t.intersections == ()
    for r in t2.members + t3.members:
        assert r.belief >= r.mass
    assert 0 <= t2.conflict < 1


# -- properties -------------------------------------------------------------

FRAME = 4
subsets = st.integers(1, (1 << FRAME) - 1).map(Subbase)


@st.composite
def mass_functions(draw, frame=FRAME):
    focal = draw(st.lists(subsets, min_size=1, max_size=4, unique=True))
    weights = draw(st.lists(st.integers(1, 9), min_size=len(focal), max_size=len(focal)))
    total = sum(weights)
    return MassFunction(frame, {s: Q(w, total) for s, w in zip(focal, weights)})


def _safe(f, *args):
    try:
        return f(*args)
    except TotalConflict:
        return None


@settings(max_examples=300, deadline=None)
@given(mass_functions(), mass_functions(), mass_functions())
def test_dempster_algebra(m1, m2, m3):
    ab = _safe(dempster_combine, m1, m2)
    assert ab == _safe(dempster_combine, m2, m1)
    if ab is not None:
        assert sum(ab.masses.values()) == 1
    left = _safe(dempster_combine, ab, m3) if ab is not None else None
    bc = _safe(dempster_combine, m2, m3)
    right = _safe(dempster_combine, m1, bc) if bc is not None else None
    if left is not None and right is not None:
        assert left == right


@settings(max_examples=300, deadline=None)
@given(mass_functions(), subsets | st.just(Subbase(0)))
def test_plausibility_belief_duality(m, a):
    comp = Subbase(m.frame.mask & ~a.mask)
    assert plausibility_of(m, a) + belief_of(m, comp) == 1


@st.composite
def antichain_families(draw):
    n = draw(st.integers(2, 7))
    base = BeliefBase.of(*[f"q{i}" for i in range(n)])
    masks = draw(st.lists(st.integers(1, (1 << n) - 2), min_size=1, max_size=5, unique=True))
    masks = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    return SubbaseFamily(base, tuple(Subbase(m) for m in masks))


@settings(max_examples=200, deadline=None)
@given(antichain_families())
def test_credibility_structure(fam):
    table = credibility_table(fam)
    foc = all_intersections(fam)
    full = Subbase(fam.base.full_mask)
    assert set(table.combined.focal_sets()) == set(fam) | set(foc) | {full}
    assert sum(table.combined.masses.values()) == 1
    for r in table.members:
        special = r.mass + sum((x.mass for x in table.intersections if x.subbase < r.subbase), Q(0))
        assert r.belief == special
    assert 0 <= table.conflict < 1
    assert all(k < 1 for k in table.step_conflicts)
    oracle, k = nway_oracle([simple_bba(s, fam.base) for s in fam])
    assert {s.mask: v for s, v in table.combined.masses.items()} == oracle
    assert table.conflict == k
