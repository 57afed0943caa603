"""Tests for the ordinal recommendation-based trust model."""

import itertools
import random

import pytest

from oracles import (
    argmax_lowest_rank_oracle,
    combine_oracle,
    mode_least_correction_oracle,
    mode_prefer_largest_oracle,
)
from trustnet.errors import (
    NoExperienceError,
    NoUsableRecommendationsError,
    UnknownRecommenderError,
)
from trustnet.ordinal import (
    AdjustmentSets,
    DirectTrustStore,
    ExperienceCounters,
    RecommenderStore,
    adjust_recommendation,
    combine_recommendations,
    weight_of,
)
from trustnet.scales import OrdinalDegree, degree_distance, degree_shift

VB, B, G, VG = (
    OrdinalDegree.VERY_BAD,
    OrdinalDegree.BAD,
    OrdinalDegree.GOOD,
    OrdinalDegree.VERY_GOOD,
)


def counts_tuple(counters: ExperienceCounters) -> tuple[int, int, int, int]:
    """(vg, g, b, vb) ordering, matching how example tallies are written."""
    return (counters.count(VG), counters.count(G), counters.count(B), counters.count(VB))


# ── experience counters ──────────────────────────────────────────────


def test_record_experience_first_good():
    store = DirectTrustStore()
    counters = store.record_experience("web", "alice", G)
    assert counts_tuple(counters) == (0, 1, 0, 0)


def test_record_experience_repeat():
    store = DirectTrustStore()
    store.record_experience("web", "alice", G)
    counters = store.record_experience("web", "alice", G)
    assert counts_tuple(counters) == (0, 2, 0, 0)


def test_record_experience_single_counter_moves():
    counters = ExperienceCounters.of(1, 1, 1, 1)
    counters.record(VB)
    assert counts_tuple(counters) == (1, 1, 1, 2)


def test_counter_conservation():
    rng = random.Random(2024)
    for _ in range(50):
        store = DirectTrustStore()
        n = rng.randint(1, 40)
        for _ in range(n):
            store.record_experience("c", "a", OrdinalDegree(rng.randint(0, 3)))
        assert store.counters("c", "a").total() == n


def test_direct_trust_degree_examples():
    assert ExperienceCounters.of(0, 1, 0, 0).trust_degree() is G
    assert ExperienceCounters.of(2, 2, 0, 0).trust_degree() is G  # pessimistic tie
    assert ExperienceCounters.of(0, 0, 0, 5).trust_degree() is VB


def test_direct_trust_degree_no_experience():
    with pytest.raises(NoExperienceError):
        ExperienceCounters().trust_degree()
    store = DirectTrustStore()
    with pytest.raises(NoExperienceError):
        store.trust_degree("web", "nobody")


def test_direct_trust_degree_exhaustive_vs_oracle():
    # every tally 4-tuple with counts in 0..4, by ascending rank (vb, b, g, vg)
    for counts in itertools.product(range(5), repeat=4):
        counters = ExperienceCounters.of(vb=counts[0], b=counts[1], g=counts[2], vg=counts[3])
        if sum(counts) == 0:
            with pytest.raises(NoExperienceError):
                counters.trust_degree()
            continue
        assert counters.trust_degree().rank == argmax_lowest_rank_oracle(list(counts))


# ── adjustment history ───────────────────────────────────────────────


def test_record_adjustment_running_example():
    # reported untrustworthy, own opinion trustworthy: +1 lands in the b slot
    store = RecommenderStore()
    sets = store.record_adjustment("web", "xavier", recommended=B, own=G)
    assert sets.shifts_for(B) == (1,)
    assert sets.shifts_for(VB) == ()
    assert sets.shifts_for(G) == ()
    assert sets.shifts_for(VG) == ()


def test_record_adjustment_agreement_and_extremes():
    store = RecommenderStore()
    store.record_adjustment("web", "x", recommended=G, own=G)
    assert store.adjustments("web", "x").shifts_for(G) == (0,)
    store.record_adjustment("web", "y", recommended=VG, own=VB)
    assert store.adjustments("web", "y").shifts_for(VG) == (-3,)


def test_recommender_trust_degree_examples():
    assert AdjustmentSets.of(b=[1]).recommender_trust_degree() == 1
    assert AdjustmentSets.of(vg=[0, 0], g=[0]).recommender_trust_degree() == 0
    assert AdjustmentSets.of(vg=[1, 1], g=[-2, 2, 2]).recommender_trust_degree() == 2


def test_recommender_trust_degree_unknown():
    with pytest.raises(UnknownRecommenderError):
        AdjustmentSets().recommender_trust_degree()


def test_recommender_trust_degree_vs_oracle():
    rng = random.Random(7)
    for _ in range(300):
        sets = AdjustmentSets()
        pooled = []
        for _ in range(rng.randint(1, 12)):
            degree = OrdinalDegree(rng.randint(0, 3))
            shift = rng.randint(-3, 3)
            sets.add(degree, shift)
            pooled.append(abs(shift))
        assert sets.recommender_trust_degree() == mode_prefer_largest_oracle(pooled)


def test_semantic_distance_examples():
    assert AdjustmentSets.of(b=[1]).semantic_distance(B) == 1
    assert AdjustmentSets().semantic_distance(G) == 0
    assert AdjustmentSets.of(g=[1, 1, -2]).semantic_distance(G) == 1


def test_semantic_distance_tie_breaks():
    assert AdjustmentSets.of(g=[-1, 1]).semantic_distance(G) == -1
    assert AdjustmentSets.of(g=[0, 0, 1, 1]).semantic_distance(G) == 0
    assert AdjustmentSets.of(b=[-2, -2, 2, 2]).semantic_distance(B) == -2


def test_semantic_distance_vs_oracle():
    rng = random.Random(11)
    for _ in range(300):
        shifts = [rng.randint(-3, 3) for _ in range(rng.randint(1, 10))]
        sets = AdjustmentSets()
        for s in shifts:
            sets.add(B, s)
        assert sets.semantic_distance(B) == mode_least_correction_oracle(shifts)


def test_adjustment_sets_reject_out_of_range():
    with pytest.raises(ValueError):
        AdjustmentSets().add(G, 4)


# ── recommendation evaluation ────────────────────────────────────────


def test_adjust_recommendation_examples():
    assert adjust_recommendation(G, 1) is VG
    assert adjust_recommendation(VB, 0) is VB
    assert adjust_recommendation(B, 1) is G


def test_weight_map():
    assert [weight_of(rtd) for rtd in (0, 1, 2, 3)] == [9, 5, 3, 1]
    assert weight_of(None) == 0
    with pytest.raises(ValueError):
        weight_of(4)


def test_combine_recommendations_examples():
    assert combine_recommendations([(G, 9), (G, 3), (B, 5)]) is G
    assert combine_recommendations([(VG, 1)]) is VG
    assert combine_recommendations([(G, 5), (B, 5)]) is B  # pessimistic tie


def test_combine_recommendations_all_zero():
    with pytest.raises(NoUsableRecommendationsError):
        combine_recommendations([(G, 0), (VG, 0)])


def test_combine_permutation_invariant():
    rng = random.Random(13)
    for _ in range(100):
        items = [
            (OrdinalDegree(rng.randint(0, 3)), rng.choice([0, 1, 3, 5, 9]))
            for _ in range(rng.randint(1, 8))
        ]
        if not any(w for _, w in items):
            continue
        baseline = combine_recommendations(items)
        shuffled = items[:]
        rng.shuffle(shuffled)
        assert combine_recommendations(shuffled) is baseline
        assert baseline.rank == combine_oracle([(d.rank, w) for d, w in items])


def test_combine_weight_scaling_invariant():
    rng = random.Random(17)
    for _ in range(100):
        items = [
            (OrdinalDegree(rng.randint(0, 3)), rng.randint(0, 9))
            for _ in range(rng.randint(1, 8))
        ]
        if not any(w for _, w in items):
            continue
        factor = rng.randint(2, 7)
        scaled = [(d, w * factor) for d, w in items]
        assert combine_recommendations(scaled) is combine_recommendations(items)


def test_self_correction_convergence():
    # a recommender whose reports are always our own opinion plus a constant
    # offset is corrected exactly, once each report grade has history
    rng = random.Random(19)
    for offset in (-3, -2, -1, 0, 1, 2, 3):
        store = RecommenderStore()
        seen: set[OrdinalDegree] = set()
        for _ in range(60):
            own = OrdinalDegree(rng.randint(0, 3))
            if not 0 <= own.rank + offset <= 3:
                continue  # clamping aside, per the stated property
            reported = degree_shift(own, offset)
            if reported in seen:
                sets = store.adjustments("c", "r")
                adjusted = adjust_recommendation(reported, sets.semantic_distance(reported))
                assert adjusted is own
            store.record_adjustment("c", "r", recommended=reported, own=own)
            seen.add(reported)


# ── newcomer seeding and dumps ───────────────────────────────────────


def test_seed_newcomer_inserts():
    store = RecommenderStore()
    store.seed_newcomer([("web", "mentor", AdjustmentSets.of(g=[0]))])
    assert len(store) == 1
    assert store.adjustments("web", "mentor").shifts_for(G) == (0,)


def test_seed_newcomer_empty():
    store = RecommenderStore()
    store.seed_newcomer([])
    assert len(store) == 0


def test_seed_newcomer_duplicate_rejected():
    store = RecommenderStore()
    seeds = [
        ("web", "mentor", AdjustmentSets()),
        ("web", "mentor", AdjustmentSets()),
    ]
    with pytest.raises(ValueError):
        store.seed_newcomer(seeds)
    assert len(store) == 0  # nothing partially applied

    store.seed_newcomer([("web", "mentor", AdjustmentSets())])
    with pytest.raises(ValueError):
        store.seed_newcomer([("web", "mentor", AdjustmentSets())])


def test_direct_store_dump_golden():
    store = DirectTrustStore()
    store.record_experience("web", "bob", G)
    store.record_experience("web", "alice", VB)
    store.record_experience("web", "bob", G)
    store.record_experience("mail", "bob", VG)
    assert store.dump() == (
        "mail\tbob\tvb=0 b=0 g=0 vg=1\n"
        "web\talice\tvb=1 b=0 g=0 vg=0\n"
        "web\tbob\tvb=0 b=0 g=2 vg=0"
    )


def test_recommender_store_dump_golden():
    store = RecommenderStore()
    store.record_adjustment("web", "carol", recommended=B, own=G)
    store.record_adjustment("web", "carol", recommended=G, own=VB)
    store.record_adjustment("web", "carol", recommended=G, own=G)
    assert store.dump() == "web\tcarol\tvb=[] b=[1] g=[-2,0] vg=[]"


def test_degree_distance_sign_convention_matches_store():
    # the stored shift always maps the report back onto the own opinion
    for own in OrdinalDegree:
        for recommended in OrdinalDegree:
            store = RecommenderStore()
            sets = store.record_adjustment("c", "r", recommended=recommended, own=own)
            (shift,) = sets.shifts_for(recommended)
            assert shift == degree_distance(own, recommended)
            assert degree_shift(recommended, shift) is own
