import json

import pytest

from tourmat import experiments as ex
from tourmat.fields import GF, QQ
from tourmat.matrices import WeightSeq, tournament_matrix, transitive_matrix
from tourmat.rank import principal_minor_det, rank
from tourmat.report import Report
from tourmat.tournaments import enumerate_all, random_tournament


def test_verify_transitive_small_fields():
    for field in (QQ, GF(3), GF(2)):
        rep = ex.verify_transitive(range(3, 7), field, trials=5, seed=1)
        assert rep.passed
        assert rep.summary["checks"] == 4 * 5 * 2


def test_verify_transitive_base_case_rank_at_least_two():
    # any nonzero second and third weights give rank >= 2 at n = 3
    for field in (QQ, GF(3)):
        nonzero = range(1, field.char or 4)
        for a2 in nonzero:
            for a3 in nonzero:
                w = WeightSeq.of(field, [1, a2, a3])
                assert rank(transitive_matrix(w)).rank >= 2


def test_verify_transitive_bad_range():
    with pytest.raises(ex.BadRangeError):
        ex.verify_transitive(range(2, 5), QQ)


def test_verify_transitive_fixed_sequence():
    rep = ex.verify_transitive(range(3, 6), QQ, seed=0, sequence_source=[5, 1, 2])
    assert rep.passed
    assert rep.parameters["sequence_source"] == "fixed"


def test_verify_reversal_exhaustive_n4():
    rep = ex.verify_reversal(4, QQ, WeightSeq.of(QQ, [1, 2, 3, 4]))
    assert rep.passed
    assert rep.summary["checks"] == 64
    assert rep.summary["rank_sum_matrix"] >= 2


def test_verify_reversal_char2_refuses_rank_checks():
    rep = ex.verify_reversal(3, GF(2), WeightSeq.of(GF(2), [1, 1, 1]))
    assert rep.parameters["rank_checks"].startswith("refused")
    assert rep.passed  # identity still holds entrywise
    assert all(rec["rank_t"] is None for rec in rep.records)


def test_verify_reversal_explicit_and_sampled_sources():
    w = WeightSeq.of(QQ, [1, 2, 3, 4, 5])
    explicit = ex.verify_reversal(5, QQ, w, tournaments=[random_tournament(5, 9, 0)])
    assert explicit.summary["checks"] == 1 and explicit.passed
    sampled = ex.verify_reversal(5, QQ, w, tournaments=10, seed=9)
    assert sampled.summary["checks"] == 10 and sampled.passed


def test_verify_lipschitz():
    rep = ex.verify_lipschitz(6, GF(5), ex.cycling_weights(GF(5), 6), flips=100, seed=3)
    assert rep.passed


def test_flip_back_restores_rank():
    w = ex.cycling_weights(GF(5), 6)
    t = random_tournament(6, 44, 0)
    base = rank(tournament_matrix(t, w)).rank
    again = rank(tournament_matrix(t.flip_edge(2, 5).flip_edge(2, 5), w)).rank
    assert base == again


def test_certifiability_gf3_s4_needs_bigger_minor():
    # with the first five weights equal, the 4x4 leading minor vanishes mod 3
    # (its det is -3 z^4) but the 5x5 one is 4 z^5 != 0
    field = GF(3)
    w = ex._certify_weights(field, 5, 4, field.one)
    for t in enumerate_all(5, 0, 32):
        m = tournament_matrix(t, w)
        assert principal_minor_det(m, 4).is_zero()
        assert not principal_minor_det(m, 5).is_zero()


def test_certifiability_s1_block():
    field = QQ
    w = ex._certify_weights(field, 4, 1, field.scalar(3))
    m = tournament_matrix(random_tournament(4, 6, 0), w)
    assert principal_minor_det(m, 1).is_zero()
    assert principal_minor_det(m, 2).value == -9


def test_verify_certifiability_exhaustive_small():
    rep = ex.verify_certifiability(4, [GF(3), GF(5), QQ])
    assert rep.passed
    assert rep.summary["violations"] == 0


def test_verify_certifiability_rejects_zero_z():
    with pytest.raises(ValueError):
        ex.verify_certifiability(3, [GF(3)], z_values=(3,))


def test_verify_constant_seq():
    rep = ex.verify_constant_seq(range(2, 9), [QQ, GF(2), GF(3)])
    assert rep.passed
    by_key = {(rec["n"], rec["field"]): rec for rec in rep.records}
    assert by_key[(4, "Q")]["rank"] == 4
    assert by_key[(4, "GF(3)")]["rank"] == 3  # 3 divides n - 1
    assert by_key[(5, "GF(2)")]["rank"] == 4  # 2 divides n - 1
    assert by_key[(6, "GF(2)")]["rank"] == 6


def test_verify_f_ensemble_matches_reversal_for_identity_mix():
    w = WeightSeq.of(QQ, [1, 2, 3, 4])
    mix_rep = ex.verify_f_ensemble(4, QQ, w, 1, 0)
    rev_rep = ex.verify_reversal(4, QQ, w)
    assert mix_rep.passed and rev_rep.passed
    mix_ranks = [(rec["rank_t"], rec["rank_rev"]) for rec in mix_rep.records]
    rev_ranks = [(rec["rank_t"], rec["rank_rev"]) for rec in rev_rep.records]
    assert mix_ranks == rev_ranks


def test_verify_f_ensemble_degenerate_refused():
    w = WeightSeq.of(QQ, [1, 2, 3, 4])
    with pytest.raises(ex.DegenerateMixError):
        ex.verify_f_ensemble(4, QQ, w, 1, -1)


def test_verify_finite_field_bound():
    rep = ex.verify_finite_field_bound(5, 3)
    assert rep.passed
    assert rep.records[-1]["n"] == 5


def test_minrank_pinned_regression():
    rep = ex.minrank_exhaustive(3, QQ, WeightSeq.of(QQ, [1, 2, 3]))
    assert rep.summary["min_rank"] == 3  # det = 2*a1*a2*a3 != 0 for every orientation
    assert rep.summary["rank_histogram"] == {"3": 8}


def test_minrank_constant_weights_single_matrix():
    rep = ex.minrank_exhaustive(3, QQ, WeightSeq.of(QQ, [2, 2, 2]))
    assert rep.summary["min_rank"] == 3
    assert rep.summary["argmin_count"] == 8


def test_minrank_shard_invariance():
    w = ex.cycling_weights(GF(3), 4)
    full = ex.minrank_exhaustive(4, GF(3), w)
    left = ex.minrank_exhaustive(4, GF(3), w, shard=(0, 40))
    right = ex.minrank_exhaustive(4, GF(3), w, shard=(40, 64))
    merged_hist: dict = {}
    for rep in (left, right):
        for k, v in rep.summary["rank_histogram"].items():
            merged_hist[k] = merged_hist.get(k, 0) + v
    assert merged_hist == full.summary["rank_histogram"]
    assert min(left.summary["min_rank"], right.summary["min_rank"]) == full.summary["min_rank"]


def test_minrank_workers_do_not_change_bytes():
    w = ex.cycling_weights(GF(3), 4)
    one = ex.minrank_exhaustive(4, GF(3), w, workers=1)
    four = ex.minrank_exhaustive(4, GF(3), w, workers=4)
    assert one.to_json(full_records=True) == four.to_json(full_records=True)


def test_montecarlo_pinned_pilot():
    # pinned from a pre-registered pilot run of this exact configuration
    rep = ex.montecarlo_rank(10, GF(3), ex.cycling_weights(GF(3), 10), 100, seed=7)
    assert rep.summary["min_rank"] == 8
    assert rep.summary["rank_histogram"] == {"8": 2, "9": 36, "10": 62}
    assert rep.summary["bound_vacuous"] is True
    assert rep.passed


def test_montecarlo_repeat_run_byte_identical():
    w = ex.cycling_weights(GF(3), 8)
    a = ex.montecarlo_rank(8, GF(3), w, 40, seed=5)
    b = ex.montecarlo_rank(8, GF(3), w, 40, seed=5)
    assert a.to_json(full_records=True) == b.to_json(full_records=True)
    c = ex.montecarlo_rank(8, GF(3), w, 40, seed=6)
    assert a.to_json() != c.to_json()


def test_montecarlo_worker_invariance():
    w = ex.cycling_weights(GF(3), 8)
    one = ex.montecarlo_rank(8, GF(3), w, 30, seed=5, workers=1)
    four = ex.montecarlo_rank(8, GF(3), w, 30, seed=5, workers=4)
    assert one.to_json(full_records=True) == four.to_json(full_records=True)


def test_montecarlo_char2_refusal():
    rep = ex.montecarlo_rank(6, GF(2), ex.cycling_weights(GF(2), 6), 10, seed=1)
    assert rep.parameters["theorem_check"].startswith("refused")
    assert rep.summary["rank_histogram"]  # histogram still produced
    assert rep.passed


def test_perm_scan_constant_weights_single_rank():
    w = WeightSeq.of(QQ, [3, 3, 3, 3])
    rep = ex.perm_scan(random_tournament(4, 2, 0), QQ, w, mode="all")
    assert len(rep.summary["distinct_ranks"]) == 1
    assert rep.summary["scanned"] == 24
    assert rep.summary["exploratory"] is True


def test_perm_scan_contains_reversal_rank():
    # the reversed tournament's matrix is the same tournament with permuted
    # weights, so its rank must appear in the full scan
    w = WeightSeq.of(QQ, [1, 2, 3, 4, 7])
    t = random_tournament(5, 3, 1)
    rev_rank = rank(tournament_matrix(t.reverse(), w)).rank
    rep = ex.perm_scan(t, QQ, w, mode="all")
    assert rev_rank in rep.summary["distinct_ranks"]


def test_perm_scan_limits_and_sampling():
    w = ex.cycling_weights(QQ, 10)
    with pytest.raises(ex.TooManyPermutationsError):
        ex.perm_scan(random_tournament(10, 1, 0), QQ, w, mode="all")
    rep = ex.perm_scan(random_tournament(10, 1, 0), QQ, w, mode="sample",
                       sample=5, seed=2)
    assert rep.summary["scanned"] == 5


def test_report_json_shape_and_elision():
    rep = Report("demo", {"n": 3}, [{"i": k, "pass": True} for k in range(5)],
                 {"violations": 0})
    doc = json.loads(rep.to_json())
    assert doc["experiment_id"] == "demo"
    assert len(doc["records"]) == 5
    big = Report("demo", {}, [{"i": k} for k in range(5000)], {"violations": 0})
    doc = json.loads(big.to_json())
    assert "records" not in doc and doc["records_elided"] == 5000
    doc = json.loads(big.to_json(full_records=True))
    assert len(doc["records"]) == 5000


def test_report_csv():
    rep = Report("demo", {}, [{"i": 0, "rank": 3, "pass": True},
                              {"i": 1, "rank": 2, "pass": False}], {"violations": 1})
    lines = rep.to_csv().strip().splitlines()
    assert lines[0] == "i,rank,pass"
    assert lines[2] == "1,2,false"
    assert not rep.passed


def test_wall_time_not_serialized():
    rep = ex.verify_reversal(3, QQ, WeightSeq.of(QQ, [1, 2, 3]))
    assert rep.wall_time_s > 0
    assert "wall_time" not in rep.to_json()


def test_counting_weights():
    assert str(ex.counting_weights(QQ, 5)) == "1,2,3,4,5"
    assert str(ex.counting_weights(GF(3), 5)) == "1,2,1,2,1"
    assert str(ex.counting_weights(GF(2), 3)) == "1,1,1"


def test_transitive_matrix_under_any_order_obeys_floor():
    # uses the builder route rather than the reverse-ranked shortcut
    rep = ex.verify_transitive(range(3, 6), GF(7), trials=8, seed=12)
    kinds = {rec["kind"] for rec in rep.records}
    assert kinds == {"reverse_ranked", "random_order"}
    assert rep.passed
