"""Evaluation metrics, error intersections, and the PROB histogram."""

from __future__ import annotations

import csv

import pytest
from hypothesis import given, strategies as st

from tweetsift.errors import EvaluationError
from tweetsift.evaluate import (
    HISTOGRAM_BINS,
    evaluate,
    feature_distribution_report,
    intersect_errors,
    write_histogram_csv,
)
from tweetsift.features import power_transform, prob_numeric
from tweetsift.normalize import Label, Tweet

INFO, UNINF = Label.INFORMATIVE, Label.UNINFORMATIVE


def labels(mapping):
    return {k: INFO if v else UNINF for k, v in mapping.items()}


class TestEvaluate:
    def test_worked_example(self):
        # 3 TP, 1 FP, 2 FN, 1 TN
        gold = labels({"a": 1, "b": 1, "c": 1, "d": 0, "e": 1, "f": 1, "g": 0})
        pred = labels({"a": 1, "b": 1, "c": 1, "d": 1, "e": 0, "f": 0, "g": 0})
        report = evaluate(pred, gold, model_name="demo")
        assert (report.confusion.tp, report.confusion.fp) == (3, 1)
        assert (report.confusion.fn, report.confusion.tn) == (2, 1)
        assert report.confusion.total == 7
        assert report.precision == pytest.approx(3 / 4)
        assert report.recall == pytest.approx(3 / 5)
        expected_f1 = 2 * (3 / 4) * (3 / 5) / (3 / 4 + 3 / 5)
        assert report.f1 == pytest.approx(expected_f1)
        assert report.fp_ids == {"d"}
        assert report.fn_ids == {"e", "f"}
        assert report.model_name == "demo"

    def test_perfect_predictions(self):
        gold = labels({"a": 1, "b": 0})
        report = evaluate(dict(gold), gold)
        assert (report.precision, report.recall, report.f1) == (1.0, 1.0, 1.0)
        assert report.fp_ids == frozenset()

    def test_all_negative_predictions_give_zero_f1(self):
        gold = labels({"a": 1, "b": 0})
        pred = labels({"a": 0, "b": 0})
        report = evaluate(pred, gold)
        assert (report.precision, report.recall, report.f1) == (0.0, 0.0, 0.0)

    def test_empty_maps_rejected(self):
        with pytest.raises(EvaluationError, match="non-empty"):
            evaluate({}, labels({"a": 1}))
        with pytest.raises(EvaluationError, match="non-empty"):
            evaluate(labels({"a": 1}), {})

    def test_id_mismatch_lists_both_sides(self):
        gold = labels({"a": 1, "b": 0})
        pred = labels({"a": 1, "c": 0})
        with pytest.raises(EvaluationError) as exc_info:
            evaluate(pred, gold)
        message = str(exc_info.value)
        assert "missing=['b']" in message
        assert "extra=['c']" in message

    def test_id_mismatch_preview_truncates(self):
        gold = labels({f"g{i:02d}": 1 for i in range(15)})
        pred = labels({"x": 1})
        with pytest.raises(EvaluationError, match=r"\(\+5 more\)"):
            evaluate(pred, gold)

    def test_to_dict_shape(self):
        gold = labels({"a": 1, "b": 0})
        doc = evaluate(dict(gold), gold, model_name="m").to_dict()
        assert doc["model"] == "m"
        assert doc["confusion"] == {"tp": 1, "fp": 0, "fn": 0, "tn": 1}
        assert set(doc) >= {"precision", "recall", "f1", "fp_ids", "fn_ids"}

    @given(
        st.dictionaries(
            st.text(st.characters(min_codepoint=97, max_codepoint=122), min_size=1, max_size=4),
            st.tuples(st.booleans(), st.booleans()),
            min_size=1,
            max_size=40,
        )
    )
    def test_counts_match_brute_force(self, table):
        gold = labels({k: g for k, (g, _) in table.items()})
        pred = labels({k: p for k, (_, p) in table.items()})
        report = evaluate(pred, gold)
        tp = sum(1 for g, p in table.values() if g and p)
        fp = sum(1 for g, p in table.values() if not g and p)
        fn = sum(1 for g, p in table.values() if g and not p)
        tn = sum(1 for g, p in table.values() if not g and not p)
        assert (report.confusion.tp, report.confusion.fp) == (tp, fp)
        assert (report.confusion.fn, report.confusion.tn) == (fn, tn)
        if tp + fp > 0:
            assert report.precision == pytest.approx(tp / (tp + fp))
        if tp + fn > 0:
            assert report.recall == pytest.approx(tp / (tp + fn))

    @given(
        st.dictionaries(
            st.integers(min_value=0, max_value=30),
            st.tuples(st.booleans(), st.booleans()),
            min_size=1,
            max_size=31,
        )
    )
    def test_label_flip_swaps_fp_and_fn(self, table):
        gold = labels({str(k): g for k, (g, _) in table.items()})
        pred = labels({str(k): p for k, (_, p) in table.items()})
        flipped_gold = labels({str(k): not g for k, (g, _) in table.items()})
        flipped_pred = labels({str(k): not p for k, (_, p) in table.items()})
        original = evaluate(pred, gold)
        flipped = evaluate(flipped_pred, flipped_gold)
        assert original.fp_ids == flipped.fn_ids
        assert original.fn_ids == flipped.fp_ids
        assert original.confusion.tp == flipped.confusion.tn


class TestIntersectErrors:
    def reports(self):
        gold = labels(
            {"a": 1, "b": 1, "c": 1, "d": 1, "e": 0, "f": 0, "g": 0, "h": 0}
        )
        base_pred = labels(
            {"a": 0, "b": 0, "c": 1, "d": 1, "e": 1, "f": 1, "g": 1, "h": 1}
        )
        ref_pred = labels(
            {"a": 0, "b": 1, "c": 1, "d": 1, "e": 1, "f": 1, "g": 1, "h": 0}
        )
        return (
            evaluate(base_pred, gold, model_name="base"),
            evaluate(ref_pred, gold, model_name="ref"),
        )

    def test_shared_percentages(self):
        base, ref = self.reports()
        # base FP {e,f,g,h}, ref FP {e,f,g}; base FN {a,b}, ref FN {a}
        report = intersect_errors(base, ref)
        assert report.shared_fp_pct == pytest.approx(75.0)
        assert report.shared_fn_pct == pytest.approx(50.0)
        assert report.base_model == "base"
        assert report.reference_model == "ref"

    def test_is_directional(self):
        base, ref = self.reports()
        reverse = intersect_errors(ref, base)
        # ref FP {e,f,g} all shared with base; ref FN {a} shared
        assert reverse.shared_fp_pct == pytest.approx(100.0)
        assert reverse.shared_fn_pct == pytest.approx(100.0)

    def test_no_errors_reports_none(self):
        gold = labels({"a": 1, "b": 0})
        perfect = evaluate(dict(gold), gold, model_name="perfect")
        other = evaluate(labels({"a": 0, "b": 1}), gold, model_name="other")
        report = intersect_errors(perfect, other)
        assert report.shared_fp_pct is None
        assert report.shared_fn_pct is None
        doc = report.to_dict()
        assert doc["shared_fp_pct"] is None

    def test_zero_overlap(self):
        gold = labels({"a": 1, "b": 0, "c": 1, "d": 0})
        base_pred = labels({"a": 0, "b": 1, "c": 1, "d": 0})
        ref_pred = labels({"a": 1, "b": 0, "c": 0, "d": 1})
        report = intersect_errors(
            evaluate(base_pred, gold), evaluate(ref_pred, gold)
        )
        assert report.shared_fp_pct == 0.0
        assert report.shared_fn_pct == 0.0

    def test_requires_same_universe(self):
        gold_a = labels({"a": 1, "b": 0})
        gold_b = labels({"a": 1, "c": 0})
        left = evaluate(dict(gold_a), gold_a)
        right = evaluate(dict(gold_b), gold_b)
        with pytest.raises(EvaluationError, match="universe"):
            intersect_errors(left, right)

    @given(
        st.dictionaries(
            st.integers(min_value=0, max_value=20),
            st.tuples(st.booleans(), st.booleans(), st.booleans()),
            min_size=2,
            max_size=21,
        )
    )
    def test_percentages_bounded(self, table):
        gold = labels({str(k): g for k, (g, _, _) in table.items()})
        base_pred = labels({str(k): p for k, (_, p, _) in table.items()})
        ref_pred = labels({str(k): q for k, (_, _, q) in table.items()})
        report = intersect_errors(
            evaluate(base_pred, gold), evaluate(ref_pred, gold)
        )
        for pct in (report.shared_fp_pct, report.shared_fn_pct):
            assert pct is None or 0.0 <= pct <= 100.0


class TestHistogram:
    def test_known_bin_placement(self):
        # "covid 19" has PROB 2/8; the transform lifts it to bin 15
        tweets = [
            Tweet("t1", "covid 19", INFO),
            Tweet("t2", "no digits here", UNINF),
            Tweet("t3", "1234", INFO),
        ]
        report = feature_distribution_report(tweets)
        expected_bin = min(
            int(power_transform(prob_numeric("covid 19").value) * HISTOGRAM_BINS),
            HISTOGRAM_BINS - 1,
        )
        assert expected_bin == 15
        assert report.counts[INFO][expected_bin] == 1
        assert report.counts[UNINF][0] == 1  # zero stays in the first bin
        assert report.counts[INFO][HISTOGRAM_BINS - 1] == 1  # 1.0 lands in the last

    def test_counts_sum_to_class_sizes(self):
        tweets = [Tweet(f"i{k}", f"case {k}", INFO) for k in range(7)]
        tweets += [Tweet(f"u{k}", "sunny day", UNINF) for k in range(3)]
        report = feature_distribution_report(tweets)
        assert sum(report.counts[INFO]) == 7
        assert sum(report.counts[UNINF]) == 3

    def test_missing_class_is_all_zero(self):
        report = feature_distribution_report([Tweet("a", "99 cases", INFO)])
        assert report.counts[UNINF] == (0,) * HISTOGRAM_BINS

    def test_unlabeled_tweet_rejected(self):
        with pytest.raises(EvaluationError, match="label"):
            feature_distribution_report([Tweet("a", "text")])

    def test_rows_cover_unit_interval(self):
        report = feature_distribution_report([Tweet("a", "x", INFO)])
        rows = report.rows()
        assert len(rows) == 2 * HISTOGRAM_BINS
        info_rows = [r for r in rows if r[2] == "INFORMATIVE"]
        assert info_rows[0][:2] == (0.0, 1 / HISTOGRAM_BINS)
        assert info_rows[-1][:2] == ((HISTOGRAM_BINS - 1) / HISTOGRAM_BINS, 1.0)

    def test_csv_round_trip(self, tmp_path):
        tweets = [Tweet("a", "covid 19", INFO), Tweet("b", "hello", UNINF)]
        report = feature_distribution_report(tweets)
        path = tmp_path / "hist.csv"
        write_histogram_csv(report, path)
        with open(path, newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["bin_low", "bin_high", "class", "count"]
        assert len(rows) == 1 + 2 * HISTOGRAM_BINS
        total = sum(int(row[3]) for row in rows[1:])
        assert total == 2
