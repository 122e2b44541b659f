import math

import pytest
from hypothesis import given, settings, strategies as st

from gvdb import classifier as clf
from gvdb.classifier import (
    CalibrationError,
    LabeledDoc,
    ModelFormatError,
    TrainingError,
    calibrate_threshold,
    load_model,
    save_model,
    score_text,
    threshold_for_recall,
    tokenize,
    train,
    word_tokens,
)


class TestTokenize:
    def test_unigrams_plus_bigrams(self):
        assert tokenize("Two men shot") == ["two", "men", "shot", "two_men", "men_shot"]

    def test_empty(self):
        assert tokenize("") == []

    def test_digit_mapping(self):
        assert tokenize("14-year-old") == ["<num>", "year", "old", "<num>_year", "year_old"]

    def test_no_empty_tokens_and_deterministic(self):
        text = "Crime -- 3 shots?! fired_at 9mm"
        assert all(tokenize(text)) and tokenize(text) == tokenize(text)

    def test_word_tokens_are_unigrams_only(self):
        assert word_tokens("Two men shot") == ["two", "men", "shot"]


def tiny_corpus():
    texts = {"d1": "man shot", "d2": "man paid"}
    docs = [LabeledDoc("d1", "positive"), LabeledDoc("d2", "negative")]
    return docs, texts


class TestTrain:
    def test_hand_computed_likelihood(self):
        # Features of "man shot": man, shot, man_shot -> class total 3.
        # Vocabulary: man, man_paid, man_shot, paid, shot -> V = 5.
        # P(shot|pos) = (1 + 1) / (3 + 1*5) = 0.25, by the add-alpha closed form.
        docs, texts = tiny_corpus()
        model = train(docs, texts, alpha=1.0)
        idx = model.vocabulary["shot"]
        assert math.isclose(math.exp(model.log_likelihoods["positive"][idx]), 2 / 8, abs_tol=1e-12)
        p_paid_pos = math.exp(model.log_likelihoods["positive"][model.vocabulary["paid"]])
        assert math.isclose(p_paid_pos, 1 / 8, abs_tol=1e-12)

    def test_likelihoods_normalize_over_vocabulary(self):
        docs, texts = tiny_corpus()
        model = train(docs, texts, alpha=0.7)
        for c in ("positive", "negative"):
            assert math.isclose(sum(map(math.exp, model.log_likelihoods[c])), 1.0, abs_tol=1e-9)

    def test_single_class_raises(self):
        texts = {"d1": "man shot", "d2": "woman shot"}
        docs = [LabeledDoc("d1", "positive"), LabeledDoc("d2", "positive")]
        with pytest.raises(TrainingError):
            train(docs, texts)

    def test_nonpositive_alpha_raises(self):
        docs, texts = tiny_corpus()
        with pytest.raises(TrainingError):
            train(docs, texts, alpha=0.0)

    def test_deterministic(self):
        docs, texts = tiny_corpus()
        assert train(docs, texts) == train(docs, texts)


class TestScore:
    def test_all_oov_doc_scores_the_prior(self):
        texts = {"d1": "man shot", "d2": "man paid", "d3": "man paid cash"}
        docs = [LabeledDoc("d1", "positive"), LabeledDoc("d2", "negative"),
                LabeledDoc("d3", "negative")]
        model = train(docs, texts)
        prior_posterior = math.exp(model.class_log_priors["positive"])
        assert math.isclose(score_text(model, "zebra quartz"), prior_posterior, abs_tol=1e-12)

    def test_brute_force_posterior_from_stored_counts(self):
        docs, texts = tiny_corpus()
        model = train(docs, texts, alpha=1.0)
        doc = "man shot a man"

        # Independent oracle: recompute the posterior from raw counts.
        def oracle(text):
            toks = tokenize(text)
            v = len(model.vocabulary)
            joint = {}
            for c in ("positive", "negative"):
                total = model.total_tokens[c]
                logp = model.class_log_priors[c]
                for t in toks:
                    if t in model.vocabulary:
                        n = model.token_counts[c][model.vocabulary[t]]
                        logp += math.log((n + model.smoothing_alpha) /
                                         (total + model.smoothing_alpha * v))
                    else:
                        logp += math.log(1.0 / v)
                joint[c] = logp
            m = max(joint.values())
            return math.exp(joint["positive"] - m) / sum(math.exp(x - m) for x in joint.values())

        assert abs(score_text(model, doc) - oracle(doc)) < 1e-9

    def test_score_deterministic(self):
        docs, texts = tiny_corpus()
        model = train(docs, texts)
        assert score_text(model, "man shot man") == score_text(model, "man shot man")

    @given(st.text(max_size=200))
    @settings(max_examples=50)
    def test_score_bounds(self, text):
        docs, texts = tiny_corpus()
        model = train(docs, texts)
        assert 0.0 <= score_text(model, text) <= 1.0

    def test_label_flip_symmetry(self):
        texts = {"d1": "man shot in street", "d2": "man paid in store", "d3": "gun fired here"}
        docs = [LabeledDoc("d1", "positive"), LabeledDoc("d2", "negative"),
                LabeledDoc("d3", "positive")]
        flipped = [LabeledDoc(d.article_id, "negative" if d.label == "positive" else "positive")
                   for d in docs]
        m1, m2 = train(docs, texts), train(flipped, texts)
        for probe in ("man shot", "man paid", "unseen words here"):
            assert abs(score_text(m1, probe) - (1 - score_text(m2, probe))) < 1e-9


class TestCalibration:
    def test_target_recall_one_admits_lowest_positive(self):
        assert threshold_for_recall([0.9, 0.7, 0.2], 1.0) == 0.2

    def test_partial_recall_prefers_precision(self):
        assert threshold_for_recall([0.9, 0.7, 0.2], 0.66) == 0.7

    def test_empty_validation_raises(self):
        docs, texts = tiny_corpus()
        model = train(docs, texts)
        with pytest.raises(CalibrationError):
            calibrate_threshold(model, [], texts)

    def test_no_positives_raises(self):
        docs, texts = tiny_corpus()
        model = train(docs, texts)
        with pytest.raises(CalibrationError):
            calibrate_threshold(model, [LabeledDoc("d2", "negative")], texts)

    @given(st.lists(st.floats(0, 1), min_size=1, max_size=30),
           st.floats(0.05, 1.0))
    @settings(max_examples=100)
    def test_threshold_achieves_recall_and_is_maximal(self, scores, target):
        t = threshold_for_recall(scores, target)
        admitted = sum(1 for s in scores if s >= t)
        assert admitted / len(scores) >= target
        higher = [s for s in scores if s > t]
        if higher:
            t2 = min(higher)
            assert sum(1 for s in scores if s >= t2) / len(scores) < target

    @given(st.lists(st.floats(0, 1), min_size=2, max_size=40))
    @settings(max_examples=60)
    def test_monotone_positive_sets(self, scores):
        t1, t2 = 0.3, 0.7
        set1 = {i for i, s in enumerate(scores) if s >= t1}
        set2 = {i for i, s in enumerate(scores) if s >= t2}
        assert set2 <= set1


class TestClassify:
    def test_threshold_split(self):
        texts = {"d1": "man shot gun", "d2": "man paid tax"}
        docs = [LabeledDoc("d1", "positive"), LabeledDoc("d2", "negative")]
        model = train(docs, texts)
        model.threshold = 0.5

        class FakeArticle:
            body_text = "man shot gun"
            relevance_state = "unclassified"

        a = FakeArticle()
        assert clf.classify(model, a) == "machine_positive"
        assert a.relevance_state == "machine_positive"
        a.body_text = "man paid tax"
        assert clf.classify(model, a) == "machine_negative"


class TestRetrainingGrowth:
    def test_vocabulary_coverage_never_shrinks_with_new_labels(self):
        texts = {"d1": "man shot downtown", "d2": "council budget vote",
                 "d3": "gunfire wounded two", "d4": "bakery opened early"}
        old = [LabeledDoc("d1", "positive"), LabeledDoc("d2", "negative")]
        new = old + [LabeledDoc("d3", "positive", "human_confirmed"),
                     LabeledDoc("d4", "negative", "human_rejected")]
        vocab_old = set(train(old, texts).vocabulary)
        vocab_new = set(train(new, texts).vocabulary)
        assert vocab_old <= vocab_new


class TestCorpusSeparation:
    def test_heldout_pairwise_ranking_at_least_90_percent(self):
        from conftest import load_jsonl
        from gvdb.ingest import make_article

        rows = load_jsonl("classifier_corpus.jsonl")
        labels = {}
        texts = {}
        for row in rows:
            article = make_article(row["url"], row["title"], row["body_text"],
                                   row["source_name"], row["published_at"])
            texts[article.id] = article.body_text
            labels[article.id] = (row["label"], row["split"])
        train_docs = [LabeledDoc(a, l) for a, (l, s) in labels.items() if s == "train"]
        model = train(train_docs, texts)
        pos = [score_text(model, texts[a]) for a, (l, s) in labels.items()
               if s == "test" and l == "positive"]
        neg = [score_text(model, texts[a]) for a, (l, s) in labels.items()
               if s == "test" and l == "negative"]
        wins = sum(1 for p in pos for n in neg if p > n)
        assert wins / (len(pos) * len(neg)) >= 0.90


class TestModelFile:
    def test_round_trip(self, tmp_path):
        docs, texts = tiny_corpus()
        model = train(docs, texts)
        model.threshold = 0.42
        path = str(tmp_path / "model.gvdb-nb1")
        save_model(model, path)
        assert load_model(path) == model

    def test_magic_mismatch_fails_closed(self, tmp_path):
        path = str(tmp_path / "bad.model")
        with open(path, "w") as f:
            f.write("GVDB-NB2\n{}\n")
        with pytest.raises(ModelFormatError):
            load_model(path)
