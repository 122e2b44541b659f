"""High-recall relevance classifier: multinomial naive Bayes over unigrams+bigrams.

The model is deliberately simple: deterministic training, a closed-form
posterior that an independent oracle can recompute from the stored counts,
and a threshold calibrated to hit a target recall so that nearly every true
report reaches human review.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

MODEL_MAGIC = "GVDB-NB1"
POSITIVE, NEGATIVE = "positive", "negative"
CLASSES = (POSITIVE, NEGATIVE)

# Scoring looks at the head of the document only; headlines and ledes carry
# the relevance signal.
MAX_SCORE_TOKENS = 2000

NUM_TOKEN = "<num>"
_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)


class TrainingError(ValueError):
    pass


class CalibrationError(ValueError):
    pass


class ModelFormatError(ValueError):
    pass


def word_tokens(text: str) -> list[str]:
    """Canonical unigram tokenizer: lowercase, split on non-alphanumeric runs,
    digit runs replaced by a <num> placeholder."""
    out = []
    for tok in _WORD_RE.findall(text.lower()):
        out.append(NUM_TOKEN if tok.isdigit() else tok)
    return out


def tokenize(text: str, max_words: int | None = None) -> list[str]:
    """Feature tokens: unigrams followed by adjoined bigrams."""
    words = word_tokens(text)
    if max_words is not None:
        words = words[:max_words]
    return words + [f"{a}_{b}" for a, b in zip(words, words[1:])]


@dataclass
class LabeledDoc:
    article_id: str
    label: str  # positive | negative
    label_source: str = "seed"  # seed | human_confirmed | human_rejected


@dataclass
class ClassifierModel:
    vocabulary: dict[str, int]
    token_counts: dict[str, list[int]]  # class -> per-index counts
    total_tokens: dict[str, int]
    log_likelihoods: dict[str, list[float]]
    oov_log_likelihood: dict[str, float]
    class_log_priors: dict[str, float]
    ngram_order: int = 2
    smoothing_alpha: float = 1.0
    threshold: float = 0.5
    doc_counts: dict[str, int] = field(default_factory=dict)

    def token_log_likelihood(self, cls: str, token: str) -> float:
        idx = self.vocabulary.get(token)
        if idx is None:
            return self.oov_log_likelihood[cls]
        return self.log_likelihoods[cls][idx]


def train(docs: list[LabeledDoc], texts: dict[str, str], alpha: float = 1.0) -> ClassifierModel:
    """Fit the add-alpha multinomial model; deterministic given inputs.

    `texts` maps article_id to canonical body_text.
    """
    if alpha <= 0:
        raise TrainingError(f"smoothing alpha must be > 0, got {alpha}")
    labels = {d.label for d in docs}
    if labels != set(CLASSES):
        raise TrainingError(f"both classes must be represented, got {sorted(labels)}")

    counts: dict[str, dict[str, int]] = {c: {} for c in CLASSES}
    doc_counts = {c: 0 for c in CLASSES}
    for d in docs:
        doc_counts[d.label] += 1
        per_class = counts[d.label]
        for tok in tokenize(texts[d.article_id]):
            per_class[tok] = per_class.get(tok, 0) + 1

    vocab_tokens = sorted(set(counts[POSITIVE]) | set(counts[NEGATIVE]))
    vocabulary = {tok: i for i, tok in enumerate(vocab_tokens)}
    v = len(vocabulary)

    token_counts = {}
    total_tokens = {}
    log_likelihoods = {}
    # Out-of-vocabulary tokens get pure smoothing mass, identical for both
    # classes, so they shift the joint likelihoods without moving the
    # posterior: an all-OOV document scores exactly the prior.
    oov = {c: (math.log(1.0 / v) if v else 0.0) for c in CLASSES}
    for c in CLASSES:
        per_index = [counts[c].get(tok, 0) for tok in vocab_tokens]
        total = sum(per_index)
        denom = total + alpha * v
        token_counts[c] = per_index
        total_tokens[c] = total
        log_likelihoods[c] = [math.log((n + alpha) / denom) for n in per_index]

    n_docs = len(docs)
    priors = {c: math.log(doc_counts[c] / n_docs) for c in CLASSES}

    return ClassifierModel(
        vocabulary=vocabulary,
        token_counts=token_counts,
        total_tokens=total_tokens,
        log_likelihoods=log_likelihoods,
        oov_log_likelihood=oov,
        class_log_priors=priors,
        smoothing_alpha=alpha,
        doc_counts=doc_counts,
    )


def score_text(model: ClassifierModel, text: str) -> float:
    """Posterior probability of the positive class, in [0, 1]."""
    tokens = tokenize(text, max_words=MAX_SCORE_TOKENS)
    log_joint = {}
    for c in CLASSES:
        total = model.class_log_priors[c]
        for tok in tokens:
            total += model.token_log_likelihood(c, tok)
        log_joint[c] = total
    m = max(log_joint.values())
    num = math.exp(log_joint[POSITIVE] - m)
    den = num + math.exp(log_joint[NEGATIVE] - m)
    return num / den


def score(model: ClassifierModel, article) -> float:
    return score_text(model, article.body_text)


def threshold_for_recall(positive_scores: list[float], target_recall: float) -> float:
    """Largest t with |{s >= t}| / |positives| >= target_recall.

    Among all thresholds achieving the target, the largest maximizes
    precision: it is the k-th highest positive score for the smallest
    sufficient k.
    """
    if not positive_scores:
        raise CalibrationError("no positives to calibrate against")
    if not 0 < target_recall <= 1:
        raise CalibrationError(f"target recall must be in (0, 1], got {target_recall}")
    ranked = sorted(positive_scores, reverse=True)
    needed = math.ceil(target_recall * len(ranked))
    return ranked[needed - 1]


def calibrate_threshold(model: ClassifierModel, validation: list[LabeledDoc],
                        texts: dict[str, str], target_recall: float = 0.95) -> float:
    """Calibrate and store the high-recall threshold on the model."""
    if not validation:
        raise CalibrationError("validation set is empty")
    pos_scores = [score_text(model, texts[d.article_id])
                  for d in validation if d.label == POSITIVE]
    threshold = threshold_for_recall(pos_scores, target_recall)
    model.threshold = threshold
    return threshold


def classify(model: ClassifierModel, article) -> str:
    """Relevance verdict; also updates article.relevance_state in place."""
    state = "machine_positive" if score(model, article) >= model.threshold else "machine_negative"
    article.relevance_state = state
    return state


def save_model(model: ClassifierModel, path: str) -> None:
    payload = {
        "vocabulary": model.vocabulary,
        "token_counts": model.token_counts,
        "total_tokens": model.total_tokens,
        "log_likelihoods": model.log_likelihoods,
        "oov_log_likelihood": model.oov_log_likelihood,
        "class_log_priors": model.class_log_priors,
        "ngram_order": model.ngram_order,
        "smoothing_alpha": model.smoothing_alpha,
        "threshold": model.threshold,
        "doc_counts": model.doc_counts,
    }
    with open(path, "w", encoding="utf-8") as f:
        f.write(MODEL_MAGIC + "\n")
        json.dump(payload, f)
        f.write("\n")


def load_model(path: str) -> ClassifierModel:
    """Load a serialized model; fails closed on any magic-header mismatch."""
    with open(path, "r", encoding="utf-8") as f:
        magic = f.readline().rstrip("\n")
        if magic != MODEL_MAGIC:
            raise ModelFormatError(f"expected header {MODEL_MAGIC!r}, found {magic!r}")
        payload = json.load(f)
    return ClassifierModel(
        vocabulary={str(k): int(v) for k, v in payload["vocabulary"].items()},
        token_counts={c: list(map(int, payload["token_counts"][c])) for c in CLASSES},
        total_tokens={c: int(payload["total_tokens"][c]) for c in CLASSES},
        log_likelihoods={c: list(map(float, payload["log_likelihoods"][c])) for c in CLASSES},
        oov_log_likelihood={c: float(payload["oov_log_likelihood"][c]) for c in CLASSES},
        class_log_priors={c: float(payload["class_log_priors"][c]) for c in CLASSES},
        ngram_order=int(payload.get("ngram_order", 2)),
        smoothing_alpha=float(payload.get("smoothing_alpha", 1.0)),
        threshold=float(payload.get("threshold", 0.5)),
        doc_counts={k: int(v) for k, v in payload.get("doc_counts", {}).items()},
    )
