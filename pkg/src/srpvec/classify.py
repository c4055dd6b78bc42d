"""Supervised harness: kNN and multinomial logistic regression under
stratified k-fold cross-validation.

Both classifiers emit categorical distributions so the cross-entropy
objective -sum_i log p_{i, label_i} is measurable directly; logistic
regression minimizes it by full-batch gradient descent.  Reports follow the
usual mean +/- sample standard deviation over fold accuracies.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

PROB_CLAMP = 1e-12


@dataclass
class Dataset:
    """Feature rows with labels in 1..D; graph ids give deterministic ties.

    A full dataset must have every class 1..D nonempty; fold subsets pass
    `num_classes` explicitly and may miss classes.
    """

    graph_ids: list
    X: np.ndarray
    y: np.ndarray
    class_names: list = field(default_factory=list)
    num_classes: int = 0

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=np.float64)
        self.y = np.asarray(self.y, dtype=np.int64)
        if self.X.ndim != 2 or len(self.graph_ids) != self.X.shape[0] or self.y.shape[0] != self.X.shape[0]:
            raise DomainError("rows, ids and labels must align")
        if len(set(self.graph_ids)) != len(self.graph_ids):
            raise DomainError("graph ids must be unique")
        if self.X.shape[0] == 0:
            raise DomainError("dataset is empty")
        if not np.all(np.isfinite(self.X)):
            raise DomainError("features must be finite")
        if not self.num_classes:
            d = int(self.y.max())
            if sorted(set(self.y.tolist())) != list(range(1, d + 1)):
                raise DomainError("labels must cover 1..D")
            self.num_classes = d
        elif self.y.min() < 1 or self.y.max() > self.num_classes:
            raise DomainError("labels out of range 1..D")
        if not self.class_names:
            self.class_names = [str(k) for k in range(1, self.num_classes + 1)]

    @property
    def n(self):
        return self.X.shape[0]

    def subset(self, idx):
        return Dataset(
            [self.graph_ids[i] for i in idx],
            self.X[idx],
            self.y[idx],
            class_names=self.class_names,
            num_classes=self.num_classes,
        )


@dataclass(frozen=True)
class CVReport:
    """Per-fold accuracies, their mean +/- sample std, mean cross-entropy
    per test row, and the aggregate confusion matrix (rows = true class)."""

    fold_accuracies: list
    mean_accuracy: float
    std_accuracy: float
    mean_cross_entropy: float
    confusion: np.ndarray
    class_names: list

    def as_dict(self):
        return {
            "folds": len(self.fold_accuracies),
            "fold_accuracies": [float(a) for a in self.fold_accuracies],
            "mean_accuracy": float(self.mean_accuracy),
            "std_accuracy": float(self.std_accuracy),
            "mean_cross_entropy": float(self.mean_cross_entropy),
            "confusion_matrix": self.confusion.tolist(),
            "class_names": list(self.class_names),
        }


def cross_entropy(probs, labels) -> float:
    """-sum_i log p_{i, label_i}, probabilities clamped at 1e-12."""
    probs = np.asarray(probs, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    if probs.shape[0] != labels.shape[0]:
        raise DomainError("predictions and labels differ in length")
    picked = probs[np.arange(len(labels)), labels - 1]
    return float(-np.log(np.clip(picked, PROB_CLAMP, None)).sum())


def _check_probs(probs):
    if np.any(probs < 0) or np.any(np.abs(probs.sum(axis=1) - 1.0) > 1e-9):
        raise AssertionError("prediction rows must be distributions")
    return probs


def knn_predict(train: Dataset, X_test, k: int, metric="euclidean") -> np.ndarray:
    """Neighbor-label frequencies among the k nearest training rows.

    Ties in distance break on the neighbor's graph_id, so predictions are
    invariant to any permutation of the training rows.
    """
    if train.n == 0:
        raise DomainError("empty training set")
    if not 1 <= k <= train.n:
        raise DomainError("k must be in 1..len(train)")
    X_test = np.atleast_2d(np.asarray(X_test, dtype=np.float64))
    if metric == "euclidean":
        dists = np.sqrt(
            np.maximum(
                ((X_test ** 2).sum(1)[:, None]
                 - 2.0 * X_test @ train.X.T
                 + (train.X ** 2).sum(1)[None, :]),
                0.0,
            )
        )
    elif metric == "cosine":
        def unit(a):
            norms = np.linalg.norm(a, axis=1, keepdims=True)
            return np.divide(a, norms, out=np.zeros_like(a), where=norms > 0)

        dists = 1.0 - unit(X_test) @ unit(train.X).T
    else:
        raise DomainError(f"unknown metric {metric!r}")

    tie_rank = np.argsort(np.argsort(np.asarray(train.graph_ids, dtype=object)))
    D = train.num_classes
    probs = np.zeros((X_test.shape[0], D))
    for i in range(X_test.shape[0]):
        order = np.lexsort((tie_rank, dists[i]))[:k]
        freq = np.bincount(train.y[order] - 1, minlength=D)
        probs[i] = freq / k
    return _check_probs(probs)


@dataclass(frozen=True)
class LogisticModel:
    weights: np.ndarray  # (D, m)
    bias: np.ndarray  # (D,)
    loss_history: list


def _softmax(z):
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def logreg_fit(train: Dataset, l2=0.0, steps=500, lr=0.5, seed=0) -> LogisticModel:
    """Softmax linear model by full-batch gradient descent.

    Minimizes cross-entropy plus (l2/2)||W||^2 (bias unpenalized).  Small
    seeded gaussian init keeps runs reproducible.
    """
    if l2 < 0:
        raise DomainError("l2 must be >= 0")
    if not np.all(np.isfinite(train.X)):
        raise DomainError("features must be finite")
    rng = np.random.default_rng(seed)
    n, m = train.X.shape
    D = train.num_classes
    W = rng.normal(0.0, 0.01, size=(D, m))
    b = np.zeros(D)
    Y = np.zeros((n, D))
    Y[np.arange(n), train.y - 1] = 1.0
    losses = []
    for _ in range(steps):
        probs = _softmax(train.X @ W.T + b)
        loss = cross_entropy(probs, train.y) + 0.5 * l2 * float((W ** 2).sum())
        losses.append(loss)
        resid = probs - Y
        W -= lr * (resid.T @ train.X + l2 * W) / n
        b -= lr * resid.sum(axis=0) / n
    return LogisticModel(W, b, losses)


def logreg_loss_grad(train: Dataset, W, b, l2=0.0):
    """Objective value and analytic gradients; finite-difference checkable."""
    probs = _softmax(train.X @ W.T + b)
    Y = np.zeros_like(probs)
    Y[np.arange(train.n), train.y - 1] = 1.0
    loss = cross_entropy(probs, train.y) + 0.5 * l2 * float((W ** 2).sum())
    resid = probs - Y
    return loss, resid.T @ train.X + l2 * W, resid.sum(axis=0)


def logreg_predict(model: LogisticModel, X) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    if not np.all(np.isfinite(X)):
        raise DomainError("features must be finite")
    return _check_probs(_softmax(X @ model.weights.T + model.bias))


@dataclass(frozen=True)
class ClassifierConfig:
    """Which model cross_validate trains per fold, with its hyperparameters."""

    model: str = "knn"
    k: int = 5
    metric: str = "euclidean"
    l2: float = 0.0
    steps: int = 500
    lr: float = 0.5

    def fit_predict(self, train, X_test, seed=0):
        if self.model == "knn":
            return knn_predict(train, X_test, k=min(self.k, train.n), metric=self.metric)
        if self.model == "logreg":
            model = logreg_fit(train, l2=self.l2, steps=self.steps, lr=self.lr, seed=seed)
            return logreg_predict(model, X_test)
        raise DomainError(f"unknown model {self.model!r}")


def stratified_folds(y, folds, seed):
    """Per-class shuffled round-robin assignment; class sizes per fold
    differ by at most one.  Falls back to plain round-robin with a warning
    when some class has fewer members than folds."""
    y = np.asarray(y)
    rng = np.random.default_rng(seed)
    assignment = np.zeros(len(y), dtype=np.int64)
    counts = np.bincount(y)[1:]
    if np.any(counts < folds):
        warnings.warn(
            "a class has fewer members than folds; using non-stratified folds",
            stacklevel=2,
        )
        order = rng.permutation(len(y))
        for pos, idx in enumerate(order):
            assignment[idx] = pos % folds
        return assignment
    for cls in range(1, int(y.max()) + 1):
        members = np.flatnonzero(y == cls)
        members = members[rng.permutation(len(members))]
        for pos, idx in enumerate(members):
            assignment[idx] = pos % folds
    return assignment


def cross_validate(
    data: Dataset, config: ClassifierConfig, folds=10, seed=0
) -> CVReport:
    """Stratified k-fold evaluation; folds are deterministic given the seed."""
    if folds < 2 or folds > data.n:
        raise DomainError("folds must be in 2..len(data)")
    assignment = stratified_folds(data.y, folds, seed)
    D = data.num_classes
    accs = []
    total_ce = 0.0
    confusion = np.zeros((D, D), dtype=np.int64)
    for f in range(folds):
        test_idx = np.flatnonzero(assignment == f)
        train_idx = np.flatnonzero(assignment != f)
        if len(test_idx) == 0:
            continue
        probs = config.fit_predict(data.subset(train_idx), data.X[test_idx], seed=seed)
        pred = probs.argmax(axis=1) + 1
        truth = data.y[test_idx]
        accs.append(float((pred == truth).mean()))
        total_ce += cross_entropy(probs, truth)
        for t, p in zip(truth, pred):
            confusion[t - 1, p - 1] += 1
    accs_arr = np.array(accs)
    return CVReport(
        fold_accuracies=accs,
        mean_accuracy=float(accs_arr.mean()),
        std_accuracy=float(accs_arr.std(ddof=1)) if len(accs) > 1 else 0.0,
        mean_cross_entropy=total_ce / data.n,
        confusion=confusion,
        class_names=data.class_names,
    )
