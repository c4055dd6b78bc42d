import math

import numpy as np
import pytest

from srpvec.classify import (
    ClassifierConfig,
    Dataset,
    cross_entropy,
    cross_validate,
    knn_predict,
    logreg_fit,
    logreg_loss_grad,
    logreg_predict,
    stratified_folds,
)
from srpvec.errors import DomainError


def blob_dataset(per_class, dim, spread, seed, centers=((0.0, 1.0), (1.0, 0.0))):
    rng = np.random.default_rng(seed)
    ids, rows, labels = [], [], []
    for ci, center in enumerate(centers, start=1):
        mu = np.zeros(dim)
        mu[: len(center)] = center
        for gi in range(per_class):
            ids.append(f"c{ci}_{gi}")
            rows.append(mu + rng.normal(0, spread, size=dim))
            labels.append(ci)
    return Dataset(ids, np.array(rows), np.array(labels))


class TestCrossEntropy:
    def test_perfect_predictions(self):
        probs = np.eye(3)[[0, 1, 2]]
        assert cross_entropy(probs, np.array([1, 2, 3])) == 0.0

    def test_uniform_four_classes(self):
        probs = np.full((1, 4), 0.25)
        assert abs(cross_entropy(probs, np.array([2])) - math.log(4)) < 1e-12

    def test_two_half_probabilities(self):
        probs = np.array([[0.5, 0.5], [0.5, 0.5]])
        assert abs(cross_entropy(probs, np.array([1, 2])) - 2 * math.log(2)) < 1e-12

    def test_clamped_zero(self):
        probs = np.array([[1.0, 0.0]])
        assert cross_entropy(probs, np.array([2])) == pytest.approx(-math.log(1e-12))


class TestKnn:
    def test_train_equals_test_k1(self):
        data = blob_dataset(20, 5, 0.3, seed=0)
        probs = knn_predict(data, data.X, k=1)
        assert np.array_equal(probs.argmax(1) + 1, data.y)

    def test_single_training_point(self):
        data = Dataset(["only"], np.array([[1.0, 2.0]]), np.array([1]))
        probs = knn_predict(data, np.array([[5.0, 5.0], [0.0, 0.0]]), k=1)
        assert np.array_equal(probs, [[1.0], [1.0]])

    def test_separated_blobs(self):
        train = blob_dataset(100, 16, 0.15, seed=1)
        test = blob_dataset(100, 16, 0.15, seed=2)
        probs = knn_predict(train, test.X, k=5)
        acc = float((probs.argmax(1) + 1 == test.y).mean())
        assert acc >= 0.95

    def test_row_permutation_invariance(self):
        data = blob_dataset(15, 4, 0.6, seed=3)
        rng = np.random.default_rng(0)
        perm = rng.permutation(data.n).tolist()
        shuffled = Dataset(
            [data.graph_ids[i] for i in perm], data.X[perm], data.y[perm]
        )
        queries = rng.normal(0, 1, size=(10, 4))
        assert np.array_equal(
            knn_predict(data, queries, k=4), knn_predict(shuffled, queries, k=4)
        )

    def test_cosine_metric(self):
        data = Dataset(
            ["a", "b"], np.array([[1.0, 0.0], [0.0, 1.0]]), np.array([1, 2])
        )
        probs = knn_predict(data, np.array([[10.0, 0.1]]), k=1, metric="cosine")
        assert probs.argmax() == 0

    def test_bad_arguments(self):
        data = blob_dataset(5, 3, 0.5, seed=0)
        with pytest.raises(DomainError):
            knn_predict(data, data.X, k=0)
        with pytest.raises(DomainError):
            knn_predict(data, data.X, k=11)
        with pytest.raises(DomainError):
            knn_predict(data, data.X, k=3, metric="manhattan")


class TestLogreg:
    def test_separable_toy(self):
        data = blob_dataset(25, 4, 0.1, seed=5)
        model = logreg_fit(data, l2=0.0, steps=400, lr=0.5, seed=0)
        probs = logreg_predict(model, data.X)
        assert float((probs.argmax(1) + 1 == data.y).mean()) == 1.0

    def test_zero_features_predict_priors(self):
        data = Dataset(
            [f"g{i}" for i in range(10)],
            np.zeros((10, 6)),
            np.array([1, 2] * 5),
        )
        model = logreg_fit(data, l2=0.0, steps=300, lr=0.5, seed=0)
        probs = logreg_predict(model, np.zeros((3, 6)))
        assert np.allclose(probs, 0.5, atol=1e-3)

    def test_gradient_matches_finite_differences(self):
        rng = np.random.default_rng(7)
        data = Dataset(
            [f"g{i}" for i in range(12)],
            rng.normal(size=(12, 5)),
            np.array([1, 2, 3] * 4),
        )
        W = rng.normal(size=(3, 5)) * 0.5
        b = rng.normal(size=3) * 0.2
        _, gW, gb = logreg_loss_grad(data, W, b, l2=0.3)
        h = 1e-6

        def loss_at(Wx, bx):
            return logreg_loss_grad(data, Wx, bx, l2=0.3)[0]

        for idx in np.ndindex(*W.shape):
            up, down = W.copy(), W.copy()
            up[idx] += h
            down[idx] -= h
            num = (loss_at(up, b) - loss_at(down, b)) / (2 * h)
            assert abs(num - gW[idx]) <= 1e-5 * max(1.0, abs(gW[idx]))
        for i in range(3):
            up, down = b.copy(), b.copy()
            up[i] += h
            down[i] -= h
            num = (loss_at(W, up) - loss_at(W, down)) / (2 * h)
            assert abs(num - gb[i]) <= 1e-5 * max(1.0, abs(gb[i]))

    def test_loss_non_increasing(self):
        data = blob_dataset(20, 3, 0.4, seed=8)
        model = logreg_fit(data, l2=0.01, steps=200, lr=0.1, seed=1)
        diffs = np.diff(model.loss_history)
        assert np.all(diffs <= 1e-9)

    def test_deterministic_given_seed(self):
        data = blob_dataset(10, 3, 0.4, seed=9)
        a = logreg_fit(data, steps=50, seed=3)
        b = logreg_fit(data, steps=50, seed=3)
        assert np.array_equal(a.weights, b.weights)

    def test_nonfinite_features_rejected(self):
        with pytest.raises(DomainError):
            Dataset(["a", "b"], np.array([[np.inf, 0], [0, 1]]), np.array([1, 2]))


class _AlwaysFirstClass:
    def fit_predict(self, train, X_test, seed=0):
        probs = np.zeros((len(X_test), train.num_classes))
        probs[:, 0] = 1.0
        return probs


class TestCrossValidate:
    def test_constant_classifier_on_balanced_data(self):
        data = blob_dataset(30, 4, 0.5, seed=10)
        report = cross_validate(data, _AlwaysFirstClass(), folds=10, seed=0)
        assert report.mean_accuracy == pytest.approx(0.5)

    def test_deterministic_labels_reach_full_accuracy(self):
        data = blob_dataset(30, 6, 0.05, seed=11)
        report = cross_validate(data, ClassifierConfig(model="knn", k=1), folds=10, seed=0)
        assert report.mean_accuracy == 1.0

    def test_stratification_balance(self):
        y = np.array([1] * 23 + [2] * 31 + [3] * 46)
        assignment = stratified_folds(y, folds=10, seed=4)
        for cls in (1, 2, 3):
            sizes = np.bincount(assignment[y == cls], minlength=10)
            assert sizes.max() - sizes.min() <= 1

    def test_small_class_falls_back_with_warning(self):
        y = np.array([1] * 12 + [2] * 3)
        with pytest.warns(UserWarning):
            assignment = stratified_folds(y, folds=10, seed=0)
        assert len(set(assignment.tolist())) == 10

    def test_fold_may_swallow_a_tiny_class(self):
        # a train split missing one class entirely must still evaluate
        rng = np.random.default_rng(0)
        data = Dataset(
            [f"g{i}" for i in range(22)],
            rng.normal(size=(22, 4)),
            np.array([1] * 20 + [2] * 2),
        )
        with pytest.warns(UserWarning):
            report = cross_validate(data, ClassifierConfig(model="knn", k=3), folds=10, seed=0)
        assert len(report.fold_accuracies) == 10

    def test_confusion_matrix_row_sums(self):
        data = blob_dataset(25, 4, 0.8, seed=12)
        report = cross_validate(data, ClassifierConfig(model="knn", k=3), folds=5, seed=1)
        assert report.confusion.sum() == data.n
        assert np.array_equal(report.confusion.sum(axis=1), [25, 25])

    def test_report_shape(self):
        data = blob_dataset(20, 4, 0.5, seed=13)
        report = cross_validate(data, ClassifierConfig(model="logreg", steps=100), folds=10, seed=0)
        assert len(report.fold_accuracies) == 10
        assert 0.0 <= report.mean_accuracy <= 1.0
        d = report.as_dict()
        assert set(d) >= {"fold_accuracies", "mean_accuracy", "std_accuracy",
                          "mean_cross_entropy", "confusion_matrix"}


class TestDataset:
    def test_labels_must_cover_range(self):
        with pytest.raises(DomainError):
            Dataset(["a", "b"], np.zeros((2, 2)), np.array([1, 3]))

    def test_ids_must_be_unique(self):
        with pytest.raises(DomainError):
            Dataset(["a", "a"], np.zeros((2, 2)), np.array([1, 2]))
