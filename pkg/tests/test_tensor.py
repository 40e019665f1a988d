"""Kernel-level checks for the autodiff engine.

Expected values come from independent oracles: a triple-loop matmul,
hand log-softmax arithmetic, closed-form softmax/layer-norm cases, and
central finite differences for composed gradients.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pastlab import tensor as T
from pastlab.errors import NumericError, ShapeError, UsageError
from pastlab.rng import Rng


def naive_matmul(a, b):
    m, k = a.shape
    k2, n = b.shape
    out = np.zeros((m, n))
    for i in range(m):
        for j in range(n):
            for l in range(k):
                out[i, j] += a[i, l] * b[l, j]
    return out


class TestMatmul:
    def test_identity(self):
        x = np.array([[7.0, 8.0], [9.0, 10.0]])
        out = T.matmul(T.Tensor(np.eye(2)), T.Tensor(x))
        np.testing.assert_array_equal(out.data, x)

    def test_against_triple_loop(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        b = np.array([[5.0], [6.0]])
        out = T.matmul(T.Tensor(a), T.Tensor(b))
        np.testing.assert_array_equal(out.data, np.array([[17.0], [39.0]]))
        np.testing.assert_array_equal(out.data, naive_matmul(a, b))

    def test_random_against_triple_loop(self):
        rng = Rng(7, "matmul-test")
        a = rng.normal(size=(5, 4))
        b = rng.normal(size=(4, 3))
        out = T.matmul(T.Tensor(a), T.Tensor(b))
        np.testing.assert_allclose(out.data, naive_matmul(a, b), rtol=0, atol=1e-12)

    def test_zero_case(self):
        a = np.zeros((3, 4))
        b = Rng(1, "zeros").normal(size=(4, 2))
        out = T.matmul(T.Tensor(a), T.Tensor(b))
        np.testing.assert_array_equal(out.data, np.zeros((3, 2)))

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            T.matmul(T.Tensor(np.zeros((2, 3))), T.Tensor(np.zeros((2, 3))))


class TestSoftmax:
    def test_uniform_logits(self):
        out = T.softmax(T.Tensor([0.0, 0.0, 0.0]))
        np.testing.assert_allclose(out.data, [1 / 3] * 3, atol=1e-15)

    def test_closed_form(self):
        out = T.softmax(T.Tensor([math.log(1), math.log(2), math.log(3)]))
        np.testing.assert_allclose(out.data, [1 / 6, 2 / 6, 3 / 6], atol=1e-15)

    @given(st.lists(st.floats(-50, 50), min_size=2, max_size=8), st.floats(-100, 100))
    @settings(max_examples=60, deadline=None)
    def test_shift_invariance_and_normalisation(self, xs, c):
        x = np.array(xs)
        a = T.softmax(T.Tensor(x)).data
        b = T.softmax(T.Tensor(x + c)).data
        np.testing.assert_allclose(a, b, atol=1e-12)
        assert abs(a.sum() - 1.0) < 1e-9
        assert (a >= 0).all()

    def test_axis_slices_sum_to_one(self):
        x = Rng(3, "softmax").normal(size=(4, 5, 6))
        for axis in range(3):
            s = T.softmax(T.Tensor(x), axis=axis).data.sum(axis=axis)
            np.testing.assert_allclose(s, 1.0, atol=1e-9)

    def test_non_finite_input(self):
        with pytest.raises(NumericError):
            T.softmax(T.Tensor([0.0, np.nan]))


class TestLayerNorm:
    def _ln(self, x, eps=1e-12):
        n = x.shape[-1]
        g = T.Tensor(np.ones(n))
        b = T.Tensor(np.zeros(n))
        return T.layer_norm(T.Tensor(x), g, b, eps=eps).data

    def test_constant_row(self):
        np.testing.assert_allclose(self._ln(np.array([5.0, 5.0, 5.0, 5.0]), eps=1e-5), 0.0, atol=1e-9)

    def test_zero_mean(self):
        x = Rng(11, "ln").normal(size=(6, 9))
        out = self._ln(x)
        np.testing.assert_allclose(out.mean(axis=-1), 0.0, atol=1e-9)
        np.testing.assert_allclose(out.var(axis=-1), 1.0, atol=1e-6)

    def test_two_point_closed_form(self):
        np.testing.assert_allclose(self._ln(np.array([1.0, 3.0]), eps=1e-15), [-1.0, 1.0], atol=1e-7)

    def test_empty_last_dim(self):
        with pytest.raises(ShapeError):
            self._ln(np.zeros((2, 0)))


class TestCrossEntropy:
    def test_perfect_prediction(self):
        logits = np.full((3, 5), -1e4)
        targets = np.array([1, 4, 2])
        logits[np.arange(3), targets] = 1e4
        loss = T.cross_entropy(T.Tensor(logits), targets, pad_id=0)
        assert abs(float(loss.data)) < 1e-12

    def test_uniform_logits(self):
        loss = T.cross_entropy(T.Tensor(np.zeros((4, 40))), np.array([0, 1, 2, 3]), pad_id=39)
        np.testing.assert_allclose(float(loss.data), math.log(40), atol=1e-12)

    def test_against_hand_log_softmax(self):
        rng = Rng(5, "ce")
        logits = rng.normal(size=(2, 5))
        targets = np.array([3, 1])
        # independent oracle: explicit log-softmax then pick
        expected = 0.0
        for i in range(2):
            row = logits[i]
            logz = math.log(sum(math.exp(v) for v in row))
            expected += -(row[targets[i]] - logz)
        expected /= 2
        loss = T.cross_entropy(T.Tensor(logits), targets, pad_id=0x7FFF)
        np.testing.assert_allclose(float(loss.data), expected, atol=1e-12)

    def test_pad_exclusion(self):
        rng = Rng(6, "ce-pad")
        logits = rng.normal(size=(4, 6))
        full = T.cross_entropy(T.Tensor(logits[:2]), np.array([1, 2]), pad_id=0)
        padded = T.cross_entropy(T.Tensor(logits), np.array([1, 2, 0, 0]), pad_id=0)
        np.testing.assert_allclose(float(full.data), float(padded.data), atol=1e-15)

    def test_all_padded(self):
        with pytest.raises(UsageError):
            T.cross_entropy(T.Tensor(np.zeros((2, 3))), np.array([9, 9]), pad_id=9)


class TestBackward:
    def test_sum_of_squares(self):
        x = T.Tensor([3.0], requires_grad=True)
        loss = T.sum_all(T.mul(x, x))
        loss.backward()
        np.testing.assert_allclose(x.grad, [6.0], atol=1e-15)

    def test_softmax_cross_entropy_identity(self):
        rng = Rng(9, "sce")
        logits = T.Tensor(rng.normal(size=(3, 7)), requires_grad=True)
        targets = np.array([2, 0, 5])
        loss = T.cross_entropy(logits, targets, pad_id=99)
        loss.backward()
        p = T.softmax(T.Tensor(logits.data), axis=1).data
        onehot = np.zeros_like(p)
        onehot[np.arange(3), targets] = 1.0
        np.testing.assert_allclose(logits.grad, (p - onehot) / 3, atol=1e-12)

    def test_non_scalar_backward(self):
        x = T.Tensor(np.zeros((2, 2)), requires_grad=True)
        with pytest.raises(UsageError):
            T.mul(x, 2.0).backward()

    def test_accumulation_without_reset(self):
        x = T.Tensor([2.0], requires_grad=True)
        for _ in range(2):
            T.sum_all(T.mul(x, x)).backward()
        np.testing.assert_allclose(x.grad, [8.0])
        x.zero_grad()
        T.sum_all(T.mul(x, x)).backward()
        np.testing.assert_allclose(x.grad, [4.0])

    def test_composed_graph_vs_finite_differences(self):
        # two dense layers with relu, layer norm and a softmax head
        rng = Rng(12, "fd")
        n_in, n_h, n_out = 4, 6, 3
        sizes = [n_in * n_h, n_h, n_h * n_out, n_out, n_h, n_h]
        flat = rng.normal(scale=0.5, size=sum(sizes))
        x0 = rng.normal(size=(5, n_in))
        tgt = np.array([0, 2, 1, 2, 0])

        def forward(theta):
            o = 0
            pieces = []
            for s in sizes:
                pieces.append(theta[o:o + s])
                o += s
            w1 = T.Tensor(pieces[0].reshape(n_in, n_h), requires_grad=True)
            b1 = T.Tensor(pieces[1], requires_grad=True)
            w2 = T.Tensor(pieces[2].reshape(n_h, n_out), requires_grad=True)
            b2 = T.Tensor(pieces[3], requires_grad=True)
            g = T.Tensor(pieces[4], requires_grad=True)
            bb = T.Tensor(pieces[5], requires_grad=True)
            h = T.relu(T.add(T.matmul(T.Tensor(x0), w1), b1))
            h = T.layer_norm(h, g, bb, eps=1e-5)
            logits = T.add(T.matmul(h, w2), b2)
            loss = T.cross_entropy(logits, tgt, pad_id=77)
            return loss, [w1, b1, w2, b2, g, bb]

        loss, params = forward(flat)
        loss.backward()
        analytic = np.concatenate([p.grad.reshape(-1) for p in params])

        def f(theta):
            with T.no_grad():
                return float(forward(theta)[0].data)

        h = 1e-5
        max_rel = 0.0
        for i in range(flat.size):
            up = flat.copy()
            up[i] += h
            dn = flat.copy()
            dn[i] -= h
            num = (f(up) - f(dn)) / (2 * h)
            rel = abs(num - analytic[i]) / max(abs(num), abs(analytic[i]), 1e-8)
            max_rel = max(max_rel, rel)
        assert max_rel < 1e-4

    def test_no_grad_builds_no_tape(self):
        x = T.Tensor([1.0, 2.0], requires_grad=True)
        with T.no_grad():
            y = T.mul(x, x)
        assert y._parents == ()


class TestPlumbingOps:
    def test_embedding_gather_and_scatter(self):
        w = T.Tensor(np.arange(12.0).reshape(4, 3), requires_grad=True)
        ids = np.array([[1, 1], [3, 0]])
        out = T.embedding(w, ids)
        assert out.data.shape == (2, 2, 3)
        T.sum_all(out).backward()
        expected = np.zeros((4, 3))
        expected[1] = 2.0
        expected[3] = 1.0
        expected[0] = 1.0
        np.testing.assert_array_equal(w.grad, expected)

    def test_gather_last(self):
        x = T.Tensor(np.arange(6.0).reshape(2, 3), requires_grad=True)
        out = T.gather_last(x, np.array([2, 0]))
        np.testing.assert_array_equal(out.data, [2.0, 3.0])
        T.sum_all(out).backward()
        np.testing.assert_array_equal(x.grad, [[0, 0, 1], [1, 0, 0]])

    def test_concat_roundtrip(self):
        a = T.Tensor(np.ones((2, 2)), requires_grad=True)
        b = T.Tensor(np.zeros((2, 3)), requires_grad=True)
        out = T.concat([a, b], axis=1)
        assert out.data.shape == (2, 5)
        T.sum_all(T.mul(out, np.array([[1, 2, 3, 4, 5], [6, 7, 8, 9, 10]], dtype=float))).backward()
        np.testing.assert_array_equal(a.grad, [[1, 2], [6, 7]])
        np.testing.assert_array_equal(b.grad, [[3, 4, 5], [8, 9, 10]])

    def test_invariants_of_tensor_views(self):
        t = T.Tensor(np.arange(6.0).reshape(2, 3))
        assert list(t.shape) == [2, 3]
        assert t.values.shape == (6,)
        assert math.prod(t.shape) == t.values.size
