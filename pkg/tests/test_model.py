"""Model contracts: init determinism, shapes, causality, the copy
mixture, teacher-forced loss semantics, and gradient fidelity against
finite differences."""

import math

import numpy as np
import pytest

from pastlab import model as M
from pastlab import tensor as T
from pastlab.errors import ConfigError, DataError, UsageError
from pastlab.gradcheck import grad_check
from pastlab.optim import AdamState, adam_step
from pastlab.rng import Rng

TINY = M.ModelConfig(vocab_size=10, n_layers_enc=1, n_layers_dec=1, n_heads=2,
                     d_model=8, d_ff=16, dropout=0.0, max_len=12)


def closed_form_count(cfg):
    """Independent parameter-count formula (enumerated by hand)."""
    d, f, v = cfg.d_model, cfg.d_ff, cfg.vocab_size
    attn = 4 * d * d + 4 * d
    ln = 2 * d
    ffn = 2 * d * f + f + d
    enc = attn + ffn + 2 * ln
    dec = 2 * attn + ffn + 3 * ln
    total = v * d + cfg.n_layers_enc * enc + cfg.n_layers_dec * dec + d * v + v
    if cfg.use_copy:
        total += 2 * d + 1
    return total


class TestInit:
    def test_deterministic_under_seed(self):
        a = M.init_params(TINY, Rng(3, "init"))
        b = M.init_params(TINY, Rng(3, "init"))
        assert np.array_equal(a.flat, b.flat)
        c = M.init_params(TINY, Rng(4, "init"))
        assert not np.array_equal(a.flat, c.flat)

    def test_param_count_matches_closed_form(self):
        cfg = M.ModelConfig(vocab_size=55)
        assert M.param_count(cfg) == closed_form_count(cfg) == 939_831
        copy_cfg = M.ModelConfig(vocab_size=55, use_copy=True)
        assert M.param_count(copy_cfg) == closed_form_count(copy_cfg) == 940_088
        assert M.init_params(copy_cfg, Rng(0)).flat.size == 940_088

    def test_layer_norm_gains_start_at_one(self):
        p = M.init_params(TINY, Rng(1))
        for name, t in p.tensors.items():
            if name.endswith("ln1.g") or name.endswith("ln2.g") or name.endswith("ln3.g"):
                assert np.all(t.data == 1.0)
            if name.endswith(".b1") or name.endswith(".bo") or name.endswith(".bqkv"):
                assert np.all(t.data == 0.0)

    def test_head_divisibility_enforced(self):
        with pytest.raises(ConfigError):
            M.ModelConfig(vocab_size=10, d_model=10, n_heads=4)


class TestEncode:
    def test_output_shape(self):
        p = M.init_params(TINY, Rng(2))
        mem = M.encode(p, [1, 4, 5, 2])
        assert mem.data.shape == (4, TINY.d_model)

    def test_eval_mode_deterministic(self):
        p = M.init_params(TINY, Rng(2))
        a = M.encode(p, [1, 4, 5, 2]).data
        b = M.encode(p, [1, 4, 5, 2]).data
        assert np.array_equal(a, b)

    def test_positional_encodings_break_permutation_symmetry(self):
        p = M.init_params(TINY, Rng(5))
        a = M.encode(p, [1, 4, 5, 2]).data
        b = M.encode(p, [1, 5, 4, 2]).data
        assert not np.allclose(a, b)

    def test_out_of_vocab_rejected(self):
        p = M.init_params(TINY, Rng(2))
        with pytest.raises(DataError):
            M.encode(p, [1, 99, 2])

    def test_too_long_rejected(self):
        p = M.init_params(TINY, Rng(2))
        with pytest.raises(DataError):
            M.encode(p, [1] * (TINY.max_len + 1))


class TestDecodeStep:
    def test_probs_sum_to_one(self):
        p = M.init_params(TINY, Rng(7))
        mem = M.encode(p, [1, 3, 2])
        dist = M.decode_step(p, mem, [1, 3, 2], [1, 4])
        assert abs(dist.probs.sum() - 1.0) < 1e-9
        assert dist.attention.shape == (TINY.n_heads, 3)
        np.testing.assert_allclose(dist.attention.sum(axis=1), 1.0, atol=1e-9)
        assert dist.p_gen is None

    def test_causality_against_teacher_forced_pass(self):
        p = M.init_params(TINY, Rng(8))
        src = [1, 3, 4, 2]
        mem = M.encode(p, src)
        full_prefix = [1, 5, 6, 7]
        step_probs = [
            M.decode_step(p, mem, src, full_prefix[: k + 1]).probs for k in range(len(full_prefix))
        ]
        src_arr = np.asarray([src])
        logits, _, _, _ = M.decode_batch(p, T.reshape(mem, (1, 4, TINY.d_model)),
                                         np.ones_like(src_arr, dtype=bool),
                                         np.asarray([full_prefix]))
        for k in range(len(full_prefix)):
            batch_probs = T.softmax(logits[0, k], axis=-1).data
            np.testing.assert_allclose(step_probs[k], batch_probs, atol=1e-12)

    def test_appending_tokens_does_not_change_earlier_steps(self):
        p = M.init_params(TINY, Rng(9))
        src = [1, 3, 2]
        mem = M.encode(p, src)
        short = M.decode_step(p, mem, src, [1, 4]).probs
        long = M.decode_step(p, mem, src, [1, 4, 5, 6])
        again_short = M.decode_step(p, mem, src, [1, 4]).probs
        np.testing.assert_allclose(short, again_short, atol=0)
        assert long.probs.shape == short.shape

    def test_empty_prefix_rejected(self):
        p = M.init_params(TINY, Rng(7))
        mem = M.encode(p, [1, 2])
        with pytest.raises(UsageError):
            M.decode_step(p, mem, [1, 2], [])

    def test_copy_model_exposes_gate(self):
        cfg_copy = M.ModelConfig(vocab_size=10, n_layers_enc=1, n_layers_dec=1,
                                 n_heads=2, d_model=8, d_ff=16, dropout=0.0,
                                 max_len=12, use_copy=True)
        p = M.init_params(cfg_copy, Rng(7))
        mem = M.encode(p, [1, 3, 2])
        dist = M.decode_step(p, mem, [1, 3, 2], [1, 4])
        assert 0.0 <= dist.p_gen <= 1.0
        assert abs(dist.probs.sum() - 1.0) < 1e-9


class TestPointerMix:
    def test_pure_generation(self):
        gen = np.array([0.1, 0.2, 0.3, 0.4])
        out = M.pointer_mix(gen, np.array([1.0]), [2], p_gen=1.0)
        np.testing.assert_allclose(out, gen)

    def test_pure_copy_single_token(self):
        gen = np.full(4, 0.25)
        out = M.pointer_mix(gen, np.array([1.0]), [3], p_gen=0.0)
        np.testing.assert_allclose(out, [0, 0, 0, 1.0])

    def test_hand_evaluated_mixture(self):
        gen = np.full(4, 0.25)
        out = M.pointer_mix(gen, np.array([0.25, 0.75]), [0, 1], p_gen=0.5)
        np.testing.assert_allclose(out, [0.25, 0.5, 0.125, 0.125])
        assert abs(out.sum() - 1.0) < 1e-12

    def test_repeated_source_tokens_pool_attention(self):
        gen = np.full(4, 0.25)
        out = M.pointer_mix(gen, np.array([0.5, 0.5]), [2, 2], p_gen=0.0)
        np.testing.assert_allclose(out, [0, 0, 1.0, 0])

    def test_is_distribution_property(self):
        rng = Rng(11, "mix")
        for _ in range(25):
            v = 6
            gen = rng.uniform(size=v)
            gen /= gen.sum()
            s = int(rng.integers(1, 5))
            attn = rng.uniform(size=s)
            attn /= attn.sum()
            src = rng.integers(0, v, size=s)
            out = M.pointer_mix(gen, attn, src, p_gen=float(rng.uniform()))
            assert abs(out.sum() - 1.0) < 1e-9
            assert (out >= 0).all()


class TestForwardLoss:
    def _toy_batch(self):
        return [([1, 3, 4, 2], [1, 4, 3, 2]), ([1, 5, 2], [1, 5, 5, 5, 2])]

    def test_loss_matches_per_example_oracle(self):
        p = M.init_params(TINY, Rng(13))
        batch = self._toy_batch()
        whole = float(M.forward_loss(p, batch).data)
        # per-example oracle: token-count-weighted mean of single-pair losses
        tot, count = 0.0, 0
        for pair in batch:
            n = len(pair[1]) - 1
            tot += float(M.forward_loss(p, [pair]).data) * n
            count += n
        np.testing.assert_allclose(whole, tot / count, atol=1e-12)

    def test_loss_invariant_to_pad_extension(self):
        p = M.init_params(TINY, Rng(13))
        batch = self._toy_batch()
        base = float(M.forward_loss(p, batch).data)
        padded = [(s + [0, 0], t + [0, 0, 0]) for s, t in batch]
        np.testing.assert_allclose(float(M.forward_loss(p, padded).data), base, atol=1e-12)

    def test_weighted_batch_equals_expanded_multiset(self):
        p = M.init_params(TINY, Rng(14))
        a, b = self._toy_batch()
        expanded = float(M.forward_loss(p, [a, a, a, b]).data)
        weighted = float(M.forward_loss(p, [a, b], weights=[3, 1]).data)
        np.testing.assert_allclose(weighted, expanded, atol=1e-12)

    def test_rigged_params_give_zero_loss(self):
        # force probability ~1 on token 4 everywhere via a huge output bias
        p = M.init_params(TINY, Rng(15))
        p["out.b"].data[:] = 0.0
        p["out.b"].data[4] = 1e4
        p["out.w"].data[:] = 0.0
        loss = float(M.forward_loss(p, [([1, 3, 2], [1, 4, 4, 4])]).data)
        assert loss < 1e-10

    def test_empty_batch_rejected(self):
        p = M.init_params(TINY, Rng(13))
        with pytest.raises(UsageError):
            M.forward_loss(p, [])

    def test_copy_loss_weighted_consistency(self):
        cfg = M.ModelConfig(vocab_size=10, n_layers_enc=1, n_layers_dec=1, n_heads=2,
                            d_model=8, d_ff=16, dropout=0.0, max_len=12, use_copy=True)
        p = M.init_params(cfg, Rng(16))
        a, b = self._toy_batch()
        expanded = float(M.forward_loss(p, [a, b, b]).data)
        weighted = float(M.forward_loss(p, [a, b], weights=[1, 2]).data)
        np.testing.assert_allclose(weighted, expanded, atol=1e-12)


class TestGradientFidelity:
    def _fd_check(self, cfg, seed):
        rng = Rng(seed, "fdmodel")
        batch = [([1, 3, 4, 2], [1, 4, 3, 2]), ([1, 5, 6, 2], [1, 6, 5, 2])]
        base = M.init_params(cfg, rng)

        def forward(theta):
            with T.no_grad():
                return float(M.forward_loss(M.ModelParams(cfg, theta.copy()), batch).data)

        params = M.ModelParams(cfg, base.flat.copy())
        loss = M.forward_loss(params, batch)
        loss.backward()
        report = grad_check(forward, params.flat, params.flat_grad, rng, n_coords=220)
        assert report.ok
        return report.max_rel_err

    def test_vanilla_tiny_transformer(self):
        assert self._fd_check(TINY, 21) < 1e-4

    def test_copy_tiny_transformer(self):
        cfg = M.ModelConfig(vocab_size=10, n_layers_enc=1, n_layers_dec=1, n_heads=2,
                            d_model=8, d_ff=16, dropout=0.0, max_len=12, use_copy=True)
        assert self._fd_check(cfg, 22) < 1e-4

    def test_dropout_violates_gradcheck_precondition(self):
        p = M.init_params(TINY._replace_dropout() if hasattr(TINY, "_replace_dropout") else
                          M.ModelConfig(vocab_size=10, n_layers_enc=1, n_layers_dec=1,
                                        n_heads=2, d_model=8, d_ff=16, dropout=0.5, max_len=12),
                          Rng(23))
        drop_rng = Rng(23, "dropout")

        def forward(theta):
            with T.no_grad():
                return float(M.forward_loss(M.ModelParams(p.cfg, theta.copy()),
                                            [([1, 3, 2], [1, 4, 2])],
                                            train_mode=True, rng=drop_rng).data)

        report = grad_check(forward, p.flat, np.zeros_like(p.flat), Rng(1))
        assert not report.ok
        assert "deterministic" in report.precondition_violation


class TestLearnability:
    def test_fifty_steps_halve_the_loss(self):
        cfg = M.ModelConfig(vocab_size=12, n_layers_enc=1, n_layers_dec=1, n_heads=4,
                            d_model=32, d_ff=64, dropout=0.0, max_len=16)
        rng = Rng(31, "smoke")
        p = M.init_params(cfg, rng.substream("init"))
        gen = rng.substream("data")
        batch = []
        for _ in range(20):
            body = list(gen.integers(3, cfg.vocab_size, size=4))
            batch.append(([1, *body, 2], [1, *body[::-1], 2]))
        state = AdamState.for_size(p.n_params)
        first = float(M.forward_loss(p, batch).data)
        for _ in range(50):
            p.zero_grad()
            loss = M.forward_loss(p, batch)
            loss.backward()
            adam_step(p.flat, p.flat_grad, state, lr=1e-3)
        last = float(M.forward_loss(p, batch).data)
        assert last <= 0.5 * first
