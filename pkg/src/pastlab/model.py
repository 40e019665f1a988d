"""Encoder-decoder transformer with an optional pointer-generator head.

Architecture: post-norm transformer (residual + dropout, then layer
norm), ReLU feed-forward blocks, fixed sinusoidal positional encodings,
one shared token-embedding matrix for both encoder and decoder inputs,
and an untied output projection.  The copy head gates between the
generation distribution and the final decoder layer's cross-attention
(averaged over heads) scattered onto source token ids.

All parameters live in one flat float64 buffer; each named tensor is a
contiguous view into it, which lets the optimizer update the whole model
with a handful of vectorized statements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import tensor as T
from .errors import ConfigError, DataError, UsageError
from .rng import Rng
from .tensor import Tensor

NEG_INF = -1e30


@dataclass(frozen=True)
class ModelConfig:
    vocab_size: int
    n_layers_enc: int = 2
    n_layers_dec: int = 2
    n_heads: int = 4
    d_model: int = 128
    d_ff: int = 512
    dropout: float = 0.1
    use_copy: bool = False
    max_len: int = 40
    tie_embeddings: bool = False

    def __post_init__(self):
        if self.d_model % self.n_heads != 0:
            raise ConfigError(f"d_model {self.d_model} not divisible by n_heads {self.n_heads}")
        if not 0.0 <= self.dropout < 1.0:
            raise ConfigError(f"dropout must lie in [0, 1), got {self.dropout}")
        if self.vocab_size < 4:
            raise ConfigError("vocab_size must cover Pad/Start/End plus payload tokens")

    @property
    def head_dim(self) -> int:
        return self.d_model // self.n_heads


def _shapes(cfg: ModelConfig):
    """Ordered (name, shape, xavier fan pair) for every learnable tensor.

    Fused qkv/kv blocks are initialised per logical projection, so the
    fan pair describes the logical [d, d] matrices.
    """
    d, f, v = cfg.d_model, cfg.d_ff, cfg.vocab_size
    out = []

    def attn_block(prefix, cross: bool):
        if cross:
            out.append((f"{prefix}.wq", (d, d), (d, d)))
            out.append((f"{prefix}.bq", (d,), None))
            out.append((f"{prefix}.wkv", (d, 2 * d), (d, d)))
            out.append((f"{prefix}.bkv", (2 * d,), None))
        else:
            out.append((f"{prefix}.wqkv", (d, 3 * d), (d, d)))
            out.append((f"{prefix}.bqkv", (3 * d,), None))
        out.append((f"{prefix}.wo", (d, d), (d, d)))
        out.append((f"{prefix}.bo", (d,), None))

    def ln(prefix):
        out.append((f"{prefix}.g", (d,), "ones"))
        out.append((f"{prefix}.b", (d,), None))

    def ffn(prefix):
        out.append((f"{prefix}.w1", (d, f), (d, f)))
        out.append((f"{prefix}.b1", (f,), None))
        out.append((f"{prefix}.w2", (f, d), (f, d)))
        out.append((f"{prefix}.b2", (d,), None))

    out.append(("emb.tok", (v, d), (v, d)))
    for i in range(cfg.n_layers_enc):
        attn_block(f"enc.{i}.attn", cross=False)
        ln(f"enc.{i}.ln1")
        ffn(f"enc.{i}.ffn")
        ln(f"enc.{i}.ln2")
    for i in range(cfg.n_layers_dec):
        attn_block(f"dec.{i}.self", cross=False)
        ln(f"dec.{i}.ln1")
        attn_block(f"dec.{i}.cross", cross=True)
        ln(f"dec.{i}.ln2")
        ffn(f"dec.{i}.ffn")
        ln(f"dec.{i}.ln3")
    if not cfg.tie_embeddings:
        out.append(("out.w", (d, v), (d, v)))
    out.append(("out.b", (v,), None))
    if cfg.use_copy:
        out.append(("copy.wg", (2 * d, 1), (2 * d, 1)))
        out.append(("copy.bg", (1,), None))
    return out


def param_count(cfg: ModelConfig) -> int:
    return sum(int(np.prod(shape)) for _, shape, _ in _shapes(cfg))


class ModelParams:
    """Named tensors over one flat buffer, plus the matching gradient buffer."""

    def __init__(self, cfg: ModelConfig, flat: np.ndarray):
        self.cfg = cfg
        self.flat = flat
        self.flat_grad = np.zeros_like(flat)
        self.tensors: dict[str, Tensor] = {}
        off = 0
        for name, shape, _ in _shapes(cfg):
            n = int(np.prod(shape))
            t = Tensor(flat[off:off + n].reshape(shape), requires_grad=True)
            t.grad = self.flat_grad[off:off + n].reshape(shape)
            self.tensors[name] = t
            off += n
        assert off == flat.size

    def __getitem__(self, name: str) -> Tensor:
        return self.tensors[name]

    @property
    def n_params(self) -> int:
        return self.flat.size

    def zero_grad(self) -> None:
        self.flat_grad[...] = 0.0

    def copy(self) -> "ModelParams":
        return ModelParams(self.cfg, self.flat.copy())

    def out_weight(self) -> Tensor:
        if self.cfg.tie_embeddings:
            return T.transpose(self.tensors["emb.tok"], (1, 0))
        return self.tensors["out.w"]


def init_params(cfg: ModelConfig, rng: Rng) -> ModelParams:
    """Xavier-uniform matrices, zero biases, unit layer-norm gains."""
    total = param_count(cfg)
    flat = np.zeros(total)
    off = 0
    for name, shape, fans in _shapes(cfg):
        n = int(np.prod(shape))
        view = flat[off:off + n].reshape(shape)
        if fans == "ones":
            view[...] = 1.0
        elif fans is not None:
            fan_in, fan_out = fans
            a = math.sqrt(6.0 / (fan_in + fan_out))
            if shape[-1] != fan_out:  # fused block: draw each logical matrix in order
                k = shape[-1] // fan_out
                for j in range(k):
                    view[:, j * fan_out:(j + 1) * fan_out] = rng.uniform(-a, a, (fan_in, fan_out))
            else:
                view[...] = rng.uniform(-a, a, shape)
        off += n
    return ModelParams(cfg, flat)


@dataclass
class StepDistribution:
    probs: np.ndarray                 # [vocab]
    attention: np.ndarray | None      # [heads, src_len] final cross-attention
    p_gen: float | None = None


def sinusoidal_encoding(max_len: int, d_model: int) -> np.ndarray:
    pos = np.arange(max_len)[:, None]
    dim = np.arange(0, d_model, 2)[None, :]
    angle = pos / np.power(10000.0, dim / d_model)
    pe = np.zeros((max_len, d_model))
    pe[:, 0::2] = np.sin(angle)
    pe[:, 1::2] = np.cos(angle)
    return pe


# ---------------------------------------------------------------------------
# batched forward passes
# ---------------------------------------------------------------------------


def _project(x: Tensor, w: Tensor, b: Tensor) -> Tensor:
    return T.add(T.matmul(x, w), b)


def _heads(x: Tensor, batch: int, seqlen: int, n_heads: int, head_dim: int) -> Tensor:
    return T.transpose(T.reshape(x, (batch, seqlen, n_heads, head_dim)), (0, 2, 1, 3))


def _merge_heads(x: Tensor, batch: int, seqlen: int, d_model: int) -> Tensor:
    return T.reshape(T.transpose(x, (0, 2, 1, 3)), (batch * seqlen, d_model))


def _attention(q: Tensor, k: Tensor, v: Tensor, mask_bias, head_dim: int):
    scores = T.mul(T.matmul(q, T.transpose(k, (0, 1, 3, 2))), 1.0 / math.sqrt(head_dim))
    if mask_bias is not None:
        scores = T.add(scores, mask_bias)
    attn = T.softmax(scores, axis=-1)
    return T.matmul(attn, v), attn


def _sublayer(x: Tensor, h: Tensor, gain: Tensor, bias: Tensor, p_drop: float, train: bool, rng) -> Tensor:
    if train and p_drop > 0.0:
        h = T.dropout(h, p_drop, rng)
    return T.layer_norm(T.add(x, h), gain, bias)


def _embed(p: ModelParams, ids: np.ndarray, train: bool, rng) -> Tensor:
    cfg = p.cfg
    if ids.max(initial=0) >= cfg.vocab_size or ids.min(initial=0) < 0:
        raise DataError("token id outside the model vocabulary")
    if ids.shape[1] > cfg.max_len:
        raise DataError(f"sequence length {ids.shape[1]} exceeds max_len {cfg.max_len}")
    x = T.mul(T.embedding(p["emb.tok"], ids), math.sqrt(cfg.d_model))
    x = T.add(x, sinusoidal_encoding(ids.shape[1], cfg.d_model)[None, :, :])
    if train and cfg.dropout > 0.0:
        x = T.dropout(x, cfg.dropout, rng)
    return x


def encode_batch(p: ModelParams, src: np.ndarray, src_mask: np.ndarray, train: bool = False, rng: Rng | None = None) -> Tensor:
    """Contextual encodings [B, S, d] for padded source batch ``src``;
    ``src_mask`` is True on real positions."""
    cfg = p.cfg
    b, s = src.shape
    x = T.reshape(_embed(p, src, train, rng), (b * s, cfg.d_model))
    key_bias = np.where(src_mask, 0.0, NEG_INF)[:, None, None, :]
    for i in range(cfg.n_layers_enc):
        pre = f"enc.{i}"
        qkv = _project(x, p[f"{pre}.attn.wqkv"], p[f"{pre}.attn.bqkv"])
        d = cfg.d_model
        q = _heads(qkv[:, :d], b, s, cfg.n_heads, cfg.head_dim)
        k = _heads(qkv[:, d:2 * d], b, s, cfg.n_heads, cfg.head_dim)
        v = _heads(qkv[:, 2 * d:], b, s, cfg.n_heads, cfg.head_dim)
        ctx, _ = _attention(q, k, v, key_bias, cfg.head_dim)
        h = _project(_merge_heads(ctx, b, s, d), p[f"{pre}.attn.wo"], p[f"{pre}.attn.bo"])
        x = _sublayer(x, h, p[f"{pre}.ln1.g"], p[f"{pre}.ln1.b"], cfg.dropout, train, rng)
        h = _project(T.relu(_project(x, p[f"{pre}.ffn.w1"], p[f"{pre}.ffn.b1"])),
                     p[f"{pre}.ffn.w2"], p[f"{pre}.ffn.b2"])
        x = _sublayer(x, h, p[f"{pre}.ln2.g"], p[f"{pre}.ln2.b"], cfg.dropout, train, rng)
    return T.reshape(x, (b, s, cfg.d_model))


def decode_batch(
    p: ModelParams,
    memory: Tensor,
    src_mask: np.ndarray,
    tgt_in: np.ndarray,
    train: bool = False,
    rng: Rng | None = None,
):
    """Teacher-forced decoder pass.

    Returns (logits [B,T,V], avg cross-attention Tensor [B,T,S] from the
    final layer, per-head attention array [B,H,T,S], decoder output
    Tensor [B,T,d]).
    """
    cfg = p.cfg
    b, t = tgt_in.shape
    s = memory.data.shape[1]
    d = cfg.d_model
    x = T.reshape(_embed(p, tgt_in, train, rng), (b * t, d))
    mem2d = T.reshape(memory, (b * s, d))
    causal = np.triu(np.full((t, t), NEG_INF), k=1)[None, None, :, :]
    key_bias = np.where(src_mask, 0.0, NEG_INF)[:, None, None, :]
    attn = None
    for i in range(cfg.n_layers_dec):
        pre = f"dec.{i}"
        qkv = _project(x, p[f"{pre}.self.wqkv"], p[f"{pre}.self.bqkv"])
        q = _heads(qkv[:, :d], b, t, cfg.n_heads, cfg.head_dim)
        k = _heads(qkv[:, d:2 * d], b, t, cfg.n_heads, cfg.head_dim)
        v = _heads(qkv[:, 2 * d:], b, t, cfg.n_heads, cfg.head_dim)
        ctx, _ = _attention(q, k, v, causal, cfg.head_dim)
        h = _project(_merge_heads(ctx, b, t, d), p[f"{pre}.self.wo"], p[f"{pre}.self.bo"])
        x = _sublayer(x, h, p[f"{pre}.ln1.g"], p[f"{pre}.ln1.b"], cfg.dropout, train, rng)

        q = _heads(_project(x, p[f"{pre}.cross.wq"], p[f"{pre}.cross.bq"]), b, t, cfg.n_heads, cfg.head_dim)
        kv = _project(mem2d, p[f"{pre}.cross.wkv"], p[f"{pre}.cross.bkv"])
        k = _heads(kv[:, :d], b, s, cfg.n_heads, cfg.head_dim)
        v = _heads(kv[:, d:], b, s, cfg.n_heads, cfg.head_dim)
        ctx, attn = _attention(q, k, v, key_bias, cfg.head_dim)
        h = _project(_merge_heads(ctx, b, t, d), p[f"{pre}.cross.wo"], p[f"{pre}.cross.bo"])
        x = _sublayer(x, h, p[f"{pre}.ln2.g"], p[f"{pre}.ln2.b"], cfg.dropout, train, rng)

        h = _project(T.relu(_project(x, p[f"{pre}.ffn.w1"], p[f"{pre}.ffn.b1"])),
                     p[f"{pre}.ffn.w2"], p[f"{pre}.ffn.b2"])
        x = _sublayer(x, h, p[f"{pre}.ln3.g"], p[f"{pre}.ln3.b"], cfg.dropout, train, rng)

    logits = T.reshape(_project(x, p.out_weight(), p["out.b"]), (b, t, cfg.vocab_size))
    attn_avg = T.mul(T.sum_axis(attn, 1), 1.0 / cfg.n_heads)  # [B, T, S]
    dec_out = T.reshape(x, (b, t, d))
    return logits, attn_avg, attn.data, dec_out


def _copy_mix_probs(p: ModelParams, logits: Tensor, attn_avg: Tensor, dec_out: Tensor,
                    memory: Tensor, src: np.ndarray, src_mask: np.ndarray):
    """Mixture p_gen * softmax(logits) + (1 - p_gen) * scatter(attention)."""
    cfg = p.cfg
    b, t, v = logits.data.shape
    gen = T.softmax(logits, axis=-1)
    context = T.matmul(attn_avg, memory)                      # [B,T,d]
    gate_in = T.concat([dec_out, context], axis=2)            # [B,T,2d]
    p_gen = T.sigmoid(T.add(T.matmul(T.reshape(gate_in, (b * t, 2 * cfg.d_model)), p["copy.wg"]),
                            p["copy.bg"]))
    p_gen = T.reshape(p_gen, (b, t, 1))
    onehot = np.zeros((b, src.shape[1], v))
    rows = np.repeat(np.arange(b), src.shape[1])
    onehot[rows, np.tile(np.arange(src.shape[1]), b), src.reshape(-1)] = 1.0
    onehot *= src_mask[:, :, None]
    copy_dist = T.matmul(attn_avg, onehot)                    # [B,T,V]
    mix = T.add(T.mul(p_gen, gen), T.mul(T.add(T.mul(p_gen, -1.0), 1.0), copy_dist))
    return mix, p_gen


def pointer_mix(gen_probs: np.ndarray, attention: np.ndarray, src_tokens, p_gen: float) -> np.ndarray:
    """out[w] = p_gen * gen[w] + (1 - p_gen) * sum of attention on source
    positions holding token w.  Inputs must already be normalised."""
    gen_probs = np.asarray(gen_probs, dtype=np.float64)
    attention = np.asarray(attention, dtype=np.float64)
    src_tokens = np.asarray(src_tokens)
    if not 0.0 <= p_gen <= 1.0:
        raise UsageError(f"p_gen must lie in [0,1], got {p_gen}")
    if len(src_tokens) != len(attention):
        raise UsageError("attention length must match the source length")
    if abs(gen_probs.sum() - 1.0) > 1e-6 or abs(attention.sum() - 1.0) > 1e-6:
        raise UsageError("pointer_mix expects normalised inputs")
    out = p_gen * gen_probs
    np.add.at(out, src_tokens, (1.0 - p_gen) * attention)
    return out


# ---------------------------------------------------------------------------
# public single-sequence surface
# ---------------------------------------------------------------------------


def encode(p: ModelParams, src_tokens, train_mode: bool = False, rng: Rng | None = None) -> Tensor:
    """Memory [len, d] for one source sequence."""
    src = np.asarray([list(src_tokens)])
    mask = np.ones_like(src, dtype=bool)
    if train_mode and rng is None:
        raise UsageError("train_mode needs an rng for dropout")
    mem = encode_batch(p, src, mask, train_mode, rng)
    return T.reshape(mem, (src.shape[1], p.cfg.d_model))


def decode_step(
    p: ModelParams,
    memory: Tensor,
    src_tokens,
    prefix,
    train_mode: bool = False,
    rng: Rng | None = None,
    start_id: int = 1,
) -> StepDistribution:
    """Next-token distribution after the full ``prefix`` (which must begin
    with the Start token)."""
    prefix = list(prefix)
    if not prefix:
        raise UsageError("decode_step needs a non-empty prefix")
    if prefix[0] != start_id:
        raise UsageError("prefix must begin with the Start token")
    if train_mode and rng is None:
        raise UsageError("train_mode needs an rng for dropout")
    src = np.asarray([list(src_tokens)])
    mask = np.ones_like(src, dtype=bool)
    mem = T.reshape(memory, (1, memory.data.shape[0], p.cfg.d_model))
    tgt_in = np.asarray([prefix])
    logits, attn_avg, attn_heads, dec_out = decode_batch(p, mem, mask, tgt_in, train_mode, rng)
    last = len(prefix) - 1
    if p.cfg.use_copy:
        mix, p_gen = _copy_mix_probs(p, logits, attn_avg, dec_out, mem, src, mask)
        return StepDistribution(
            probs=mix.data[0, last].copy(),
            attention=attn_heads[0, :, last, :].copy(),
            p_gen=float(p_gen.data[0, last, 0]),
        )
    probs = T.softmax(logits[0, last], axis=-1)
    return StepDistribution(probs=probs.data.copy(), attention=attn_heads[0, :, last, :].copy(), p_gen=None)


# ---------------------------------------------------------------------------
# training loss
# ---------------------------------------------------------------------------


def pad_batch(seqs, pad_id: int) -> np.ndarray:
    width = max(len(s) for s in seqs)
    out = np.full((len(seqs), width), pad_id, dtype=np.int64)
    for i, s in enumerate(seqs):
        out[i, : len(s)] = s
    return out


def forward_loss(
    p: ModelParams,
    batch,
    train_mode: bool = False,
    rng: Rng | None = None,
    pad_id: int = 0,
    weights=None,
) -> Tensor:
    """Teacher-forced mean token cross-entropy over non-pad positions.

    ``batch`` is a sequence of (src ids, tgt ids) pairs; targets carry
    Start ... End.  ``weights`` optionally gives each pair an integer
    multiplicity, scoring a run-length-compressed batch exactly as its
    expanded multiset.
    """
    if len(batch) == 0:
        raise UsageError("forward_loss needs a non-empty batch")
    if train_mode and rng is None:
        raise UsageError("train_mode needs an rng for dropout")
    srcs = [s for s, _ in batch]
    tgts = [t for _, t in batch]
    if any(len(t) < 2 for t in tgts):
        raise UsageError("targets must contain Start and End")
    src = pad_batch(srcs, pad_id)
    tgt = pad_batch(tgts, pad_id)
    src_mask = src != pad_id
    tgt_in = tgt[:, :-1]
    tgt_out = tgt[:, 1:]
    # a padded Start row is still pad for loss purposes: mask by tgt_out
    memory = encode_batch(p, src, src_mask, train_mode, rng)
    logits, attn_avg, _, dec_out = decode_batch(p, memory, src_mask, tgt_in, train_mode, rng)
    b, t, v = logits.data.shape
    if weights is not None:
        w_tok = np.repeat(np.asarray(weights, dtype=np.float64), t)
    else:
        w_tok = None
    if not p.cfg.use_copy:
        return T.cross_entropy(T.reshape(logits, (b * t, v)), tgt_out.reshape(-1), pad_id, weights=w_tok)
    mix, _ = _copy_mix_probs(p, logits, attn_avg, dec_out, memory, src, src_mask)
    picked = T.gather_last(T.reshape(mix, (b * t, v)), np.where(tgt_out.reshape(-1) == pad_id, 0, tgt_out.reshape(-1)))
    mask = (tgt_out.reshape(-1) != pad_id).astype(np.float64)
    if w_tok is not None:
        mask = mask * w_tok
    count = mask.sum()
    if count == 0:
        raise UsageError("forward_loss: every target position is padding")
    nll = T.mul(T.log(T.add(picked, 1e-12)), -1.0)
    return T.mul(T.sum_all(T.mul(nll, mask)), 1.0 / count)
