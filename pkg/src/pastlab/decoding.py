"""Inference strategies: beam search, top-k ancestral sampling,
gold-label-forced decoding, and label stripping.

Beam scoring is length-unnormalized log-probability.  Completed
hypotheses are retired (never extended).  Final ordering breaks score
ties by earlier completion, then lexicographic token ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import model as M
from . import tensor as T
from .errors import UsageError
from .lexicon import (
    CLASS_FROM_LABEL_TOKEN,
    END,
    PAD,
    REGULARITY_TOKENS,
    START,
    LabelScheme,
    Vocab,
    n_label_positions,
)
from .rng import Rng

PAD_ID, START_ID, END_ID = 0, 1, 2


@dataclass(frozen=True)
class Hypothesis:
    tokens: tuple           # Start ... End (or truncated at max_len)
    log_prob: float
    truncated: bool = False

    @property
    def completed(self) -> bool:
        return not self.truncated


@dataclass(frozen=True)
class DecodeConfig:
    beam_size: int = 5
    k: int = 5
    n_samples: int = 5
    max_len: int = 24

    def __post_init__(self):
        if self.beam_size < 1 or self.k < 1 or self.n_samples < 1:
            raise UsageError("beam_size, k and n_samples must all be >= 1")
        if self.max_len < 3:
            raise UsageError("max_len must allow Start, one token, End")


def max_len_for(max_target_len: int) -> int:
    """Default decoding budget: Start/End plus the longest training
    target plus a 4-token margin."""
    return 2 + max_target_len + 4


def _log_probs_at_last(params, memory, src, src_mask, prefixes) -> np.ndarray:
    """log P(next token) for each padded prefix row; prefixes are ragged."""
    lens = np.array([len(p) for p in prefixes])
    tgt_in = M.pad_batch(prefixes, PAD_ID)
    logits, attn_avg, _, dec_out = M.decode_batch(params, memory, src_mask, tgt_in)
    rows = np.arange(len(prefixes))
    if params.cfg.use_copy:
        mix, _ = M._copy_mix_probs(params, logits, attn_avg, dec_out, memory, src, src_mask)
        probs = mix.data[rows, lens - 1]
        return np.log(np.maximum(probs, 1e-300))
    step_logits = logits.data[rows, lens - 1]
    shifted = step_logits - step_logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


def _finish_order(h: Hypothesis):
    return (-h.log_prob, h.truncated, len(h.tokens), h.tokens)


def beam_search_group(params, srcs, cfg: DecodeConfig, prefix_ids=None, prefix_score_zero=True):
    """Beam search over a group of sources in one batched pass.

    ``prefix_ids`` optionally gives per-source forced prefixes (token ids
    after Start) that are clamped with probability one.
    Returns one sorted hypothesis list per source.
    """
    n = len(srcs)
    src_arr = M.pad_batch(srcs, PAD_ID)
    src_mask = src_arr != PAD_ID
    with T.no_grad():
        memory_all = M.encode_batch(params, src_arr, src_mask)
        beams = []
        for i in range(n):
            start = [START_ID] + list(prefix_ids[i] if prefix_ids is not None else [])
            beams.append([(tuple(start), 0.0)])
        completed: list[list[Hypothesis]] = [[] for _ in range(n)]
        while True:
            rows, row_src = [], []
            for i, beam in enumerate(beams):
                for prefix, score in beam:
                    rows.append((i, prefix, score))
                    row_src.append(i)
            if not rows:
                break
            row_src = np.asarray(row_src)
            mem = T.Tensor(memory_all.data[row_src])
            logp = _log_probs_at_last(
                params, mem, src_arr[row_src], src_mask[row_src], [r[1] for r in rows]
            )
            per_source: list[list] = [[] for _ in range(n)]
            for (i, prefix, score), lp in zip(rows, logp):
                per_source[i].append((prefix, score, lp))
            new_beams = [[] for _ in range(n)]
            for i, cands in enumerate(per_source):
                if not cands:
                    continue
                pool = []
                for prefix, score, lp in cands:
                    order = np.argsort(lp, kind="stable")[::-1][: cfg.beam_size]
                    for tok in order:
                        pool.append((score + lp[tok], prefix + (int(tok),)))
                pool.sort(key=lambda c: (-c[0], c[1]))
                kept = 0
                for cand_score, cand_prefix in pool:
                    if kept >= cfg.beam_size:
                        break
                    if cand_prefix[-1] == END_ID:
                        completed[i].append(Hypothesis(cand_prefix, cand_score))
                    elif len(cand_prefix) >= cfg.max_len:
                        completed[i].append(Hypothesis(cand_prefix, cand_score, truncated=True))
                    else:
                        new_beams[i].append((cand_prefix, cand_score))
                    kept += 1
                # once enough hypotheses are retired, stop extending losers
                if completed[i]:
                    best_done = max(h.log_prob for h in completed[i])
                    if len(completed[i]) >= cfg.beam_size:
                        worst_kept = sorted(completed[i], key=_finish_order)[cfg.beam_size - 1].log_prob
                        new_beams[i] = [b for b in new_beams[i] if b[1] > worst_kept]
            beams = new_beams
    results = []
    for i in range(n):
        hyps = sorted(completed[i], key=_finish_order)[: cfg.beam_size]
        results.append(hyps)
    return results


def beam_search(params, src, cfg: DecodeConfig) -> list:
    """Standard beam search for one source; sorted by log_prob descending."""
    return beam_search_group(params, [list(src)], cfg)[0]


def force_label_decode(params, src, gold_label_ids, cfg: DecodeConfig) -> Hypothesis:
    """Clamp the post-Start label positions to the gold label tokens and
    beam-search the phoneme payload.  Forced tokens contribute zero
    log-probability."""
    gold = list(gold_label_ids)
    if not gold:
        raise UsageError("force_label_decode needs at least one gold label token")
    hyps = beam_search_group(params, [list(src)], cfg, prefix_ids=[gold])[0]
    if not hyps:
        raise UsageError("beam search returned no hypotheses")
    return hyps[0]


def sample_topk(params, src, cfg: DecodeConfig, rng: Rng) -> Hypothesis:
    """Ancestral sampling restricted to the k most probable tokens at
    each step (renormalized); bit-reproducible under the rng."""
    if cfg.k > params.cfg.vocab_size:
        raise UsageError("top-k k exceeds the vocabulary size")
    src_list = [list(src)]
    src_arr = M.pad_batch(src_list, PAD_ID)
    src_mask = src_arr != PAD_ID
    with T.no_grad():
        memory = M.encode_batch(params, src_arr, src_mask)
        prefix = (START_ID,)
        score = 0.0
        while True:
            logp = _log_probs_at_last(params, memory, src_arr, src_mask, [prefix])[0]
            order = np.lexsort((np.arange(len(logp)), -logp))[: cfg.k]
            probs = np.exp(logp[order])
            probs = probs / probs.sum()
            choice = order[rng.pick_index(probs)]
            score += float(logp[choice])
            prefix = prefix + (int(choice),)
            if choice == END_ID:
                return Hypothesis(prefix, score)
            if len(prefix) >= cfg.max_len:
                return Hypothesis(prefix, score, truncated=True)


@dataclass(frozen=True)
class StrippedOutput:
    labels: tuple
    phonemes: tuple
    malformed: bool = False
    reason: str = ""


def strip_labels(hyp: Hypothesis, scheme: LabelScheme, vocab: Vocab) -> StrippedOutput:
    """Separate label tokens from the phoneme payload; Start/End removed.

    A missing or misplaced label token yields a malformed-output record
    (scored incorrect downstream) rather than an exception.
    """
    scheme = LabelScheme(scheme)
    toks = vocab.decode_all(hyp.tokens)
    if not toks or toks[0] != START:
        return StrippedOutput((), (), True, "missing Start")
    body = toks[1:]
    if body and body[-1] == END:
        body = body[:-1]
    elif hyp.truncated:
        return StrippedOutput((), tuple(body), True, "truncated before End")
    if any(t in (START, END, PAD) for t in body):
        return StrippedOutput((), (), True, "reserved token inside payload")
    n_labels = n_label_positions(scheme)
    labels = tuple(body[:n_labels])
    payload = tuple(body[n_labels:])
    if len(labels) < n_labels:
        return StrippedOutput(labels, payload, True, "output shorter than the label header")
    for pos, lab in enumerate(labels):
        wants_regularity = scheme in (LabelScheme.label_reg, LabelScheme.label_2) and pos == 0
        if wants_regularity and lab not in REGULARITY_TOKENS:
            return StrippedOutput(labels, payload, True, f"expected a regularity label, got {lab!r}")
        if not wants_regularity and lab not in CLASS_FROM_LABEL_TOKEN:
            return StrippedOutput(labels, payload, True, f"expected a verb-class label, got {lab!r}")
    if any(t in REGULARITY_TOKENS or t in CLASS_FROM_LABEL_TOKEN for t in payload):
        return StrippedOutput(labels, payload, True, "label token inside the phoneme payload")
    return StrippedOutput(labels, payload, False)
