"""Run configuration and the per-seed training loop.

Defaults mirror the experiment setup exactly: 2+2 layers, 4 heads,
d_model 128, d_ff 512, dropout 0.1, Adam with the inverse-square-root
warmup schedule, 30 epochs with batch size 32/64/128 for type-based /
token_irr / token_both data, and (when resampling) batch size 8 over 100
epochs with an 80-20 split.  After every epoch the dev regular and
irregular exact-match accuracies are computed with beam search and their
mean selects the checkpoint (ties keep the earlier epoch).

Training batches are run-length compressed: duplicate (src, tgt) pairs
inside one batch are collapsed to a single weighted row, which scores
and differentiates exactly like the expanded multiset.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from . import tensor as T
from .checkpoint import load_checkpoint, save_checkpoint
from .datasets import (
    DatasetKind,
    ResampleMethod,
    TrainingSet,
    build_training_set,
    resample_epoch,
    split_train_dev,
)
from .decoding import DecodeConfig, beam_search_group, max_len_for, strip_labels
from .errors import NumericError, UsageError
from .lexicon import (
    LabelScheme,
    Vocab,
    build_vocab,
    encode_example,
    load_lexicon,
    load_test_set,
)
from .model import ModelConfig, ModelParams, forward_loss, init_params
from .optim import AdamState, ScheduleConfig, adam_step, lr_at
from .rng import Rng

DATA_DIR = Path(__file__).resolve().parent / "data"

BATCH_DEFAULTS = {
    DatasetKind.type_reg: 32,
    DatasetKind.type_irr: 32,
    DatasetKind.token_irr: 64,
    DatasetKind.token_both: 128,
}


@dataclass
class RunConfig:
    kind: DatasetKind = DatasetKind.type_irr
    scheme: LabelScheme = LabelScheme.base
    use_copy: bool = False
    resample: ResampleMethod = ResampleMethod.none
    seeds: tuple = (1, 2, 3, 4, 5)
    epochs: int | None = None
    batch_size: int | None = None
    dev_fraction: float | None = None
    lexicon_path: str | None = None
    test_set_path: str | None = None
    nonce_path: str | None = None
    out_dir: str = "runs"
    # architecture / optimizer
    n_layers_enc: int = 2
    n_layers_dec: int = 2
    n_heads: int = 4
    d_model: int = 128
    d_ff: int = 512
    dropout: float = 0.1
    warmup_steps: int = 400
    beta1: float = 0.9
    beta2: float = 0.98
    epsilon: float = 1e-9
    # decoding
    beam_size: int = 5
    topk_k: int = 5
    n_samples: int = 5

    def resolved(self) -> "RunConfig":
        kind = DatasetKind(self.kind)
        resampling = ResampleMethod(self.resample) != ResampleMethod.none
        out = RunConfig(**{**asdict(self), **dict(
            kind=kind,
            scheme=LabelScheme(self.scheme),
            resample=ResampleMethod(self.resample),
            seeds=tuple(int(s) for s in self.seeds),
            epochs=self.epochs if self.epochs is not None else (100 if resampling else 30),
            batch_size=self.batch_size if self.batch_size is not None else (
                8 if resampling else BATCH_DEFAULTS[kind]),
            dev_fraction=self.dev_fraction if self.dev_fraction is not None else (
                0.2 if resampling else 0.1),
            lexicon_path=str(self.lexicon_path or DATA_DIR / "lexicon.tsv"),
            test_set_path=str(self.test_set_path or DATA_DIR / "test_verbs.txt"),
            nonce_path=str(self.nonce_path or DATA_DIR / "nonce.tsv"),
        )})
        return out

    @property
    def run_id(self) -> str:
        parts = [DatasetKind(self.kind).value, LabelScheme(self.scheme).value,
                 "copy" if self.use_copy else "van"]
        if ResampleMethod(self.resample) != ResampleMethod.none:
            parts.append(ResampleMethod(self.resample).value)
        return "-".join(parts)

    def to_jsonable(self) -> dict:
        d = asdict(self)
        d["kind"] = DatasetKind(self.kind).value
        d["scheme"] = LabelScheme(self.scheme).value
        d["resample"] = ResampleMethod(self.resample).value
        d["seeds"] = list(self.seeds)
        return d


def _sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass
class SeedResult:
    seed: int
    best_epoch: int
    dev_reg_acc: float
    dev_irr_acc: float
    checkpoint: str
    steps: int
    final_train_loss: float
    wall_clock_s: float


@dataclass
class RunManifest:
    run_id: str
    config: dict
    code_version: str
    input_digests: dict
    per_seed: list
    wall_clock_s: float

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(asdict(self), indent=2, sort_keys=True) + "\n",
                              encoding="utf-8")

    @classmethod
    def load(cls, path) -> "RunManifest":
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        raw["per_seed"] = [SeedResult(**s) for s in raw["per_seed"]]
        return cls(**raw)

    def seed_result(self, seed: int) -> SeedResult:
        for s in self.per_seed:
            if s.seed == seed:
                return s
        raise UsageError(f"manifest has no seed {seed}")


@dataclass
class _SeedData:
    vocab: Vocab
    train: TrainingSet
    dev: TrainingSet
    dev_strata: dict         # "reg"/"irreg" -> [VerbEntry]
    ex_index: dict           # (lemma, past_index) -> example id
    ex_pairs: list           # example id -> (src ids, tgt ids)
    decode_cfg: DecodeConfig


def _prepare_seed_data(cfg: RunConfig, entries, test_lemmas, rng: Rng) -> _SeedData:
    held_out = set(test_lemmas)
    train_entries = [e for e in entries if e.lemma_orth not in held_out]
    vocab = build_vocab(entries, schemes=(cfg.scheme,))
    ts = build_training_set(train_entries, cfg.kind)
    train, dev = split_train_dev(ts, cfg.dev_fraction, rng)
    dev_strata = {"reg": [], "irreg": []}
    strat_of = {}
    for ex in dev.examples:
        key = ex.entry.lemma_orth
        if key not in strat_of or ex.regularity == "irreg":
            strat_of[key] = ("irreg" if ex.regularity == "irreg" else strat_of.get(key, "reg"), ex.entry)
    for key, (strat, entry) in strat_of.items():
        dev_strata[strat].append(entry)
    ex_index, ex_pairs = {}, []
    for ex in ts.examples:
        key = (ex.entry.lemma_orth, ex.past_index)
        if key not in ex_index:
            ex_index[key] = len(ex_pairs)
            ex_pairs.append(encode_example(ex.entry, ex.past_index, cfg.scheme, vocab))
    max_tgt = max(len(t) for _, t in ex_pairs)
    decode_cfg = DecodeConfig(beam_size=cfg.beam_size, k=cfg.topk_k,
                              n_samples=cfg.n_samples, max_len=max_len_for(max_tgt - 2))
    return _SeedData(vocab, train, dev, dev_strata, ex_index, ex_pairs, decode_cfg)


def _token_stream(data: _SeedData, ts: TrainingSet) -> np.ndarray:
    ids, counts = [], []
    for ex in ts.examples:
        ids.append(data.ex_index[(ex.entry.lemma_orth, ex.past_index)])
        counts.append(ex.count)
    return np.repeat(np.asarray(ids, dtype=np.int64), np.asarray(counts, dtype=np.int64))


def _length_partition(batch, counts, min_saving: float = 0.12):
    """Split a deduped batch into at most two length groups when that
    shrinks the padded token area enough to pay for the second pass.
    Splitting is exact: the combined loss below reweights each group by
    its non-pad target-token count."""
    n = len(batch)
    if n < 8:
        return [(batch, counts)]
    order = sorted(range(n), key=lambda i: (len(batch[i][1]), len(batch[i][0])))
    s_len = np.array([len(batch[i][0]) for i in order])
    t_len = np.array([len(batch[i][1]) for i in order])
    pre_s = np.maximum.accumulate(s_len)
    pre_t = np.maximum.accumulate(t_len)
    suf_s = np.maximum.accumulate(s_len[::-1])[::-1]
    suf_t = np.maximum.accumulate(t_len[::-1])[::-1]
    whole = n * (pre_s[-1] + pre_t[-1])
    best_k, best_cost = 0, whole
    for k in range(4, n - 3):
        cost = k * (pre_s[k - 1] + pre_t[k - 1]) + (n - k) * (suf_s[k] + suf_t[k])
        if cost < best_cost:
            best_cost, best_k = cost, k
    if best_k == 0 or (whole - best_cost) / whole < min_saving:
        return [(batch, counts)]
    lo = [order[i] for i in range(best_k)]
    hi = [order[i] for i in range(best_k, n)]
    return [
        ([batch[i] for i in lo], counts[lo]),
        ([batch[i] for i in hi], counts[hi]),
    ]


def evaluate_verbs(params, vocab, scheme, verbs, decode_cfg, chunk: int = 64):
    """Beam-decode each verb's stem once; return {lemma: StrippedOutput}
    plus raw hypotheses."""
    outputs, raw = {}, {}
    for lo in range(0, len(verbs), chunk):
        group = verbs[lo:lo + chunk]
        srcs = [vocab.encode_all(["<s>", *v.stem, "</s>"]) for v in group]
        results = beam_search_group(params, srcs, decode_cfg)
        for verb, hyps in zip(group, results):
            best = hyps[0]
            outputs[verb.lemma_orth] = strip_labels(best, scheme, vocab)
            raw[verb.lemma_orth] = hyps
    return outputs, raw


def _dev_accuracy(params, data: _SeedData, scheme) -> tuple:
    accs = {}
    for strat, verbs in data.dev_strata.items():
        if not verbs:
            accs[strat] = float("nan")
            continue
        outputs, _ = evaluate_verbs(params, data.vocab, scheme, verbs, data.decode_cfg)
        good = sum(
            1 for v in verbs
            if not outputs[v.lemma_orth].malformed
            and outputs[v.lemma_orth].phonemes in set(v.gold_forms)
        )
        accs[strat] = good / len(verbs)
    return accs["reg"], accs["irreg"]


def train_seed(cfg: RunConfig, entries, test_lemmas, seed: int, log=None):
    """Train one seed; returns (best ModelParams, SeedResult-without-path, vocab)."""
    t0 = time.time()
    rng = Rng(seed)
    data = _prepare_seed_data(cfg, entries, test_lemmas, rng)
    model_cfg = ModelConfig(
        vocab_size=len(data.vocab), n_layers_enc=cfg.n_layers_enc,
        n_layers_dec=cfg.n_layers_dec, n_heads=cfg.n_heads, d_model=cfg.d_model,
        d_ff=cfg.d_ff, dropout=cfg.dropout, use_copy=cfg.use_copy,
    )
    params = init_params(model_cfg, rng.substream("init"))
    state = AdamState.for_size(params.n_params, beta1=cfg.beta1, beta2=cfg.beta2,
                               epsilon=cfg.epsilon)
    sched = ScheduleConfig(d_model=cfg.d_model, warmup_steps=cfg.warmup_steps)
    dropout_rng = rng.substream("dropout")
    step = 0
    best = (-1.0, -1, None, 0.0, 0.0)  # score, epoch, flat copy, reg, irr
    loss_val = float("nan")
    for epoch in range(cfg.epochs):
        if cfg.resample != ResampleMethod.none:
            epoch_ts = resample_epoch(data.train, cfg.resample, rng.substream(f"resample/epoch{epoch}"))
        else:
            epoch_ts = data.train
        stream = _token_stream(data, epoch_ts)
        perm = rng.substream(f"shuffle/epoch{epoch}").permutation(stream.size)
        stream = stream[perm]
        for lo in range(0, stream.size, cfg.batch_size):
            ids, counts = np.unique(stream[lo:lo + cfg.batch_size], return_counts=True)
            batch = [data.ex_pairs[i] for i in ids]
            step += 1
            params.zero_grad()
            try:
                groups = _length_partition(batch, counts)
                if len(groups) == 1:
                    loss = forward_loss(params, batch, train_mode=True, rng=dropout_rng,
                                        weights=counts)
                else:
                    parts, sizes = [], []
                    for g_batch, g_counts in groups:
                        parts.append(forward_loss(params, g_batch, train_mode=True,
                                                  rng=dropout_rng, weights=g_counts))
                        sizes.append(sum(c * (len(t) - 1) for (_, t), c in zip(g_batch, g_counts)))
                    total = float(sum(sizes))
                    loss = T.add(T.mul(parts[0], sizes[0] / total),
                                 T.mul(parts[1], sizes[1] / total))
                loss_val = float(loss.data)
                if not np.isfinite(loss_val):
                    raise NumericError("non-finite loss")
                loss.backward()
                adam_step(params.flat, params.flat_grad, state, lr_at(step, sched))
            except NumericError as exc:
                raise NumericError(
                    f"training diverged at seed {seed} epoch {epoch} step {step}: {exc}"
                ) from exc
        reg_acc, irr_acc = _dev_accuracy(params, data, cfg.scheme)
        score = np.nanmean([reg_acc, irr_acc])
        if score > best[0]:
            best = (score, epoch, params.flat.copy(), reg_acc, irr_acc)
        if log:
            log(f"seed {seed} epoch {epoch}: loss {loss_val:.4f} "
                f"dev reg {reg_acc:.3f} irr {irr_acc:.3f}")
    best_params = ModelParams(model_cfg, best[2])
    result = SeedResult(
        seed=seed, best_epoch=best[1], dev_reg_acc=best[3], dev_irr_acc=best[4],
        checkpoint="", steps=step, final_train_loss=loss_val,
        wall_clock_s=time.time() - t0,
    )
    return best_params, result, data.vocab


def run_train(cfg: RunConfig, log=None) -> RunManifest:
    """Train every seed of a run; writes checkpoints and the manifest."""
    cfg = cfg.resolved()
    t0 = time.time()
    entries = load_lexicon(cfg.lexicon_path)
    test_lemmas = load_test_set(cfg.test_set_path)
    run_dir = Path(cfg.out_dir) / cfg.run_id
    run_dir.mkdir(parents=True, exist_ok=True)
    per_seed = []
    for seed in cfg.seeds:
        params, result, vocab = train_seed(cfg, entries, test_lemmas, seed, log=log)
        ckpt = run_dir / f"seed{seed}.ckpt"
        save_checkpoint(params, vocab, ckpt)
        result.checkpoint = str(ckpt)
        per_seed.append(result)
        if log:
            log(f"seed {seed}: best epoch {result.best_epoch} "
                f"(dev reg {result.dev_reg_acc:.3f} irr {result.dev_irr_acc:.3f}) -> {ckpt}")
    manifest = RunManifest(
        run_id=cfg.run_id,
        config=cfg.to_jsonable(),
        code_version=__version__,
        input_digests={
            "lexicon": _sha256(cfg.lexicon_path),
            "test_set": _sha256(cfg.test_set_path),
            "nonce": _sha256(cfg.nonce_path),
        },
        per_seed=per_seed,
        wall_clock_s=time.time() - t0,
    )
    manifest.save(run_dir / "manifest.json")
    return manifest


def load_run(manifest_path):
    """-> (RunManifest, {seed: (ModelParams, Vocab)})."""
    manifest = RunManifest.load(manifest_path)
    models = {}
    for s in manifest.per_seed:
        models[s.seed] = load_checkpoint(s.checkpoint)
    return manifest, models
