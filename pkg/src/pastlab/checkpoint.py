"""Checkpoint files: a UTF-8 JSON manifest line, then raw float32 data.

Layout: the first line is a JSON object holding the model config, the
vocabulary token list, and a named tensor index with shapes and byte
offsets into the binary section that follows the newline.  Arrays are
little-endian float32 in row-major order; loading promotes to float64.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .errors import CheckpointError
from .lexicon import Vocab
from .model import ModelConfig, ModelParams, _shapes

FORMAT = "pastlab-checkpoint-v1"


def save_checkpoint(params: ModelParams, vocab: Vocab, path) -> None:
    cfg = params.cfg
    index = []
    offset = 0
    blobs = []
    for name, shape, _ in _shapes(cfg):
        arr = params[name].data.astype("<f4")
        nbytes = arr.size * 4
        index.append({"name": name, "shape": list(shape), "offset": offset, "nbytes": nbytes})
        blobs.append(arr.tobytes(order="C"))
        offset += nbytes
    manifest = {
        "format": FORMAT,
        "config": asdict(cfg),
        "vocab": vocab.tokens,
        "tensors": index,
    }
    with open(path, "wb") as fh:
        fh.write(json.dumps(manifest, ensure_ascii=False, sort_keys=True).encode("utf-8"))
        fh.write(b"\n")
        for blob in blobs:
            fh.write(blob)


def load_checkpoint(path):
    """-> (ModelParams, Vocab). Verifies the tensor index against the config."""
    path = Path(path)
    with open(path, "rb") as fh:
        header = fh.readline()
        try:
            manifest = json.loads(header.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise CheckpointError(f"{path}: manifest line is not valid JSON: {exc}") from None
        if manifest.get("format") != FORMAT:
            raise CheckpointError(f"{path}: unknown checkpoint format {manifest.get('format')!r}")
        cfg = ModelConfig(**manifest["config"])
        expected = [(name, list(shape)) for name, shape, _ in _shapes(cfg)]
        got = [(t["name"], t["shape"]) for t in manifest["tensors"]]
        if expected != got:
            raise CheckpointError(f"{path}: tensor index does not match the stored config")
        blob = fh.read()
    flat = np.zeros(sum(int(np.prod(s)) for _, s in expected))
    off = 0
    for t in manifest["tensors"]:
        n = t["nbytes"] // 4
        raw = np.frombuffer(blob, dtype="<f4", count=n, offset=t["offset"])
        if raw.size != n:
            raise CheckpointError(f"{path}: truncated tensor data for {t['name']}")
        flat[off:off + n] = raw.astype(np.float64)
        off += n
    return ModelParams(cfg, flat), Vocab(manifest["vocab"])
