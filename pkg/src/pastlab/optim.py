"""Adam with bias correction and the inverse-square-root warmup schedule."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NumericError, ShapeError, UsageError


@dataclass
class AdamState:
    """First/second moment estimates over a flat parameter vector."""

    m: np.ndarray
    v: np.ndarray
    step: int = 0
    beta1: float = 0.9
    beta2: float = 0.98
    epsilon: float = 1e-9

    @classmethod
    def for_size(cls, n: int, beta1: float = 0.9, beta2: float = 0.98, epsilon: float = 1e-9) -> "AdamState":
        return cls(m=np.zeros(n), v=np.zeros(n), beta1=beta1, beta2=beta2, epsilon=epsilon)


def adam_step(params: np.ndarray, grads: np.ndarray, state: AdamState, lr: float) -> None:
    """One bias-corrected Adam update, in place on ``params``."""
    if params.shape != grads.shape or params.shape != state.m.shape:
        raise ShapeError(
            f"adam_step length mismatch: params {params.shape}, grads {grads.shape}, state {state.m.shape}"
        )
    if lr < 0:
        raise UsageError("adam_step needs lr >= 0")
    bad = np.flatnonzero(~np.isfinite(grads))
    if bad.size:
        raise NumericError(f"non-finite gradient at parameter index {int(bad[0])}")
    state.step += 1
    t = state.step
    np.multiply(state.m, state.beta1, out=state.m)
    state.m += (1.0 - state.beta1) * grads
    np.multiply(state.v, state.beta2, out=state.v)
    sq = grads * grads
    sq *= 1.0 - state.beta2
    state.v += sq
    mhat = state.m / (1.0 - state.beta1 ** t)
    vhat = state.v / (1.0 - state.beta2 ** t)
    np.sqrt(vhat, out=vhat)
    vhat += state.epsilon
    mhat /= vhat
    mhat *= lr
    params -= mhat


@dataclass(frozen=True)
class ScheduleConfig:
    d_model: int
    warmup_steps: int = 400

    def __post_init__(self):
        if self.warmup_steps < 1:
            raise UsageError("warmup_steps must be >= 1")
        if self.d_model < 1:
            raise UsageError("d_model must be >= 1")


def lr_at(step: int, cfg: ScheduleConfig) -> float:
    """d_model^-0.5 * min(step^-0.5, step * warmup^-1.5); peaks at warmup."""
    if step < 1:
        raise UsageError("schedule step starts at 1")
    return cfg.d_model ** -0.5 * min(step ** -0.5, step * cfg.warmup_steps ** -1.5)
