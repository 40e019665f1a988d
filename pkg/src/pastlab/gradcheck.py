"""Finite-difference verification of the autodiff engine.

``grad_check`` compares ``backward()`` gradients against central finite
differences on a random subsample of coordinates.  It is the independent
oracle for the tape: it only ever calls the forward function, never the
vjp machinery it is checking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rng import Rng


@dataclass
class GradCheckReport:
    max_rel_err: float
    n_checked: int
    worst_index: int
    precondition_violation: str | None = None

    @property
    def ok(self) -> bool:
        return self.precondition_violation is None


def grad_check(
    forward_fn,
    params: np.ndarray,
    grads: np.ndarray,
    rng: Rng,
    n_coords: int = 200,
    h: float = 1e-4,
    denom_floor: float = 1e-6,
) -> GradCheckReport:
    """Check analytic ``grads`` of ``forward_fn(params)`` at ``params``.

    ``forward_fn`` must be a deterministic scalar function of the flat
    parameter vector (dropout disabled); determinism is verified by
    evaluating it twice before any differencing.  ``denom_floor`` keeps
    coordinates whose true gradient is essentially zero from turning
    float64 differencing noise into a spurious relative error.
    """
    base1 = float(forward_fn(params))
    base2 = float(forward_fn(params))
    if base1 != base2:
        return GradCheckReport(
            max_rel_err=float("nan"),
            n_checked=0,
            worst_index=-1,
            precondition_violation="forward function is not deterministic (is dropout still enabled?)",
        )
    n = params.size
    k = min(n, max(n_coords, 200)) if n >= 200 else n
    idx = np.sort(rng.substream("gradcheck").choice_without_replacement(n, k))
    max_rel = 0.0
    worst = -1
    work = params.copy()
    for i in idx:
        orig = work[i]
        work[i] = orig + h
        fp = float(forward_fn(work))
        work[i] = orig - h
        fm = float(forward_fn(work))
        work[i] = orig
        numeric = (fp - fm) / (2.0 * h)
        analytic = float(grads[i])
        rel = abs(analytic - numeric) / max(abs(analytic), abs(numeric), denom_floor)
        if rel > max_rel:
            max_rel = rel
            worst = int(i)
    return GradCheckReport(max_rel_err=max_rel, n_checked=int(k), worst_index=worst)
