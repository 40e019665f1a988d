"""Dense float64 tensors with reverse-mode automatic differentiation.

The engine is deliberately small: it provides exactly the kernels the
encoder-decoder model is composed of (matmul, softmax, layer norm,
cross-entropy, elementwise arithmetic, embedding lookup, dropout) plus
``backward``.  Everything is float64 and bitwise deterministic given the
same inputs.

Gradient bookkeeping follows the usual tape discipline: an op whose
inputs require gradients records a vjp closure; ``backward`` on a scalar
walks the tape in reverse topological order.  Inside a ``no_grad()``
block no tape is built, which is what inference-time decoding uses.
"""

from __future__ import annotations

from contextlib import contextmanager

import numpy as np

from .errors import NumericError, ShapeError, UsageError

_GRAD_ENABLED = True


@contextmanager
def no_grad():
    global _GRAD_ENABLED
    prev = _GRAD_ENABLED
    _GRAD_ENABLED = False
    try:
        yield
    finally:
        _GRAD_ENABLED = prev


class Tensor:
    """A float64 array plus optional gradient slot.

    ``values``/``shape``/``grad`` expose the row-major flat view used in
    checkpoints and tests; ``data`` is the underlying ndarray.
    """

    __slots__ = ("data", "requires_grad", "grad", "_parents", "_vjp")

    def __init__(self, data, requires_grad: bool = False):
        arr = np.asarray(data, dtype=np.float64)
        self.data = arr
        self.requires_grad = bool(requires_grad)
        self.grad = None
        self._parents = ()
        self._vjp = None

    # -- spec-facing views ------------------------------------------------
    @property
    def shape(self):
        return self.data.shape

    @property
    def values(self) -> np.ndarray:
        return self.data.reshape(-1)

    @property
    def grad_values(self):
        return None if self.grad is None else self.grad.reshape(-1)

    def __repr__(self):
        return f"Tensor(shape={self.data.shape}, requires_grad={self.requires_grad})"

    def _accumulate(self, g: np.ndarray) -> None:
        if self.grad is None:
            self.grad = np.zeros_like(self.data)
        self.grad += g

    def zero_grad(self) -> None:
        if self.grad is not None:
            self.grad[...] = 0.0

    def backward(self) -> None:
        """Populate ``grad`` on every reachable tensor with requires_grad.

        Repeated calls without ``zero_grad`` accumulate.
        """
        if self.data.size != 1:
            raise UsageError(f"backward requires a scalar loss, got shape {self.data.shape}")
        order = []
        seen = set()
        stack = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            if id(node) in seen:
                continue
            seen.add(id(node))
            stack.append((node, True))
            for p in node._parents:
                if id(p) not in seen:
                    stack.append((p, False))
        grads = {id(self): np.ones_like(self.data)}
        for node in reversed(order):
            g = grads.pop(id(node), None)
            if g is None:
                continue
            if node.requires_grad:
                node._accumulate(g)
            if node._vjp is None:
                continue
            for parent, pg in zip(node._parents, node._vjp(g)):
                if pg is None:
                    continue
                acc = grads.get(id(parent))
                if acc is None:
                    grads[id(parent)] = pg
                else:
                    acc += pg

    # -- operator sugar ---------------------------------------------------
    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __sub__(self, other):
        return add(self, mul(other, -1.0) if isinstance(other, Tensor) else -np.asarray(other))

    def __rsub__(self, other):
        return add(mul(self, -1.0), other)

    def __neg__(self):
        return mul(self, -1.0)

    def __matmul__(self, other):
        return matmul(self, other)

    def __getitem__(self, idx):
        return take_slice(self, idx)

    def reshape(self, *shape):
        return reshape(self, shape if len(shape) > 1 else shape[0])

    def transpose(self, *axes):
        return transpose(self, axes)

    def sum(self):
        return sum_all(self)

    def mean(self):
        return mul(sum_all(self), 1.0 / self.data.size)


def _as_constant(x) -> np.ndarray:
    return np.asarray(x, dtype=np.float64)


def _node(data: np.ndarray, parents, vjp) -> Tensor:
    out = Tensor.__new__(Tensor)
    out.data = data
    out.requires_grad = False
    out.grad = None
    if _GRAD_ENABLED and any(isinstance(p, Tensor) and (p.requires_grad or p._parents) for p in parents):
        out._parents = tuple(p for p in parents if isinstance(p, Tensor))
        out._vjp = vjp
    else:
        out._parents = ()
        out._vjp = None
    return out


def _unbroadcast(g: np.ndarray, shape) -> np.ndarray:
    """Sum g down to `shape` after numpy broadcasting."""
    if g.shape == tuple(shape):
        return g
    extra = g.ndim - len(shape)
    if extra > 0:
        g = g.sum(axis=tuple(range(extra)))
    axes = tuple(i for i, s in enumerate(shape) if s == 1 and g.shape[i] != 1)
    if axes:
        g = g.sum(axis=axes, keepdims=True)
    return g


# -- arithmetic -----------------------------------------------------------


def add(a, b) -> Tensor:
    at = a if isinstance(a, Tensor) else None
    bt = b if isinstance(b, Tensor) else None
    av = at.data if at is not None else _as_constant(a)
    bv = bt.data if bt is not None else _as_constant(b)
    data = av + bv

    def vjp(g):
        return (
            _unbroadcast(g, av.shape) if at is not None else None,
            _unbroadcast(g, bv.shape) if bt is not None else None,
        )

    return _node(data, (a, b), vjp)


def mul(a, b) -> Tensor:
    at = a if isinstance(a, Tensor) else None
    bt = b if isinstance(b, Tensor) else None
    av = at.data if at is not None else _as_constant(a)
    bv = bt.data if bt is not None else _as_constant(b)
    data = av * bv

    def vjp(g):
        return (
            _unbroadcast(g * bv, av.shape) if at is not None else None,
            _unbroadcast(g * av, bv.shape) if bt is not None else None,
        )

    return _node(data, (a, b), vjp)


def matmul(a: Tensor, b) -> Tensor:
    bt = b if isinstance(b, Tensor) else None
    av = a.data
    bv = bt.data if bt is not None else _as_constant(b)
    if av.shape[-1] != bv.shape[-2 if bv.ndim > 1 else 0]:
        raise ShapeError(f"matmul inner dimensions disagree: {av.shape} x {bv.shape}")
    data = av @ bv

    def vjp(g):
        ga = g @ np.swapaxes(bv, -1, -2)
        ga = _unbroadcast(ga, av.shape)
        if bt is None:
            return (ga, None)
        gb = np.swapaxes(av, -1, -2) @ g
        return (ga, _unbroadcast(gb, bv.shape))

    return _node(data, (a, b), vjp)


def relu(x: Tensor) -> Tensor:
    data = np.maximum(x.data, 0.0)

    def vjp(g):
        return ((x.data > 0.0) * g,)

    return _node(data, (x,), vjp)


def sigmoid(x: Tensor) -> Tensor:
    xv = x.data
    out = np.empty_like(xv)
    pos = xv >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-xv[pos]))
    ex = np.exp(xv[~pos])
    out[~pos] = ex / (1.0 + ex)

    def vjp(g):
        return (g * out * (1.0 - out),)

    return _node(out, (x,), vjp)


def exp(x: Tensor) -> Tensor:
    data = np.exp(x.data)

    def vjp(g):
        return (g * data,)

    return _node(data, (x,), vjp)


def log(x: Tensor) -> Tensor:
    data = np.log(x.data)

    def vjp(g):
        return (g / x.data,)

    return _node(data, (x,), vjp)


def sum_all(x: Tensor) -> Tensor:
    data = np.asarray(x.data.sum())

    def vjp(g):
        return (np.broadcast_to(g, x.data.shape).copy(),)

    return _node(data, (x,), vjp)


def sum_axis(x: Tensor, axis: int) -> Tensor:
    data = x.data.sum(axis=axis)

    def vjp(g):
        return (np.broadcast_to(np.expand_dims(g, axis), x.data.shape).copy(),)

    return _node(data, (x,), vjp)


def reshape(x: Tensor, shape) -> Tensor:
    data = x.data.reshape(shape)

    def vjp(g):
        return (g.reshape(x.data.shape),)

    return _node(data, (x,), vjp)


def transpose(x: Tensor, axes) -> Tensor:
    axes = tuple(axes)
    data = np.transpose(x.data, axes)
    inv = np.argsort(axes)

    def vjp(g):
        return (np.transpose(g, inv),)

    return _node(data, (x,), vjp)


def take_slice(x: Tensor, idx) -> Tensor:
    data = x.data[idx]
    if isinstance(data, np.ndarray) and data.base is not None:
        data = data.copy()

    def vjp(g):
        gx = np.zeros_like(x.data)
        gx[idx] = g
        return (gx,)

    return _node(data, (x,), vjp)


def concat(tensors, axis: int) -> Tensor:
    data = np.concatenate([t.data for t in tensors], axis=axis)
    sizes = [t.data.shape[axis] for t in tensors]
    bounds = np.cumsum([0] + sizes)

    def vjp(g):
        return tuple(
            np.take(g, np.arange(bounds[i], bounds[i + 1]), axis=axis) for i in range(len(sizes))
        )

    return _node(data, tuple(tensors), vjp)


def embedding(weight: Tensor, ids: np.ndarray) -> Tensor:
    ids = np.asarray(ids)
    data = weight.data[ids]

    def vjp(g):
        gw = np.zeros_like(weight.data)
        np.add.at(gw, ids.reshape(-1), g.reshape(-1, weight.data.shape[1]))
        return (gw,)

    return _node(data, (weight,), vjp)


def gather_last(x: Tensor, index: np.ndarray) -> Tensor:
    """Pick x[..., index] along the last axis; index shape == x.shape[:-1]."""
    index = np.asarray(index)
    data = np.take_along_axis(x.data, index[..., None], axis=-1)[..., 0]

    def vjp(g):
        gx = np.zeros_like(x.data)
        np.put_along_axis(gx, index[..., None], g[..., None], axis=-1)
        return (gx,)

    return _node(data, (x,), vjp)


# -- normalisation and losses ----------------------------------------------


def softmax(x: Tensor, axis: int = -1) -> Tensor:
    """Softmax along ``axis`` with max subtraction.

    Raises NumericError on non-finite input: attention and output logits
    must stay finite, and a NaN here is always an upstream bug.
    """
    xv = x.data
    if not np.isfinite(xv).all():
        raise NumericError("softmax input contains non-finite values")
    shifted = xv - xv.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    out = e / e.sum(axis=axis, keepdims=True)

    def vjp(g):
        dot = (g * out).sum(axis=axis, keepdims=True)
        return (out * (g - dot),)

    return _node(out, (x,), vjp)


def layer_norm(x: Tensor, gain: Tensor, bias: Tensor, eps: float = 1e-5) -> Tensor:
    """Normalise the last dimension to zero mean / unit variance, then
    scale and shift.  Population variance (divide by N)."""
    if eps <= 0:
        raise UsageError("layer_norm eps must be positive")
    xv = x.data
    if xv.shape[-1] < 1:
        raise ShapeError("layer_norm needs a non-empty last dimension")
    n = xv.shape[-1]
    mean = xv.mean(axis=-1, keepdims=True)
    centred = xv - mean
    var = (centred * centred).mean(axis=-1, keepdims=True)
    inv = 1.0 / np.sqrt(var + eps)
    xhat = centred * inv
    gv = gain.data
    out = xhat * gv + bias.data

    def vjp(g):
        gxhat = g * gv
        s1 = gxhat.sum(axis=-1, keepdims=True)
        s2 = (gxhat * xhat).sum(axis=-1, keepdims=True)
        gx = (inv / n) * (n * gxhat - s1 - xhat * s2)
        axes = tuple(range(g.ndim - 1))
        ggain = (g * xhat).sum(axis=axes)
        gbias = g.sum(axis=axes)
        return (gx, ggain, gbias)

    return _node(out, (x, gain, bias), vjp)


def cross_entropy(logits: Tensor, targets: np.ndarray, pad_id: int, weights: np.ndarray | None = None) -> Tensor:
    """Mean negative log-probability of target ids over non-pad positions.

    ``logits`` is [N, V]; ``targets`` is [N] with entries in [0, V) or
    pad_id for positions excluded from the mean.  ``weights`` optionally
    gives each position a positive multiplicity (a run-length-compressed
    batch is scored exactly as its expansion would be).
    """
    tv = np.asarray(targets)
    lv = logits.data
    if lv.ndim != 2 or tv.shape != (lv.shape[0],):
        raise ShapeError(f"cross_entropy expects [N,V] logits and [N] targets, got {lv.shape} / {tv.shape}")
    mask = tv != pad_id
    w = mask.astype(np.float64) if weights is None else np.asarray(weights, dtype=np.float64) * mask
    count = w.sum()
    if count == 0:
        raise UsageError("cross_entropy: every position is padding; loss undefined")
    if not np.isfinite(lv).all():
        raise NumericError("cross_entropy input contains non-finite values")
    safe_t = np.where(mask, tv, 0)
    if safe_t.min() < 0 or safe_t.max() >= lv.shape[1]:
        raise UsageError("cross_entropy target id out of range")
    shifted = lv - lv.max(axis=1, keepdims=True)
    lse = np.log(np.exp(shifted).sum(axis=1))
    picked = np.take_along_axis(shifted, safe_t[:, None], axis=1)[:, 0]
    nll = (lse - picked) * w
    data = np.asarray(nll.sum() / count)

    def vjp(g):
        p = np.exp(shifted - lse[:, None])
        p[np.arange(lv.shape[0]), safe_t] -= 1.0
        p *= (w[:, None] * (float(g) / count))
        return (p,)

    return _node(data, (logits,), vjp)


def dropout(x: Tensor, p: float, rng) -> Tensor:
    """Inverted dropout; identity when p == 0."""
    if p == 0.0:
        return x
    keep = (rng.uniform(size=x.data.shape) >= p) / (1.0 - p)
    return mul(x, keep)
