"""Numpy implementations of the hot kernels.

These are the fallback backend and the semantic reference for the compiled
core. Every function takes C-contiguous float64 arrays; softmax and
layer-norm kernels work on 2-D (rows, features) views, gelu on flat views.
Matrix products are not part of the kernel surface: numpy's BLAS matmul is
already compiled and both backends share it.
"""
from __future__ import annotations

import numpy as np

# tanh-approximation constants for GELU
_SQRT_2_OVER_PI = 0.7978845608028654
_GELU_CUBIC = 0.044715


def softmax_fwd(x: np.ndarray) -> np.ndarray:
    """Row softmax with max-subtraction, x shape (rows, n)."""
    m = x.max(axis=1, keepdims=True)
    e = np.exp(x - m)
    return e / e.sum(axis=1, keepdims=True)


def softmax_bwd(y: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Row softmax VJP given forward output y and upstream grad gy."""
    dot = (y * gy).sum(axis=1, keepdims=True)
    return y * (gy - dot)


def gelu_fwd(x: np.ndarray) -> np.ndarray:
    """Elementwise GELU (tanh approximation), x flat."""
    u = _SQRT_2_OVER_PI * (x + _GELU_CUBIC * x * x * x)
    return 0.5 * x * (1.0 + np.tanh(u))


def gelu_bwd(x: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Elementwise GELU VJP, x flat."""
    u = _SQRT_2_OVER_PI * (x + _GELU_CUBIC * x * x * x)
    t = np.tanh(u)
    du = _SQRT_2_OVER_PI * (1.0 + 3.0 * _GELU_CUBIC * x * x)
    return gy * (0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * du)


def layer_norm_fwd(x: np.ndarray, gain: np.ndarray, bias: np.ndarray, eps: float):
    """Per-row normalization then affine; returns (y, mean, inv_std)."""
    mu = x.mean(axis=1, keepdims=True)
    xc = x - mu
    var = (xc * xc).mean(axis=1, keepdims=True)
    inv = 1.0 / np.sqrt(var + eps)
    y = xc * inv * gain + bias
    return y, mu[:, 0].copy(), inv[:, 0].copy()


def layer_norm_bwd(x, gain, mean, inv, gy):
    """Layer-norm VJP; returns (gx, ggain, gbias)."""
    xhat = (x - mean[:, None]) * inv[:, None]
    gxhat = gy * gain
    m1 = gxhat.mean(axis=1, keepdims=True)
    m2 = (gxhat * xhat).mean(axis=1, keepdims=True)
    gx = inv[:, None] * (gxhat - m1 - xhat * m2)
    ggain = (gy * xhat).sum(axis=0)
    gbias = gy.sum(axis=0)
    return gx, ggain, gbias
