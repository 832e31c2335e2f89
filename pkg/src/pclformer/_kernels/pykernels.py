"""NumPy reference implementations of the numeric kernels.

This is the fallback backend; the compiled Cython backend in ckernels.pyx
implements the same functions with identical semantics. All kernels work on
float64 arrays. Row-wise kernels (softmax, layer norm) expect 2-d inputs
where the reduction runs over the last axis.
"""

import numpy as np
from scipy.special import erf

_INV_SQRT2 = 1.0 / np.sqrt(2.0)
_INV_SQRT2PI = 1.0 / np.sqrt(2.0 * np.pi)


def matmul_nd(a, b):
    """Stacked matrix product with NumPy broadcasting over leading axes."""
    return np.matmul(a, b)


def softmax_rows(x, mask=None):
    """Row-wise softmax with max subtraction.

    When ``mask`` (bool, same shape) is given, masked-out entries are exactly
    0 in the output and the max/sum run over unmasked entries only.
    """
    if mask is None:
        shifted = x - x.max(axis=-1, keepdims=True)
        e = np.exp(shifted)
    else:
        neg = np.where(mask, x, -np.inf)
        shifted = x - neg.max(axis=-1, keepdims=True)
        e = np.where(mask, np.exp(shifted), 0.0)
    return e / e.sum(axis=-1, keepdims=True)


def softmax_rows_grad(y, gy):
    """Backward of softmax_rows: gx = y * (gy - sum(gy * y))."""
    inner = (gy * y).sum(axis=-1, keepdims=True)
    return y * (gy - inner)


def gelu(x):
    """Exact GELU, x * Phi(x) with Phi the standard normal CDF."""
    return 0.5 * x * (1.0 + erf(x * _INV_SQRT2))


def gelu_grad(x, gy):
    """Backward of gelu: d/dx = Phi(x) + x * phi(x)."""
    cdf = 0.5 * (1.0 + erf(x * _INV_SQRT2))
    pdf = _INV_SQRT2PI * np.exp(-0.5 * x * x)
    return gy * (cdf + x * pdf)


def layer_norm_rows(x, eps):
    """Row-wise standardization; returns (xhat, rstd).

    Uses population variance; eps is added under the square root so
    constant rows map to zeros.
    """
    mean = x.mean(axis=-1, keepdims=True)
    centered = x - mean
    var = (centered * centered).mean(axis=-1)
    rstd = 1.0 / np.sqrt(var + eps)
    return centered * rstd[:, None], rstd


def layer_norm_rows_grad(xhat, rstd, gg):
    """Backward of layer_norm_rows w.r.t. x, given gg = upstream * gain."""
    m1 = gg.mean(axis=-1, keepdims=True)
    m2 = (gg * xhat).mean(axis=-1, keepdims=True)
    return (gg - m1 - xhat * m2) * rstd[:, None]
