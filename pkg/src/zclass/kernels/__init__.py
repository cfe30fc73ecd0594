"""Hot batched matrix kernels over finite-field index tables.

Two interchangeable backends: a numba @njit one and a pure numpy one.  The
env var ZCLASS_BACKEND picks one ("numba" or "numpy"); unset means numba when
importable, numpy otherwise.  Both produce bit-identical results.

All kernels take matrices as int16 index arrays of shape (m, n, n) plus the
lookup tables from a FieldSpec.
"""

import os

from . import _numpy

_impl = _numpy
BACKEND = "numpy"


def set_backend(name: str) -> str:
    """Select the kernel backend by name; returns the active backend."""
    global _impl, BACKEND
    if name == "numpy":
        _impl, BACKEND = _numpy, "numpy"
    elif name == "numba":
        from . import _numba
        _impl, BACKEND = _numba, "numba"
    else:
        raise ValueError(f"unknown backend {name!r}")
    return BACKEND


_env = os.environ.get("ZCLASS_BACKEND", "auto")
if _env == "numpy":
    pass
elif _env == "numba":
    set_backend("numba")
elif _env == "auto":
    try:
        set_backend("numba")
    except ImportError:
        pass
else:
    raise RuntimeError(f"ZCLASS_BACKEND must be numba or numpy, got {_env!r}")


def mat_mul(a, b, mul_t, add_t):
    """Pairwise products of two (m, n, n) batches."""
    return _impl.mat_mul(a, b, mul_t, add_t)


def mat_inv(a, mul_t, add_t, neg_t, inv_t):
    """Inverses of a batch of invertible matrices."""
    return _impl.mat_inv(a, mul_t, add_t, neg_t, inv_t)


def mat_det(a, mul_t, add_t, neg_t):
    """Determinants of a batch, as an (m,) index array."""
    return _impl.mat_det(a, mul_t, add_t, neg_t)


def commute_mask(a, g, mul_t, add_t):
    """Boolean mask over the batch: does each matrix commute with g."""
    return _impl.commute_mask(a, g, mul_t, add_t)
