"""Backend selection for the search kernels.

Two interchangeable implementations exist: jitted pruned DFS
(numba_backend) and a vectorized full scan (numpy_backend). They return
identical results; the environment variable CYCLOSPEC_BACKEND forces one
("numba" or "numpy"), and the default is numba when importable, numpy
otherwise.
"""

from __future__ import annotations

import os

ENV_VAR = "CYCLOSPEC_BACKEND"
MAX_N = 62


def _load():
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"{ENV_VAR} must be 'numba' or 'numpy', got {choice!r}")
    if choice in ("", "numba"):
        try:
            from . import numba_backend as impl

            return impl, "numba"
        except ImportError:
            if choice == "numba":
                raise
    from . import numpy_backend as impl

    return impl, "numpy"


_impl, _name = _load()


def active_backend() -> str:
    """Name of the backend selected at import time."""
    return _name


valid_mask = _impl.valid_mask
check_masks = _impl.check_masks
all_valid_masks = _impl.all_valid_masks
exists_valid = _impl.exists_valid
max_sumfree_size = _impl.max_sumfree_size
