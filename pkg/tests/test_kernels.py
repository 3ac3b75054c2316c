import os
import subprocess
import sys
from itertools import combinations

import numpy as np
import pytest

from cyclospec import kernels
from cyclospec.algebra import catalog, mandatory_mask
from cyclospec.kernels import numpy_backend
from cyclospec.search import PairClassMask
from cyclospec.verifier import verify

numba_backend = pytest.importorskip("cyclospec.kernels.numba_backend")

BACKENDS = [numpy_backend, numba_backend]


def test_facade():
    assert kernels.MAX_N == 62
    assert kernels.active_backend() in ("numba", "numpy")


@pytest.mark.parametrize("n", range(3, 21))
def test_backends_agree_on_enumeration(n):
    for algebra in catalog():
        mand = mandatory_mask(algebra)
        a = numba_backend.all_valid_masks(n, mand)
        b = numpy_backend.all_valid_masks(n, mand)
        assert np.array_equal(a, b), f"{algebra.name} n={n}"


@pytest.mark.parametrize("n", range(3, 13))
def test_valid_mask_matches_verifier(n):
    """Both kernels must agree with the triple-walking reference check."""
    m = n // 2
    for algebra in catalog():
        mand = mandatory_mask(algebra)
        for value in range(1 << m):
            c = PairClassMask.from_int(n, value).to_coloring()
            expected = verify(algebra, c) == []
            for backend in BACKENDS:
                assert backend.valid_mask(n, value, mand) == expected


def test_check_masks_matches_scalar():
    n = 30
    rng = np.random.default_rng(7)
    masks = rng.integers(0, 1 << (n // 2), size=400, dtype=np.int64)
    for algebra in catalog():
        mand = mandatory_mask(algebra)
        rows = []
        for backend in BACKENDS:
            batch = backend.check_masks(n, mand, masks)
            assert batch.dtype == np.bool_ and batch.shape == masks.shape
            singles = [backend.valid_mask(n, int(v), mand) for v in masks]
            assert batch.tolist() == singles
            rows.append(batch)
        assert np.array_equal(rows[0], rows[1])


@pytest.mark.parametrize("n", range(3, 21))
def test_exists_valid_consistent(n):
    for algebra in catalog():
        mand = mandatory_mask(algebra)
        for backend in BACKENDS:
            found = len(backend.all_valid_masks(n, mand)) > 0
            assert bool(backend.exists_valid(n, mand)) == found


def brute_max_sumfree(n):
    if n <= 1:
        return 0
    for size in range(n - 1, 0, -1):
        for combo in combinations(range(1, n), size):
            s = set(combo)
            if all((x + y) % n not in s for x in s for y in s):
                return size
    return 0


@pytest.mark.parametrize("n", range(1, 15))
def test_max_sumfree_against_brute_force(n):
    expected = brute_max_sumfree(n)
    for backend in BACKENDS:
        assert backend.max_sumfree_size(n) == expected


@pytest.mark.parametrize("n", range(15, 26))
def test_max_sumfree_backends_agree(n):
    assert numba_backend.max_sumfree_size(n) == numpy_backend.max_sumfree_size(n)


def test_small_n_edge_cases():
    mand = mandatory_mask(next(iter(catalog())))
    for backend in BACKENDS:
        for n in (1, 2):
            assert not backend.valid_mask(n, 0, mand)
            assert len(backend.all_valid_masks(n, mand)) == 0
            assert not backend.exists_valid(n, mand)


def test_range_guards():
    mand = mandatory_mask(next(iter(catalog())))
    for backend in BACKENDS:
        with pytest.raises(ValueError):
            backend.valid_mask(0, 0, mand)
        with pytest.raises(ValueError):
            backend.valid_mask(63, 0, mand)
        with pytest.raises(ValueError):
            backend.all_valid_masks(50, mand)
        with pytest.raises(ValueError):
            backend.max_sumfree_size(0)


def _run_with_backend(value):
    env = dict(os.environ)
    env["CYCLOSPEC_BACKEND"] = value
    return subprocess.run(
        [sys.executable, "-c", "import cyclospec.kernels as k; print(k.active_backend())"],
        capture_output=True,
        text=True,
        env=env,
    )


def test_backend_env_selection():
    forced_numpy = _run_with_backend("numpy")
    assert forced_numpy.returncode == 0
    assert forced_numpy.stdout.strip() == "numpy"

    forced_numba = _run_with_backend("numba")
    assert forced_numba.returncode == 0
    assert forced_numba.stdout.strip() == "numba"

    bogus = _run_with_backend("fortran")
    assert bogus.returncode != 0
    assert "CYCLOSPEC_BACKEND" in bogus.stderr
