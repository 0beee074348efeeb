from itertools import product

import pytest

from weylorder import kernels
from weylorder.algebra import brute_force_weyl, clear_caches, normalize
from weylorder.bench import bench_kernels, bench_paths

needs_compiled = pytest.mark.skipif(kernels.compiled_kernel is None, reason="extension not built")


def test_python_kernel_small():
    assert kernels.python_kernel(b"") == [1]
    assert kernels.python_kernel(bytes([0, 1])) == [1, 1]
    assert kernels.python_kernel(bytes([0, 0, 1, 1])) == [1, 4, 2]
    assert kernels.python_kernel(bytes([1, 1, 0, 0])) == [1]


@needs_compiled
@pytest.mark.parametrize("length", range(13))
def test_compiled_matches_python(length):
    for letters in product((0, 1), repeat=length):
        w = bytes(letters)
        assert kernels.compiled_kernel(w) == kernels.python_kernel(w)


@needs_compiled
def test_compiled_at_length_limit():
    w = bytes([0] * 16 + [1] * 16)
    assert kernels.compiled_kernel(w) == kernels.python_kernel(w)
    with pytest.raises(OverflowError):
        kernels.compiled_kernel(bytes(33))


def test_long_words_fall_back():
    w = bytes([0] * 20 + [1] * 20)
    assert kernels.normal_order_word(w) == kernels.python_kernel(w)


def test_backend_switch_gives_same_normal_forms():
    original = kernels.BACKEND
    results = {}
    try:
        for name in kernels.available_backends():
            kernels.set_backend(name)
            clear_caches()
            results[name] = normalize(brute_force_weyl(4, 3))
    finally:
        kernels.set_backend(original)
        clear_caches()
    assert len(set(map(str, results.values()))) == 1
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


def test_bench_rows_agree():
    for row in bench_paths(3, repeat=1):
        assert row["equal"]
        assert row["closed_terms"] == row["n"] + 1
    for row in bench_kernels(4, repeat=1):
        assert row["equal"]
