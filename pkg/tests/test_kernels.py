"""The compiled kernels and the pure-Python fallback must agree exactly."""

import importlib
import random

import pytest

from stanleydepth import _purekernels, kernels
from stanleydepth.decomposition import coverage_bounds
from stanleydepth.harness import draw_instance
from stanleydepth.oracles import _options, char_poset

try:
    from stanleydepth import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _random_scan_input(rng):
    n = rng.randint(1, 3)
    slabs = [([rng.randint(0, 2) for _ in range(n)], [rng.random() < 0.5 for _ in range(n)])
             for _ in range(rng.randint(0, 5))]
    gens = [[rng.randint(0, 2) for _ in range(n)] for _ in range(rng.randint(0, 3))]
    bounds = [3] * n
    return [s[0] for s in slabs], [s[1] for s in slabs], gens, rng.random() < 0.5, bounds


def _cover_input(i):
    ideal = draw_instance("thm21", 21, i, {"n": (1, 3), "max_degree": 2, "g": (1, 3)})
    poset = char_poset("quotient" if i % 2 else "ideal", ideal)
    opts = [o for o in _options(poset) if o[0] >= (i % 3)]
    ptr, flat = [0], []
    for o in opts:
        flat.extend(o[3])
        ptr.append(len(flat))
    return len(poset.points), ptr, flat


def test_pure_coverage_scan_by_hand():
    # ideal (x1) in one variable, slab x1 K[x1]: exact
    assert _purekernels.coverage_scan([[1]], [[True]], [[1]], False, [2], -1) == []
    # missing slab: x1 uncovered
    bad = _purekernels.coverage_scan([[2]], [[True]], [[1]], False, [3], -1)
    assert [tuple(p) for p, _, _ in bad] == [(1,)]


def test_pure_exact_cover_by_hand():
    # items 0..2; options {0,1}, {2}, {1,2}, {0}
    assert _purekernels.exact_cover(3, [0, 2, 3, 5, 6], [0, 1, 2, 1, 2, 0]) in ([0, 1], [2, 3])
    assert _purekernels.exact_cover(2, [0, 1], [0]) is None
    assert _purekernels.exact_cover(0, [0], []) == []


@needs_ext
def test_coverage_scan_agrees():
    rng = random.Random(5)
    for _ in range(300):
        args = _random_scan_input(rng)
        a = _purekernels.coverage_scan(*args, -1)
        b = _ckernels.coverage_scan(*args, -1)
        assert [(tuple(p), c, t) for p, c, t in a] == [(tuple(p), c, t) for p, c, t in b]


@needs_ext
def test_exact_cover_agrees():
    for i in range(120):
        args = _cover_input(i)
        assert _purekernels.exact_cover(*args) == _ckernels.exact_cover(*args)


def test_backend_switch(monkeypatch):
    monkeypatch.setenv("STANLEYDEPTH_PURE", "1")
    pure = importlib.reload(kernels)
    try:
        assert pure.BACKEND == "python"
        assert pure.exact_cover is _purekernels.exact_cover
    finally:
        monkeypatch.delenv("STANLEYDEPTH_PURE")
        importlib.reload(kernels)
    assert kernels.BACKEND == ("cython" if _ckernels is not None else "python")


def test_coverage_bounds_used_by_verify():
    from stanleydepth.decomposition import StanleyDecomposition, parse_slab
    from stanleydepth.monomial import parse_ideal

    d = StanleyDecomposition("ideal", parse_ideal("n=2; x1"), (parse_slab("x1 K[x1,x2]", 2),))
    assert coverage_bounds(d) == (2, 1)
