import importlib
import random

import pytest

from stinv import _kernels_py, kernels

from models import points_of
from stinv.terms import OccupyBox

try:
    _compiled = importlib.import_module("stinv._kernels")
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

BACKENDS = [pytest.param(_kernels_py, id="python"),
            pytest.param(_compiled, id="cython",
                         marks=pytest.mark.skipif(_compiled is None, reason="extension not built"))]


def test_selected_backend_reported():
    assert kernels.BACKEND in ("python", "cython")


@pytest.mark.parametrize("k", BACKENDS)
def test_expand_box(k):
    assert k.expand_box(1, 1, 2, 2) == [(1, 1), (2, 1), (1, 2), (2, 2)]
    assert k.expand_box(-3, 0, -3, 0) == [(-3, 0)]


@pytest.mark.parametrize("k", BACKENDS)
def test_clip_union_against_brute_force(k):
    rng = random.Random(4)
    for _ in range(500):
        bxs = [OccupyBox(*(rng.randint(-10, 20) for _ in range(4))) for _ in range(rng.randint(0, 4))]
        win = OccupyBox(*(rng.randint(-10, 20) for _ in range(4)))
        expected = sorted(points_of(*bxs) & points_of(win), key=lambda p: (p[1], p[0]))
        assert k.clip_union([b.corners for b in bxs], win.corners) == expected
        full = sorted(points_of(*bxs), key=lambda p: (p[1], p[0]))
        assert k.clip_union([b.corners for b in bxs]) == full


@pytest.mark.parametrize("k", BACKENDS)
def test_clip_union_huge_sparse_union(k):
    # bounding box far too large for a bitmap
    pts = k.clip_union([(0, 0, 1, 0), (10**6, 10**6, 10**6, 10**6)])
    assert pts == [(0, 0), (1, 0), (10**6, 10**6)]


@pytest.mark.parametrize("k", BACKENDS)
def test_count_in_box(k):
    pts = {(0, 0), (1, 1), (5, 5), (-1, 3)}
    assert k.count_in_box(pts, (0, 0, 5, 5)) == 3
    assert k.count_in_box([], (0, 0, 5, 5)) == 0


def test_backends_agree():
    if _compiled is None:
        pytest.skip("extension not built")
    rng = random.Random(6)
    for _ in range(200):
        bxs = [tuple(rng.randint(-30, 30) for _ in range(4)) for _ in range(3)]
        bxs = [(min(a, c), min(b, d), max(a, c), max(b, d)) for a, b, c, d in bxs]
        assert _compiled.clip_union(bxs, (-5, -5, 5, 5)) == _kernels_py.clip_union(bxs, (-5, -5, 5, 5))
